import random

import pytest

from trofi.polygon import SurfaceClass, example_polygon


def test_hirzebruch_construction():
    sc = SurfaceClass.hirzebruch(1, 2, 3)
    assert sc.b_top == 5 and sc.b_bot == 3
    assert sc.b_left == (0, 0) and sc.b_right == (-1, -1)


def test_hirzebruch_closure():
    sc = SurfaceClass.hirzebruch(2, 3, 4)
    assert sc.b_top == 4 - 0 - (-6) == 10


def test_p2_invariants():
    sc = SurfaceClass.p2(3)
    inv = sc.lattice_invariants()
    assert inv.g_max == 1 and inv.chi == 3
    assert inv.beta_sq == 9 and inv.k_dot_beta == -9 and inv.k_sq == 9
    assert SurfaceClass.p2(1).lattice_invariants().g_max == 0
    two = SurfaceClass.p2(2)
    assert two.lattice_invariants().area2 == 4
    assert two.slice_widths() == (1,)


def test_slice_widths():
    assert example_polygon().slice_widths() == (4, 3)
    assert SurfaceClass.p2(4).slice_widths() == (3, 2, 1)
    assert SurfaceClass.hirzebruch(1, 3, 2).slice_widths() == (3, 4)
    for delta, a, b in [(0, 4, 2), (1, 5, 3), (2, 3, 4)]:
        sc = SurfaceClass.hirzebruch(delta, a, b)
        assert sc.slice_widths() == tuple(b + delta * m for m in range(1, a))


def test_example_polygon_invariants():
    inv = example_polygon().lattice_invariants()
    assert inv.g_max == 5
    assert inv.area2 == 18 and inv.chi == 6


def test_hirzebruch_gmax_formula():
    for delta in range(3):
        for a in range(1, 6):
            for b in range(1, 6):
                inv = SurfaceClass.hirzebruch(delta, a, b).lattice_invariants()
                assert 2 * inv.g_max == (a - 1) * (2 * b + delta * a - 2)


def _random_class(rng):
    a = rng.randint(1, 6)
    bl = sorted(rng.randint(-3, 3) for _ in range(a))
    br = sorted(rng.randint(-3, 3) for _ in range(a))
    pref, mx = 0, 0
    for i in range(a - 1):
        pref += bl[i] + br[i]
        mx = max(mx, pref)
    b_bot = mx + 1 + rng.randint(0, 5)
    b_top = b_bot - sum(bl) - sum(br)
    while b_top < 0:
        b_bot += 1
        b_top += 1
    return SurfaceClass(a, b_top, b_bot, tuple(bl), tuple(br))


def test_adjunction_and_pick_on_random_classes():
    rng = random.Random(3)
    for _ in range(100):
        sc = _random_class(rng)
        inv = sc.lattice_invariants()
        assert 2 * inv.g_max == 2 + inv.beta_sq + inv.k_dot_beta
        boundary = sc.b_top + sc.b_bot + 2 * sc.a
        assert inv.area2 == 2 * inv.g_max - 2 + boundary  # Pick
        assert inv.k_sq + inv.chi == 12


def test_closure_telescopes_to_top_width():
    rng = random.Random(4)
    for _ in range(50):
        sc = _random_class(rng)
        widths = (sc.b_bot,) + sc.slice_widths() + (sc.b_top,)
        for m in range(sc.a):
            assert widths[m + 1] == widths[m] - sc.b_left[m] - sc.b_right[m]


def test_validation_errors():
    with pytest.raises(ValueError):
        SurfaceClass(0, 0, 1, (), ())
    with pytest.raises(ValueError):
        SurfaceClass(2, 1, 0, (0, 0), (0, 0))  # b_bot = 0
    with pytest.raises(ValueError):
        SurfaceClass(2, 5, 3, (0, 0), (0, 0))  # closure
    with pytest.raises(ValueError):
        SurfaceClass(2, 1, 1, (0, 0), (0, 0))  # closure again
    with pytest.raises(ValueError):
        SurfaceClass(3, 1, 1, (0, 0, 0), (0, 0, 0))  # fine closure, fine widths
    # pinched polygon: width hits zero
    with pytest.raises(ValueError):
        SurfaceClass(2, 4, 1, (-1, -1), (-1, 0))


def test_nonsingularity():
    assert SurfaceClass.p2(3).is_nonsingular()
    assert SurfaceClass.hirzebruch(2, 3, 3).is_nonsingular()
    assert not example_polygon().is_nonsingular()  # left slopes jump -1 -> 1
    assert SurfaceClass(4, 5, 9, (0, 0, 1, 1), (0, 0, 1, 1)).is_nonsingular()


def test_horizontal_selfintersection_identity():
    # D_top^2 + D_bot^2 + chi = 4 for smooth horizontal classes
    cases = [
        SurfaceClass.hirzebruch(0, 3, 4),
        SurfaceClass.hirzebruch(2, 4, 3),
        SurfaceClass(4, 5, 9, (0, 0, 1, 1), (0, 0, 1, 1)),
        SurfaceClass(3, 1, 4, (0, 1, 1), (0, 0, 1)),
    ]
    for sc in cases:
        assert sc.is_nonsingular() and sc.is_horizontal()
        inv = sc.lattice_invariants()
        assert sc.d_top_sq() + sc.d_bot_sq() + inv.chi == 4
    with pytest.raises(ValueError):
        SurfaceClass.p2(2).d_top_sq()


def test_json_roundtrip():
    sc = example_polygon()
    assert SurfaceClass.from_json(sc.to_json()) == sc
