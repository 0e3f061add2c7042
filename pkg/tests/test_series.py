import random

import pytest

from bruteforce import brute_partition_count, brute_sigma1
from trofi.series import (
    BiTruncSeries,
    SymLaurent,
    TruncSeries,
    bracket_series,
    eisenstein_e2,
    laurent_to_trunc,
    laurent_from_json,
    laurent_to_json,
    partition_series,
    quantum_integer,
    series_from_json,
    series_to_json,
)


def S(coeffs, order=None):
    return TruncSeries.from_coeffs(coeffs, order if order is not None else len(coeffs) - 1)


def test_mul_difference_of_squares():
    one_plus = S([1, 1], 3)
    one_minus = S([1, -1], 3)
    assert (one_plus * one_minus).coeffs == (1, 0, -1, 0)


def test_pow_binomial_truncated():
    assert (S([1, -1], 2) ** 4).coeffs == (1, -4, 6)


def test_mul_identity():
    a = S([1, 1, 2])
    assert (a * TruncSeries.one(2)) == a


def test_inverse_geometric():
    assert (S([1, -1], 4)).inverse().coeffs == (1, 1, 1, 1, 1)
    assert (S([1, 0, -1], 5)).inverse().coeffs == (1, 0, 1, 0, 1, 0)


def test_inverse_roundtrip_partition():
    n = 12
    p = partition_series(n)
    finite = TruncSeries.one(n)
    for j in range(1, n + 1):
        finite = finite * S([1] + [0] * (j - 1) + [-1], n)
    assert finite.inverse() == p
    assert (p * finite).coeffs == (1,) + (0,) * n


def test_inverse_requires_unit():
    with pytest.raises(ValueError):
        S([2, 1]).inverse()


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        TruncSeries.one(3) * TruncSeries.one(4)
    with pytest.raises(ValueError):
        TruncSeries.one(3) + TruncSeries.one(4)


def test_truncate_is_explicit_and_never_extends():
    p = partition_series(6)
    assert p.truncate(3).coeffs == (1, 1, 2, 3)
    with pytest.raises(ValueError):
        p.truncate(7)


def test_partition_series_against_bruteforce():
    p = partition_series(9)
    assert p.coeffs == tuple(brute_partition_count(k) for k in range(10))


def test_partition_series_edge_cases():
    assert partition_series(0).coeffs == (1,)
    assert partition_series(6).coeffs == (1, 1, 2, 3, 5, 7, 11)


def test_partition_fourth_power():
    # independent convolution of brute-force partition counts
    n = 8
    p = [brute_partition_count(k) for k in range(n + 1)]
    sq = [sum(p[i] * p[k - i] for i in range(k + 1)) for k in range(n + 1)]
    fourth = [sum(sq[i] * sq[k - i] for i in range(k + 1)) for k in range(n + 1)]
    assert (partition_series(n) ** 4).coeffs == tuple(fourth)
    assert fourth[:5] == [1, 4, 14, 40, 105]


def test_eisenstein_against_divisor_sums():
    e2 = eisenstein_e2(20)
    assert e2.coeffs == (0,) + tuple(brute_sigma1(k) for k in range(1, 21))
    assert eisenstein_e2(6).coeffs == (0, 1, 3, 4, 7, 6, 12)
    assert eisenstein_e2(0).coeffs == (0,)


def test_eisenstein_three_expressions():
    n = 20
    e2 = eisenstein_e2(n)
    first = TruncSeries.zero(n)
    second = TruncSeries.zero(n)
    third = TruncSeries.zero(n)
    for m in range(1, n + 1):
        bm = bracket_series(m, n)
        first = first + m * bm
        second = second + S([0] * m + [1], n) * S([1] + [0] * (m - 1) + [-1], n).inverse() ** 2
        for j in range(m, n + 1):
            third = third + bracket_series(j, n)
    assert first == e2
    assert second == e2
    assert third == e2


def test_bracket_series():
    assert bracket_series(2, 6).coeffs == (0, 0, 1, 0, 1, 0, 1)
    assert bracket_series(1, 3).coeffs == (0, 1, 1, 1)
    with pytest.raises(ValueError):
        bracket_series(0, 3)


def test_quantum_integer_basics():
    assert quantum_integer(1) == SymLaurent.one()
    assert quantum_integer(0).is_zero()
    q3 = quantum_integer(3)
    assert (q3.half_min, q3.half_max) == (-2, 2)
    assert [q3.coeff_half(e) for e in (-2, -1, 0, 1, 2)] == [1, 0, 1, 0, 1]
    with pytest.raises(ValueError):
        quantum_integer(-1)


def test_quantum_integer_defining_identity():
    unit = SymLaurent.term(1, 1) + SymLaurent.term(-1, -1)
    for n in range(9):
        lhs = quantum_integer(n) * unit
        rhs = SymLaurent.term(1, n) + SymLaurent.term(-1, -n)
        assert lhs == rhs if n else lhs.is_zero()


def test_quantum_product_expansion():
    p = quantum_integer(3) ** 2 * quantum_integer(4) ** 2
    tops = [p.coeff_half(2 * e) for e in (5, 4, 3, 2, 1, 0)]
    assert tops == [1, 4, 10, 18, 25, 28]
    assert p.is_symmetric()


def test_laurent_to_trunc_basics():
    assert laurent_to_trunc(SymLaurent.zero(), 4, 3).is_zero()
    unit = SymLaurent.term(1, 1) + SymLaurent.term(-1, -1)
    assert laurent_to_trunc(unit, 1, 3).coeffs == (1, -1, 0, 0)
    with pytest.raises(ValueError):
        laurent_to_trunc(unit, 0, 3)
    with pytest.raises(ValueError):
        laurent_to_trunc(unit, 2, 3)  # parity


def test_laurent_to_trunc_palindrome():
    rng = random.Random(11)
    unit = SymLaurent.term(1, 1) + SymLaurent.term(-1, -1)
    for _ in range(20):
        p = SymLaurent.one()
        for _ in range(rng.randint(1, 4)):
            p = p * (quantum_integer(rng.randint(1, 4)) * unit)
        area2 = p.half_max
        full = laurent_to_trunc(p, area2, area2)
        sign = 1 if p.is_symmetric() else -1
        assert p.is_symmetric() or p.is_antisymmetric()
        assert tuple(reversed(full.coeffs)) == tuple(sign * c for c in full.coeffs)


def test_ring_axioms_randomized():
    rng = random.Random(5)
    n = 7
    for _ in range(60):
        a, b, c = (
            TruncSeries(n, tuple(rng.randint(-9, 9) for _ in range(n + 1)))
            for _ in range(3)
        )
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + b == b + a


def test_symlaurent_eval():
    p = quantum_integer(2) ** 2  # q + 2 + q^{-1}
    assert p.eval_q1() == 4
    assert p.eval_qm1() == 0
    half = SymLaurent.term(1, 1)
    with pytest.raises(ValueError):
        half.eval_qm1()


def test_bitrunc_basics():
    one = BiTruncSeries.one(2, 2)
    u = BiTruncSeries(2, 2, ((0, 0, 0), (1, 0, 0), (0, 0, 0)))
    x = BiTruncSeries(2, 2, ((0, 1, 0), (0, 0, 0), (0, 0, 0)))
    s = (one + u + x) ** 2
    assert s.coeff(0, 0) == 1 and s.coeff(1, 1) == 2 and s.coeff(2, 2) == 0
    assert s.coeff(2, 0) == 1 and s.coeff(0, 2) == 1
    assert s.u_slice(1).coeffs == (2, 2, 0)


def test_json_roundtrips():
    p = partition_series(5)
    assert series_from_json(series_to_json(p)) == p
    big = TruncSeries(1, (10 ** 30, -(10 ** 40)))
    d = series_to_json(big)
    assert d["coeffs"] == [str(10 ** 30), str(-(10 ** 40))]
    assert series_from_json(d) == big
    q = quantum_integer(5) ** 3
    assert laurent_from_json(laurent_to_json(q)) == q
