"""h-transverse lattice polygons / divisor classes and their invariants.

A class is stored by the data that drives the floor-diagram algorithm:
height a, horizontal side lengths b_top and b_bot, and the multisets
b_left / b_right of left and right wall slopes (one entry per unit of
integral length, following the outgoing-normal convention (-1,k) and
(1,k)).  Diagrams are oriented bottom to top, so b_bot >= 1 is required.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SurfaceClass:
    a: int
    b_top: int
    b_bot: int
    b_left: tuple[int, ...]
    b_right: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b_left", tuple(sorted(int(k) for k in self.b_left)))
        object.__setattr__(self, "b_right", tuple(sorted(int(k) for k in self.b_right)))
        if self.a < 1:
            raise ValueError("height a must be >= 1")
        if len(self.b_left) != self.a or len(self.b_right) != self.a:
            raise ValueError("b_left and b_right must each have a entries")
        if self.b_bot < 1:
            raise ValueError("b_bot must be >= 1 (diagrams flow bottom to top)")
        if self.b_top < 0:
            raise ValueError("b_top must be >= 0")
        closure = self.b_bot - sum(self.b_left) - sum(self.b_right)
        if self.b_top != closure:
            raise ValueError(
                f"closure violated: b_top should be {closure}, got {self.b_top}"
            )
        for m, w in enumerate(self.slice_widths(), start=1):
            if w < 1:
                raise ValueError(f"slice width at height {m} is {w} (< 1)")

    # -- constructions ------------------------------------------------------

    @classmethod
    def hirzebruch(cls, delta: int, a: int, b: int) -> SurfaceClass:
        """Class aE+bF on the Hirzebruch surface F_delta (trapezoid)."""
        if delta < 0:
            raise ValueError("delta must be >= 0")
        if a < 1 or b < 1:
            raise ValueError("a and b must be >= 1")
        return cls(a, b + delta * a, b, (0,) * a, (-delta,) * a)

    @classmethod
    def p2(cls, d: int) -> SurfaceClass:
        """Class dL on the projective plane (d times the unit triangle)."""
        if d < 1:
            raise ValueError("d must be >= 1")
        return cls(d, 0, d, (0,) * d, (1,) * d)

    # -- lattice geometry ---------------------------------------------------

    def slice_widths(self) -> tuple[int, ...]:
        """Integral widths omega_1..omega_{a-1} of the horizontal slices.

        With b_left, b_right sorted increasingly these are the weights of
        the trunk edges of the unique codegree-0 genus-0 diagram.
        """
        widths = []
        acc = 0
        for m in range(self.a - 1):
            acc += self.b_left[m] + self.b_right[m]
            widths.append(self.b_bot - acc)
        return tuple(widths)

    def normals_ccw(self) -> list[tuple[int, int]]:
        """Primitive outgoing edge normals in counterclockwise order."""
        rays: list[tuple[int, int]] = [(0, -1)]
        rays += [(1, k) for k in sorted(set(self.b_right))]
        if self.b_top > 0:
            rays.append((0, 1))
        rays += [(-1, k) for k in sorted(set(self.b_left), reverse=True)]
        return rays

    def is_nonsingular(self) -> bool:
        """True when every pair of adjacent normals has determinant ±1."""
        rays = self.normals_ccw()
        n = len(rays)
        for i in range(n):
            (x1, y1), (x2, y2) = rays[i], rays[(i + 1) % n]
            if abs(x1 * y2 - y1 * x2) != 1:
                return False
        return True

    def is_horizontal(self) -> bool:
        return self.b_top > 0

    def side_lengths(self) -> list[int]:
        """Integral lengths of all sides (horizontal ones only if present)."""
        out = [self.b_bot]
        if self.b_top > 0:
            out.append(self.b_top)
        for vals in (self.b_left, self.b_right):
            seen: dict[int, int] = {}
            for k in vals:
                seen[k] = seen.get(k, 0) + 1
            out.extend(seen.values())
        return out

    def d_top_sq(self) -> int:
        """Self-intersection of the top toric divisor (needs b_top > 0)."""
        if self.b_top == 0:
            raise ValueError("no top horizontal side")
        return -(max(self.b_right) + max(self.b_left))

    def d_bot_sq(self) -> int:
        """Self-intersection of the bottom toric divisor."""
        return min(self.b_right) + min(self.b_left)

    def lattice_invariants(self) -> LatticeInvariants:
        widths = self.slice_widths()
        g_max = sum(w - 1 for w in widths)
        area2 = self.b_top + self.b_bot + 2 * sum(widths)
        chi = (
            (1 if self.b_bot > 0 else 0)
            + (1 if self.b_top > 0 else 0)
            + len(set(self.b_left))
            + len(set(self.b_right))
        )
        k_dot_beta = -(self.b_top + self.b_bot + 2 * self.a)
        beta_sq = area2
        k_sq = 12 - chi
        # adjunction must close up exactly; a failure means bad class data
        assert 2 * g_max == 2 + beta_sq + k_dot_beta, "adjunction failed"
        return LatticeInvariants(g_max, area2, chi, k_dot_beta, beta_sq, k_sq)

    # -- wire format --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b_top": self.b_top,
            "b_bot": self.b_bot,
            "b_left": list(self.b_left),
            "b_right": list(self.b_right),
        }

    @classmethod
    def from_json(cls, d: dict) -> SurfaceClass:
        return cls(
            int(d["a"]),
            int(d["b_top"]),
            int(d["b_bot"]),
            tuple(int(k) for k in d["b_left"]),
            tuple(int(k) for k in d["b_right"]),
        )

    def describe(self) -> str:
        return (
            f"a={self.a} b_top={self.b_top} b_bot={self.b_bot} "
            f"b_left={list(self.b_left)} b_right={list(self.b_right)}"
        )


@dataclass(frozen=True)
class LatticeInvariants:
    g_max: int
    area2: int       # 2 * euclidean area of the polygon
    chi: int         # Euler characteristic = number of sides / fan rays
    k_dot_beta: int  # K_X . beta
    beta_sq: int     # beta^2 = 2 * Area
    k_sq: int        # K_X^2 = 12 - chi

    def to_json(self) -> dict:
        return {
            "g_max": self.g_max,
            "area2": self.area2,
            "chi": self.chi,
            "k_dot_beta": self.k_dot_beta,
            "beta_sq": self.beta_sq,
            "k_sq": self.k_sq,
        }


# canonical test fixture: the example polygon with a=3, b_top=1, b_bot=3,
# b_left={-1,1,1}, b_right={0,0,1}; g_max=5, slice widths (4,3)
def example_polygon() -> SurfaceClass:
    return SurfaceClass(3, 1, 3, (-1, 1, 1), (0, 0, 1))
