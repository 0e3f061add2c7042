"""Exact series arithmetic: truncated integer power series, bivariate
truncations, and symmetric Laurent polynomials in q^{1/2}.

Everything is arbitrary-precision integer; there is no floating point in
this package.  Binary operations insist on matching truncation orders
instead of silently re-truncating -- use :meth:`TruncSeries.truncate`
explicitly when an order change is intended.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


def _int_tuple(cs) -> tuple[int, ...]:
    return tuple(int(c) for c in cs)


@dataclass(frozen=True)
class TruncSeries:
    """Integer power series modulo x^{order+1}; ``coeffs[k]`` is [x^k]."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = _int_tuple(self.coeffs)
        if len(cs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(cs)}"
            )
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_coeffs(cls, coeffs, order: int) -> TruncSeries:
        """Series from a coefficient prefix, zero-padded up to the order."""
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def zero(cls, order: int) -> TruncSeries:
        return cls.from_coeffs((), order)

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls.from_coeffs((1,), order)

    @classmethod
    def x(cls, order: int) -> TruncSeries:
        return cls.from_coeffs((0, 1), order)

    def coeff(self, k: int) -> int:
        if not 0 <= k <= self.order:
            raise IndexError(f"x^{k} is outside the truncation")
        return self.coeffs[k]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check_order(self, other: TruncSeries) -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation-order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if isinstance(other, int):
            cs = list(self.coeffs)
            cs[0] += other
            return TruncSeries(self.order, tuple(cs))
        self._check_order(other)
        return TruncSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncSeries(self.order, tuple(other * c for c in self.coeffs))
        self._check_order(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncSeries(n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("exponent must be >= 0")
        result = TruncSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> TruncSeries:
        """Multiplicative inverse mod x^{order+1}; constant term must be ±1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("constant term must be a unit (±1) to invert")
        n = self.order
        out = [0] * (n + 1)
        out[0] = c0
        for m in range(1, n + 1):
            s = sum(self.coeffs[k] * out[m - k] for k in range(1, m + 1))
            out[m] = -c0 * s
        return TruncSeries(n, tuple(out))

    def truncate(self, order: int) -> TruncSeries:
        """Explicit re-truncation to a lower (or equal) order."""
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(order, self.coeffs[: order + 1])

    def shift(self, k: int) -> TruncSeries:
        """Multiply by x^k (k >= 0)."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        return TruncSeries(self.order, _int_tuple((0,) * k + self.coeffs)[: self.order + 1])

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                var = "x" if k == 1 else f"x^{k}"
                terms.append(("-" if c < 0 else "+") + f" {mag}{var}"
                             if terms else (("-" if c < 0 else "") + f"{mag}{var}"))
        return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class BiTruncSeries:
    """Integer series in (u, x) modulo (u^{u_order+1}, x^{x_order+1}).

    ``rows[g][k]`` is the coefficient of u^g x^k.
    """

    u_order: int
    x_order: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.u_order < 0 or self.x_order < 0:
            raise ValueError("truncation orders must be >= 0")
        rows = tuple(_int_tuple(r) for r in self.rows)
        if len(rows) != self.u_order + 1 or any(
            len(r) != self.x_order + 1 for r in rows
        ):
            raise ValueError("grid shape does not match truncation orders")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def zero(cls, u_order: int, x_order: int) -> BiTruncSeries:
        return cls(u_order, x_order, tuple((0,) * (x_order + 1) for _ in range(u_order + 1)))

    @classmethod
    def one(cls, u_order: int, x_order: int) -> BiTruncSeries:
        z = cls.zero(u_order, x_order)
        rows = [list(r) for r in z.rows]
        rows[0][0] = 1
        return cls(u_order, x_order, tuple(tuple(r) for r in rows))

    @classmethod
    def from_u_series(cls, s: TruncSeries, x_order: int = 0) -> BiTruncSeries:
        return cls(s.order, x_order, tuple((c,) + (0,) * x_order for c in s.coeffs))

    @classmethod
    def from_x_series(cls, s: TruncSeries, u_order: int = 0) -> BiTruncSeries:
        rows = [s.coeffs] + [(0,) * (s.order + 1) for _ in range(u_order)]
        return cls(u_order, s.order, tuple(rows))

    def u_slice(self, g: int) -> TruncSeries:
        """Coefficient of u^g as a series in x."""
        return TruncSeries(self.x_order, self.rows[g])

    def coeff(self, g: int, k: int) -> int:
        return self.rows[g][k]

    def _check_order(self, other: BiTruncSeries) -> None:
        if (self.u_order, self.x_order) != (other.u_order, other.x_order):
            raise ValueError("truncation-order mismatch")

    def __add__(self, other: BiTruncSeries) -> BiTruncSeries:
        self._check_order(other)
        return BiTruncSeries(
            self.u_order,
            self.x_order,
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.rows, other.rows)
            ),
        )

    def __neg__(self):
        return BiTruncSeries(
            self.u_order, self.x_order, tuple(tuple(-c for c in r) for r in self.rows)
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BiTruncSeries(
                self.u_order,
                self.x_order,
                tuple(tuple(other * c for c in r) for r in self.rows),
            )
        self._check_order(other)
        G, N = self.u_order, self.x_order
        out = [[0] * (N + 1) for _ in range(G + 1)]
        for g1, r1 in enumerate(self.rows):
            for k1, a in enumerate(r1):
                if a == 0:
                    continue
                for g2 in range(G + 1 - g1):
                    r2 = other.rows[g2]
                    for k2 in range(N + 1 - k1):
                        b = r2[k2]
                        if b:
                            out[g1 + g2][k1 + k2] += a * b
        return BiTruncSeries(G, N, tuple(tuple(r) for r in out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("exponent must be >= 0")
        result = BiTruncSeries.one(self.u_order, self.x_order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


@dataclass(frozen=True)
class SymLaurent:
    """Laurent polynomial in q^{1/2} with integer coefficients.

    Exponents are tracked in half-integer units: ``coeffs[i]`` is the
    coefficient of q^{(half_min + i)/2}.  The representation is
    normalized so the extreme coefficients are nonzero; zero is stored
    as ``SymLaurent(0, ())``.
    """

    half_min: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = _int_tuple(self.coeffs)
        lo = 0
        hi = len(cs)
        while lo < hi and cs[lo] == 0:
            lo += 1
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "half_min", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "half_min", self.half_min + lo)
            object.__setattr__(self, "coeffs", cs[lo:hi])

    @classmethod
    def zero(cls) -> SymLaurent:
        return cls(0, ())

    @classmethod
    def one(cls) -> SymLaurent:
        return cls(0, (1,))

    @classmethod
    def term(cls, coeff: int, half_exp: int) -> SymLaurent:
        """coeff * q^{half_exp/2}."""
        return cls(half_exp, (coeff,))

    @property
    def half_max(self) -> int:
        return self.half_min + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff_half(self, half_exp: int) -> int:
        """Coefficient of q^{half_exp/2}."""
        i = half_exp - self.half_min
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __add__(self, other):
        if isinstance(other, int):
            other = SymLaurent.term(other, 0)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.half_min, other.half_min)
        hi = max(self.half_max, other.half_max)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.half_min + i - lo] += c
        for i, c in enumerate(other.coeffs):
            out[other.half_min + i - lo] += c
        return SymLaurent(lo, tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return SymLaurent(self.half_min, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = SymLaurent.term(other, 0)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymLaurent(self.half_min, tuple(other * c for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return SymLaurent.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return SymLaurent(self.half_min + other.half_min, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("exponent must be >= 0")
        result = SymLaurent.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def eval_q1(self) -> int:
        """Value at q = 1 (i.e. q^{1/2} = 1)."""
        return sum(self.coeffs)

    def eval_qm1(self) -> int:
        """Value at q = -1; requires integer powers of q only."""
        total = 0
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.half_min + i
            if e % 2:
                raise ValueError("half-integer power present; q=-1 is undefined")
            total += c * (-1) ** ((e // 2) % 2)
        return total

    def reversed_q(self) -> SymLaurent:
        """The image under q -> 1/q."""
        return SymLaurent(-self.half_max, tuple(reversed(self.coeffs)))

    def is_symmetric(self) -> bool:
        return self == self.reversed_q()

    def is_antisymmetric(self) -> bool:
        return self == -self.reversed_q()

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            e = self.half_min + i
            if e == 0:
                body = f"{abs(c)}"
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                if e % 2 == 0:
                    ex = e // 2
                    body = f"{mag}q" if ex == 1 else f"{mag}q^{ex}"
                else:
                    body = f"{mag}q^{{{e}/2}}"
            sign = "-" if c < 0 else ("+" if terms else "")
            terms.append(f"{sign} {body}" if terms else f"{sign}{body}")
        return " ".join(terms)


# ---------------------------------------------------------------------------
# named series


def partition_series(order: int) -> TruncSeries:
    """p(x) = prod_{j>=1} 1/(1-x^j); [x^k] is the number of partitions of k.

    Only factors with j <= order contribute below the truncation.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    cs = [0] * (order + 1)
    cs[0] = 1
    for j in range(1, order + 1):
        for k in range(j, order + 1):
            cs[k] += cs[k - j]
    return TruncSeries(order, tuple(cs))


def eisenstein_e2(order: int) -> TruncSeries:
    """E2(x) = sum_{k>=1} sigma_1(k) x^k with sigma_1 the divisor sum."""
    if order < 0:
        raise ValueError("order must be >= 0")
    cs = [0] * (order + 1)
    for d in range(1, order + 1):
        for k in range(d, order + 1, d):
            cs[k] += d
    return TruncSeries(order, tuple(cs))


def bracket_series(m: int, order: int) -> TruncSeries:
    """<m> = x^m/(1-x^m) = x^m + x^{2m} + ..., truncated."""
    if m <= 0:
        raise ValueError("m must be >= 1")
    cs = [0] * (order + 1)
    for k in range(m, order + 1, m):
        cs[k] = 1
    return TruncSeries(order, tuple(cs))


def quantum_integer(n: int) -> SymLaurent:
    """[n](q) = (q^{n/2}-q^{-n/2})/(q^{1/2}-q^{-1/2}); [0] = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return SymLaurent.zero()
    # exponents (n-1), (n-3), ..., -(n-1) in half-units
    cs = [0] * (2 * n - 1)
    for i in range(0, 2 * n - 1, 2):
        cs[i] = 1
    return SymLaurent(-(n - 1), tuple(cs))


def laurent_to_trunc(p: SymLaurent, area2: int, order: int) -> TruncSeries:
    """Rewrite a cleared Laurent polynomial as a polynomial in x = 1/q.

    Sends the coefficient of q^{e/2} to x^{(area2-e)/2}, i.e. the
    codegree-i coefficient of p (relative to top degree area2/2 in q)
    lands on x^i.  ``area2`` is twice the area bound; the top exponent
    of p may not exceed it and must have the same parity.
    """
    if p.is_zero():
        return TruncSeries.zero(order)
    if p.half_max > area2:
        raise ValueError("area2 smaller than the top exponent of p")
    cs = [0] * (order + 1)
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        e = p.half_min + i
        d = area2 - e
        if d % 2:
            raise ValueError("exponent parity incompatible with area2")
        k = d // 2
        if k <= order:
            cs[k] = c
    return TruncSeries(order, tuple(cs))


# ---------------------------------------------------------------------------
# JSON wire formats (coefficients as decimal strings; they exceed 64 bits)


def series_to_json(s: TruncSeries, var: str = "x") -> dict:
    return {"var": var, "trunc": s.order, "coeffs": [str(c) for c in s.coeffs]}


def series_from_json(d: dict) -> TruncSeries:
    return TruncSeries(int(d["trunc"]), tuple(int(c) for c in d["coeffs"]))


def laurent_to_json(p: SymLaurent) -> dict:
    return {"var": "q^{1/2}", "min": p.half_min, "coeffs": [str(c) for c in p.coeffs]}


def laurent_from_json(d: dict) -> SymLaurent:
    return SymLaurent(int(d["min"]), tuple(int(c) for c in d["coeffs"]))


def bi_to_json(s: BiTruncSeries) -> dict:
    return {
        "vars": ["u", "x"],
        "u_trunc": s.u_order,
        "x_trunc": s.x_order,
        "rows": [[str(c) for c in r] for r in s.rows],
    }


def bi_from_json(d: dict) -> BiTruncSeries:
    return BiTruncSeries(
        int(d["u_trunc"]),
        int(d["x_trunc"]),
        tuple(tuple(int(c) for c in r) for r in d["rows"]),
    )


def binomial_series(order: int) -> TruncSeries:
    """1 + u as a truncated series (used for (1+u)^k expansions)."""
    return TruncSeries.from_coeffs((1, 1), order)


def binomial_power(exponent: int, order: int) -> TruncSeries:
    """(1+u)^exponent mod u^{order+1}, exponent >= 0, via binomials."""
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    return TruncSeries(order, tuple(comb(exponent, g) for g in range(order + 1)))
