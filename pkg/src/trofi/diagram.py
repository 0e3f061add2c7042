"""Floor diagrams: validity, genus, degree/codegree, refined
multiplicities, and exact counting of (s-compatible) markings.

A diagram is stored with floors labelled 1..a in some topological order
of the oriented graph, so every bounded edge points from a lower to a
higher label.  Ends are anonymous and recorded as multisets of attached
floors.  Markings (increasing bijections to {1..n}) are counted up to
diagram isomorphism via a dynamic program over order ideals of the
induced poset, with interchangeable elements collapsed into groups; the
result is divided by the number of floor-permutation automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .polygon import SurfaceClass
from .series import SymLaurent, TruncSeries, quantum_integer


@dataclass(frozen=True)
class FloorDiagram:
    surface: SurfaceClass
    sloping: tuple[tuple[int, int], ...]   # (L, R) per floor, index 0 = floor 1
    edges: tuple[tuple[int, int, int], ...]  # (src, dst, weight), 1-based, src < dst
    bottom: tuple[int, ...]                # floors carrying the sources
    top: tuple[int, ...]                   # floors carrying the sinks

    def __post_init__(self):
        sc = self.surface
        a = sc.a
        sloping = tuple((int(l), int(r)) for l, r in self.sloping)
        edges = tuple(sorted((int(u), int(v), int(w)) for u, v, w in self.edges))
        bottom = tuple(sorted(int(f) for f in self.bottom))
        top = tuple(sorted(int(f) for f in self.top))
        object.__setattr__(self, "sloping", sloping)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "bottom", bottom)
        object.__setattr__(self, "top", top)

        if len(sloping) != a:
            raise ValueError("one sloping pair per floor required")
        if tuple(sorted(l for l, _ in sloping)) != sc.b_left:
            raise ValueError("L is not a bijection onto b_left")
        if tuple(sorted(r for _, r in sloping)) != sc.b_right:
            raise ValueError("R is not a bijection onto b_right")
        if len(bottom) != sc.b_bot or len(top) != sc.b_top:
            raise ValueError("wrong number of sources or sinks")
        for f in bottom + top:
            if not 1 <= f <= a:
                raise ValueError("end attached outside the floor range")
        for u, v, w in edges:
            if not (1 <= u < v <= a):
                raise ValueError("bounded edges must go from a lower to a higher floor")
            if w < 1:
                raise ValueError("edge weights must be >= 1")

        # divergence: incoming minus outgoing weight equals L(v)+R(v)
        div = [0] * (a + 1)
        for u, v, w in edges:
            div[u] -= w
            div[v] += w
        for f in bottom:
            div[f] += 1
        for f in top:
            div[f] -= 1
        for v in range(1, a + 1):
            l, r = sloping[v - 1]
            if div[v] != l + r:
                raise ValueError(
                    f"divergence at floor {v} is {div[v]}, expected {l + r}"
                )

        # connectivity of the floor graph (ends are univalent, irrelevant here)
        parent = list(range(a + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in edges:
            parent[find(u)] = find(v)
        if len({find(v) for v in range(1, a + 1)}) != 1:
            raise ValueError("diagram is disconnected")

    # -- basic numerics -----------------------------------------------------

    @property
    def a(self) -> int:
        return self.surface.a

    def genus(self) -> int:
        """First Betti number of the underlying connected graph."""
        return len(self.edges) - self.a + 1

    def deg2(self) -> int:
        """Twice the degree: b_top + b_bot + 2*sum of bounded weights."""
        return self.surface.b_top + self.surface.b_bot + 2 * sum(w for _, _, w in self.edges)

    def codegree(self) -> int:
        area2 = self.surface.lattice_invariants().area2
        d = area2 - self.deg2()
        if d < 0 or d % 2:
            raise ValueError("invalid weights: degree exceeds the area bound")
        return d // 2

    # -- multiplicities -----------------------------------------------------

    def bg_multiplicity(self) -> SymLaurent:
        """prod over bounded edges of [w(e)]^2 (ends contribute [1]^2 = 1)."""
        out = SymLaurent.one()
        for _, _, w in self.edges:
            out = out * quantum_integer(w) ** 2
        return out

    def x_multiplicity(self, order: int, s: int = 0) -> TruncSeries:
        """x^codeg (1+x)^s (1-x)^{b_top+b_bot-s} prod (1-x^w)^2, truncated.

        Returns the zero series without touching the product when the
        codegree already exceeds the truncation order.
        """
        if s < 0:
            raise ValueError("s must be >= 0")
        ends = self.surface.b_top + self.surface.b_bot
        if s > ends:
            raise ValueError("s exceeds the number of ends")
        c = self.codegree()
        if c > order:
            return TruncSeries.zero(order)
        out = TruncSeries.from_coeffs((0,) * c + (1,), order)
        if s:
            out = out * TruncSeries.from_coeffs((1, 1), order) ** s
        out = out * TruncSeries.from_coeffs((1, -1), order) ** (ends - s)
        for _, _, w in self.edges:
            out = out * TruncSeries.from_coeffs((1,) + (0,) * (w - 1) + (-1,), order) ** 2
        return out

    # -- markings -----------------------------------------------------------

    @cached_property
    def _groups(self):
        """Interchangeable-element groups of the marking poset.

        Returns (kinds, sizes, needs_full, src_floor, floor_index) where
        needs_full[i] lists group indices that must be exhausted before a
        floor group i opens, and src_floor[i] is the floor gating group i
        (edge and top-end groups) or 0.
        """
        sc = self.surface
        a = sc.a
        kinds: list[tuple] = []
        sizes: list[int] = []
        floor_index = [0] * (a + 1)
        for v in range(1, a + 1):
            floor_index[v] = len(kinds)
            kinds.append(("floor", v))
            sizes.append(1)

        edge_groups: dict[tuple[int, int, int], int] = {}
        for e in self.edges:
            edge_groups[e] = edge_groups.get(e, 0) + 1
        edge_index: dict[tuple[int, int, int], int] = {}
        for e, mult in sorted(edge_groups.items()):
            edge_index[e] = len(kinds)
            kinds.append(("edge", e))
            sizes.append(mult)

        bot_counts: dict[int, int] = {}
        for f in self.bottom:
            bot_counts[f] = bot_counts.get(f, 0) + 1
        bot_index: dict[int, int] = {}
        for f, n in sorted(bot_counts.items()):
            bot_index[f] = len(kinds)
            kinds.append(("bottom", f))
            sizes.append(n)

        top_counts: dict[int, int] = {}
        for f in self.top:
            top_counts[f] = top_counts.get(f, 0) + 1
        for f, n in sorted(top_counts.items()):
            kinds.append(("top", f))
            sizes.append(n)

        n_groups = len(kinds)
        needs_full: list[tuple[int, ...]] = [() for _ in range(n_groups)]
        src_floor = [0] * n_groups
        for i, kind in enumerate(kinds):
            tag = kind[0]
            if tag == "floor":
                v = kind[1]
                req = [edge_index[e] for e in edge_index if e[1] == v]
                if v in bot_index:
                    req.append(bot_index[v])
                needs_full[i] = tuple(sorted(req))
            elif tag == "edge":
                src_floor[i] = kind[1][0]
            elif tag == "top":
                src_floor[i] = kind[1]
        return kinds, tuple(sizes), tuple(needs_full), tuple(src_floor), tuple(floor_index)

    def _addable(self, i: int, state: tuple[int, ...]) -> bool:
        kinds, sizes, needs_full, src_floor, floor_index = self._groups
        if state[i] >= sizes[i]:
            return False
        tag = kinds[i][0]
        if tag == "bottom":
            return True
        if tag in ("edge", "top"):
            return state[floor_index[src_floor[i]]] == 1
        # floor: every gating group must be exhausted
        return all(state[j] == sizes[j] for j in needs_full[i])

    def _quotient_extensions(self, s: int = 0) -> int:
        """Linear extensions of the poset with interchangeable elements
        collapsed (equivalently: #extensions / prod of group factorials),
        restricted to s-compatible ones when s > 0."""
        kinds, sizes, *_ = self._groups
        n = len(sizes)
        full = tuple(sizes)
        pair_limit = 2 * s
        compat = self._pair_compatible
        memo: dict[tuple[int, ...], int] = {}

        def rec(state: tuple[int, ...]) -> int:
            if state == full:
                return 1
            got = memo.get(state)
            if got is not None:
                return got
            total = 0
            placed = sum(state)
            if placed < pair_limit:
                # positions placed+1, placed+2 form a constrained pair
                for i in range(n):
                    if not self._addable(i, state):
                        continue
                    st1 = state[:i] + (state[i] + 1,) + state[i + 1:]
                    for j in range(n):
                        if compat(i, j) and self._addable(j, st1):
                            total += rec(st1[:j] + (st1[j] + 1,) + st1[j + 1:])
            else:
                for i in range(n):
                    if self._addable(i, state):
                        total += rec(state[:i] + (state[i] + 1,) + state[i + 1:])
            memo[state] = total
            return total

        return rec((0,) * n)

    def _pair_compatible(self, i: int, j: int) -> bool:
        """Pairing rule: an edge plus a floor, or two edges that both
        enter or both leave one common floor (ends count as edges)."""
        kinds = self._groups[0]
        ki, kj = kinds[i], kinds[j]
        fi, fj = ki[0] == "floor", kj[0] == "floor"
        if fi and fj:
            return False
        if fi or fj:
            return True
        return bool(
            (self._enters(ki) & self._enters(kj)) | (self._leaves(ki) & self._leaves(kj))
        )

    @staticmethod
    def _enters(kind: tuple) -> frozenset[int]:
        if kind[0] == "bottom":
            return frozenset((kind[1],))
        if kind[0] == "edge":
            return frozenset((kind[1][1],))
        return frozenset()

    @staticmethod
    def _leaves(kind: tuple) -> frozenset[int]:
        if kind[0] == "top":
            return frozenset((kind[1],))
        if kind[0] == "edge":
            return frozenset((kind[1][0],))
        return frozenset()

    @cached_property
    def floor_automorphisms(self) -> int:
        """Number of floor permutations preserving sloping pairs, end
        counts, and the weighted edge multiset.  Usually 1; bigger when
        the diagram has structurally identical incomparable floors."""
        a = self.a
        bot_counts = {f: self.bottom.count(f) for f in range(1, a + 1)}
        top_counts = {f: self.top.count(f) for f in range(1, a + 1)}
        in_w: dict[int, list[int]] = {v: [] for v in range(1, a + 1)}
        out_w: dict[int, list[int]] = {v: [] for v in range(1, a + 1)}
        edge_mult: dict[tuple[int, int, int], int] = {}
        for u, v, w in self.edges:
            out_w[u].append(w)
            in_w[v].append(w)
            edge_mult[(u, v, w)] = edge_mult.get((u, v, w), 0) + 1

        def sig(v):
            return (
                self.sloping[v - 1],
                bot_counts[v],
                top_counts[v],
                tuple(sorted(in_w[v])),
                tuple(sorted(out_w[v])),
            )

        sigs = {v: sig(v) for v in range(1, a + 1)}
        candidates = {
            v: [w for w in range(1, a + 1) if sigs[w] == sigs[v]] for v in range(1, a + 1)
        }

        edge_between: dict[tuple[int, int], dict[int, int]] = {}
        for u, v, w in self.edges:
            grp = edge_between.setdefault((u, v), {})
            grp[w] = grp.get(w, 0) + 1

        def dirmult(p, q):
            # weight multiset of directed edges p -> q (stored ascending only)
            return edge_between.get((p, q)) if p < q else None

        count = 0
        image = [0] * (a + 1)
        used = [False] * (a + 1)

        def rec(v):
            nonlocal count
            if v > a:
                count += 1
                return
            for w in candidates[v]:
                if used[w]:
                    continue
                if all(
                    dirmult(u, v) == dirmult(image[u], w)
                    and dirmult(v, u) == dirmult(w, image[u])
                    for u in range(1, v)
                ):
                    used[w] = True
                    image[v] = w
                    rec(v + 1)
                    used[w] = False

        rec(1)
        return count

    def count_markings(self) -> int:
        """Number of isomorphism classes of markings (increasing bijections
        from floors and edges to {1..n}, modulo diagram automorphisms)."""
        q = self._quotient_extensions()
        aut = self.floor_automorphisms
        if q % aut:
            raise RuntimeError("automorphism count does not divide the extension count")
        return q // aut

    def count_s_markings(self, s: int) -> int:
        """Marking classes whose first 2s labels satisfy the pairing rule."""
        if s < 0:
            raise ValueError("s must be >= 0")
        n_elements = self.a + len(self.edges) + len(self.bottom) + len(self.top)
        if 2 * s > n_elements:
            raise ValueError("2s exceeds the number of floors and edges")
        if s == 0:
            return self.count_markings()
        q = self._quotient_extensions(s)
        aut = self.floor_automorphisms
        if q % aut:
            raise RuntimeError("automorphism count does not divide the extension count")
        return q // aut

    # -- wire formats -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "surface": self.surface.to_json(),
            "floors": [{"L": l, "R": r} for l, r in self.sloping],
            "edges": [list(e) for e in self.edges],
            "bottom": list(self.bottom),
            "top": list(self.top),
        }

    @classmethod
    def from_json(cls, d: dict) -> FloorDiagram:
        return cls(
            SurfaceClass.from_json(d["surface"]),
            tuple((int(f["L"]), int(f["R"])) for f in d["floors"]),
            tuple(tuple(int(x) for x in e) for e in d["edges"]),
            tuple(int(f) for f in d["bottom"]),
            tuple(int(f) for f in d["top"]),
        )

    def to_dot(self) -> str:
        lines = ["digraph floor_diagram {", "  rankdir=BT;"]
        for v in range(1, self.a + 1):
            l, r = self.sloping[v - 1]
            lines.append(f'  f{v} [shape=circle label="v{v}\\n({l},{r})"];')
        for i, (u, v, w) in enumerate(self.edges):
            label = f' [label="{w}"]' if w > 1 else ""
            lines.append(f"  f{u} -> f{v}{label};")
        for i, f in enumerate(self.bottom):
            lines.append(f'  b{i} [shape=point]; b{i} -> f{f};')
        for i, f in enumerate(self.top):
            lines.append(f'  t{i} [shape=point]; f{f} -> t{i};')
        lines.append("}")
        return "\n".join(lines)
