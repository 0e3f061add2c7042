"""Exhaustive generation of floor diagrams of a given class and genus,
deduplicated up to isomorphism, with codegree-budget pruning.

The search is layered so every partial choice carries an exact codegree
cost, and the costs add up to the codegree of the finished diagram:

  codeg(D) = defect(L) + defect(R)            (sloping-pair inversions)
           + sum over ends of skipped floors  (end displacement)
           + sum over edges of w * (span-1)   (floors bypassed by edges)

where defect is measured against the sorted assignment.  Any labelling
of a diagram within the budget survives the pruning, so enumeration
with budget N is complete for everything of codegree <= N; duplicates
from relabelling are removed by a canonical form (minimum over
topological orders of the floor poset).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .diagram import FloorDiagram
from .polygon import SurfaceClass
from .series import TruncSeries

DEFAULT_FULL_CAP = 30  # largest 2*Area admitted to full (unbudgeted) enumeration
_EXTENSION_GUARD = 20000


class FullEnumerationCapError(ValueError):
    """Raised when an unbudgeted enumeration is requested on a class whose
    doubled area exceeds the configured cap."""


def sloping_assignments(values, budget: int):
    """Distinct sequences drawn from the multiset ``values``, with the
    total prefix-sum defect against the sorted order at most ``budget``.

    Yields (assignment, cost).  The defect at position m is the prefix
    sum minus the minimal (sorted) prefix sum; summed over m < len it is
    exactly the codegree contributed by sloping-pair inversions.
    """
    vals = tuple(sorted(values))
    a = len(vals)
    if a == 0:
        yield (), 0
        return
    sorted_prefix = [0] * (a + 1)
    for i, v in enumerate(vals):
        sorted_prefix[i + 1] = sorted_prefix[i] + v
    remaining: dict[int, int] = {}
    for v in vals:
        remaining[v] = remaining.get(v, 0) + 1
    chosen: list[int] = []

    def rec(m: int, prefix: int, cost: int):
        if m == a:
            yield tuple(chosen), cost
            return
        for v in sorted(remaining):
            if remaining[v] == 0:
                continue
            new_prefix = prefix + v
            new_cost = cost
            if m < a - 1:
                new_cost += new_prefix - sorted_prefix[m + 1]
            if new_cost > budget:
                continue
            remaining[v] -= 1
            chosen.append(v)
            yield from rec(m + 1, new_prefix, new_cost)
            chosen.pop()
            remaining[v] += 1

    yield from rec(0, 0, 0)


def end_attachments(count: int, a: int, side: str, budget: int):
    """Attachment count vectors (n_1..n_a) for ``count`` ends.

    Bottom ends at floor f cost f-1 (floors skipped below), top ends
    cost a-f.  Yields (counts, cost) with cost <= budget.
    """
    free = 1 if side == "bottom" else a

    def cost_of(f: int) -> int:
        return f - 1 if side == "bottom" else a - f

    paying = [f for f in range(1, a + 1) if cost_of(f) > 0 and cost_of(f) <= budget]
    counts = [0] * (a + 1)

    def rec(idx: int, placed: int, cost: int):
        if idx == len(paying):
            counts[free] = count - placed
            yield tuple(counts[1:]), cost
            counts[free] = 0
            return
        f = paying[idx]
        c = cost_of(f)
        max_here = min(count - placed, (budget - cost) // c)
        for n in range(max_here + 1):
            counts[f] = n
            yield from rec(idx + 1, placed + n, cost + n * c)
            counts[f] = 0

    yield from rec(0, 0, 0)


def _partitions_into(total: int, parts: int, max_part: int | None = None):
    """Weakly decreasing tuples of ``parts`` positive integers with sum
    ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if max_part is None:
        max_part = total
    top = min(max_part, total - (parts - 1))
    for first in range(top, 0, -1):
        if first * parts < total:
            break
        for rest in _partitions_into(total - first, parts - 1, first):
            yield (first,) + rest


def _long_edge_sets(a: int, crossings, budget: int):
    """Multisets of span->=2 edges (u,v,w) with total cost w*(v-u-1)
    within budget and weights fitting under the crossing profile.
    Yields (edges tuple, cost, per-level used weight)."""
    candidates = []
    for u in range(1, a - 1):
        for v in range(u + 2, a + 1):
            span_cost = v - u - 1
            wmax = min(
                budget // span_cost, min(crossings[m - 1] for m in range(u, v))
            )
            for w in range(1, wmax + 1):
                candidates.append((u, v, w, w * span_cost))

    used0 = (0,) * (a - 1)

    def rec(idx: int, cost: int, used: tuple[int, ...], acc: tuple):
        yield acc, cost, used
        for i in range(idx, len(candidates)):
            u, v, w, c = candidates[i]
            if cost + c > budget:
                continue
            new_used = list(used)
            ok = True
            for m in range(u, v):
                new_used[m - 1] += w
                if new_used[m - 1] > crossings[m - 1]:
                    ok = False
                    break
            if ok:
                yield from rec(i, cost + c, tuple(new_used), acc + ((u, v, w),))

    yield from rec(0, 0, used0, ())


def _compositions(total: int, bounds: list[tuple[int, int]]):
    """Tuples (k_1..k_n) with lo_i <= k_i <= hi_i summing to ``total``."""
    n = len(bounds)
    lo_suffix = [0] * (n + 1)
    hi_suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        lo_suffix[i] = lo_suffix[i + 1] + bounds[i][0]
        hi_suffix[i] = hi_suffix[i + 1] + bounds[i][1]
    out = [0] * n

    def rec(i: int, left: int):
        if i == n:
            if left == 0:
                yield tuple(out)
            return
        lo, hi = bounds[i]
        for k in range(max(lo, left - hi_suffix[i + 1]), min(hi, left - lo_suffix[i + 1]) + 1):
            out[i] = k
            yield from rec(i + 1, left - k)

    yield from rec(0, total)


def _edge_configs(a: int, crossings, n_edges: int, span_budget: int):
    """All bounded-edge sets matching the crossing profile exactly.

    crossings[m-1] is the total weight that must flow through the level
    between floors m and m+1; n_edges is forced by the genus.
    """
    for longs, cost, used in _long_edge_sets(a, crossings, span_budget):
        residual = [crossings[m] - used[m] for m in range(a - 1)]
        k_left = n_edges - len(longs)
        if k_left < 0:
            continue
        bounds = [(1 if r > 0 else 0, r) for r in residual]
        for ks in _compositions(k_left, bounds):
            per_level = []
            for m in range(a - 1):
                if ks[m] == 0:
                    per_level.append(((),))
                else:
                    per_level.append(
                        tuple(_partitions_into(residual[m], ks[m]))
                    )
            stack: list[tuple[tuple[int, int, int], ...]] = [()]
            for m in range(a - 1):
                new_stack = []
                for base in stack:
                    for part in per_level[m]:
                        new_stack.append(base + tuple((m + 1, m + 2, w) for w in part))
                stack = new_stack
            for consec in stack:
                yield consec + longs, cost


def _floor_extensions(a: int, edges) -> list[tuple[int, ...]]:
    """Topological orders of the floor poset induced by the edges."""
    succ: dict[int, set[int]] = {v: set() for v in range(1, a + 1)}
    indeg = {v: 0 for v in range(1, a + 1)}
    for u, v, _ in edges:
        if v not in succ[u]:
            succ[u].add(v)
            indeg[v] += 1
    orders: list[tuple[int, ...]] = []
    order: list[int] = []

    def rec():
        if len(order) == a:
            orders.append(tuple(order))
            if len(orders) > _EXTENSION_GUARD:
                raise RuntimeError("floor poset has too many topological orders")
            return
        for v in range(1, a + 1):
            if indeg[v] == 0 and v not in placed:
                placed.add(v)
                order.append(v)
                for w in succ[v]:
                    indeg[w] -= 1
                rec()
                for w in succ[v]:
                    indeg[w] += 1
                order.pop()
                placed.discard(v)

    placed: set[int] = set()
    rec()
    return orders


def _canonical_key_and_relabel(sloping, edges, bottom_counts, top_counts, a):
    """Minimal serialization over topological relabellings, plus the
    relabelled data realizing it."""
    best = None
    for order in _floor_extensions(a, edges):
        # order[i] = old id placed at new position i+1
        new_of_old = {old: i + 1 for i, old in enumerate(order)}
        floors = tuple(
            (sloping[old - 1][0], sloping[old - 1][1],
             bottom_counts[old - 1], top_counts[old - 1])
            for old in order
        )
        es = tuple(sorted((new_of_old[u], new_of_old[v], w) for u, v, w in edges))
        key = (floors, es)
        if best is None or key < best[0]:
            best = (key, floors, es)
    return best


@dataclass(frozen=True)
class WeightedEnumeration:
    series: TruncSeries
    diagram_count: int
    warnings: tuple[str, ...]


def _enumerate_for_sloping(sc: SurfaceClass, genus: int, budget: int, pair):
    """All labelled diagrams for one (L, R) assignment, as canonical-key
    -> FloorDiagram entries."""
    (L, cost_l), (R, cost_r) = pair
    a = sc.a
    base = cost_l + cost_r
    n_edges = a - 1 + genus
    found: dict[tuple, FloorDiagram] = {}
    div = [L[v] + R[v] for v in range(a)]
    for bot, cost_b in end_attachments(sc.b_bot, a, "bottom", budget - base):
        for tp, cost_t in end_attachments(sc.b_top, a, "top", budget - base - cost_b):
            crossings = []
            acc = 0
            ok = True
            for m in range(a - 1):
                acc += bot[m] - tp[m] - div[m]
                if acc <= 0:
                    ok = False
                    break
                crossings.append(acc)
            if not ok and a > 1:
                continue
            span_budget = budget - base - cost_b - cost_t
            if a == 1:
                if n_edges == 0:
                    sloping = tuple(zip(L, R))
                    d = FloorDiagram(sc, sloping, (), _counts_to_floors(bot), _counts_to_floors(tp))
                    key = _canonical_key_and_relabel(sloping, (), bot, tp, a)[0]
                    found.setdefault(key, d)
                continue
            for edges, span_cost in _edge_configs(a, crossings, n_edges, span_budget):
                sloping = tuple(zip(L, R))
                try:
                    d = FloorDiagram(
                        sc, sloping, edges, _counts_to_floors(bot), _counts_to_floors(tp)
                    )
                except ValueError:
                    continue  # disconnected
                key, floors, es = _canonical_key_and_relabel(sloping, edges, bot, tp, a)
                if key in found:
                    continue
                canon = FloorDiagram(
                    sc,
                    tuple((l, r) for l, r, _, _ in floors),
                    es,
                    _counts_to_floors(tuple(f[2] for f in floors)),
                    _counts_to_floors(tuple(f[3] for f in floors)),
                )
                found[key] = canon
    return found


def _counts_to_floors(counts) -> tuple[int, ...]:
    out: list[int] = []
    for f, n in enumerate(counts, start=1):
        out.extend([f] * n)
    return tuple(out)


def enumerate_diagrams(
    sc: SurfaceClass,
    genus: int,
    codeg_max: int | None = None,
    *,
    full_cap: int | None = DEFAULT_FULL_CAP,
    threads: int = 1,
) -> list[FloorDiagram]:
    """Every floor diagram of the class and genus, once per isomorphism
    class, with codegree <= codeg_max when a budget is given.

    Without a budget the enumeration is complete over all codegrees,
    which is only allowed for small classes (2*Area <= full_cap).
    """
    if genus < 0:
        raise ValueError("genus must be >= 0")
    widths = sc.slice_widths()
    n_edges = sc.a - 1 + genus
    max_codeg = sum(widths) - n_edges
    if codeg_max is None:
        if full_cap is not None and sc.lattice_invariants().area2 > full_cap:
            raise FullEnumerationCapError(
                f"full enumeration needs 2*Area <= {full_cap}"
                f" (class has {sc.lattice_invariants().area2})"
            )
        budget = max_codeg
    else:
        budget = min(codeg_max, max_codeg)
    if budget < 0:
        return []

    pairs = [
        (l, r)
        for l in sloping_assignments(sc.b_left, budget)
        for r in sloping_assignments(sc.b_right, budget)
        if l[1] + r[1] <= budget
    ]
    found: dict[tuple, FloorDiagram] = {}
    if threads > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(
                lambda p: _enumerate_for_sloping(sc, genus, budget, p), pairs
            ):
                for k, d in part.items():
                    found.setdefault(k, d)
    else:
        for p in pairs:
            for k, d in _enumerate_for_sloping(sc, genus, budget, p).items():
                found.setdefault(k, d)
    return [found[k] for k in sorted(found)]


def enumerate_weighted(
    sc: SurfaceClass,
    genus: int,
    order: int,
    s: int = 0,
    *,
    threads: int = 1,
) -> WeightedEnumeration:
    """Sum of count_markings(D) * x_multiplicity(D) over diagrams with
    codegree <= order; exact modulo x^{order+1} because every diagram's
    multiplicity is divisible by x^codeg."""
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    if s < 0:
        raise ValueError("s must be >= 0")
    warnings: list[str] = []
    if s > 0:
        if sc.b_bot < 2 * s:
            warnings.append(
                f"pairing hypothesis violated: b_bot={sc.b_bot} < 2s={2 * s}"
            )
        elif sc.b_bot < order + 2 * s:
            warnings.append(
                f"asymptotic hypothesis b_bot >= N+2s not met: "
                f"{sc.b_bot} < {order + 2 * s}"
            )
    diagrams = enumerate_diagrams(sc, genus, order, threads=threads)
    total = TruncSeries.zero(order)
    for d in diagrams:
        mult = d.x_multiplicity(order, s)
        n = d.count_s_markings(s) if s else d.count_markings()
        total = total + n * mult
    return WeightedEnumeration(total, len(diagrams), tuple(warnings))
