"""Independent brute-force oracles for the test suite.

Everything here recomputes quantities from first principles (explicit
enumeration), sharing no algorithmic path with the library code it is
used to check.
"""

from __future__ import annotations

from itertools import permutations


def brute_partition_count(n: int) -> int:
    """Number of partitions of n by explicit enumeration."""

    def rec(left: int, max_part: int) -> int:
        if left == 0:
            return 1
        return sum(rec(left - p, p) for p in range(min(left, max_part), 0, -1))

    return rec(n, n)


def brute_sigma1(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


# ---------------------------------------------------------------------------
# markings by exhaustive enumeration


def elements_of(d):
    els = [("floor", v) for v in range(1, d.a + 1)]
    els += [("edge", i) for i in range(len(d.edges))]
    els += [("bottom", i) for i in range(len(d.bottom))]
    els += [("top", i) for i in range(len(d.top))]
    return els


def cover_relations(d):
    rel = []
    for i, (u, v, _) in enumerate(d.edges):
        rel.append((("floor", u), ("edge", i)))
        rel.append((("edge", i), ("floor", v)))
    for i, f in enumerate(d.bottom):
        rel.append((("bottom", i), ("floor", f)))
    for i, f in enumerate(d.top):
        rel.append((("floor", f), ("top", i)))
    return rel


def all_linear_extensions(d):
    els = elements_of(d)
    rel = cover_relations(d)
    preds = {e: set() for e in els}
    for lo, hi in rel:
        preds[hi].add(lo)
    out = []
    seq = []
    placed = set()

    def rec():
        if len(seq) == len(els):
            out.append(tuple(seq))
            return
        for e in els:
            if e in placed or not preds[e] <= placed:
                continue
            placed.add(e)
            seq.append(e)
            rec()
            seq.pop()
            placed.discard(e)

    rec()
    return out


def all_automorphisms(d):
    """Every structure-preserving bijection of floors, edges, and ends,
    as an element mapping."""
    a = d.a
    bot_by_floor = {}
    for i, f in enumerate(d.bottom):
        bot_by_floor.setdefault(f, []).append(i)
    top_by_floor = {}
    for i, f in enumerate(d.top):
        top_by_floor.setdefault(f, []).append(i)
    edges_by_val = {}
    for i, e in enumerate(d.edges):
        edges_by_val.setdefault(e, []).append(i)

    auts = []
    for perm in permutations(range(1, a + 1)):
        pi = {v: perm[v - 1] for v in range(1, a + 1)}
        if any(d.sloping[v - 1] != d.sloping[pi[v] - 1] for v in range(1, a + 1)):
            continue
        image_edges = {}
        ok = True
        for e, idxs in edges_by_val.items():
            u, v, w = e
            img = (pi[u], pi[v], w)
            if img not in edges_by_val or len(edges_by_val[img]) != len(idxs):
                ok = False
                break
            image_edges[e] = edges_by_val[img]
        if not ok:
            continue
        if any(
            len(bot_by_floor.get(f, [])) != len(bot_by_floor.get(pi[f], []))
            or len(top_by_floor.get(f, [])) != len(top_by_floor.get(pi[f], []))
            for f in range(1, a + 1)
        ):
            continue

        # expand to element-level bijections: any matching inside groups
        def expand(groups, maps_so_far):
            if not groups:
                yield dict(maps_so_far)
                return
            (src_idxs, dst_idxs), *rest = groups
            for assignment in permutations(dst_idxs):
                yield from expand(rest, maps_so_far + list(zip(src_idxs, assignment)))

        groups = []
        for e, idxs in edges_by_val.items():
            groups.append((
                [("edge", i) for i in idxs],
                [("edge", j) for j in image_edges[e]],
            ))
        for f, idxs in bot_by_floor.items():
            groups.append((
                [("bottom", i) for i in idxs],
                [("bottom", j) for j in bot_by_floor[pi[f]]],
            ))
        for f, idxs in top_by_floor.items():
            groups.append((
                [("top", i) for i in idxs],
                [("top", j) for j in top_by_floor[pi[f]]],
            ))
        base = [(("floor", v), ("floor", pi[v])) for v in range(1, a + 1)]
        for mapping in expand(groups, base):
            auts.append(mapping)
    return auts


def _enters(d, el):
    if el[0] == "bottom":
        return {d.bottom[el[1]]}
    if el[0] == "edge":
        return {d.edges[el[1]][1]}
    return set()


def _leaves(d, el):
    if el[0] == "top":
        return {d.top[el[1]]}
    if el[0] == "edge":
        return {d.edges[el[1]][0]}
    return set()


def pair_ok(d, e1, e2) -> bool:
    f1, f2 = e1[0] == "floor", e2[0] == "floor"
    if f1 and f2:
        return False
    if f1 or f2:
        return True
    return bool(_enters(d, e1) & _enters(d, e2)) or bool(_leaves(d, e1) & _leaves(d, e2))


def brute_marking_classes(d, s: int = 0) -> int:
    """Isomorphism classes of (s-compatible) markings, counted as orbits
    of explicit linear extensions under explicit automorphisms."""
    exts = all_linear_extensions(d)
    if s:
        exts = [
            seq
            for seq in exts
            if all(pair_ok(d, seq[2 * j], seq[2 * j + 1]) for j in range(s))
        ]
    auts = all_automorphisms(d)
    seen = set()
    for seq in exts:
        seen.add(min(tuple(aut[e] for e in seq) for aut in auts))
    return len(seen)


# ---------------------------------------------------------------------------
# words by exhaustive enumeration


def brute_word_counts(delta: int, a: int, b: int, max_codeg: int) -> list[int]:
    """Number of valid words for the class aE+bF on F_delta, by codegree,
    built letter by letter."""
    n_b, n_t = b, b + delta * a
    counts = [0] * (max_codeg + 1)

    def rec(fs: int, es: int, bs: int, ts: int, codeg: int):
        if fs == a and es == a - 1 and bs == n_b and ts == n_t:
            counts[codeg] += 1
            return
        # next core letter is forced to keep the pattern (f e)^{a-1} f
        if fs == es and fs < a:
            rec(fs + 1, es, bs, ts, codeg)
        elif es < fs and es < a - 1:
            rec(fs, es + 1, bs, ts, codeg)
        if bs < n_b:
            for k in range(fs, a):
                if codeg + k <= max_codeg:
                    rec(fs, es, bs + 1, ts, codeg + k)
        if ts < n_t:
            for k in range(a - fs, a):
                if codeg + k <= max_codeg:
                    rec(fs, es, bs, ts + 1, codeg + k)

    rec(0, 0, 0, 0, 0)
    return counts


def kontsevich_rational_counts(d_max: int) -> list[int]:
    """Degrees of rational plane curves through 3d-1 points, by the
    standard recursion from degree 1 upward; index d."""
    from math import comb

    n = [0, 1] + [0] * (d_max - 1)
    for d in range(2, d_max + 1):
        total = 0
        for d1 in range(1, d):
            d2 = d - d1
            total += (
                n[d1] * n[d2] * d1 ** 2 * d2
                * (d2 * comb(3 * d - 4, 3 * d1 - 2) - d1 * comb(3 * d - 4, 3 * d1 - 1))
            )
        n[d] = total
    return n
