"""Linear encodings of genus-0 marked diagrams: words, sentences, and
pearl sequences.

These provide an oracle for the truncated genus-0 invariant that never
touches the diagram enumerator: a marked diagram with totally ordered
floors is spelled out as a word over
    f (floor, optionally carrying its sloping pair as f<l>,<r>),
    e (bounded edge), b<j> (source skipping j floors), t<j> (sink
    skipping j floors),
and counting words of bounded codegree reduces to counting *sentences*
(families of end-words) and, for general h-transverse classes, *pearls*
(two-symbol sequences recording slope-order defects at a corner).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .diagram import FloorDiagram
from .polygon import SurfaceClass
from .series import TruncSeries

# letters are ('f', None), ('f', (l, r)), ('e',), ('b', j), ('t', j)
Letter = tuple
Word = tuple


def parse_word(text: str) -> Word:
    letters: list[Letter] = []
    for tok in text.split():
        if tok == "f":
            letters.append(("f", None))
        elif tok == "e":
            letters.append(("e",))
        elif tok.startswith("f"):
            try:
                l, r = tok[1:].split(",")
                letters.append(("f", (int(l), int(r))))
            except ValueError as exc:
                raise ValueError(f"bad floor token {tok!r}") from exc
        elif tok[0] in "bt":
            try:
                letters.append((tok[0], int(tok[1:])))
            except ValueError as exc:
                raise ValueError(f"bad end token {tok!r}") from exc
        else:
            raise ValueError(f"unknown token {tok!r}")
    return tuple(letters)


def format_word(word: Word) -> str:
    toks = []
    for letter in word:
        if letter[0] == "f":
            toks.append("f" if letter[1] is None else f"f{letter[1][0]},{letter[1][1]}")
        elif letter[0] == "e":
            toks.append("e")
        else:
            toks.append(f"{letter[0]}{letter[1]}")
    return " ".join(toks)


def _inversion_codegree(values) -> int:
    """Sum of drops L(v)-L(v') over out-of-order pairs v < v'."""
    total = 0
    vals = list(values)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if vals[i] > vals[j]:
                total += vals[i] - vals[j]
    return total


def word_codegree(word: Word) -> int:
    """Monoid morphism b_j, t_j -> j plus the sloping-pair inversion cost
    when the floor letters carry indices."""
    total = sum(letter[1] for letter in word if letter[0] in "bt")
    pairs = [letter[1] for letter in word if letter[0] == "f" and letter[1] is not None]
    if pairs:
        total += _inversion_codegree(l for l, _ in pairs)
        total += _inversion_codegree(r for _, r in pairs)
    return total


@dataclass(frozen=True)
class WordReconstruction:
    """Outcome of rebuilding a marked diagram from a word.

    ``diagram`` is None exactly when some reconstructed trunk weight is
    not positive (the general-case caveat); the offending weights are
    still reported.
    """

    diagram: FloorDiagram | None
    marking: tuple[tuple, ...]
    weights: tuple[int, ...]
    sloping: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return self.diagram is not None


def marked_from_word(word: Word, sc: SurfaceClass) -> WordReconstruction:
    """Rebuild the marked floor diagram encoded by a word.

    Validates the word shape: stripped of end letters it must read
    (f e)^{a-1} f; a source (sink) letter with index k preceded
    (followed) by p floor letters needs k >= p; floor indices, when
    present, must exhaust b_left and b_right.
    """
    a = sc.a
    core = [letter for letter in word if letter[0] in "fe"]
    expected = [("f" if i % 2 == 0 else "e") for i in range(2 * a - 1)]
    if [letter[0] for letter in core] != expected:
        raise ValueError("core letters do not spell (f e)^{a-1} f")
    n_b = sum(1 for letter in word if letter[0] == "b")
    n_t = sum(1 for letter in word if letter[0] == "t")
    if n_b != sc.b_bot or n_t != sc.b_top:
        raise ValueError(
            f"need {sc.b_bot} source and {sc.b_top} sink letters, got {n_b}, {n_t}"
        )

    pairs = [letter[1] for letter in word if letter[0] == "f"]
    if any(p is not None for p in pairs):
        if any(p is None for p in pairs):
            raise ValueError("either all or no floor letters may carry indices")
        sloping = tuple(pairs)
        if tuple(sorted(l for l, _ in sloping)) != sc.b_left:
            raise ValueError("floor L-indices do not exhaust b_left")
        if tuple(sorted(r for _, r in sloping)) != sc.b_right:
            raise ValueError("floor R-indices do not exhaust b_right")
    else:
        sloping = tuple(zip(sc.b_left, sc.b_right))

    n_bot = [0] * (a + 1)
    n_top = [0] * (a + 1)
    marking: list[tuple] = []
    floors_before = 0
    floors_after = a
    for letter in word:
        if letter[0] == "f":
            floors_before += 1
            floors_after -= 1
            marking.append(("floor", floors_before))
        elif letter[0] == "e":
            marking.append(("edge", floors_before))
        elif letter[0] == "b":
            k = letter[1]
            if k < floors_before:
                raise ValueError(f"source letter b{k} after {floors_before} floors")
            if k > a - 1:
                raise ValueError(f"source letter b{k} skips past the top floor")
            n_bot[k + 1] += 1
            marking.append(("bottom", k + 1))
        else:
            k = letter[1]
            if k < floors_after:
                raise ValueError(f"sink letter t{k} with {floors_after} floors after it")
            if k > a - 1:
                raise ValueError(f"sink letter t{k} skips past the bottom floor")
            n_top[a - k] += 1
            marking.append(("top", a - k))

    weights = []
    acc = 0
    for m in range(1, a):
        l, r = sloping[m - 1]
        acc += n_bot[m] - n_top[m] - l - r
        weights.append(acc)

    diagram = None
    if all(w >= 1 for w in weights):
        bottom = tuple(f for f in range(1, a + 1) for _ in range(n_bot[f]))
        top = tuple(f for f in range(1, a + 1) for _ in range(n_top[f]))
        edges = tuple((m, m + 1, weights[m - 1]) for m in range(1, a))
        diagram = FloorDiagram(sc, sloping, edges, bottom, top)
    return WordReconstruction(diagram, tuple(marking), tuple(weights), sloping)


def word_from_marked(
    diagram: FloorDiagram, marking, indexed: bool | None = None
) -> Word:
    """Spell a genus-0 marked diagram with totally ordered floors as a word.

    ``marking`` lists the element tokens ('floor', v), ('edge', m),
    ('bottom', f), ('top', f) in increasing label order (identical ends
    repeat their token).  With ``indexed=None`` floor letters carry the
    sloping pair only when the assignment differs from the sorted one.
    """
    a = diagram.a
    if diagram.genus() != 0:
        raise ValueError("only genus-0 diagrams have word encodings")
    chain = tuple(sorted((m, m + 1) for m in range(1, a)))
    if tuple(sorted((u, v) for u, v, _ in diagram.edges)) != chain:
        raise ValueError("floors are not totally ordered by the trunk edges")

    want: dict[tuple, int] = {}
    for v in range(1, a + 1):
        want[("floor", v)] = 1
    for m in range(1, a):
        want[("edge", m)] = 1
    for f in diagram.bottom:
        want[("bottom", f)] = want.get(("bottom", f), 0) + 1
    for f in diagram.top:
        want[("top", f)] = want.get(("top", f), 0) + 1
    got: dict[tuple, int] = {}
    for tok in marking:
        got[tok] = got.get(tok, 0) + 1
    if got != want:
        raise ValueError("marking does not cover the diagram's elements")

    if indexed is None:
        indexed = diagram.sloping != tuple(zip(diagram.surface.b_left, diagram.surface.b_right))

    placed_floors = 0
    seen: set[tuple] = set()
    letters: list[Letter] = []
    for tok in marking:
        kind = tok[0]
        if kind == "floor":
            v = tok[1]
            if v != placed_floors + 1:
                raise ValueError("floors marked out of order")
            if v > 1 and ("edge", v - 1) not in seen:
                raise ValueError("floor marked before its trunk edge")
            if any(f == v for f in diagram.bottom) and got.get(("bottom", v), 0) > 0:
                raise ValueError("floor marked before one of its sources")
            placed_floors += 1
            letters.append(("f", diagram.sloping[v - 1] if indexed else None))
        elif kind == "edge":
            if tok[1] != placed_floors:
                raise ValueError("trunk edge marked away from its lower floor")
            letters.append(("e",))
        elif kind == "bottom":
            f = tok[1]
            if f <= placed_floors:
                raise ValueError("source marked after its floor")
            got[tok] -= 1
            letters.append(("b", f - 1))
        else:
            f = tok[1]
            if f > placed_floors:
                raise ValueError("sink marked before its floor")
            letters.append(("t", a - f))
        seen.add(tok)
    return tuple(letters)


# ---------------------------------------------------------------------------
# sentences


def _word_count(length: int, total: int, min_index: int) -> int:
    """Number of index sequences of the given length, entries >= min_index,
    summing to ``total`` (stars and bars)."""
    t = total - min_index * length
    if t < 0:
        return 0
    if length == 0:
        return 1 if t == 0 else 0
    return comb(t + length - 1, length - 1)


def _compatible_word_count(length: int, total: int, s: int) -> int:
    """Words of the given length over indices >= 0 whose first 2s letters
    come in equal consecutive pairs, with index sum ``total``."""
    if length < 2 * s:
        return 0
    free = length - 2 * s
    count = 0
    for y in range(0, total + 1, 2):
        pair_ways = _word_count(s, y // 2, 0)
        count += pair_ways * _word_count(free, total - y, 0)
    return count


def sentence_counts(n: int, order: int, s: int = 0) -> list[int]:
    """counts[c] = number of (s-compatible) sentences of total length n
    and codegree c, for c <= order."""
    if n < 0 or s < 0:
        raise ValueError("n and s must be >= 0")
    # slots j=1..order, two words each, letters with index >= j
    ways = {(0, 0): 1}  # (length used, codegree) -> count
    for j in range(1, order + 1):
        for _ in range(2):
            new: dict[tuple[int, int], int] = {}
            for (used, c), cnt in ways.items():
                max_l = min((order - c) // j, n - used)
                for l in range(max_l + 1):
                    for t in range(j * l, order - c + 1):
                        w = _word_count(l, t, j)
                        if w:
                            key = (used + l, c + t)
                            new[key] = new.get(key, 0) + cnt * w
            ways = new
    counts = [0] * (order + 1)
    for (used, c), cnt in ways.items():
        l0 = n - used
        for t in range(order - c + 1):
            w = _compatible_word_count(l0, t, s) if s else _word_count(l0, t, 0)
            if w:
                counts[c + t] += cnt * w
    return counts


def sentence_series(n: int, order: int, s: int = 0) -> TruncSeries:
    """Generating series of length-n sentences with their multiplicity:
    (1-x)^{n-s} (1+x)^s sum x^codeg, truncated.  Needs n > order (and
    n >= order + 2s when s > 0)."""
    if order < 1 or n <= order:
        raise ValueError("need n > order >= 1")
    if s and n < order + 2 * s:
        raise ValueError("need n >= order + 2s for the pairing hypothesis")
    counts = sentence_counts(n, order, s)
    total = TruncSeries(order, tuple(counts))
    total = total * TruncSeries.from_coeffs((1, -1), order) ** (n - s)
    if s:
        total = total * TruncSeries.from_coeffs((1, 1), order) ** s
    return total


def genus0_word_series(delta: int, a: int, b: int, order: int) -> TruncSeries:
    """Word-based genus-0 invariant for the class aE+bF on F_delta,
    modulo x^{order+1}: (1-x)^{2b+delta*a} sum over valid words of
    x^codeg.  Valid in the regime a > 2*order, b > order."""
    if delta < 0 or a < 1 or b < 1:
        raise ValueError("invalid Hirzebruch class")
    if order < 1 or a <= 2 * order or b <= order:
        raise ValueError("need a > 2*order and b > order")
    lo = sentence_counts(b, order)
    hi = sentence_counts(b + delta * a, order)
    counts = [0] * (order + 1)
    for c1, n1 in enumerate(lo):
        for c2, n2 in enumerate(hi):
            if c1 + c2 <= order:
                counts[c1 + c2] += n1 * n2
    total = TruncSeries(order, tuple(counts))
    return total * TruncSeries.from_coeffs((1, -1), order) ** (2 * b + delta * a)


# ---------------------------------------------------------------------------
# pearls


@dataclass(frozen=True)
class Pearl:
    """A two-symbol sequence, constant near both ends, stored in normal
    form: u[j-1] is the number of filled beads with exactly j empty beads
    to their left; codegree = sum j*u_j = number of inversions."""

    u: tuple[int, ...]

    def __post_init__(self):
        u = tuple(int(x) for x in self.u)
        if any(x < 0 for x in u):
            raise ValueError("normal form entries must be >= 0")
        while u and u[-1] == 0:
            u = u[:-1]
        object.__setattr__(self, "u", u)

    def codegree(self) -> int:
        return sum(j * x for j, x in enumerate(self.u, start=1))

    def presentation(self) -> str:
        """Finite window of the sequence, from the first empty bead to
        the last filled one (tails are implicit)."""
        out = ["o"]
        for x in self.u:
            out.append("*" * x)
            out.append("o")
        s = "".join(out)
        return s.rstrip("o") if "*" in s else ""

    def inversions(self) -> list[tuple[int, int]]:
        """Index pairs (k, l) with an empty bead at k before a filled one
        at l, indices relative to the presentation window."""
        s = self.presentation()
        empties = [i for i, ch in enumerate(s) if ch == "o"]
        return [(k, l) for l, ch in enumerate(s) if ch == "*" for k in empties if k < l]


def pearl_from_u(u) -> Pearl:
    return Pearl(tuple(u))


def u_from_pearl(p: Pearl) -> tuple[int, ...]:
    return p.u


def parse_pearl(text: str) -> Pearl:
    """Parse a window over {*, o} (also accepts the bullet glyphs)."""
    cleaned = []
    for ch in text.strip():
        if ch in "*•":
            cleaned.append("*")
        elif ch in "o∘◦":
            cleaned.append("o")
        elif not ch.isspace():
            raise ValueError(f"unexpected symbol {ch!r} in pearl")
    u: list[int] = []
    empties = 0
    for ch in cleaned:
        if ch == "o":
            empties += 1
        elif empties > 0:
            while len(u) < empties:
                u.append(0)
            u[empties - 1] += 1
    return Pearl(tuple(u))


def pearl_codegree(p: Pearl) -> int:
    return p.codegree()


def _u_vectors(order: int):
    """Finite-support vectors u with sum j*u_j <= order (normal forms of
    all pearls up to that codegree)."""

    def rec(j: int, left: int, acc: tuple[int, ...]):
        if j > left:
            yield acc
            return
        for x in range(left // j + 1):
            yield from rec(j + 1, left - j * x, acc + (x,))

    yield from rec(1, order, ())


def pearl_series(order: int) -> TruncSeries:
    """sum over pearls of x^codeg, truncated (equals the partition series)."""
    cs = [0] * (order + 1)
    for u in _u_vectors(order):
        cs[Pearl(u).codegree()] += 1
    return TruncSeries(order, tuple(cs))


def pearl_weighted_series(order: int) -> TruncSeries:
    """sum over pearls of codeg * x^codeg (equals E2(x) * p(x))."""
    cs = [0] * (order + 1)
    for u in _u_vectors(order):
        c = Pearl(u).codegree()
        cs[c] += c
    return TruncSeries(order, tuple(cs))


def pearls_from_sloping(values) -> dict[int, Pearl]:
    """Decompose a slope tuple with size-one inversions into one pearl per
    corner (per adjacent value pair).  Values jumping by more than one
    within an inverted pair are outside the encoding and rejected."""
    vals = [int(v) for v in values]
    if not vals:
        return {}
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if vals[i] - vals[j] >= 2:
                raise ValueError("inversion of size >= 2 present")
    out: dict[int, Pearl] = {}
    for p in range(min(vals), max(vals)):
        try:
            first_hi = vals.index(p + 1)
        except ValueError:
            out[p] = Pearl(())
            continue
        last_lo = max((i for i, v in enumerate(vals) if v == p), default=-1)
        if last_lo < first_hi:
            out[p] = Pearl(())
            continue
        window = "".join("*" if v == p else "o" for v in vals[first_hi : last_lo + 1])
        out[p] = parse_pearl(window)
    return out


def sloping_from_pearls(pearls: dict[int, Pearl], values) -> tuple[int, ...]:
    """Inverse construction: lay out each pearl's window between runs of
    plain values, padding so each value appears as often as in ``values``
    (the class multiplicities)."""
    counts: dict[int, int] = {}
    for v in values:
        counts[int(v)] = counts.get(int(v), 0) + 1
    if not counts:
        if any(not p.u == () for p in pearls.values()):
            raise ValueError("nontrivial pearls need a nonempty value multiset")
        return ()
    vmin, vmax = min(counts), max(counts)
    windows: dict[int, str] = {}
    for p in range(vmin, vmax):
        windows[p] = pearls.get(p, Pearl(())).presentation()
    out: list[int] = []
    for p in range(vmin, vmax):
        w = windows[p]
        bullets = w.count("*")
        circles_prev = windows[p - 1].count("o") if p > vmin else 0
        plain = counts.get(p, 0) - bullets - circles_prev
        if plain < 0:
            raise ValueError(f"value {p} occurs too few times for its pearls")
        out.extend([p] * plain)
        out.extend(p if ch == "*" else p + 1 for ch in w)
    circles_prev = windows[vmax - 1].count("o") if vmax > vmin else 0
    plain = counts.get(vmax, 0) - circles_prev
    if plain < 0:
        raise ValueError(f"value {vmax} occurs too few times for its pearls")
    out.extend([vmax] * plain)
    return tuple(out)
