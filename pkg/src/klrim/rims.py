"""
Rims of the right cells attached to compositions.

For a composition of n, the right cell containing the longest element of
the associated Young subgroup consists of the products w_J * e where e runs
over a prefix-closed set of minimal coset representatives.  The *rim* is
the set of prefix-maximal elements of that set; knowing it gives reduced
forms for the entire cell by concatenation.  This module finds rims two
ways: a breadth-first search over length-increasing generator extensions,
and closed-form constructions for the composition families where the rim
is known explicitly.  ``verify_theorem`` diffs the two engines.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .compositions import (
    Composition,
    check_composition,
    compositions_of,
    is_partition,
    reverse_composition,
)
from .diagrams import (
    Diagram,
    diagram_from_element,
    is_admissible,
    is_special,
    prefixes_of_wd,
    rotate180,
    w_of_diagram,
    young_diagram,
)
from .permutations import (
    Perm,
    Word,
    check_permutation,
    compose,
    identity,
    is_coset_rep,
    length,
    longest_parabolic_element,
    reduced_word,
    rsk,
    times_gen,
)

DEFAULT_SEARCH_BOUND = 10

THEOREMS = ("T2.16a", "T3.5a", "T3.7a", "T3.15a", "C3.16a", "P3.2a")


class SearchBoundExceeded(ValueError):
    """Raised when a search is requested past the configured bound."""


@dataclass(frozen=True)
class RimResult:
    """
    The rim of one cell: the prefix-maximal coset representatives, their
    canonical diagrams, and per-diagram specialness flags.  Entries are
    sorted by row-form so results compare and serialize deterministically.
    """

    composition: Composition
    rim: tuple[Perm, ...]
    diagrams: tuple[Diagram, ...]
    special: tuple[bool, ...]

    def __post_init__(self) -> None:
        composition = check_composition(self.composition)
        if not len(self.rim) == len(self.diagrams) == len(self.special):
            raise ValueError("rim, diagrams and special flags must run in parallel")
        order = sorted(range(len(self.rim)), key=lambda i: self.rim[i])
        object.__setattr__(self, "composition", composition)
        object.__setattr__(self, "rim", tuple(self.rim[i] for i in order))
        object.__setattr__(self, "diagrams", tuple(self.diagrams[i] for i in order))
        object.__setattr__(self, "special", tuple(bool(self.special[i]) for i in order))

    @property
    def rim_size(self) -> int:
        return len(self.rim)

    @property
    def special_count(self) -> int:
        return sum(self.special)


def _result_from_diagrams(parts: Composition, diagrams: Iterable[Diagram]) -> RimResult:
    diagrams = tuple(diagrams)
    return RimResult(
        composition=parts,
        rim=tuple(w_of_diagram(d) for d in diagrams),
        diagrams=diagrams,
        special=tuple(is_special(d) for d in diagrams),
    )


def in_z(e: Sequence[int], parts: Iterable[int]) -> bool:
    """
    Membership in Z: e is a minimal coset representative and w_J e lies in
    the right cell of w_J.

    >>> in_z((1, 3, 2), (2, 1))
    True
    >>> in_z((3, 1, 2), (2, 1))
    False
    """
    e = check_permutation(e)
    parts = check_composition(parts)
    if sum(parts) != len(e):
        raise ValueError(f"composition {parts} does not sum to n={len(e)}")
    if not is_coset_rep(e, parts):
        return False
    w_j = longest_parabolic_element(parts)
    return rsk(compose(w_j, e))[1] == rsk(w_j)[1]


def _ascents(e: Perm) -> Iterator[int]:
    """Generators k with l(e s_k) = l(e) + 1, i.e. value k left of k+1."""
    pos = [0] * (len(e) + 1)
    for i, v in enumerate(e):
        pos[v] = i
    for k in range(1, len(e)):
        if pos[k] < pos[k + 1]:
            yield k


def _zone(parts: Composition, bound: int) -> list[Perm]:
    """
    All of Z for the composition, by breadth-first search from the identity
    over one-generator length-increasing extensions.  Z is prefix-closed,
    so the search reaches everything.
    """
    n = sum(parts)
    if n > bound:
        raise SearchBoundExceeded(
            f"n={n} exceeds the search bound {bound}; raise the bound explicitly"
        )
    w_j = longest_parabolic_element(parts)
    q_ref = rsk(w_j)[1]

    start = identity(n)
    seen: set[Perm] = {start}
    frontier: list[Perm] = [start]
    while frontier:
        grown: list[Perm] = []
        for e in sorted(frontier):
            for k in _ascents(e):
                e2 = times_gen(e, k)
                if e2 in seen or not is_coset_rep(e2, parts):
                    continue
                if rsk(compose(w_j, e2))[1] == q_ref:
                    seen.add(e2)
                    grown.append(e2)
        frontier = grown
    return sorted(seen)


def rim_search(parts: Iterable[int], bound: int | None = None) -> RimResult:
    """
    Compute the rim by exhaustive search: the elements of Z admitting no
    length-increasing generator extension inside Z.

    >>> rim_search((2, 1)).rim
    ((1, 3, 2),)
    >>> rim_search((1, 2)).rim
    ((2, 1, 3),)
    """
    parts = check_composition(parts)
    bound = DEFAULT_SEARCH_BOUND if bound is None else bound
    zone = _zone(parts, bound)
    zset = set(zone)
    rim = [
        e
        for e in zone
        if not any(times_gen(e, k) in zset for k in _ascents(e))
    ]
    return _result_from_diagrams(parts, (diagram_from_element(y, parts) for y in rim))


def _prefix_union(result: RimResult) -> set[Perm]:
    """Z recovered from the rim: the union of the prefix sets of the rim
    elements, read off the standard fillings of their diagrams."""
    elements: set[Perm] = set()
    for diagram in result.diagrams:
        elements.update(prefixes_of_wd(diagram))
    return elements


def cell_size(result: RimResult) -> int:
    """Number of elements in the cell described by a rim."""
    return len(_prefix_union(result))


def cell_elements(
    parts: Iterable[int], bound: int | None = None
) -> Iterator[tuple[Perm, Word]]:
    """
    Every element of the cell with a reduced word for it: pairs
    (w_J e, word of w_J followed by word of e), for e running over the
    prefix union of the rim.  Lengths add because e is a minimal coset
    representative.  Ordered by (length, row-form) of e.

    >>> [(w, word) for w, word in cell_elements((2, 1))]
    [((2, 1, 3), (1,)), ((3, 1, 2), (1, 2))]
    """
    parts = check_composition(parts)
    result = rim_search(parts, bound)
    w_j = longest_parabolic_element(parts)
    w_j_word = reduced_word(w_j)
    for e in sorted(_prefix_union(result), key=lambda p: (length(p), p)):
        yield compose(w_j, e), w_j_word + reduced_word(e)


def star_extend(diagram: Diagram) -> Diagram:
    """
    Append a single node on a new last row, in the least column keeping the
    diagram admissible.  Only columns already present are scanned; if none
    works a ValueError reports the diagram (no such case is known at desk
    scale, and when the last row has one node the new node provably lands
    directly beneath it).

    >>> star_extend(young_diagram((2, 1))).nodes
    ((1, 1), (1, 2), (2, 1), (3, 1))
    """
    if not is_admissible(diagram):
        raise ValueError("star_extend is defined for admissible diagrams")
    new_row = diagram.row_count + 1
    for column in range(1, diagram.column_count + 1):
        candidate = Diagram(diagram.nodes + ((new_row, column),))
        if is_admissible(candidate):
            return candidate
    raise ValueError(f"no admissible single-node extension found for {diagram.nodes}")


def theta_star(result: RimResult) -> RimResult:
    """
    Push a rim through the append-a-part-1 extension: every rim diagram
    gains one node via ``star_extend`` and the new rim is read off the
    extended diagrams.  Defined when the last part is 1, where the map is a
    bijection onto the rim of the extended composition.
    """
    if result.composition[-1] != 1:
        raise ValueError("theta_star requires the last part of the composition to be 1")
    extended = _result_from_diagrams(
        result.composition + (1,), (star_extend(d) for d in result.diagrams)
    )
    assert extended.rim_size == result.rim_size
    return extended


# ---------------------------------------------------------------------------
# closed-form families


def _d_tsu_diagram(t: int, s: int, u: int, rows: int) -> Diagram:
    """
    Rim diagram for the family (t, s, 1, ..., 1) with t <= s: a full second
    row of s nodes, the first row occupying column u plus the last t-1
    columns, and a tail of single nodes below column u.
    """
    nodes = {(1, u)}
    nodes.update((1, i) for i in range(s - t + 2, s + 1))
    nodes.update((2, i) for i in range(1, s + 1))
    nodes.update((i, u) for i in range(3, rows + 1))
    return Diagram(tuple(nodes))


def _g_diagram(s: int, t: int, u: int, cols: Sequence[int]) -> Diagram:
    """Rim diagram for the pattern (t, s, u) with s >= t >= u: full middle
    row; top row on ``cols`` plus the last t-u columns; bottom row on
    ``cols``."""
    nodes = {(1, i) for i in cols}
    nodes.update((1, i) for i in range(s - t + u + 1, s + 1))
    nodes.update((2, i) for i in range(1, s + 1))
    nodes.update((3, i) for i in cols)
    return Diagram(tuple(nodes))


def _h_diagram(s: int, t: int, u: int, cols: Sequence[int]) -> Diagram:
    """Rim diagram for the pattern (t, u, s) with s >= t >= u: full bottom
    row; top row on the last t columns; middle row on ``cols``."""
    nodes = {(1, i) for i in range(s - t + 1, s + 1)}
    nodes.update((2, i) for i in cols)
    nodes.update((3, i) for i in range(1, s + 1))
    return Diagram(tuple(nodes))


def _p_diagram(rows: int, v: int) -> Diagram:
    """
    The v-th rim diagram of the double-staircase family (1, 2, ..., 2, 1)
    with ``rows`` rows, 0 <= v <= rows-2: a full column of height ``rows``
    and a second column of height rows-2, interlocked with offset v.
    """
    r = rows
    if not 0 <= v <= r - 2:
        raise ValueError(f"v must lie in 0..{r - 2}")
    if v == 0:
        nodes = {(i, 1) for i in range(1, r + 1)}
        nodes.update((i, 2) for i in range(2, r))
    elif v == r - 2:
        nodes = {(i, 1) for i in range(2, r)}
        nodes.update((i, 2) for i in range(1, r + 1))
    else:
        nodes = {(i, 1) for i in range(2, v + 2)}
        nodes.update((i, 2) for i in range(1, r + 1))
        nodes.update((i, 3) for i in range(v + 2, r))
    return Diagram(tuple(nodes))


def _three_part_diagrams(parts: Composition) -> list[Diagram]:
    """Rim diagrams for any three-part composition, per the dispatch on the
    pattern of (s, t, u) = sorted parts; the remaining patterns rotate."""
    s, t, u = sorted(parts, reverse=True)
    if parts == (s, t, u):
        return [young_diagram(parts)]
    if parts == (t, s, u):
        return [
            _g_diagram(s, t, u, cols)
            for cols in combinations(range(1, s - t + u + 1), u)
        ]
    if parts == (t, u, s):
        return [
            _h_diagram(s, t, u, cols)
            for cols in combinations(range(s - t + 1, s + 1), u)
        ]
    return [rotate180(d) for d in _three_part_diagrams(reverse_composition(parts))]


def _three_part_count(parts: Composition) -> int:
    """Predicted rim size for a three-part composition."""
    s, t, u = sorted(parts, reverse=True)
    if parts in ((s, t, u), (u, t, s)):
        return 1
    if parts in ((t, s, u), (u, s, t)):
        return comb(s - t + u, u)
    # remaining patterns: (t, u, s) and (s, u, t)
    return comb(t, u)


def _match_staircase(parts: Composition) -> tuple[int, int, int] | None:
    """Match (1^a, 2^{r-2}, 1^b) with a, b >= 1, r >= 3; return (a, r, b)."""
    i = 0
    while i < len(parts) and parts[i] == 1:
        i += 1
    j = i
    while j < len(parts) and parts[j] == 2:
        j += 1
    if j < len(parts) and any(p != 1 for p in parts[j:]):
        return None
    if i == 0 or j == i or j == len(parts):
        return None
    return i, (j - i) + 2, len(parts) - j


def _staircase_diagrams(a: int, rows: int, b: int) -> list[Diagram]:
    """
    Rim diagrams for (1^a, 2^{rows-2}, 1^b): start from the two-column
    family, extend the tail downward b-1 times, rotate, extend a-1 times,
    rotate back.
    """
    diagrams = [_p_diagram(rows, v) for v in range(rows - 1)]
    for _ in range(b - 1):
        diagrams = [star_extend(d) for d in diagrams]
    diagrams = [rotate180(d) for d in diagrams]
    for _ in range(a - 1):
        diagrams = [star_extend(d) for d in diagrams]
    return [rotate180(d) for d in diagrams]


def rim_closed_form(parts: Iterable[int]) -> RimResult | None:
    """
    The rim from an explicit construction, when the composition belongs to
    a recognized family; None otherwise.  Families, first match wins:
    partitions; reversed partitions; all three-part compositions;
    (t, s, 1, ..., 1) and its reverse; (1^a, 2^k, 1^b).

    >>> rim_closed_form((2, 1)).rim
    ((1, 3, 2),)
    >>> rim_closed_form((1, 3, 1, 2)) is None
    True
    """
    parts = check_composition(parts)
    if is_partition(parts):
        return _result_from_diagrams(parts, [young_diagram(parts)])
    rev = reverse_composition(parts)
    if is_partition(rev):
        return _result_from_diagrams(parts, [rotate180(young_diagram(rev))])
    if len(parts) == 3:
        return _result_from_diagrams(parts, _three_part_diagrams(parts))
    if len(parts) > 3 and all(p == 1 for p in parts[2:]) and parts[0] < parts[1]:
        t, s = parts[0], parts[1]
        return _result_from_diagrams(
            parts,
            [_d_tsu_diagram(t, s, u, len(parts)) for u in range(1, s - t + 2)],
        )
    if len(parts) > 3 and all(p == 1 for p in parts[:-2]) and parts[-1] < parts[-2]:
        t, s = rev[0], rev[1]
        return _result_from_diagrams(
            parts,
            [
                rotate180(_d_tsu_diagram(t, s, u, len(parts)))
                for u in range(1, s - t + 2)
            ],
        )
    staircase = _match_staircase(parts)
    if staircase is not None:
        return _result_from_diagrams(parts, _staircase_diagrams(*staircase))
    return None


# ---------------------------------------------------------------------------
# verification harness


@dataclass(frozen=True)
class TheoremCheck:
    composition: Composition
    ok: bool
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    theorem: str
    checks: tuple[TheoremCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> tuple[TheoremCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def _diff_detail(found: RimResult, diagrams: Sequence[Diagram]) -> str:
    expected = {d.nodes for d in diagrams}
    actual = {d.nodes for d in found.diagrams}
    if expected == actual:
        return "ok"
    return f"expected diagrams {sorted(expected)} but search found {sorted(actual)}"


def _check_family(
    parts: Composition,
    diagrams: Sequence[Diagram],
    bound: int,
    expect_count: int | None = None,
    expect_special: int | None = None,
) -> TheoremCheck:
    """Compare a predicted rim (given by diagrams) against the search."""
    found = rim_search(parts, bound)
    predicted = _result_from_diagrams(parts, diagrams)
    ok = set(found.rim) == set(predicted.rim) and set(found.diagrams) == set(
        predicted.diagrams
    )
    detail = _diff_detail(found, diagrams)
    if ok and expect_count is not None and found.rim_size != expect_count:
        ok, detail = False, f"rim size {found.rim_size}, predicted {expect_count}"
    if ok and expect_special is not None and found.special_count != expect_special:
        ok, detail = (
            False,
            f"special count {found.special_count}, predicted {expect_special}",
        )
    return TheoremCheck(parts, ok, detail)


def _checks_single_element(max_n: int, bound: int) -> Iterator[TheoremCheck]:
    # rims with exactly one element <=> sorted or reverse-sorted parts
    for n in range(1, max_n + 1):
        for parts in compositions_of(n):
            single = rim_search(parts, bound).rim_size == 1
            predicted = is_partition(parts) or is_partition(reverse_composition(parts))
            ok = single == predicted
            detail = "ok" if ok else f"rim size 1: {single}, predicted {predicted}"
            yield TheoremCheck(parts, ok, detail)


def _checks_two_big_parts(max_n: int, bound: int) -> Iterator[TheoremCheck]:
    # compositions (a, b, 1, ..., 1) with at least three parts
    for n in range(4, max_n + 1):
        for rows in range(3, n):
            head = n - (rows - 2)
            for a in range(1, head):
                b = head - a
                parts = (a, b) + (1,) * (rows - 2)
                if a >= b:
                    diagrams = [young_diagram(parts)]
                    count = 1
                else:
                    diagrams = [
                        _d_tsu_diagram(a, b, u, rows) for u in range(1, b - a + 2)
                    ]
                    count = b - a + 1
                yield _check_family(
                    parts, diagrams, bound, expect_count=count, expect_special=count
                )


def _checks_three_parts(max_n: int, bound: int) -> Iterator[TheoremCheck]:
    for n in range(3, max_n + 1):
        for parts in compositions_of(n):
            if len(parts) != 3:
                continue
            count = _three_part_count(parts)
            yield _check_family(
                parts,
                _three_part_diagrams(parts),
                bound,
                expect_count=count,
                expect_special=count,
            )


def _checks_staircase_base(max_n: int, bound: int) -> Iterator[TheoremCheck]:
    for rows in range(3, max_n // 2 + 2):
        if 2 * rows - 2 > max_n:
            break
        parts = (1,) + (2,) * (rows - 2) + (1,)
        diagrams = [_p_diagram(rows, v) for v in range(rows - 1)]
        yield _check_family(
            parts, diagrams, bound, expect_count=rows - 1, expect_special=2
        )


def _checks_staircase_general(max_n: int, bound: int) -> Iterator[TheoremCheck]:
    for n in range(4, max_n + 1):
        for parts in compositions_of(n):
            match = _match_staircase(parts)
            if match is None:
                continue
            a, rows, b = match
            yield _check_family(
                parts,
                _staircase_diagrams(a, rows, b),
                bound,
                expect_count=rows - 1,
                expect_special=2,
            )


def _checks_append_part(max_n: int, bound: int) -> Iterator[TheoremCheck]:
    # appending a part 1 carries the rim onto the rim of the longer composition
    for n in range(1, max_n):
        for parts in compositions_of(n):
            if parts[-1] != 1:
                continue
            extended = theta_star(rim_search(parts, bound))
            direct = rim_search(parts + (1,), bound)
            ok = (
                extended.rim == direct.rim
                and extended.diagrams == direct.diagrams
            )
            detail = "ok" if ok else (
                f"extension rim {extended.rim} vs direct rim {direct.rim}"
            )
            yield TheoremCheck(parts, ok, detail)


_CHECKERS = {
    "T2.16a": _checks_single_element,
    "T3.5a": _checks_two_big_parts,
    "T3.7a": _checks_three_parts,
    "T3.15a": _checks_staircase_base,
    "C3.16a": _checks_staircase_general,
    "P3.2a": _checks_append_part,
}


def verify_theorem(theorem: str, max_n: int, bound: int | None = None) -> VerifyReport:
    """
    Exhaustively compare a closed-form rule against the search engine, over
    every applicable composition of every n <= max_n.  ``theorem`` is one of
    the rule identifiers in ``THEOREMS``.
    """
    if theorem not in _CHECKERS:
        raise ValueError(f"unknown rule {theorem!r}; choose from {THEOREMS}")
    bound = DEFAULT_SEARCH_BOUND if bound is None else bound
    if max_n > bound:
        raise SearchBoundExceeded(f"max_n={max_n} exceeds the search bound {bound}")
    checks = tuple(_CHECKERS[theorem](max_n, bound))
    return VerifyReport(theorem, checks)
