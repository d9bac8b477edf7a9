"""
Generalized principal diagrams and their tableau calculus.

A diagram is a finite set of nodes (row, column), 1-based, with every row
1..r and column 1..c occupied.  Filling such a diagram with 1..n by rows
gives the tableau ``row_fill``; filling by columns gives ``column_fill``;
the permutation carrying the first filling to the second is
``w_of_diagram``.  Standard fillings of a diagram biject with the weak-order
prefixes of that permutation, which is what makes diagrams a tool for
producing reduced forms.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .compositions import (
    Composition,
    check_composition,
    check_partition,
    conjugate,
    partial_sums,
)
from .permutations import (
    Perm,
    Word,
    check_permutation,
    compose,
    is_coset_rep,
    length,
    longest_parabolic_element,
    shape,
)

Node = tuple[int, int]

# subset DP over node masks; past ~20 nodes use the RSK route instead
BRUTE_FORCE_NODE_LIMIT = 20


@dataclass(frozen=True)
class Diagram:
    """An immutable principal diagram; nodes are kept row-major sorted."""

    nodes: tuple[Node, ...]

    def __post_init__(self) -> None:
        nodes = tuple(sorted((int(r), int(c)) for r, c in self.nodes))
        if not nodes:
            raise ValueError("diagram must be nonempty")
        if len(set(nodes)) != len(nodes):
            raise ValueError("diagram nodes must be distinct")
        if any(r < 1 or c < 1 for r, c in nodes):
            raise ValueError("diagram coordinates are 1-based positive")
        rows = {r for r, _ in nodes}
        cols = {c for _, c in nodes}
        if rows != set(range(1, max(rows) + 1)):
            raise ValueError(f"diagram has empty rows: {nodes}")
        if cols != set(range(1, max(cols) + 1)):
            raise ValueError(f"diagram has empty columns: {nodes}")
        object.__setattr__(self, "nodes", nodes)

    @property
    def size(self) -> int:
        return len(self.nodes)

    @cached_property
    def node_set(self) -> frozenset[Node]:
        return frozenset(self.nodes)

    @cached_property
    def row_count(self) -> int:
        return self.nodes[-1][0]

    @cached_property
    def column_count(self) -> int:
        return max(c for _, c in self.nodes)

    @cached_property
    def row_composition(self) -> Composition:
        counts = [0] * self.row_count
        for r, _ in self.nodes:
            counts[r - 1] += 1
        return tuple(counts)

    @cached_property
    def column_composition(self) -> Composition:
        counts = [0] * self.column_count
        for _, c in self.nodes:
            counts[c - 1] += 1
        return tuple(counts)

    def __contains__(self, node: Node) -> bool:
        return node in self.node_set


def young_diagram(parts: Iterable[int]) -> Diagram:
    """
    The left-justified diagram of a partition.

    >>> young_diagram((2, 1)).nodes
    ((1, 1), (1, 2), (2, 1))
    """
    parts = check_partition(parts)
    return Diagram(tuple((i, j) for i, p in enumerate(parts, 1) for j in range(1, p + 1)))


@dataclass(frozen=True)
class DTableau:
    """A bijective filling of a diagram; entries are parallel to the
    row-major node order of the diagram."""

    diagram: Diagram
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        n = self.diagram.size
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"entries must be a bijection onto 1..{n}: {entries}")
        object.__setattr__(self, "entries", entries)

    @cached_property
    def node_of_entry(self) -> dict[int, Node]:
        return {e: node for node, e in zip(self.diagram.nodes, self.entries)}

    def entry_at(self, node: Node) -> int:
        return self.entries[self.diagram.nodes.index(node)]


def row_fill(diagram: Diagram) -> DTableau:
    """Fill the nodes with 1..n by rows (top to bottom, left to right)."""
    return DTableau(diagram, tuple(range(1, diagram.size + 1)))


def column_fill(diagram: Diagram) -> DTableau:
    """Fill the nodes with 1..n by columns (left to right, top to bottom)."""
    by_column = sorted(range(diagram.size), key=lambda i: (diagram.nodes[i][1], diagram.nodes[i][0]))
    entries = [0] * diagram.size
    for e, i in enumerate(by_column, start=1):
        entries[i] = e
    return DTableau(diagram, tuple(entries))


def w_of_diagram(diagram: Diagram) -> Perm:
    """
    The permutation w with ``act(row_fill(D), w) == column_fill(D)``.

    Because the row filling is the identity labelling, the row-form of w is
    just the column filling read in row-major order.

    >>> w_of_diagram(young_diagram((2, 1)))
    (1, 3, 2)
    """
    return tuple(column_fill(diagram).entries)


def act(tableau: DTableau, w: Sequence[int]) -> DTableau:
    """Replace every entry e by ew."""
    if len(w) != tableau.diagram.size:
        raise ValueError("permutation size must equal the diagram size")
    return DTableau(tableau.diagram, tuple(w[e - 1] for e in tableau.entries))


def is_standard(tableau: DTableau) -> bool:
    """
    True when entries weakly increase towards the south-east: whenever one
    node is componentwise <= another, its entry is smaller.

    With nodes in row-major order, node i precedes node j componentwise for
    i < j exactly when the column of i is <= the column of j.
    """
    nodes = tableau.diagram.nodes
    entries = tableau.entries
    n = len(nodes)
    for i in range(n):
        ci, ei = nodes[i][1], entries[i]
        for j in range(i + 1, n):
            if nodes[j][1] >= ci and entries[j] < ei:
                return False
    return True


def is_special(diagram: Diagram) -> bool:
    """
    True when the diagram is a row/column rearrangement of a Young diagram:
    for any two nodes (i, j), (i', j') in distinct rows and columns, one of
    the crossing positions (i', j), (i, j') is also a node.

    >>> is_special(young_diagram((2, 2, 1)))
    True
    >>> is_special(Diagram(((1, 2), (2, 1))))
    False
    """
    nodes = diagram.nodes
    present = diagram.node_set
    for a, (i, j) in enumerate(nodes):
        for i2, j2 in nodes[a + 1 :]:
            if i2 != i and j2 != j and (i2, j) not in present and (i, j2) not in present:
                return False
    return True


def rotate180(diagram: Diagram) -> Diagram:
    """
    Rotate the diagram half a turn; row and column compositions reverse.

    >>> rotate180(young_diagram((2, 1))).nodes
    ((1, 2), (2, 1), (2, 2))
    """
    r, c = diagram.row_count, diagram.column_count
    return Diagram(tuple((r + 1 - i, c + 1 - j) for i, j in diagram.nodes))


def diagram_from_element(d: Sequence[int], parts: Iterable[int]) -> Diagram:
    """
    The canonical diagram attached to a coset representative d and a
    composition: split the row-form of d into blocks of the given sizes,
    one block per row, then push entries right as little as possible so
    that reading the result by columns gives 1..n.  Among all diagrams with
    the given row composition whose column reading reproduces d, this one
    has the fewest columns.

    >>> diagram_from_element((1, 3, 2), (2, 1)).nodes
    ((1, 1), (1, 2), (2, 1))
    >>> diagram_from_element((1, 2, 3, 4), (2, 2)).nodes
    ((1, 1), (1, 2), (2, 2), (2, 3))
    """
    d = check_permutation(d)
    parts = check_composition(parts)
    if sum(parts) != len(d):
        raise ValueError(f"composition {parts} does not sum to n={len(d)}")
    if not is_coset_rep(d, parts):
        raise ValueError(f"{d} is not a minimal coset representative for {parts}")

    sums = partial_sums(parts)
    row_of = [0] * (len(d) + 1)
    for r, (lo, hi) in enumerate(zip(sums, sums[1:]), start=1):
        for pos in range(lo, hi):
            row_of[d[pos]] = r

    last_col = [0] * (len(parts) + 1)
    nodes: list[Node] = []
    prev_col = 0
    prev_row = 0
    for e in range(1, len(d) + 1):
        r = row_of[e]
        c = max(last_col[r] + 1, prev_col)
        if c == prev_col and r <= prev_row:
            c += 1
        nodes.append((r, c))
        last_col[r] = c
        prev_col, prev_row = c, r

    result = Diagram(tuple(nodes))
    assert w_of_diagram(result) == d, "column reading must reproduce the input"
    return result


def standard_tableaux(diagram: Diagram) -> Iterator[DTableau]:
    """
    All standard fillings of the diagram, i.e. the linear extensions of the
    componentwise order on its nodes.  Deterministic order: at each step the
    smallest available row-major node receives the next entry first.
    """
    nodes = diagram.nodes
    n = len(nodes)
    preds = []
    for i, (r, c) in enumerate(nodes):
        mask = 0
        for j, (r2, c2) in enumerate(nodes):
            if j != i and r2 <= r and c2 <= c:
                mask |= 1 << j
        preds.append(mask)

    entries = [0] * n

    def rec(placed: int, step: int) -> Iterator[DTableau]:
        if step > n:
            yield DTableau(diagram, tuple(entries))
            return
        for i in range(n):
            bit = 1 << i
            if not placed & bit and preds[i] & ~placed == 0:
                entries[i] = step
                yield from rec(placed | bit, step + 1)
        # entries[i] is overwritten on the next branch; no cleanup needed

    return rec(0, 1)


def prefixes_of_wd(diagram: Diagram) -> Iterator[Perm]:
    """
    The weak-order prefixes of ``w_of_diagram(diagram)``: u is a prefix
    exactly when acting with u on the row filling gives a standard tableau,
    and that image tableau has entries equal to the row-form of u.
    """
    for tableau in standard_tableaux(diagram):
        yield tuple(tableau.entries)


def complete_prefix(u: Sequence[int], diagram: Diagram) -> Word:
    """
    A word (k_1, ..., k_m) of generator indices with
    ``u s_{k_1} ... s_{k_m} == w_of_diagram(diagram)``, every step raising
    the length by one.  Each step applies the smallest k whose entry k+1
    currently sits in a strictly smaller column than k.

    >>> complete_prefix((1, 2, 3), young_diagram((2, 1)))
    (2,)
    """
    u = check_permutation(u)
    if len(u) != diagram.size:
        raise ValueError("permutation size must equal the diagram size")
    tableau = act(row_fill(diagram), u)
    if not is_standard(tableau):
        raise ValueError(f"the image of the row filling under {u} is not standard")

    target = w_of_diagram(diagram)
    n = diagram.size
    current = list(u)
    # node index holding each value
    pos = [0] * (n + 1)
    for i, e in enumerate(current):
        pos[e] = i
    cols = [c for _, c in diagram.nodes]

    word: list[int] = []
    while tuple(current) != target:
        for k in range(1, n):
            if cols[pos[k + 1]] < cols[pos[k]]:
                i, j = pos[k], pos[k + 1]
                current[i], current[j] = current[j], current[i]
                pos[k], pos[k + 1] = j, i
                word.append(k)
                break
        else:
            raise AssertionError("standard non-final tableau must admit a raising step")
    assert len(word) == length(target) - length(u)
    return tuple(word)


def subsequence_type(diagram: Diagram) -> Composition:
    """
    The partition whose k-th prefix sum is the maximum number of nodes
    coverable by k disjoint paths, computed through the Robinson-Schensted
    shape of the associated permutation.

    >>> subsequence_type(young_diagram((2, 2)))
    (2, 2)
    >>> subsequence_type(Diagram(((1, 2), (2, 1))))
    (1, 1)
    """
    w_j = longest_parabolic_element(diagram.row_composition)
    return shape(compose(w_j, w_of_diagram(diagram)))


def is_admissible(diagram: Diagram) -> bool:
    """
    True when the subsequence type is the conjugate of the row composition,
    the largest value the dominance order allows.

    >>> is_admissible(young_diagram((3, 1)))
    True
    >>> is_admissible(Diagram(((1, 2), (2, 1))))
    False
    """
    return subsequence_type(diagram) == conjugate(diagram.row_composition)


def _chain_union_profile(diagram: Diagram) -> tuple[int, ...]:
    """
    Exhaustive oracle: entry k-1 is the maximum size of a node subset that
    can be covered by at most k disjoint paths.

    A path is a chain of the strict order (a, b) < (a', b') iff a < a' and
    b <= b', so by Dilworth's theorem a subset is coverable by k paths iff
    it has no antichain of size k+1.  Maximum antichains are maximum
    independent sets of the incomparability graph, computed for every node
    subset by one bottom-up DP over bitmasks.
    """
    nodes = diagram.nodes
    n = len(nodes)
    if n > BRUTE_FORCE_NODE_LIMIT:
        raise ValueError(f"brute-force oracle limited to {BRUTE_FORCE_NODE_LIMIT} nodes")

    def comparable(a: Node, b: Node) -> bool:
        return (a[0] < b[0] and a[1] <= b[1]) or (b[0] < a[0] and b[1] <= a[1])

    incompat = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and not comparable(nodes[i], nodes[j]):
                incompat[i] |= 1 << j

    # max_antichain[mask] = size of the largest antichain inside mask
    size = 1 << n
    max_antichain = [0] * size
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        skip = max_antichain[mask ^ (1 << low)]
        take = 1 + max_antichain[mask & incompat[low]]
        max_antichain[mask] = take if take > skip else skip

    best_by_cover = [0] * (n + 1)
    for mask in range(size):
        c = max_antichain[mask]
        pc = mask.bit_count()
        if pc > best_by_cover[c]:
            best_by_cover[c] = pc

    profile = []
    running = 0
    for k in range(1, n + 1):
        running = max(running, best_by_cover[k])
        profile.append(running)
    return tuple(profile)


def brute_force_kpath_max(diagram: Diagram, k: int) -> int:
    """
    The exact maximum number of nodes covered by at most k mutually
    disjoint paths, found by exhaustive search (no Robinson-Schensted
    machinery involved; used to cross-check ``subsequence_type``).

    >>> brute_force_kpath_max(Diagram(((1, 2), (2, 1))), 1)
    1
    >>> brute_force_kpath_max(young_diagram((2, 2)), 5)
    4
    """
    if k < 1:
        raise ValueError("k must be positive")
    profile = _chain_union_profile(diagram)
    return profile[min(k, diagram.size) - 1]
