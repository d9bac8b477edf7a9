"""
k-paths in a diagram and the ordering calculus.

A path is a node sequence descending strictly through rows while moving
weakly right through columns; a k-path is a sequence of k mutually disjoint
paths.  Two node sets satisfy ``precedes`` when everything weakly below the
first set is strictly to its right, and a k-path is *ordered* when its
constituents are pairwise related this way.  Every k-path can be rearranged
into an equivalent ordered one by repeatedly peeling a maximal "staircase"
path off the support; ``order_kpath`` implements that rearrangement.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import groupby
from typing import Callable, Iterable, Sequence

from .diagrams import Diagram, Node, act, is_standard, row_fill, w_of_diagram

Path = tuple[Node, ...]


@dataclass(frozen=True)
class KPath:
    """
    A sequence of mutually disjoint paths.  ``host`` is the diagram the
    nodes live in; it may be omitted when only the ordering calculus is
    needed (the wire format carries no host), but ``diagram_of_ordered``
    requires it.
    """

    paths: tuple[Path, ...]
    host: Diagram | None = None

    def __post_init__(self) -> None:
        paths = tuple(tuple((int(r), int(c)) for r, c in p) for p in self.paths)
        if not paths:
            raise ValueError("a k-path needs at least one constituent path")
        seen: set[Node] = set()
        for p in paths:
            if not p:
                raise ValueError("constituent paths must be nonempty")
            for (a1, b1), (a2, b2) in zip(p, p[1:]):
                if not (a1 < a2 and b1 <= b2):
                    raise ValueError(
                        f"not a path (rows must increase strictly, columns weakly): {p}"
                    )
            for node in p:
                if node in seen:
                    raise ValueError(f"constituent paths must be disjoint; {node} repeats")
                seen.add(node)
        if self.host is not None:
            outside = seen - self.host.node_set
            if outside:
                raise ValueError(f"nodes outside the host diagram: {sorted(outside)}")
        object.__setattr__(self, "paths", paths)

    @property
    def k(self) -> int:
        return len(self.paths)

    @cached_property
    def support(self) -> frozenset[Node]:
        return frozenset(node for p in self.paths for node in p)

    @property
    def length(self) -> int:
        return sum(len(p) for p in self.paths)

    @cached_property
    def type(self) -> tuple[int, ...]:
        return tuple(sorted((len(p) for p in self.paths), reverse=True))


def precedes(first: Iterable[Node], second: Iterable[Node]) -> bool:
    """
    True when for every node (a1, b1) of ``first`` and (a2, b2) of
    ``second`` with a1 <= a2 one has b1 < b2.  Decided by one monotone
    sweep over both sets in row order.

    >>> precedes({(2, 3)}, {(1, 1)})
    True
    >>> precedes({(1, 1)}, {(3, 2)})
    True
    >>> precedes({(2, 3)}, {(3, 2)})
    False
    """
    pts1 = sorted(first)
    pts2 = sorted(second)
    if not pts1 or not pts2:
        raise ValueError("precedes is defined for nonempty node sets")
    i = 0
    max_col = 0
    for a2, b2 in pts2:
        while i < len(pts1) and pts1[i][0] <= a2:
            if pts1[i][1] > max_col:
                max_col = pts1[i][1]
            i += 1
        if b2 <= max_col:
            return False
    return True


def _gamma(nodes: Sequence[Node], row: int) -> int:
    """Largest column used by ``nodes`` in rows <= row; 0 if none."""
    cols = [c for r, c in nodes if r <= row]
    return max(cols) if cols else 0


def _delta(nodes: Sequence[Node], row: int, default: int) -> int:
    """Smallest column used by ``nodes`` in rows >= row; ``default`` if none."""
    cols = [c for r, c in nodes if r >= row]
    return min(cols) if cols else default


def right_side(nodes: Iterable[Node], host: Diagram) -> Callable[[Node], bool]:
    """
    Membership predicate of the region strictly right of the staircase
    profile of ``nodes``: (n, m) belongs iff m exceeds every column the set
    uses in rows <= n.
    """
    pts = sorted(nodes)
    if not pts:
        raise ValueError("right_side is defined for nonempty node sets")
    return lambda node: node[1] > _gamma(pts, node[0])


def left_side(nodes: Iterable[Node], host: Diagram) -> Callable[[Node], bool]:
    """
    Membership predicate of the region strictly left of the staircase
    profile of ``nodes``: (n, m) belongs iff m is below every column the
    set uses in rows >= n.  Rows past the set fall back to one more than
    the host's column count, so they belong entirely.
    """
    pts = sorted(nodes)
    if not pts:
        raise ValueError("left_side is defined for nonempty node sets")
    default = 1 + host.column_count
    return lambda node: node[1] < _delta(pts, node[0], default)


def is_ordered(kpath: KPath) -> bool:
    """
    True when every constituent precedes all later ones.

    >>> is_ordered(KPath((((1, 1), (2, 1)),)))
    True
    """
    supports = [p for p in kpath.paths]
    return all(
        precedes(supports[i], supports[j])
        for i in range(len(supports))
        for j in range(i + 1, len(supports))
    )


def peel_path(nodes: Iterable[Node]) -> Path:
    """
    Extract one path from a node set: walk the rows top to bottom, look at
    the rightmost node of the current row, and keep it whenever its column
    is not smaller than everything kept so far.  Whatever remains precedes
    the peeled path.

    >>> peel_path({(1, 1), (1, 3), (2, 2)})
    ((1, 3),)
    """
    remaining = sorted(set(nodes))
    if not remaining:
        raise ValueError("cannot peel a path from an empty node set")
    path: list[Node] = []
    kept_col = 0
    for _, group in groupby(remaining, key=lambda node: node[0]):
        candidate = max(group, key=lambda node: node[1])
        if candidate[1] >= kept_col:
            path.append(candidate)
            kept_col = candidate[1]
    return tuple(path)


def _split_with_tail_singletons(path: Path, extra: int) -> list[Path]:
    """
    Rearrange one path into an ordered (extra+1)-path: the last ``extra``
    nodes become singleton paths, listed bottom-up, followed by the initial
    remainder of the path.
    """
    cut = len(path) - extra
    pieces: list[Path] = [(path[-i],) for i in range(1, extra + 1)]
    pieces.append(path[:cut])
    return pieces


def order_kpath(kpath: KPath, parts: int | None = None) -> KPath:
    """
    An ordered k'-path with the same support, built by peeling paths off
    the support repeatedly and listing them in reverse peel order.  The
    peel count k' never exceeds the constituent count of the input.

    When ``parts`` is given and exceeds k', constituents are split from the
    front of the sequence, the surplus nodes becoming singleton paths, so
    that the result has exactly ``parts`` constituents.

    >>> order_kpath(KPath((((1, 2),), ((1, 1), (2, 1)),))).paths
    (((1, 1), (2, 1)), ((1, 2),))
    """
    remaining = set(kpath.support)
    peels: list[Path] = []
    while remaining:
        rho = peel_path(remaining)
        peels.append(rho)
        remaining.difference_update(rho)

    constituents: list[Path] = list(reversed(peels))
    if parts is not None:
        if parts < len(constituents):
            raise ValueError(
                f"support needs at least {len(constituents)} ordered paths here; "
                f"{parts} requested"
            )
        extra = parts - len(constituents)
        idx = 0
        while extra > 0 and idx < len(constituents):
            path = constituents[idx]
            if len(path) >= 2:
                take = min(extra, len(path) - 1)
                constituents[idx : idx + 1] = _split_with_tail_singletons(path, take)
                extra -= take
                idx += take + 1
            else:
                idx += 1
        if extra > 0:
            raise ValueError(f"support has fewer than {parts} nodes")

    result = KPath(tuple(constituents), host=kpath.host)
    assert is_ordered(result) and result.support == kpath.support
    return result


def diagram_of_ordered(kpath: KPath) -> Diagram:
    """
    Compress an ordered k-path covering its whole host diagram: every node
    of the j-th constituent moves to column j of its own row.  The column
    filling of the host, transported along, is a standard filling of the
    result; this is checked.
    """
    if kpath.host is None:
        raise ValueError("diagram_of_ordered needs a host diagram")
    if kpath.support != kpath.host.node_set:
        raise ValueError("the k-path must cover the whole host diagram")
    if not is_ordered(kpath):
        raise ValueError("the k-path must be ordered")
    nodes = tuple((a, j) for j, path in enumerate(kpath.paths, start=1) for a, _ in path)
    result = Diagram(nodes)
    image = act(row_fill(result), w_of_diagram(kpath.host))
    assert is_standard(image), "transported column filling must stay standard"
    return result


def _sandwiching_constituents(kpath: KPath, node: Node) -> list[int]:
    a, b = node
    found = []
    for idx, path in enumerate(kpath.paths):
        if any(r < a and c == b for r, c in path) and any(r > a and c == b for r, c in path):
            found.append(idx)
    return found


def insert_singleton(kpath: KPath, node: Node) -> KPath:
    """
    Extend an ordered k-path by one extra node.  If some constituent runs
    through the node's column both above and below it, the node joins that
    constituent; otherwise it becomes a singleton path placed after the
    longest initial run of constituents preceding it.  The result is
    ordered again.
    """
    node = (int(node[0]), int(node[1]))
    if not is_ordered(kpath):
        raise ValueError("insert_singleton expects an ordered k-path")
    if node in kpath.support:
        raise ValueError(f"node {node} already covered")
    if kpath.host is not None and node not in kpath.host:
        raise ValueError(f"node {node} outside the host diagram")

    sandwich = _sandwiching_constituents(kpath, node)
    if sandwich:
        # two constituents of an ordered k-path can never both bracket the
        # same column position
        assert len(sandwich) == 1
        j = sandwich[0]
        widened = tuple(sorted(kpath.paths[j] + (node,)))
        paths = kpath.paths[:j] + (widened,) + kpath.paths[j + 1 :]
    else:
        run = 0
        while run < kpath.k and precedes(kpath.paths[run], (node,)):
            run += 1
        paths = kpath.paths[:run] + ((node,),) + kpath.paths[run:]

    result = KPath(paths, host=kpath.host)
    assert is_ordered(result)
    return result


def extend_by_singletons(kpath: KPath, nodes: Iterable[Node]) -> KPath:
    """
    Insert several extra nodes as singleton paths into an ordered k-path.
    No constituent may bracket any of the new nodes within its column, so
    every insertion genuinely adds a constituent.
    """
    nodes = [(int(r), int(c)) for r, c in nodes]
    if len(set(nodes)) != len(nodes):
        raise ValueError("nodes to insert must be distinct")
    for node in nodes:
        if _sandwiching_constituents(kpath, node):
            raise ValueError(f"a constituent path brackets {node}; cannot add as singleton")
    result = kpath
    for node in nodes:
        result = insert_singleton(result, node)
    assert result.k == kpath.k + len(nodes)
    return result
