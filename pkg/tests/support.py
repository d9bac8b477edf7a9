"""Shared generators and independent oracles for the test suite."""
from __future__ import annotations

import random

from klrim import Diagram, KPath, Node, Perm, times_gen


def compress_nodes(nodes) -> tuple[Node, ...]:
    """Renumber rows and columns consecutively from 1."""
    nodes = set(nodes)
    rows = sorted({r for r, _ in nodes})
    cols = sorted({c for _, c in nodes})
    rmap = {r: i for i, r in enumerate(rows, 1)}
    cmap = {c: i for i, c in enumerate(cols, 1)}
    return tuple(sorted((rmap[r], cmap[c]) for r, c in nodes))


def random_diagram(rng: random.Random, max_nodes: int = 8, grid: int = 6) -> Diagram:
    k = rng.randint(1, max_nodes)
    cells = [(r, c) for r in range(1, grid + 1) for c in range(1, grid + 1)]
    return Diagram(compress_nodes(rng.sample(cells, k)))


def random_kpath(rng: random.Random, diagram: Diagram, cover: bool = False) -> KPath:
    """A random k-path in the diagram: sweep the nodes row-major and either
    extend a compatible path or open a new one, then shuffle the paths."""
    if cover:
        chosen = list(diagram.nodes)
    else:
        chosen = [nd for nd in diagram.nodes if rng.random() < 0.8]
        if not chosen:
            chosen = [diagram.nodes[0]]
    paths: list[list[Node]] = []
    for node in chosen:
        options = [p for p in paths if p[-1][0] < node[0] and p[-1][1] <= node[1]]
        if options and rng.random() < 0.7:
            rng.choice(options).append(node)
        else:
            paths.append([node])
    rng.shuffle(paths)
    return KPath(tuple(tuple(p) for p in paths), host=diagram)


def brute_prefixes(w: Perm) -> set[Perm]:
    """The weak-order prefixes of w, by walking right descents downward.
    Independent of the diagram/tableau machinery."""
    seen = {w}
    stack = [w]
    while stack:
        v = stack.pop()
        pos = {value: i for i, value in enumerate(v)}
        for k in range(1, len(v)):
            if pos[k] > pos[k + 1]:
                u = times_gen(v, k)
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return seen


def oracle_type(profile: tuple[int, ...]) -> tuple[int, ...]:
    """Turn the cumulative k-path maxima into a partition of increments."""
    typ: list[int] = []
    prev = 0
    for g in profile:
        if g == prev:
            break
        typ.append(g - prev)
        prev = g
    return tuple(typ)


def staircase_row_form(r: int, v: int) -> Perm:
    """
    Frozen row-forms for the rim of (1, 2^{r-2}, 1), written directly from
    the closed pattern: an interleave of 1..r-ish low entries with the high
    entries r..2r-2, with the interlock position controlled by v.
    """
    if v == 0:
        row = [1]
        for i in range(2, r):
            row += [i, r + i - 1]
        row.append(r)
    elif v == r - 2:
        row = [r - 1]
        for i in range(1, r - 1):
            row += [i, r + i - 1]
        row.append(2 * r - 2)
    else:
        row = [v + 1]
        for i in range(1, v + 1):
            row += [i, v + 1 + i]
        for j in range(1, r - 1 - v):
            row += [2 * v + 1 + j, v + r + j]
        row.append(v + r)
    return tuple(row)


# three-row special-diagram fixtures, one per composition pattern of
# (s, t, u) sorted decreasingly; used to cross-check the rotation dispatch
def f_fixture(s: int, t: int, u: int, cols) -> Diagram:
    nodes = {(1, i) for i in range(1, s + 1)}
    nodes.update((2, i) for i in cols)
    nodes.update((3, i) for i in range(1, t + 1))
    return Diagram(tuple(nodes))


def k_fixture(s: int, t: int, u: int, cols) -> Diagram:
    nodes = {(1, i) for i in cols}
    nodes.update((2, i) for i in range(1, s + 1))
    nodes.update((3, i) for i in range(1, t - u + 1))
    nodes.update((3, i) for i in cols)
    return Diagram(tuple(nodes))


def l_fixture(s: int, t: int, u: int) -> Diagram:
    nodes = {(1, i) for i in range(s - u + 1, s + 1)}
    nodes.update((2, i) for i in range(s - t + 1, s + 1))
    nodes.update((3, i) for i in range(1, s + 1))
    return Diagram(tuple(nodes))
