"""
Walkthrough: rearranging a k-path into an ordered one.

A k-path is a tuple of disjoint paths (rows strictly increasing, columns
weakly increasing).  It is *ordered* when each constituent precedes the
later ones: everything weakly below an earlier path sits strictly to its
left.  Orderedness is what lets a k-path be compressed into a new diagram
column by column.  The rearrangement below peels maximal staircase paths
off the support, which provably yields an equivalent ordered k'-path with
k' at most the original k.

Run:  python3 demos/ordering_kpaths.py
"""
from klrim import Diagram, KPath, diagram_of_ordered, is_ordered, order_kpath
from klrim.cli import render_diagram

SEVEN_PATH = (
    ((1, 1), (4, 2), (6, 4)),
    ((1, 2), (3, 3), (4, 3), (6, 5)),
    ((1, 3), (3, 4), (4, 4)),
    ((3, 5), (4, 5)),
    ((1, 4), (2, 4), (5, 4), (6, 6)),
    ((1, 5), (3, 6), (4, 7)),
    ((2, 1), (5, 3)),
)


def board(kpath):
    """Print the support with each node labelled by its path index."""
    label = {}
    for idx, path in enumerate(kpath.paths, 1):
        for node in path:
            label[node] = str(idx)
    rows = max(r for r, _ in label)
    cols = max(c for _, c in label)
    for r in range(1, rows + 1):
        print("   " + " ".join(label.get((r, c), ".") for c in range(1, cols + 1)))


if __name__ == "__main__":
    host = Diagram(tuple(node for path in SEVEN_PATH for node in path))
    kp = KPath(SEVEN_PATH, host=host)
    print(f"a {kp.k}-path of length {kp.length}, type {kp.type}")
    board(kp)
    print(f"ordered? {is_ordered(kp)}")
    print()

    out = order_kpath(kp)
    print(f"equivalent ordered {out.k}-path (same support):")
    board(out)
    print(f"ordered? {is_ordered(out)}   type {out.type}")
    print()

    exact = order_kpath(kp, parts=kp.k)
    print(f"forced back to exactly {exact.k} constituents (singleton splits):")
    board(exact)
    print()

    print("an ordered full cover compresses to a diagram, one column per path:")
    compressed = diagram_of_ordered(out)
    print("support diagram:")
    print(render_diagram(host, indent="   "))
    print("compressed diagram:")
    print(render_diagram(compressed, indent="   "))
