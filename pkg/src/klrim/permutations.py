"""
Permutations of {1..n} in row-form, Coxeter combinatorics, and the
Robinson-Schensted correspondence.

A permutation w is represented by its row-form, the tuple
``(1w, 2w, ..., nw)``.  Permutations act on the right, so the product
``compose(w, v)`` sends i to ``(iw)v``.  The Coxeter generators are the
adjacent transpositions ``s_k = (k, k+1)`` for 1 <= k <= n-1; a word in the
generators is a tuple of such indices and is evaluated left to right.

Standard Young tableaux are represented by their rows, as a tuple of tuples
of entries.
"""
from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence

from .compositions import (
    Composition,
    check_composition,
    check_partition,
    partial_sums,
)

Perm = tuple[int, ...]
Word = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def check_permutation(row_form: Iterable[int]) -> Perm:
    """
    Validate a row-form: a rearrangement of 1..n for some n >= 1.

    >>> check_permutation([2, 1, 3])
    (2, 1, 3)
    >>> check_permutation([1, 1, 2])
    Traceback (most recent call last):
        ...
    ValueError: not a row-form of a permutation of {1..3}: (1, 1, 2)
    """
    w = tuple(int(x) for x in row_form)
    if not w or sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a row-form of a permutation of {{1..{len(w)}}}: {w}")
    return w


def identity(n: int) -> Perm:
    """
    >>> identity(3)
    (1, 2, 3)
    """
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    """
    The order-reversing permutation, the longest element of S_n.

    >>> longest_element(4)
    (4, 3, 2, 1)
    """
    return tuple(range(n, 0, -1))


def length(w: Sequence[int]) -> int:
    """
    Coxeter length = number of inversions of the row-form.

    >>> length((1, 2, 3, 4))
    0
    >>> length((4, 3, 2, 1))
    6
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def inversion_set(w: Sequence[int]) -> set[tuple[int, int]]:
    """
    The set of inverted position pairs (i, j) with i < j and iw > jw,
    1-based.  Its size is ``length(w)``.

    >>> sorted(inversion_set((3, 1, 2)))
    [(1, 2), (1, 3)]
    """
    n = len(w)
    return {
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if w[i] > w[j]
    }


def inverse(w: Sequence[int]) -> Perm:
    """
    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    inv = [0] * len(w)
    for i, wi in enumerate(w):
        inv[wi - 1] = i + 1
    return tuple(inv)


def compose(w: Sequence[int], v: Sequence[int]) -> Perm:
    """
    Product under the right-action convention: i(wv) = (iw)v.

    >>> compose((2, 1, 3), (1, 3, 2))
    (3, 1, 2)
    """
    if len(w) != len(v):
        raise ValueError(f"cannot compose permutations of sizes {len(w)} and {len(v)}")
    return tuple(v[wi - 1] for wi in w)


def times_gen(w: Sequence[int], k: int) -> Perm:
    """
    Right-multiply by the generator s_k, i.e. swap the values k and k+1.
    """
    if not 1 <= k <= len(w) - 1:
        raise ValueError(f"generator index {k} out of range for n={len(w)}")
    return tuple(k + 1 if x == k else k if x == k + 1 else x for x in w)


def from_generator_word(n: int, word: Iterable[int]) -> Perm:
    """
    Evaluate a word in the generators, left to right.

    >>> from_generator_word(3, (1, 2))
    (3, 1, 2)
    """
    w = list(identity(n))
    for k in word:
        if not 1 <= k <= n - 1:
            raise ValueError(f"generator index {k} out of range for n={n}")
        # right multiplication by s_k swaps the values k and k+1
        i, j = w.index(k), w.index(k + 1)
        w[i], w[j] = w[j], w[i]
    return tuple(w)


def reduced_word(w: Sequence[int]) -> Word:
    """
    The lexicographically smallest reduced word for w.

    Repeatedly peel the smallest descent off the left: if positions k, k+1
    carry a descent then s_k * (remaining suffix) still evaluates to w, and
    picking the smallest such k at every step produces the lex-least word.

    >>> reduced_word((1, 2, 3))
    ()
    >>> reduced_word((2, 1, 3))
    (1,)
    >>> reduced_word((1, 2, 4, 3))
    (3,)
    >>> from_generator_word(4, reduced_word((3, 1, 4, 2)))
    (3, 1, 4, 2)
    """
    w = list(w)
    word = []
    while True:
        for k in range(len(w) - 1):
            if w[k] > w[k + 1]:
                word.append(k + 1)
                w[k], w[k + 1] = w[k + 1], w[k]
                break
        else:
            return tuple(word)


def is_prefix(x: Sequence[int], y: Sequence[int]) -> bool:
    """
    Weak right-order test: x is a prefix of y when some reduced word for y
    begins with one for x, equivalently l(x) + l(x^-1 y) = l(y).

    >>> is_prefix((2, 1, 3), (3, 1, 2))
    True
    >>> is_prefix((1, 3, 2), (2, 1, 3))
    False
    """
    if len(x) != len(y):
        raise ValueError("prefix test requires permutations of the same size")
    return length(x) + length(compose(inverse(x), y)) == length(y)


def dot_conjugate(w: Sequence[int]) -> Perm:
    """
    Conjugation by the longest element: w -> w0 w w0.  This is the
    involutive automorphism swapping s_i with s_{n-i}.

    >>> dot_conjugate((1, 3, 2))
    (2, 1, 3)
    >>> dot_conjugate(dot_conjugate((3, 1, 4, 2)))
    (3, 1, 4, 2)
    """
    n = len(w)
    return tuple(n + 1 - w[n - i] for i in range(1, n + 1))


def longest_parabolic_element(parts: Iterable[int]) -> Perm:
    """
    The longest element of the Young subgroup attached to a composition:
    the row-form reverses each consecutive block of positions.

    >>> longest_parabolic_element((2, 1))
    (2, 1, 3)
    >>> longest_parabolic_element((1, 1, 1))
    (1, 2, 3)
    >>> longest_parabolic_element((3,))
    (3, 2, 1)
    """
    sums = partial_sums(parts)
    row: list[int] = []
    for lo, hi in zip(sums, sums[1:]):
        row.extend(range(hi, lo, -1))
    return tuple(row)


def is_coset_rep(e: Sequence[int], parts: Iterable[int]) -> bool:
    """
    True when e is the minimum-length representative of its right coset of
    the Young subgroup of the composition: the row-form must be strictly
    increasing inside every block of positions.

    >>> is_coset_rep((1, 3, 2), (2, 1))
    True
    >>> is_coset_rep((2, 1, 3), (2, 1))
    False
    """
    parts = check_composition(parts)
    if sum(parts) != len(e):
        raise ValueError(f"composition {parts} does not sum to n={len(e)}")
    sums = partial_sums(parts)
    return all(
        e[i] < e[i + 1]
        for lo, hi in zip(sums, sums[1:])
        for i in range(lo, hi - 1)
    )


def rsk(w: Sequence[int]) -> tuple[Tableau, Tableau]:
    """
    Robinson-Schensted row insertion of the row-form; returns the pair
    (insertion tableau, recording tableau).

    >>> rsk((2, 1, 3))
    (((1, 3), (2,)), ((1, 3), (2,)))
    >>> rsk((3, 1, 2))
    (((1, 2), (3,)), ((1, 3), (2,)))
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        for r, row in enumerate(p_rows):
            j = bisect_left(row, x)
            if j == len(row):
                row.append(x)
                q_rows[r].append(step)
                break
            row[j], x = x, row[j]
        else:
            p_rows.append([x])
            q_rows.append([step])
    return tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows))


def is_standard_young_tableau(rows: Sequence[Sequence[int]]) -> bool:
    """
    Rows and columns strictly increasing, shape weakly decreasing, entries
    a rearrangement of 1..n.

    >>> is_standard_young_tableau(((1, 3), (2,)))
    True
    >>> is_standard_young_tableau(((1, 2), (2,)))
    False
    """
    if not rows or any(not row for row in rows):
        return False
    lengths = [len(row) for row in rows]
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        return False
    entries = sorted(x for row in rows for x in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for row in rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(upper[j] >= lower[j] for j in range(len(lower))):
            return False
    return True


def shape(w: Sequence[int]) -> Composition:
    """
    The common shape of the Robinson-Schensted pair of w, as a partition.

    >>> shape((2, 1, 3))
    (2, 1)
    >>> shape(longest_element(4))
    (1, 1, 1, 1)
    """
    p, _ = rsk(w)
    return check_partition(tuple(len(row) for row in p))


def same_right_cell(w: Sequence[int], v: Sequence[int]) -> bool:
    """
    Two permutations lie in the same right Kazhdan-Lusztig cell exactly when
    their recording tableaux agree.

    >>> same_right_cell((2, 1, 3), (3, 1, 2))
    True
    >>> same_right_cell((1, 2, 3), (3, 2, 1))
    False
    """
    if len(w) != len(v):
        raise ValueError("cell comparison requires permutations of the same size")
    return rsk(w)[1] == rsk(v)[1]
