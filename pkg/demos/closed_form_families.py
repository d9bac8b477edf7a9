"""
Walkthrough: composition families whose rims have explicit descriptions.

Several families admit closed-form rims: sorted compositions and their
reverses (one element), every three-part composition (a table of binomial
coefficients), compositions (t, s, 1, ..., 1) with t < s, and the padded
two-column interlocks (1^a, 2^k, 1^b).  This demo prints the closed forms
next to the search engine's answers.

Run:  python3 demos/closed_form_families.py
"""
from itertools import permutations

from klrim import compositions_of, rim_closed_form, rim_search
from klrim.cli import render_diagram


def three_part_table(total):
    print(f"three-part compositions of {total}: rim sizes")
    seen = set()
    for parts in sorted(set(permutations_of_three(total))):
        closed = rim_closed_form(parts)
        searched = rim_search(parts)
        agree = "ok" if closed.rim == searched.rim else "MISMATCH"
        print(f"   {parts}: {searched.rim_size:3d}   closed form {agree}")
        seen.add(parts)
    print()


def permutations_of_three(total):
    for parts in compositions_of(total):
        if len(parts) == 3:
            yield parts


def staircase_family():
    print("padded two-column interlocks (1^a, 2^k, 1^b): rim diagrams for (1,2,2,1)")
    result = rim_closed_form((1, 2, 2, 1))
    for diagram, special in zip(result.diagrams, result.special):
        print(f"   special: {'yes' if special else 'no '}")
        print(render_diagram(diagram, indent="      "))
    print(f"   rim size {result.rim_size}, special count {result.special_count}")
    print()


def coverage(max_n):
    recognized = total = 0
    for n in range(1, max_n + 1):
        for parts in compositions_of(n):
            total += 1
            if rim_closed_form(parts) is not None:
                recognized += 1
    print(f"closed forms cover {recognized} of the {total} compositions with n <= {max_n}")


if __name__ == "__main__":
    three_part_table(6)
    staircase_family()
    coverage(7)
