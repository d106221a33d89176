#!/usr/bin/env python3
"""Regenerate the committed sequence prefixes in fixtures/.

Every prefix is produced from a textbook closed form that shares no code
with the C++ recurrences, so the fixtures act as an external reference.
"""
import math
import pathlib
import sys
from fractions import Fraction


def falling(x, n):
    out = 1
    for i in range(n):
        out *= x - i
    return out


def clique_bell(m, n):
    # Surjections onto k colours from the chromatic polynomial ((x)_m)^n,
    # divided by k! to forget colour names.
    total = 0
    for k in range(m, n * m + 1):
        surj = sum((-1) ** (k - j) * math.comb(k, j) * falling(j, m) ** n
                   for j in range(k + 1))
        assert surj % math.factorial(k) == 0
        total += surj // math.factorial(k)
    return total


def bell(n):
    # Dobinski-free route: Bell triangle.
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def lah_rows(n_max):
    out = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            out.append(Fraction(math.factorial(n), math.factorial(k)) * math.comb(n - 1, k - 1))
    return [int(v) for v in out]


def multifactorial(step, n):
    out = 1
    for j in range(n):
        out *= step * j + 1
    return out


FIXTURES = [
    ("A069223", 1, "Generalized Bell numbers B_{3,3}(n): all colourings of n disjoint triangles",
     "inclusion-exclusion over the chromatic polynomial ((x)_3)^n",
     [clique_bell(3, n) for n in range(1, 13)]),
    ("A000110", 0, "Bell numbers",
     "Bell triangle (Aitken's array)",
     [bell(n) for n in range(0, 20)]),
    ("A105278", 1, "Lah triangle L(n,k) = n!/k! * C(n-1,k-1), read by rows",
     "closed form n!/k! * C(n-1,k-1)",
     lah_rows(10)),
    ("A001147", 0, "Double factorial of odd numbers (2n-1)!!",
     "product of 1, 3, 5, ..., 2n-1",
     [multifactorial(2, n) for n in range(0, 18)]),
    ("A007559", 0, "Triple factorial numbers prod_{j<n} (3j+1)",
     "product of 1, 4, 7, ..., 3n-2",
     [multifactorial(3, n) for n in range(0, 16)]),
]


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "fixtures")
    root.mkdir(parents=True, exist_ok=True)
    for ident, offset, desc, source, values in FIXTURES:
        lines = [
            f"# Generated by tools/gen_fixtures.py from: {source}.",
            f"id: {ident}",
            f"offset: {offset}",
            f"description: {desc}",
        ]
        for i in range(0, len(values), 8):
            lines.append(", ".join(str(v) for v in values[i:i + 8]))
        (root / f"{ident}.seq").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
