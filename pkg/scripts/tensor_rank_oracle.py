#!/usr/bin/env python3
"""Brute-force rank of the tensor-square relation span, kept independent.

For a Lie algebra M with structure constants c[k][i][j] this enumerates,
over all basis triples, the two relation families

    [m1,m2](x)m3 - m1(x)[m2,m3] + m2(x)[m1,m3]
    m1(x)[m2,m3] - [m3,m1](x)m2 + [m2,m1](x)m3

as vectors in the plain dim(M)^2 tensor space and row-reduces them with
Fraction arithmetic.  dim T = dim(M)^2 - rank.  No package imports: this
is the oracle the main build is checked against.
"""

from fractions import Fraction


def sl2():
    # basis h, e, f with [h,e]=2e, [h,f]=-2f, [e,f]=h
    c = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]
    c[1][0][1], c[1][1][0] = Fraction(2), Fraction(-2)
    c[2][0][2], c[2][2][0] = Fraction(-2), Fraction(2)
    c[0][1][2], c[0][2][1] = Fraction(1), Fraction(-1)
    return c


def heis3():
    # basis x, y, z with [x,y]=z
    c = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]
    c[2][0][1], c[2][1][0] = Fraction(1), Fraction(-1)
    return c


def abelian(n):
    return [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]


def bracket(c, u, v):
    n = len(c)
    return [
        sum((c[k][i][j] * u[i] * v[j] for i in range(n) for j in range(n)), Fraction(0))
        for k in range(n)
    ]


def tensor(u, v):
    return [a * b for a in u for b in v]


def rank(rows):
    rows = [list(r) for r in rows if any(r)]
    r = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def relation_rank(c):
    n = len(c)
    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                m1, m2, m3 = basis[i], basis[j], basis[k]
                b12, b23 = bracket(c, m1, m2), bracket(c, m2, m3)
                b13, b31 = bracket(c, m1, m3), bracket(c, m3, m1)
                b21 = bracket(c, m2, m1)
                rel_a = [
                    p - q + r
                    for p, q, r in zip(tensor(b12, m3), tensor(m1, b23), tensor(m2, b13))
                ]
                rel_b = [
                    p - q + r
                    for p, q, r in zip(tensor(m1, b23), tensor(b31, m2), tensor(b21, m3))
                ]
                rows.append(rel_a)
                rows.append(rel_b)
    return rank(rows)


def main():
    for name, c in (("sl2", sl2()), ("Heis3", heis3()), ("Ab(2)", abelian(2)), ("Ab(3)", abelian(3))):
        n = len(c)
        rk = relation_rank(c)
        print(f"{name}: ambient {n * n}, relation rank {rk}, dim T = {n * n - rk}")


if __name__ == "__main__":
    main()
