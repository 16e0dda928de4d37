#!/usr/bin/env python3
"""Search for a characteristic-2 gap between the two Lie braiding lists.

Over F2 the antisymmetrization argument relating the LieB3/LieB4 axioms
to the LieT3/LieT4 axioms breaks down, so the two validators could in
principle disagree.  This script enumerates every tau on small discrete
categorical Lie algebras over F2, keeps the candidates passing LieT1-2,
and compares verdicts.  The outcome is printed, not asserted.
"""

import itertools
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from braidalg.algebra import Algebra, is_lie
from braidalg.braid import (
    CatBraiding,
    validate_braiding_cat_lie_alt,
    validate_braiding_cat_lie_ulualan,
)
from braidalg.fields import GF
from braidalg.icat import LIE, discrete_cat
from braidalg.linear import BilMap, Space


def lie_algebras_f2(dim):
    """All Lie algebra structures on F2^dim (including degenerate ones)."""
    F = GF(2)
    sp = Space(F, tuple(f"x{i}" for i in range(dim)))
    cells = dim * dim * dim
    for bits in range(2 ** cells):
        tensor = []
        v = bits
        for _ in range(dim):
            grid = []
            for _ in range(dim):
                row = []
                for _ in range(dim):
                    row.append(v & 1)
                    v >>= 1
                grid.append(row)
            tensor.append(grid)
        tensor = tuple(tuple(tuple(r) for r in g) for g in tensor)
        a = Algebra(sp, BilMap(sp, sp, sp, tensor))
        if is_lie(a):
            yield a


def taus(c0, c1):
    F = GF(2)
    cells = c1.dim * c0.dim * c0.dim
    for bits in itertools.product((0, 1), repeat=cells):
        it = iter(bits)
        tensor = tuple(
            tuple(tuple(next(it) for _ in range(c0.dim)) for _ in range(c0.dim))
            for _ in range(c1.dim)
        )
        yield BilMap(c0.space, c0.space, c1.space, tensor)


def main():
    disagreements = 0
    candidates = 0
    for dim in (1, 2):
        for a in lie_algebras_f2(dim):
            cat = discrete_cat(a, LIE)
            for tau in taus(cat.c0, cat.c1):
                b = CatBraiding(cat, tau)
                ul = validate_braiding_cat_lie_ulualan(b)
                t12_ok = all(
                    e.ok for e in ul.entries if e.tag in ("LieT1", "LieT2")
                )
                if not t12_ok:
                    continue
                candidates += 1
                alt = validate_braiding_cat_lie_alt(b)
                if ul.ok != alt.ok:
                    disagreements += 1
                    if disagreements <= 5:
                        print("disagreement: bracket", a.mult.tensor)
                        print("  tau", tau.tensor)
                        print("  ulualan", ul.failing_tags(), "alt", alt.failing_tags())
    print(f"candidates passing LieT1-2: {candidates}")
    print(f"verdict disagreements: {disagreements}")


if __name__ == "__main__":
    main()
