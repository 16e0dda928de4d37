"""Finite groups as multiplication tables, crossed modules, braidings.

Everything here is exhaustively decidable: groups are stored as index
tables and validated at construction, and the crossed-module axioms
XGr1-2 plus the braiding axioms BGr1-6 are swept over all element
tuples.  Commutators follow the [g, g'] = g g' g^-1 g'^-1 convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidInput, UnknownFixture
from .report import ValidationReport, merge, sweep


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple  # table[i][j] = index of g_i g_j
    identity: int = field(init=False, default=0)
    inverse: tuple = field(init=False, default=())

    def __post_init__(self):
        n = self.order
        if n <= 0 or len(self.table) != n or any(len(r) != n for r in self.table):
            raise InvalidInput("multiplication table must be order x order")
        if any(not (0 <= v < n) for r in self.table for v in r):
            raise InvalidInput("table entries must be element indices")
        ident = next(
            (
                i
                for i in range(n)
                if all(self.table[i][j] == j and self.table[j][i] == j for j in range(n))
            ),
            None,
        )
        if ident is None:
            raise InvalidInput("table has no identity element")
        inv = []
        for i in range(n):
            j = next((j for j in range(n) if self.table[i][j] == ident), None)
            if j is None or self.table[j][i] != ident:
                raise InvalidInput(f"element {i} has no two-sided inverse")
            inv.append(j)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise InvalidInput("table is not associative")
        object.__setattr__(self, "identity", ident)
        object.__setattr__(self, "inverse", tuple(inv))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.mul(self.mul(h, g), self.inv(h))

    def commutator(self, a: int, b: int) -> int:
        """a b a^-1 b^-1."""
        return self.mul(self.conj(a, b), self.inv(b))

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(self.order)
        )


def _table_from(elems, op, key=None):
    index = {key(e) if key else e: i for i, e in enumerate(elems)}
    return tuple(
        tuple(index[key(op(a, b)) if key else op(a, b)] for b in elems) for a in elems
    )


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup(n, tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def dihedral(n: int) -> FiniteGroup:
    """Order 2n; element (i, j) is r^i s^j with s r = r^-1 s."""
    elems = [(i, j) for j in range(2) for i in range(n)]

    def op(a, b):
        (i, j), (k, l) = a, b
        return ((i + (k if j == 0 else -k)) % n, (j + l) % 2)

    return FiniteGroup(2 * n, _table_from(elems, op))


def klein_four() -> FiniteGroup:
    elems = [(a, b) for a in range(2) for b in range(2)]
    return FiniteGroup(
        4, _table_from(elems, lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2))
    )


def quaternion8() -> FiniteGroup:
    """{+-1, +-i, +-j, +-k} as pairs (sign, axis) with axes e,i,j,k."""
    mul_axis = {
        ("e", "e"): (1, "e"), ("e", "i"): (1, "i"), ("e", "j"): (1, "j"), ("e", "k"): (1, "k"),
        ("i", "e"): (1, "i"), ("i", "i"): (-1, "e"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "e"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "e"), ("j", "k"): (1, "i"),
        ("k", "e"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "e"),
    }
    elems = [(s, a) for a in "eijk" for s in (1, -1)]

    def op(x, y):
        s, a = mul_axis[(x[1], y[1])]
        return (x[0] * y[0] * s, a)

    return FiniteGroup(8, _table_from(elems, op))


def alternating4() -> FiniteGroup:
    perms = [p for p in itertools.permutations(range(4)) if _parity(p) == 0]

    def op(p, q):
        return tuple(p[q[i]] for i in range(4))

    return FiniteGroup(12, _table_from(perms, op))


def symmetric3() -> FiniteGroup:
    perms = list(itertools.permutations(range(3)))

    def op(p, q):
        return tuple(p[q[i]] for i in range(3))

    return FiniteGroup(6, _table_from(perms, op))


def _parity(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def group_catalog(name: str) -> FiniteGroup:
    """C1..C12, V4, S3, D3..D6, Q8, A4."""
    if name.startswith("C") and name[1:].isdigit():
        n = int(name[1:])
        if 1 <= n <= 12:
            return cyclic(n)
    if name.startswith("D") and name[1:].isdigit():
        n = int(name[1:])
        if 3 <= n <= 6:
            return dihedral(n)
    if name == "V4":
        return klein_four()
    if name == "S3":
        return symmetric3()
    if name == "Q8":
        return quaternion8()
    if name == "A4":
        return alternating4()
    raise UnknownFixture(f"no group fixture named {name!r}")


GROUP_FIXTURES = tuple(
    [f"C{n}" for n in range(1, 13)] + ["V4", "S3", "D3", "D4", "D5", "D6", "Q8", "A4"]
)


@dataclass(frozen=True)
class GroupXMod:
    g: FiniteGroup
    h: FiniteGroup
    action: tuple  # action[h][g] -> g index
    boundary: tuple  # boundary[g] -> h index
    brace: Optional[tuple] = None  # brace[h][h'] -> g index

    def __post_init__(self):
        if len(self.action) != self.h.order or any(
            len(r) != self.g.order for r in self.action
        ):
            raise InvalidInput("action table must be |H| x |G|")
        if len(self.boundary) != self.g.order:
            raise InvalidInput("boundary must list |G| images")
        if self.brace is not None and (
            len(self.brace) != self.h.order
            or any(len(r) != self.h.order for r in self.brace)
        ):
            raise InvalidInput("brace table must be |H| x |H|")

    def act(self, h: int, g: int) -> int:
        return self.action[h][g]


def validate_group_xmod(x: GroupXMod, subject: str = "groupxmod") -> ValidationReport:
    """Action-by-automorphisms, boundary homomorphism, XGr1, XGr2."""
    G, H = x.g, x.h
    d = x.boundary

    checks = [
        sweep(
            "GrAct",
            (H.order, G.order, G.order),
            lambda h, g, g2: ((x.act(h, G.mul(g, g2)),), (G.mul(x.act(h, g), x.act(h, g2)),)),
        ),
        sweep(
            "GrAct",
            (H.order, H.order, G.order),
            lambda h, h2, g: ((x.act(H.mul(h, h2), g),), (x.act(h, x.act(h2, g)),)),
        ),
        sweep("GrAct", (G.order,), lambda g: ((x.act(H.identity, g),), (g,))),
        sweep(
            "GrHom",
            (G.order, G.order),
            lambda g, g2: ((d[G.mul(g, g2)],), (H.mul(d[g], d[g2]),)),
        ),
        sweep(
            "XGr1",
            (H.order, G.order),
            lambda h, g: ((d[x.act(h, g)],), (H.conj(h, d[g]),)),
        ),
        sweep(
            "XGr2",
            (G.order, G.order),
            lambda g, g2: ((x.act(d[g], g2),), (G.conj(g, g2),)),
        ),
    ]
    return merge(subject, checks)


def validate_group_braiding(x: GroupXMod, subject: str = "groupxmod") -> ValidationReport:
    """BGr1..BGr6, exhaustive over element tuples."""
    if x.brace is None:
        raise InvalidInput("braiding validation needs a brace table")
    G, H = x.g, x.h
    d = x.boundary
    br = x.brace

    checks = [
        sweep(
            "BGr1",
            (H.order, H.order),
            lambda h, h2: ((d[br[h][h2]],), (H.commutator(h, h2),)),
        ),
        sweep(
            "BGr2",
            (G.order, G.order),
            lambda g, g2: ((br[d[g]][d[g2]],), (G.commutator(g, g2),)),
        ),
        sweep(
            "BGr3",
            (G.order, H.order),
            lambda g, h: ((br[d[g]][h],), (G.mul(g, x.act(h, G.inv(g))),)),
        ),
        sweep(
            "BGr4",
            (H.order, G.order),
            lambda h, g: ((br[h][d[g]],), (G.mul(x.act(h, g), G.inv(g)),)),
        ),
        sweep(
            "BGr5",
            (H.order, H.order, H.order),
            lambda h, h2, h3: (
                (br[h][H.mul(h2, h3)],),
                (G.mul(br[h][h2], x.act(h2, br[h][h3])),),
            ),
        ),
        sweep(
            "BGr6",
            (H.order, H.order, H.order),
            lambda h, h2, h3: (
                (br[H.mul(h, h2)][h3],),
                (G.mul(x.act(h, br[h2][h3]), br[h][h3]),),
            ),
        ),
    ]
    return merge(subject, checks)


def conjugation_example(g: FiniteGroup) -> GroupXMod:
    """(G, G, Conj, Id) with the commutator brace."""
    n = g.order
    action = tuple(tuple(g.conj(h, a) for a in range(n)) for h in range(n))
    brace = tuple(tuple(g.commutator(a, b) for b in range(n)) for a in range(n))
    return GroupXMod(g, g, action, tuple(range(n)), brace)
