"""Structure-constant algebras, flavor predicates and the fixture catalog.

An Algebra is a space plus a multiplication tensor; nothing about the
flavor (associative / Lie / Leibniz) is ever assumed, only checked.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NotAssociative, UnknownFixture
from .fields import Field
from .linear import BilMap, LinMap, Space, bilinear_from_rule, vadd, vsub

__all__ = [
    "Algebra",
    "is_associative",
    "is_lie",
    "is_leibniz",
    "liefy",
    "is_homomorphism",
    "is_derivation",
    "catalog",
    "ad_map",
]


@dataclass(frozen=True)
class Algebra:
    space: Space
    mult: BilMap

    def __post_init__(self):
        if not (self.mult.left == self.mult.right == self.mult.codomain == self.space):
            raise ValueError("multiplication tensor does not match the space")

    @property
    def field(self) -> Field:
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    def product(self, u, v):
        return self.mult.apply(u, v)


def from_constants(space: Space, products) -> Algebra:
    """Algebra from a {(label_i, label_j): {label_k: scalar}} table.

    Unlisted products are zero.
    """
    F = space.field
    z = F.zero()

    def rule(i, j):
        table = products.get((space.labels[i], space.labels[j]))
        if table is None:
            return space.zero()
        return tuple(F.of(table.get(lbl, z)) for lbl in space.labels)

    return Algebra(space, bilinear_from_rule(space, space, space, rule))


def is_associative(a: Algebra) -> bool:
    n = a.dim
    for i in range(n):
        for j in range(n):
            bij = a.mult.on_basis(i, j)
            for k in range(n):
                lhs = a.product(bij, a.space.basis_vector(k))
                rhs = a.product(a.space.basis_vector(i), a.mult.on_basis(j, k))
                if lhs != rhs:
                    return False
    return True


def is_lie(a: Algebra) -> bool:
    """Alternation ([x,x]=0 for all x, via polarization) plus Jacobi."""
    F = a.field
    n = a.dim
    for i in range(n):
        if any(c != 0 for c in a.mult.on_basis(i, i)):
            return False
        for j in range(i + 1, n):
            # polarization of [x,x]=0: [b_i,b_j] + [b_j,b_i] = 0, valid in
            # every characteristic (antisymmetry alone is weaker in char 2)
            if any(
                F.add(x, y) != 0
                for x, y in zip(a.mult.on_basis(i, j), a.mult.on_basis(j, i))
            ):
                return False
    for i in range(n):
        for j in range(n):
            bij = a.mult.on_basis(i, j)
            for k in range(n):
                jac = vadd(
                    F,
                    vadd(
                        F,
                        a.product(a.space.basis_vector(i), a.mult.on_basis(j, k)),
                        a.product(a.space.basis_vector(j), a.mult.on_basis(k, i)),
                    ),
                    a.product(a.space.basis_vector(k), bij),
                )
                if any(c != 0 for c in jac):
                    return False
    return True


def is_leibniz(a: Algebra) -> bool:
    """[x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis triples."""
    F = a.field
    n = a.dim
    for i in range(n):
        for j in range(n):
            bij = a.mult.on_basis(i, j)
            for k in range(n):
                lhs = a.product(a.space.basis_vector(i), a.mult.on_basis(j, k))
                rhs = vsub(
                    F,
                    a.product(bij, a.space.basis_vector(k)),
                    a.product(a.mult.on_basis(i, k), a.space.basis_vector(j)),
                )
                if lhs != rhs:
                    return False
    return True


def liefy(a: Algebra) -> Algebra:
    """Commutator algebra A^L with [x,y] = xy - yx."""
    if not is_associative(a):
        raise NotAssociative("liefy requires an associative algebra")
    return Algebra(a.space, a.mult.sub(a.mult.swapped()))


def is_homomorphism(f: LinMap, a: Algebra, b: Algebra) -> bool:
    if f.domain != a.space or f.codomain != b.space:
        raise ValueError("map does not match the algebras")
    for i in range(a.dim):
        fi = f.column(i)
        for j in range(a.dim):
            if f.apply(a.mult.on_basis(i, j)) != b.product(fi, f.column(j)):
                return False
    return True


def is_derivation(d: LinMap, a: Algebra) -> bool:
    if d.domain != a.space or d.codomain != a.space:
        raise ValueError("derivation must be an endomorphism of the algebra")
    F = a.field
    for i in range(a.dim):
        di = d.column(i)
        for j in range(a.dim):
            lhs = d.apply(a.mult.on_basis(i, j))
            rhs = vadd(
                F,
                a.product(di, a.space.basis_vector(j)),
                a.product(a.space.basis_vector(i), d.column(j)),
            )
            if lhs != rhs:
                return False
    return True


def ad_map(a: Algebra, x) -> LinMap:
    """Left multiplication y -> x*y (the adjoint map when a is Lie)."""
    return a.mult.left_mul_matrix(x)


_NAME_RE = re.compile(r"^(Ab|Mat|Upper|gl)\(?(\d+)\)?$")


def catalog(name: str, field: Field) -> Algebra:
    """Named fixtures: Ab(n), Mat(n), Upper(n), gl(n), sl2, Heis3."""
    name = name.strip()
    if name == "sl2":
        sp = Space(field, ("h", "e", "f"))
        two = field.of(2)
        return from_constants(
            sp,
            {
                ("h", "e"): {"e": two},
                ("e", "h"): {"e": field.neg(two)},
                ("h", "f"): {"f": field.neg(two)},
                ("f", "h"): {"f": two},
                ("e", "f"): {"h": field.one()},
                ("f", "e"): {"h": field.neg(field.one())},
            },
        )
    if name == "Heis3":
        sp = Space(field, ("x", "y", "z"))
        return from_constants(
            sp,
            {
                ("x", "y"): {"z": field.one()},
                ("y", "x"): {"z": field.neg(field.one())},
            },
        )
    m = _NAME_RE.match(name)
    if not m:
        raise UnknownFixture(f"unknown fixture name: {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise UnknownFixture(f"fixture size must be positive: {name!r}")
    if kind == "Ab":
        sp = Space(field, tuple(f"a{i}" for i in range(1, n + 1)))
        return from_constants(sp, {})
    if kind == "gl":
        return liefy(catalog(f"Mat({n})", field))
    if kind == "Mat":
        pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    else:  # Upper
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    labels = tuple(f"e{i}{j}" for i, j in pairs)
    sp = Space(field, labels)
    products = {}
    for (i, j) in pairs:
        for (k, l) in pairs:
            if j == k:
                products[(f"e{i}{j}", f"e{k}{l}")] = {f"e{i}{l}": field.one()}
    return from_constants(sp, products)
