"""Non-abelian tensor square of a Lie algebra under its adjoint action.

T = (M (x) M) / R, where R is spanned by the two relation families

    [m1,m2](x)m3 = m1(x)[m2,m3] - m2(x)[m1,m3]
    m1(x)[m2,m3] = [m3,m1](x)m2 - [m2,m1](x)m3

over all basis triples.  The bracket [u(x)v, w(x)x] = [u,v](x)[w,x]
descends to T; that descent is asserted, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, is_lie
from .braid import XBraiding, validate_braiding_xmod_lie
from .errors import (
    BracketNotWellDefined,
    IllDefinedOnQuotient,
    NotLie,
)
from .linear import (
    BilMap,
    LinMap,
    Space,
    Subspace,
    bilinear_from_rule,
    from_columns,
    vadd,
    vsub,
)
from .report import ValidationReport, merge, sweep
from .xmod import XModLie
from .action import LieAction


@dataclass(frozen=True)
class TensorSquare:
    base: Algebra  # Lie algebra M
    carrier: Algebra  # the quotient T
    pure: BilMap  # M x M -> T, (m, m') -> class of m (x) m'
    relations: Subspace  # relation span inside the plain tensor space


def _plain_tensor_space(m: Space) -> Space:
    labels = tuple(f"{a}_{b}" for a in m.labels for b in m.labels)
    return Space(m.field, labels)


def _outer(field, u, v):
    return tuple(field.mul(a, b) for a in u for b in v)


def tensor_square(m: Algebra) -> TensorSquare:
    """Quotient of M (x) M by both relation families, with the induced bracket."""
    if not is_lie(m):
        raise NotLie("tensor_square requires a Lie algebra")
    F = m.field
    amb = _plain_tensor_space(m.space)
    n = m.dim
    bv = m.space.basis_vector

    rels = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                bij, bjk = m.mult.on_basis(i, j), m.mult.on_basis(j, k)
                bik, bki = m.mult.on_basis(i, k), m.mult.on_basis(k, i)
                bji = m.mult.on_basis(j, i)
                rels.append(
                    vadd(
                        F,
                        vsub(F, _outer(F, bij, bv(k)), _outer(F, bv(i), bjk)),
                        _outer(F, bv(j), bik),
                    )
                )
                rels.append(
                    vadd(
                        F,
                        vsub(F, _outer(F, bv(i), bjk), _outer(F, bki, bv(j))),
                        _outer(F, bji, bv(k)),
                    )
                )
    relations = Subspace.span(amb, rels)

    from .linear import quotient

    tspace, proj = quotient(amb, relations)

    # bracket on the ambient space: e_(i,j) x e_(k,l) -> [bi,bj] (x) [bk,bl]
    def amb_rule(p, q):
        i, j = divmod(p, n)
        k, l = divmod(q, n)
        return _outer(F, m.mult.on_basis(i, j), m.mult.on_basis(k, l))

    amb_bracket = bilinear_from_rule(amb, amb, amb, amb_rule)
    for r in relations.basis:
        for j in range(amb.dim):
            if not relations.contains(amb_bracket.apply(r, amb.basis_vector(j))):
                raise BracketNotWellDefined(
                    "bracket does not respect the relation span (left argument)"
                )
            if not relations.contains(amb_bracket.apply(amb.basis_vector(j), r)):
                raise BracketNotWellDefined(
                    "bracket does not respect the relation span (right argument)"
                )

    # section of proj: quotient basis r lifts to the free ambient coordinate
    free = [j for j in range(amb.dim) if j not in set(relations.pivots())]
    lift = from_columns(
        tspace, amb, [amb.basis_vector(c) for c in free]
    )

    t_bracket = bilinear_from_rule(
        tspace,
        tspace,
        tspace,
        lambda i, j: proj.apply(amb_bracket.apply(lift.column(i), lift.column(j))),
    )
    carrier = Algebra(tspace, t_bracket)
    if not is_lie(carrier):
        raise NotLie("induced bracket on the tensor square is not Lie")

    pure = bilinear_from_rule(
        m.space,
        m.space,
        tspace,
        lambda i, j: proj.apply(_outer(F, bv(i), bv(j))),
    )
    return TensorSquare(m, carrier, pure, relations)


def tensor_xmod(ts: TensorSquare) -> XModLie:
    """(T, M, m.(m1 (x) m2) = [m,m1] (x) m2 + m1 (x) [m,m2], d(m1 (x) m2) = [m1,m2])."""
    m = ts.base
    F = m.field
    n = m.dim
    amb = ts.relations.ambient
    bv = m.space.basis_vector

    def amb_boundary_col(p):
        i, j = divmod(p, n)
        return m.mult.on_basis(i, j)

    amb_boundary = from_columns(amb, m.space, [amb_boundary_col(p) for p in range(amb.dim)])

    def amb_action_rule(a, p):
        i, j = divmod(p, n)
        return vadd(
            F,
            _outer(F, m.mult.on_basis(a, i), bv(j)),
            _outer(F, bv(i), m.mult.on_basis(a, j)),
        )

    amb_action = bilinear_from_rule(m.space, amb, amb, amb_action_rule)

    for r in ts.relations.basis:
        if any(c != 0 for c in amb_boundary.apply(r)):
            raise IllDefinedOnQuotient("boundary does not vanish on the relation span")
        for a in range(n):
            if not ts.relations.contains(amb_action.apply(bv(a), r)):
                raise IllDefinedOnQuotient("action does not preserve the relation span")

    from .linear import quotient

    tspace, proj = quotient(amb, ts.relations)
    free = [j for j in range(amb.dim) if j not in set(ts.relations.pivots())]
    lift = from_columns(tspace, amb, [amb.basis_vector(c) for c in free])

    boundary = amb_boundary.after(lift)
    dot = bilinear_from_rule(
        m.space,
        tspace,
        tspace,
        lambda a, i: proj.apply(amb_action.apply(bv(a), lift.column(i))),
    )
    return XModLie(LieAction(m, ts.carrier, dot), boundary)


def tensor_braiding(ts: TensorSquare) -> XBraiding:
    """{m1, m2} = m1 (x) m2 on the tensor crossed module."""
    return XBraiding(tensor_xmod(ts), ts.pure)


def antisymmetry_consequence(ts: TensorSquare, subject: str = "tensor") -> ValidationReport:
    """pi(m1 (x) [m2,m3]) + pi([m2,m3] (x) m1) = 0 on all basis triples (tag TAnti)."""
    m = ts.base
    F = m.field
    n = m.dim
    bv = m.space.basis_vector
    zero = ts.carrier.space.zero()
    check = sweep(
        "TAnti",
        (n, n, n),
        lambda i, j, k: (
            vadd(
                F,
                ts.pure.apply(bv(i), m.mult.on_basis(j, k)),
                ts.pure.apply(m.mult.on_basis(j, k), bv(i)),
            ),
            zero,
        ),
    )
    return merge(subject, [check])
