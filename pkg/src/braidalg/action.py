"""Associative actions (AAs1-6), Lie actions (ALie1-2), semidirect products."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, is_associative, is_lie, liefy
from .errors import InvalidAction
from .linear import (
    BilMap,
    LinMap,
    Space,
    bilinear_from_rule,
    from_columns,
    vadd,
    vsub,
    zero_bilmap,
    zero_map,
)
from .report import ValidationReport, merge, sweep


@dataclass(frozen=True)
class AssocAction:
    """Associative action of `actor` (N) on `module` (M): * = (*1, *2)."""

    actor: Algebra
    module: Algebra
    star1: BilMap  # N x M -> M
    star2: BilMap  # M x N -> M

    def __post_init__(self):
        n, m = self.actor.space, self.module.space
        if (self.star1.left, self.star1.right, self.star1.codomain) != (n, m, m):
            raise ValueError("star1 must map N x M -> M")
        if (self.star2.left, self.star2.right, self.star2.codomain) != (m, n, m):
            raise ValueError("star2 must map M x N -> M")


@dataclass(frozen=True)
class LieAction:
    """Lie left-action of `actor` (N) on `module` (M)."""

    actor: Algebra
    module: Algebra
    dot: BilMap  # N x M -> M

    def __post_init__(self):
        n, m = self.actor.space, self.module.space
        if (self.dot.left, self.dot.right, self.dot.codomain) != (n, m, m):
            raise ValueError("dot must map N x M -> M")


def self_action(a: Algebra) -> AssocAction:
    """The pair (*, *): an associative algebra acting on itself."""
    return AssocAction(a, a, a.mult, a.mult)


def adjoint_action(a: Algebra) -> LieAction:
    """Ad(x)(y) = [x, y]: a Lie algebra acting on itself."""
    return LieAction(a, a, a.mult)


def zero_action_assoc(actor: Algebra, module: Algebra) -> AssocAction:
    n, m = actor.space, module.space
    return AssocAction(actor, module, zero_bilmap(n, m, m), zero_bilmap(m, n, m))


def zero_action_lie(actor: Algebra, module: Algebra) -> LieAction:
    n, m = actor.space, module.space
    return LieAction(actor, module, zero_bilmap(n, m, m))


def validate_assoc_action(a: AssocAction, subject: str = "action") -> ValidationReport:
    """Axioms AAs1..AAs6 on basis triples, with witnesses."""
    N, M = a.actor, a.module
    s1, s2 = a.star1, a.star2
    bn = N.space.basis_vector
    bm = M.space.basis_vector

    checks = [
        sweep(
            "AAs1",
            (N.dim, M.dim, M.dim),
            lambda n, m, m2: (
                s1.apply(bn(n), M.mult.on_basis(m, m2)),
                M.product(s1.on_basis(n, m), bm(m2)),
            ),
        ),
        sweep(
            "AAs2",
            (N.dim, M.dim, N.dim),
            lambda n, m, n2: (
                s1.apply(bn(n), s2.on_basis(m, n2)),
                s2.apply(s1.on_basis(n, m), bn(n2)),
            ),
        ),
        sweep(
            "AAs3",
            (N.dim, N.dim, M.dim),
            lambda n, n2, m: (
                s1.apply(bn(n), s1.on_basis(n2, m)),
                s1.apply(N.mult.on_basis(n, n2), bm(m)),
            ),
        ),
        sweep(
            "AAs4",
            (M.dim, N.dim, N.dim),
            lambda m, n, n2: (
                s2.apply(bm(m), N.mult.on_basis(n, n2)),
                s2.apply(s2.on_basis(m, n), bn(n2)),
            ),
        ),
        sweep(
            "AAs5",
            (M.dim, N.dim, M.dim),
            lambda m, n, m2: (
                M.product(bm(m), s1.on_basis(n, m2)),
                M.product(s2.on_basis(m, n), bm(m2)),
            ),
        ),
        sweep(
            "AAs6",
            (M.dim, M.dim, N.dim),
            lambda m, m2, n: (
                M.product(bm(m), s2.on_basis(m2, n)),
                s2.apply(M.mult.on_basis(m, m2), bn(n)),
            ),
        ),
    ]
    return merge(subject, checks)


def validate_lie_action(a: LieAction, subject: str = "action") -> ValidationReport:
    """Axioms ALie1 and ALie2 on basis triples."""
    N, M = a.actor, a.module
    F = M.field
    dot = a.dot
    bn = N.space.basis_vector
    bm = M.space.basis_vector

    checks = [
        sweep(
            "ALie1",
            (N.dim, N.dim, M.dim),
            lambda n, n2, m: (
                dot.apply(N.mult.on_basis(n, n2), bm(m)),
                vsub(
                    F,
                    dot.apply(bn(n), dot.on_basis(n2, m)),
                    dot.apply(bn(n2), dot.on_basis(n, m)),
                ),
            ),
        ),
        sweep(
            "ALie2",
            (N.dim, M.dim, M.dim),
            lambda n, m, m2: (
                dot.apply(bn(n), M.mult.on_basis(m, m2)),
                vadd(
                    F,
                    M.product(dot.on_basis(n, m), bm(m2)),
                    M.product(bm(m), dot.on_basis(n, m2)),
                ),
            ),
        ),
    ]
    return merge(subject, checks)


def induced_lie_action(a: AssocAction) -> LieAction:
    """[n, m]_* = n *1 m - m *2 n, a Lie action of N^L on M^L."""
    rep = validate_assoc_action(a)
    if not rep.ok or not is_associative(a.actor) or not is_associative(a.module):
        raise InvalidAction("induced_lie_action requires a valid associative action", rep)
    dot = a.star1.sub(a.star2.swapped())
    return LieAction(liefy(a.actor), liefy(a.module), dot)


@dataclass(frozen=True)
class Semidirect:
    """Semidirect product algebra with its structural maps (M block first)."""

    algebra: Algebra
    incl_module: LinMap  # M -> M x| N
    incl_actor: LinMap  # N -> M x| N
    proj_module: LinMap  # linear projection onto the M block
    proj_actor: LinMap  # algebra homomorphism onto N


def _semidirect_space(m: Space, n: Space):
    from .linear import direct_sum

    return direct_sum(m, n, left_prefix="m_", right_prefix="n_")


def semidirect_assoc(a: AssocAction) -> Semidirect:
    """(m,n)(m',n') = (mm' + n *1 m' + m *2 n', nn')."""
    rep = validate_assoc_action(a)
    if not rep.ok or not is_associative(a.actor) or not is_associative(a.module):
        raise InvalidAction("semidirect product requires a valid action", rep)
    M, N = a.module, a.actor
    total, incl_m, incl_n, proj_m, proj_n = _semidirect_space(M.space, N.space)
    F = total.field

    def rule(i, j):
        u_m, u_n = proj_m.column(i), proj_n.column(i)
        v_m, v_n = proj_m.column(j), proj_n.column(j)
        m_part = vadd(
            F,
            vadd(F, M.product(u_m, v_m), a.star1.apply(u_n, v_m)),
            a.star2.apply(u_m, v_n),
        )
        n_part = N.product(u_n, v_n)
        return vadd(F, incl_m.apply(m_part), incl_n.apply(n_part))

    from .linear import bilinear_from_rule as _rule

    alg = Algebra(total, _rule(total, total, total, rule))
    return Semidirect(alg, incl_m, incl_n, proj_m, proj_n)


def semidirect_lie(a: LieAction) -> Algebra:
    """[(m,n),(m',n')] = ([m,m'] + n.m' - n'.m, [n,n'])."""
    rep = validate_lie_action(a)
    if not rep.ok or not is_lie(a.actor) or not is_lie(a.module):
        raise InvalidAction("semidirect product requires a valid Lie action", rep)
    M, N = a.module, a.actor
    total, incl_m, incl_n, proj_m, proj_n = _semidirect_space(M.space, N.space)
    F = total.field

    def rule(i, j):
        u_m, u_n = proj_m.column(i), proj_n.column(i)
        v_m, v_n = proj_m.column(j), proj_n.column(j)
        m_part = vsub(
            F,
            vadd(F, M.product(u_m, v_m), a.dot.apply(u_n, v_m)),
            a.dot.apply(v_n, u_m),
        )
        n_part = N.product(u_n, v_n)
        return vadd(F, incl_m.apply(m_part), incl_n.apply(n_part))

    return Algebra(total, bilinear_from_rule(total, total, total, rule))
