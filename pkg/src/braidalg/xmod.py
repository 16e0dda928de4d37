"""Crossed modules of associative and Lie algebras.

Validators emit one report entry per displayed equality; XAs1/XAs2 each
cover two equalities, so those tags appear twice in a report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .action import (
    AssocAction,
    LieAction,
    adjoint_action,
    induced_lie_action,
    self_action,
    validate_assoc_action,
    validate_lie_action,
)
from .algebra import Algebra, is_associative, is_homomorphism, is_lie, liefy
from .errors import InvalidXMod, NotAssociative, NotLie
from .linear import LinMap, identity_map
from .report import ValidationReport, merge, sweep


@dataclass(frozen=True)
class XModAssoc:
    """(M, N, * = (*1, *2), boundary) with boundary: M -> N."""

    action: AssocAction
    boundary: LinMap

    def __post_init__(self):
        if self.boundary.domain != self.m.space or self.boundary.codomain != self.n.space:
            raise ValueError("boundary must map M -> N")

    @property
    def m(self) -> Algebra:
        return self.action.module

    @property
    def n(self) -> Algebra:
        return self.action.actor


@dataclass(frozen=True)
class XModLie:
    """(M, N, dot, boundary) with boundary: M -> N."""

    action: LieAction
    boundary: LinMap

    def __post_init__(self):
        if self.boundary.domain != self.m.space or self.boundary.codomain != self.n.space:
            raise ValueError("boundary must map M -> N")

    @property
    def m(self) -> Algebra:
        return self.action.module

    @property
    def n(self) -> Algebra:
        return self.action.actor


XMod = Union[XModAssoc, XModLie]


@dataclass(frozen=True)
class XModMorphism:
    f1: LinMap  # M -> M'
    f2: LinMap  # N -> N'


def validate_xmod_assoc(x: XModAssoc, subject: str = "xmod") -> ValidationReport:
    """XAs1 (both equalities) and XAs2 (both equalities) on basis pairs."""
    M, N = x.m, x.n
    s1, s2 = x.action.star1, x.action.star2
    d = x.boundary
    bn = N.space.basis_vector
    bm = M.space.basis_vector

    checks = [
        sweep(
            "XAs1",
            (N.dim, M.dim),
            lambda n, m: (d.apply(s1.on_basis(n, m)), N.product(bn(n), d.column(m))),
        ),
        sweep(
            "XAs1",
            (M.dim, N.dim),
            lambda m, n: (d.apply(s2.on_basis(m, n)), N.product(d.column(m), bn(n))),
        ),
        sweep(
            "XAs2",
            (M.dim, M.dim),
            lambda m, m2: (s1.apply(d.column(m), bm(m2)), M.mult.on_basis(m, m2)),
        ),
        sweep(
            "XAs2",
            (M.dim, M.dim),
            lambda m, m2: (s2.apply(bm(m), d.column(m2)), M.mult.on_basis(m, m2)),
        ),
    ]
    return merge(subject, checks)


def validate_xmod_lie(x: XModLie, subject: str = "xmod") -> ValidationReport:
    """XLie1 and XLie2 on basis pairs."""
    M, N = x.m, x.n
    dot = x.action.dot
    d = x.boundary
    F = M.field
    bn = N.space.basis_vector
    bm = M.space.basis_vector

    checks = [
        sweep(
            "XLie1",
            (N.dim, M.dim),
            lambda n, m: (d.apply(dot.on_basis(n, m)), N.product(bn(n), d.column(m))),
        ),
        sweep(
            "XLie2",
            (M.dim, M.dim),
            lambda m, m2: (dot.apply(d.column(m), bm(m2)), M.mult.on_basis(m, m2)),
        ),
    ]
    return merge(subject, checks)


def require_valid_xmod_assoc(x: XModAssoc):
    """Structural preconditions plus XAs axioms; raises InvalidXMod."""
    if not is_associative(x.m) or not is_associative(x.n):
        raise InvalidXMod("crossed module algebras must be associative")
    if not is_homomorphism(x.boundary, x.m, x.n):
        raise InvalidXMod("boundary is not an algebra homomorphism")
    rep = validate_assoc_action(x.action)
    if not rep.ok:
        raise InvalidXMod("invalid associative action", rep)
    rep = validate_xmod_assoc(x)
    if not rep.ok:
        raise InvalidXMod("crossed module axioms fail", rep)


def require_valid_xmod_lie(x: XModLie):
    if not is_lie(x.m) or not is_lie(x.n):
        raise InvalidXMod("crossed module algebras must be Lie")
    if not is_homomorphism(x.boundary, x.m, x.n):
        raise InvalidXMod("boundary is not an algebra homomorphism")
    rep = validate_lie_action(x.action)
    if not rep.ok:
        raise InvalidXMod("invalid Lie action", rep)
    rep = validate_xmod_lie(x)
    if not rep.ok:
        raise InvalidXMod("crossed module axioms fail", rep)


def xmod_liefy(x: XModAssoc) -> XModLie:
    """(M^L, N^L, [-,-]_*, same boundary)."""
    require_valid_xmod_assoc(x)
    return XModLie(induced_lie_action(x.action), x.boundary)


def identity_xmod_assoc(a: Algebra) -> XModAssoc:
    """(M, M, (*, *), Id_M)."""
    if not is_associative(a):
        raise NotAssociative("identity crossed module needs an associative algebra")
    return XModAssoc(self_action(a), identity_map(a.space))


def identity_xmod_lie(a: Algebra) -> XModLie:
    """(M, M, [-,-], Id_M)."""
    if not is_lie(a):
        raise NotLie("identity crossed module needs a Lie algebra")
    return XModLie(adjoint_action(a), identity_map(a.space))


def validate_xmod_morphism(
    phi: XModMorphism,
    source: XMod,
    target: XMod,
    subject: str = "morphism",
) -> ValidationReport:
    """Equivariance and boundary-square conditions for (f1, f2).

    Works for both flavors; accepts raw maps so the natural-isomorphism
    checks can use it as an oracle. Tags: XAssH1/XAssH2 or XLieH1/XLieH2,
    preceded by Hom entries for f1 and f2 being algebra homomorphisms.
    """
    assoc = isinstance(source, XModAssoc)
    if assoc != isinstance(target, XModAssoc):
        raise ValueError("source and target flavors differ")
    f1, f2 = phi.f1, phi.f2
    sm, sn, tm, tn = source.m, source.n, target.m, target.n

    def hom_check(tag, f, a, b):
        return sweep(
            tag,
            (a.dim, a.dim),
            lambda i, j: (
                f.apply(a.mult.on_basis(i, j)),
                b.product(f.column(i), f.column(j)),
            ),
        )

    entries = [hom_check("Hom", f1, sm, tm), hom_check("Hom", f2, sn, tn)]
    if assoc:
        entries.append(
            sweep(
                "XAssH1",
                (sn.dim, sm.dim),
                lambda n, m: (
                    f1.apply(source.action.star1.on_basis(n, m)),
                    target.action.star1.apply(f2.column(n), f1.column(m)),
                ),
            )
        )
        entries.append(
            sweep(
                "XAssH1",
                (sm.dim, sn.dim),
                lambda m, n: (
                    f1.apply(source.action.star2.on_basis(m, n)),
                    target.action.star2.apply(f1.column(m), f2.column(n)),
                ),
            )
        )
        entries.append(
            sweep(
                "XAssH2",
                (sm.dim,),
                lambda m: (
                    target.boundary.apply(f1.column(m)),
                    f2.apply(source.boundary.column(m)),
                ),
            )
        )
    else:
        entries.append(
            sweep(
                "XLieH1",
                (sn.dim, sm.dim),
                lambda n, m: (
                    f1.apply(source.action.dot.on_basis(n, m)),
                    target.action.dot.apply(f2.column(n), f1.column(m)),
                ),
            )
        )
        entries.append(
            sweep(
                "XLieH2",
                (sm.dim,),
                lambda m: (
                    target.boundary.apply(f1.column(m)),
                    f2.apply(source.boundary.column(m)),
                ),
            )
        )
    return merge(subject, entries)
