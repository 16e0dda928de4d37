"""Braidings on crossed modules and categorical algebras, and the
bar/kernel equivalence functors with their natural isomorphisms.

The BAs/BLie validators sweep the displayed axiom families; the
categorical validators evaluate every composition with the forced
formula k((x, y)) = x - e(t(x)) + y, exactly as the source proofs do.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .action import AssocAction, semidirect_assoc
from .algebra import Algebra, is_associative, is_lie, liefy
from .errors import CharTwo, InternalInvariantViolation, InvalidInput
from .icat import ASSOC, LIE, CatAlgebra, k_formula, require_valid_cat
from .linear import (
    BilMap,
    LinMap,
    Space,
    bilinear_from_rule,
    from_columns,
    identity_map,
    kernel,
    vadd,
    vneg,
    vsub,
)
from .report import ValidationReport, merge, sweep
from .xmod import (
    XModAssoc,
    XModLie,
    XModMorphism,
    identity_xmod_assoc,
    identity_xmod_lie,
    require_valid_xmod_assoc,
    require_valid_xmod_lie,
    validate_xmod_morphism,
    xmod_liefy,
)


@dataclass(frozen=True)
class XBraiding:
    """Crossed module plus a braiding (Peiffer lifting) N x N -> M."""

    base: Union[XModAssoc, XModLie]
    brace: BilMap

    def __post_init__(self):
        n, m = self.base.n.space, self.base.m.space
        if (self.brace.left, self.brace.right, self.brace.codomain) != (n, n, m):
            raise ValueError("brace must map N x N -> M")


@dataclass(frozen=True)
class CatBraiding:
    """Categorical algebra plus a braiding tau: C0 x C0 -> C1."""

    base: CatAlgebra
    tau: BilMap

    def __post_init__(self):
        c0, c1 = self.base.c0.space, self.base.c1.space
        if (self.tau.left, self.tau.right, self.tau.codomain) != (c0, c0, c1):
            raise ValueError("tau must map C0 x C0 -> C1")


def _commutator(a: Algebra) -> BilMap:
    return a.mult.sub(a.mult.swapped())


def validate_braiding_xmod_assoc(
    b: XBraiding, subject: str = "braiding"
) -> ValidationReport:
    """BAs1..BAs6 on basis pairs/triples."""
    x = b.base
    M, N = x.m, x.n
    F = M.field
    s1, s2, d, br = x.action.star1, x.action.star2, x.boundary, b.brace
    bn = N.space.basis_vector
    bm = M.space.basis_vector
    ncomm = _commutator(N)
    mcomm = _commutator(M)

    def lie_star(n, m):
        # [n, m]_* = n *1 m - m *2 n on vectors
        return vsub(F, s1.apply(n, m), s2.apply(m, n))

    checks = [
        sweep(
            "BAs1",
            (N.dim, N.dim),
            lambda n, n2: (d.apply(br.on_basis(n, n2)), ncomm.on_basis(n, n2)),
        ),
        sweep(
            "BAs2",
            (M.dim, M.dim),
            lambda m, m2: (
                br.apply(d.column(m), d.column(m2)),
                mcomm.on_basis(m, m2),
            ),
        ),
        sweep(
            "BAs3",
            (M.dim, N.dim),
            lambda m, n: (
                br.apply(d.column(m), bn(n)),
                vneg(F, lie_star(bn(n), bm(m))),
            ),
        ),
        sweep(
            "BAs4",
            (N.dim, M.dim),
            lambda n, m: (br.apply(bn(n), d.column(m)), lie_star(bn(n), bm(m))),
        ),
        sweep(
            "BAs5",
            (N.dim, N.dim, N.dim),
            lambda n, n2, n3: (
                br.apply(bn(n), N.mult.on_basis(n2, n3)),
                vadd(
                    F,
                    s1.apply(bn(n2), br.on_basis(n, n3)),
                    s2.apply(br.on_basis(n, n2), bn(n3)),
                ),
            ),
        ),
        sweep(
            "BAs6",
            (N.dim, N.dim, N.dim),
            lambda n, n2, n3: (
                br.apply(N.mult.on_basis(n, n2), bn(n3)),
                vadd(
                    F,
                    s1.apply(bn(n), br.on_basis(n2, n3)),
                    s2.apply(br.on_basis(n, n3), bn(n2)),
                ),
            ),
        ),
    ]
    return merge(subject, checks)


def validate_braiding_xmod_lie(
    b: XBraiding, subject: str = "braiding"
) -> ValidationReport:
    """BLie1..BLie6 on basis pairs/triples."""
    x = b.base
    M, N = x.m, x.n
    F = M.field
    dot, d, br = x.action.dot, x.boundary, b.brace
    bn = N.space.basis_vector
    bm = M.space.basis_vector

    checks = [
        sweep(
            "BLie1",
            (N.dim, N.dim),
            lambda n, n2: (d.apply(br.on_basis(n, n2)), N.mult.on_basis(n, n2)),
        ),
        sweep(
            "BLie2",
            (M.dim, M.dim),
            lambda m, m2: (
                br.apply(d.column(m), d.column(m2)),
                M.mult.on_basis(m, m2),
            ),
        ),
        sweep(
            "BLie3",
            (M.dim, N.dim),
            lambda m, n: (
                br.apply(d.column(m), bn(n)),
                vneg(F, dot.apply(bn(n), bm(m))),
            ),
        ),
        sweep(
            "BLie4",
            (N.dim, M.dim),
            lambda n, m: (br.apply(bn(n), d.column(m)), dot.on_basis(n, m)),
        ),
        sweep(
            "BLie5",
            (N.dim, N.dim, N.dim),
            lambda n, n2, n3: (
                br.apply(bn(n), N.mult.on_basis(n2, n3)),
                vsub(
                    F,
                    br.apply(N.mult.on_basis(n, n2), bn(n3)),
                    br.apply(N.mult.on_basis(n, n3), bn(n2)),
                ),
            ),
        ),
        sweep(
            "BLie6",
            (N.dim, N.dim, N.dim),
            lambda n, n2, n3: (
                br.apply(N.mult.on_basis(n, n2), bn(n3)),
                vsub(
                    F,
                    br.apply(bn(n), N.mult.on_basis(n2, n3)),
                    br.apply(bn(n2), N.mult.on_basis(n, n3)),
                ),
            ),
        ),
    ]
    return merge(subject, checks)


def _cat_parts(b: CatBraiding):
    c = b.base
    return c, c.c1, c.c0, b.tau


def validate_braiding_cat_assoc(
    b: CatBraiding, subject: str = "braiding"
) -> ValidationReport:
    """AsT1..AsT4; AsT2-4 evaluate compositions via the forced formula."""
    c, c1, c0, tau = _cat_parts(b)
    b0 = c0.space.basis_vector
    b1 = c1.space.basis_vector

    checks = [
        sweep(
            "AsT1",
            (c0.dim, c0.dim),
            lambda a, d: (c.s.apply(tau.on_basis(a, d)), c0.mult.on_basis(a, d)),
        ),
        sweep(
            "AsT1",
            (c0.dim, c0.dim),
            lambda a, d: (c.t.apply(tau.on_basis(a, d)), c0.mult.on_basis(d, a)),
        ),
        sweep(
            "AsT2",
            (c1.dim, c1.dim),
            lambda x, y: (
                k_formula(
                    c,
                    c1.mult.on_basis(x, y),
                    tau.apply(c.t.apply(b1(x)), c.t.apply(b1(y))),
                ),
                k_formula(
                    c,
                    tau.apply(c.s.apply(b1(x)), c.s.apply(b1(y))),
                    c1.mult.on_basis(y, x),
                ),
            ),
        ),
        sweep(
            "AsT3",
            (c0.dim, c0.dim, c0.dim),
            lambda a, d, g: (
                tau.apply(c0.mult.on_basis(a, d), b0(g)),
                k_formula(
                    c,
                    c1.product(c.e.column(a), tau.on_basis(d, g)),
                    c1.product(tau.on_basis(a, g), c.e.column(d)),
                ),
            ),
        ),
        sweep(
            "AsT4",
            (c0.dim, c0.dim, c0.dim),
            lambda a, d, g: (
                tau.apply(b0(a), c0.mult.on_basis(d, g)),
                k_formula(
                    c,
                    c1.product(tau.on_basis(a, d), c.e.column(g)),
                    c1.product(c.e.column(d), tau.on_basis(a, g)),
                ),
            ),
        ),
    ]
    return merge(subject, checks)


def _lie_t12(b: CatBraiding):
    c, c1, c0, tau = _cat_parts(b)
    b1 = c1.space.basis_vector
    return [
        sweep(
            "LieT1",
            (c0.dim, c0.dim),
            lambda a, d: (c.s.apply(tau.on_basis(a, d)), c0.mult.on_basis(a, d)),
        ),
        sweep(
            "LieT1",
            (c0.dim, c0.dim),
            lambda a, d: (c.t.apply(tau.on_basis(a, d)), c0.mult.on_basis(d, a)),
        ),
        sweep(
            "LieT2",
            (c1.dim, c1.dim),
            lambda x, y: (
                k_formula(
                    c,
                    c1.mult.on_basis(x, y),
                    tau.apply(c.t.apply(b1(x)), c.t.apply(b1(y))),
                ),
                k_formula(
                    c,
                    tau.apply(c.s.apply(b1(x)), c.s.apply(b1(y))),
                    c1.mult.on_basis(y, x),
                ),
            ),
        ),
    ]


def validate_braiding_cat_lie_ulualan(
    b: CatBraiding, subject: str = "braiding"
) -> ValidationReport:
    """LieT1, LieT2 plus the bracket-coherence axioms LieB3, LieB4."""
    c, c1, c0, tau = _cat_parts(b)
    F = c1.field
    b0 = c0.space.basis_vector

    checks = _lie_t12(b) + [
        sweep(
            "LieB3",
            (c0.dim, c0.dim, c0.dim),
            lambda a, d, g: (
                tau.apply(c0.mult.on_basis(a, d), b0(g)),
                vadd(
                    F,
                    c1.product(tau.on_basis(a, g), c.e.column(d)),
                    c1.product(c.e.column(a), tau.on_basis(d, g)),
                ),
            ),
        ),
        sweep(
            "LieB4",
            (c0.dim, c0.dim, c0.dim),
            lambda a, d, g: (
                tau.apply(b0(a), c0.mult.on_basis(d, g)),
                vadd(
                    F,
                    c1.product(c.e.column(d), tau.on_basis(a, g)),
                    c1.product(tau.on_basis(a, d), c.e.column(g)),
                ),
            ),
        ),
    ]
    return merge(subject, checks)


def validate_braiding_cat_lie_alt(
    b: CatBraiding, subject: str = "braiding"
) -> ValidationReport:
    """LieT1, LieT2 plus the tau-only coherence axioms LieT3, LieT4."""
    c, c1, c0, tau = _cat_parts(b)
    F = c1.field
    b0 = c0.space.basis_vector

    checks = _lie_t12(b) + [
        sweep(
            "LieT3",
            (c0.dim, c0.dim, c0.dim),
            lambda a, d, g: (
                tau.apply(c0.mult.on_basis(a, d), b0(g)),
                vsub(
                    F,
                    tau.apply(b0(a), c0.mult.on_basis(d, g)),
                    tau.apply(b0(d), c0.mult.on_basis(a, g)),
                ),
            ),
        ),
        sweep(
            "LieT4",
            (c0.dim, c0.dim, c0.dim),
            lambda a, d, g: (
                tau.apply(b0(a), c0.mult.on_basis(d, g)),
                vsub(
                    F,
                    tau.apply(c0.mult.on_basis(a, d), b0(g)),
                    tau.apply(c0.mult.on_basis(a, g), b0(d)),
                ),
            ),
        ),
    ]
    return merge(subject, checks)


def check_anticoherence(b: CatBraiding, subject: str = "braiding") -> ValidationReport:
    """tau_{a,[b,c]} = [e(a), tau_{b,c}], the mirror identity, and their
    antisymmetry consequence; only meaningful away from characteristic 2."""
    c, c1, c0, tau = _cat_parts(b)
    if c1.field.characteristic == 2:
        raise CharTwo("anticoherence requires characteristic != 2")
    F = c1.field
    b0 = c0.space.basis_vector

    checks = [
        sweep(
            "AC1",
            (c0.dim, c0.dim, c0.dim),
            lambda a, d, g: (
                tau.apply(b0(a), c0.mult.on_basis(d, g)),
                c1.product(c.e.column(a), tau.on_basis(d, g)),
            ),
        ),
        sweep(
            "AC2",
            (c0.dim, c0.dim, c0.dim),
            lambda a, d, g: (
                tau.apply(c0.mult.on_basis(d, g), b0(a)),
                c1.product(tau.on_basis(d, g), c.e.column(a)),
            ),
        ),
        sweep(
            "AC3",
            (c0.dim, c0.dim, c0.dim),
            lambda a, d, g: (
                tau.apply(b0(a), c0.mult.on_basis(d, g)),
                vneg(F, tau.apply(c0.mult.on_basis(d, g), b0(a))),
            ),
        ),
    ]
    return merge(subject, checks)


# ---------------------------------------------------------------------------
# the bar construction C_X and the kernel construction X_C


def cx_functor(b: XBraiding) -> CatBraiding:
    """Bar construction: (M x| N, N, s, t, e) with tau_{n,n'} = (-{n,n'}, nn')."""
    if not isinstance(b.base, XModAssoc):
        raise InvalidInput("cx_functor takes a braided associative crossed module")
    require_valid_xmod_assoc(b.base)
    rep = validate_braiding_xmod_assoc(b)
    if not rep.ok:
        raise InvalidInput("braiding axioms fail", rep)
    x = b.base
    N = x.n
    sd = semidirect_assoc(x.action)
    s_bar = sd.proj_actor
    t_bar = sd.proj_actor.add(x.boundary.after(sd.proj_module))
    e_bar = sd.incl_actor
    cat = CatAlgebra(sd.algebra, N, s_bar, t_bar, e_bar, ASSOC)
    F = N.field

    def rule(i, j):
        return vadd(
            F,
            sd.incl_module.apply(vneg(F, b.brace.on_basis(i, j))),
            sd.incl_actor.apply(N.mult.on_basis(i, j)),
        )

    tau = bilinear_from_rule(N.space, N.space, sd.algebra.space, rule)
    out = CatBraiding(cat, tau)
    rep = validate_braiding_cat_assoc(out)
    if not rep.ok:
        raise InternalInvariantViolation(
            f"bar construction failed to validate: {rep.failing_tags()}"
        )
    return out


def kernel_part(c: CatAlgebra):
    """ker(s) packaged as a space: (subspace, kernel space, inclusion)."""
    ks = kernel(c.s)
    kspace = Space(c.c1.field, tuple(f"k{i}" for i in range(ks.dim)))
    incl = from_columns(kspace, c.c1.space, list(ks.basis))
    return ks, kspace, incl


def xc_functor(b: CatBraiding) -> XBraiding:
    """Kernel construction: (ker(s), C0, (e*, *e), t|ker) with
    {a, b} = e(ab) - tau_{a,b}."""
    c, c1, c0, tau = _cat_parts(b)
    if c.flavor != ASSOC:
        raise InvalidInput("xc_functor takes a braided associative categorical algebra")
    require_valid_cat(c)
    rep = validate_braiding_cat_assoc(b)
    if not rep.ok:
        raise InvalidInput("categorical braiding axioms fail", rep)
    F = c1.field
    ks, kspace, incl = kernel_part(c)

    def kcoords(v):
        coords = ks.coords(v)
        if coords is None:
            raise InternalInvariantViolation("value escaped ker(s)")
        return coords

    kalg = Algebra(
        kspace,
        bilinear_from_rule(
            kspace,
            kspace,
            kspace,
            lambda i, j: kcoords(c1.product(ks.basis[i], ks.basis[j])),
        ),
    )
    star1 = bilinear_from_rule(
        c0.space,
        kspace,
        kspace,
        lambda a, i: kcoords(c1.product(c.e.column(a), ks.basis[i])),
    )
    star2 = bilinear_from_rule(
        kspace,
        c0.space,
        kspace,
        lambda i, a: kcoords(c1.product(ks.basis[i], c.e.column(a))),
    )
    boundary = c.t.after(incl)
    action = AssocAction(c0, kalg, star1, star2)
    base = XModAssoc(action, boundary)

    def brace_rule(a, d):
        v = vsub(F, c.e.apply(c0.mult.on_basis(a, d)), tau.on_basis(a, d))
        return kcoords(v)

    brace = bilinear_from_rule(c0.space, c0.space, kspace, brace_rule)
    out = XBraiding(base, brace)
    require_valid_xmod_assoc(base)
    rep = validate_braiding_xmod_assoc(out)
    if not rep.ok:
        raise InternalInvariantViolation(
            f"kernel construction failed to validate: {rep.failing_tags()}"
        )
    return out


# ---------------------------------------------------------------------------
# morphism-level validation


def validate_braided_xmod_morphism(
    phi: XModMorphism,
    source: XBraiding,
    target: XBraiding,
    subject: str = "morphism",
) -> ValidationReport:
    """Crossed-module morphism conditions plus f1({n,n'}) = {f2 n, f2 n'}'."""
    rep = validate_xmod_morphism(phi, source.base, target.base, subject)
    sn = source.base.n
    brh = sweep(
        "BrH",
        (sn.dim, sn.dim),
        lambda n, n2: (
            phi.f1.apply(source.brace.on_basis(n, n2)),
            target.brace.apply(phi.f2.column(n), phi.f2.column(n2)),
        ),
    )
    return merge(subject, rep, [brh])


def validate_braided_internal_functor(
    f1: LinMap,
    f0: LinMap,
    source: CatBraiding,
    target: CatBraiding,
    subject: str = "functor",
) -> ValidationReport:
    """(F1, F0) is an internal functor preserving the braiding.

    IFH: F1, F0 algebra homomorphisms.  IFC: commutation with s, t, e.
    IFB: F1(tau_{a,b}) = tau'_{F0 a, F0 b}.
    """
    sc, tc = source.base, target.base

    def hom_entry(f, a, b):
        return sweep(
            "IFH",
            (a.dim, a.dim),
            lambda i, j: (
                f.apply(a.mult.on_basis(i, j)),
                b.product(f.column(i), f.column(j)),
            ),
        )

    entries = [hom_entry(f1, sc.c1, tc.c1), hom_entry(f0, sc.c0, tc.c0)]
    for left, right in (
        (tc.s.after(f1), f0.after(sc.s)),
        (tc.t.after(f1), f0.after(sc.t)),
        (f1.after(sc.e), tc.e.after(f0)),
    ):
        entries.append(
            sweep(
                "IFC",
                (left.domain.dim,),
                lambda i, L=left, R=right: (L.column(i), R.column(i)),
            )
        )
    entries.append(
        sweep(
            "IFB",
            (sc.c0.dim, sc.c0.dim),
            lambda a, d: (
                f1.apply(source.tau.on_basis(a, d)),
                target.tau.apply(f0.column(a), f0.column(d)),
            ),
        )
    )
    return merge(subject, entries)


def alpha_iso(b: XBraiding) -> XModMorphism:
    """alpha: b -> xc(cx(b)), with alpha_M(m) = (m, 0) in kernel coordinates."""
    cx = cx_functor(b)
    ks, kspace, _ = kernel_part(cx.base)
    x = b.base
    sd_incl_m = cx.base.c1.space  # M x| N space; M block comes first
    m_dim = x.m.dim
    cols = []
    for i in range(m_dim):
        v = list(sd_incl_m.zero())
        v[i] = x.m.field.one()
        coords = ks.coords(tuple(v))
        if coords is None:
            raise InternalInvariantViolation("(m, 0) escaped ker(s) in bar construction")
        cols.append(coords)
    f1 = from_columns(x.m.space, kspace, cols)
    phi = XModMorphism(f1, identity_map(x.n.space))
    target = xc_functor(cx)
    rep = validate_braided_xmod_morphism(phi, b, target)
    if not rep.ok or f1.rank() != m_dim or kspace.dim != m_dim:
        raise InternalInvariantViolation(
            f"alpha failed to validate as a braided isomorphism: {rep.failing_tags()}"
        )
    return phi


def beta_iso(b: CatBraiding):
    """beta: b -> cx(xc(b)), beta_C1(x) = (x - e(s(x)), s(x)).

    Returns the internal functor pair (F1, F0).
    """
    c, c1, c0, tau = _cat_parts(b)
    F = c1.field
    ks, kspace, _ = kernel_part(c)
    target = cx_functor(xc_functor(b))
    cols = []
    for i in range(c1.dim):
        x = c1.space.basis_vector(i)
        kpart = vsub(F, x, c.e.apply(c.s.apply(x)))
        coords = ks.coords(kpart)
        if coords is None:
            raise InternalInvariantViolation("x - e(s(x)) escaped ker(s)")
        cols.append(tuple(coords) + tuple(c.s.apply(x)))
    f1 = from_columns(c1.space, target.base.c1.space, cols)
    f0 = identity_map(c0.space)
    rep = validate_braided_internal_functor(f1, f0, b, target)
    if not rep.ok or f1.rank() != c1.dim or target.base.c1.dim != c1.dim:
        raise InternalInvariantViolation(
            f"beta failed to validate as a braided isomorphism: {rep.failing_tags()}"
        )
    return f1, f0


# ---------------------------------------------------------------------------
# Lie-fication transports


def cat_braiding_liefy(b: CatBraiding) -> CatBraiding:
    """tau^Lie_{a,b} = tau_{a,b} - tau_{b,a} on the Lie-fied base."""
    from .icat import cat_liefy

    if b.base.c1.field.characteristic == 2:
        raise CharTwo("braiding Lie-fication requires characteristic != 2")
    rep = validate_braiding_cat_assoc(b)
    if not rep.ok:
        raise InvalidInput("input braiding axioms fail", rep)
    base = cat_liefy(b.base)
    out = CatBraiding(base, b.tau.sub(b.tau.swapped()))
    rep = validate_braiding_cat_lie_ulualan(out)
    if not rep.ok:
        raise InternalInvariantViolation(
            f"Lie-fied categorical braiding failed: {rep.failing_tags()}"
        )
    return out


def xmod_braiding_liefy(b: XBraiding) -> XBraiding:
    """{n, n'}_L = ({n, n'} - {n', n}) / 2 on the Lie-fied crossed module."""
    if not isinstance(b.base, XModAssoc):
        raise InvalidInput("xmod_braiding_liefy takes an associative braided xmod")
    F = b.base.m.field
    if F.characteristic == 2:
        raise CharTwo("braiding Lie-fication requires characteristic != 2")
    rep = validate_braiding_xmod_assoc(b)
    if not rep.ok:
        raise InvalidInput("input braiding axioms fail", rep)
    base = xmod_liefy(b.base)
    half = F.inv(F.of(2))
    brace = b.brace.sub(b.brace.swapped()).scale(half)
    out = XBraiding(base, brace)
    rep = validate_braiding_xmod_lie(out)
    if not rep.ok:
        raise InternalInvariantViolation(
            f"Lie-fied braiding failed: {rep.failing_tags()}"
        )
    return out


def commutator_braiding(a: Algebra) -> XBraiding:
    """The commutator as a braiding on the identity crossed module."""
    return XBraiding(identity_xmod_assoc(a), _commutator(a))


def bracket_braiding(a: Algebra) -> XBraiding:
    """The Lie bracket as a braiding on the identity crossed module."""
    return XBraiding(identity_xmod_lie(a), a.mult)
