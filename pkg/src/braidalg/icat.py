"""Internal categories in associative/Lie algebras.

The composition is never stored: for these ambient categories it is
forced to k((x, y)) = x - e(t(x)) + y, so we derive it everywhere and
treat the lemma itself as a tested property.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, is_associative, is_homomorphism, is_lie, liefy
from .errors import (
    InternalInvariantViolation,
    InvalidCatAlgebra,
    NotComposable,
)
from .linear import (
    LinMap,
    Space,
    from_columns,
    identity_map,
    kernel,
    pullback_space,
    vadd,
    vsub,
)
from .report import AxiomCheck, ValidationReport, Witness, merge, sweep

ASSOC = "assoc"
LIE = "lie"


@dataclass(frozen=True)
class CatAlgebra:
    c1: Algebra
    c0: Algebra
    s: LinMap  # C1 -> C0
    t: LinMap  # C1 -> C0
    e: LinMap  # C0 -> C1
    flavor: str

    def __post_init__(self):
        if self.flavor not in (ASSOC, LIE):
            raise ValueError(f"flavor must be assoc or lie, got {self.flavor!r}")
        for f, dom, cod in ((self.s, self.c1, self.c0), (self.t, self.c1, self.c0), (self.e, self.c0, self.c1)):
            if f.domain != dom.space or f.codomain != cod.space:
                raise ValueError("structural map does not match C1/C0")


def discrete_cat(a: Algebra, flavor: str) -> CatAlgebra:
    i = identity_map(a.space)
    return CatAlgebra(a, a, i, i, i, flavor)


def k_formula(c: CatAlgebra, x, y):
    """x - e(t(x)) + y, with no composability check (validator use only)."""
    F = c.c1.field
    return vadd(F, vsub(F, x, c.e.apply(c.t.apply(x))), y)


def compose(c: CatAlgebra, x, y):
    """Composition of x then y; requires t(x) = s(y) exactly."""
    if c.t.apply(x) != c.s.apply(y):
        raise NotComposable("t(x) != s(y)")
    return k_formula(c, x, y)


def invert_morphism(c: CatAlgebra, f):
    """Internal inverse e(s(f)) - f + e(t(f)); postconditions asserted."""
    F = c.c1.field
    g = vadd(F, vsub(F, c.e.apply(c.s.apply(f)), f), c.e.apply(c.t.apply(f)))
    if compose(c, f, g) != c.e.apply(c.s.apply(f)) or compose(c, g, f) != c.e.apply(
        c.t.apply(f)
    ):
        raise InternalInvariantViolation(
            "internal inverse postconditions failed; CatAlgebra is not valid"
        )
    return g


def composable_pair_basis(c: CatAlgebra):
    """Basis of the pullback C1 x_C0 C1, as (x, y) vector pairs."""
    n = c.c1.dim
    pb = pullback_space(c.t, c.s)
    return [(v[:n], v[n:]) for v in pb.basis]


def composable_triple_basis(c: CatAlgebra):
    """Basis of {(x,y,z) : t(x)=s(y), t(y)=s(z)} as vector triples."""
    n, m = c.c1.dim, c.c0.dim
    labels = tuple(f"p{i}_{lbl}" for i in (1, 2, 3) for lbl in c.c1.space.labels)
    triple = Space(c.c1.field, labels)
    out = Space(c.c1.field, tuple(f"q{i}_{lbl}" for i in (1, 2) for lbl in c.c0.space.labels))
    F = c.c1.field
    cols = []
    for j in range(3 * n):
        block, idx = divmod(j, n)
        bv = c.c1.space.basis_vector(idx)
        tv, sv = c.t.apply(bv), c.s.apply(bv)
        z = c.c0.space.zero()
        if block == 0:
            col = tuple(tv) + tuple(z)
        elif block == 1:
            col = tuple(vsub(F, z, sv)) + tuple(tv)
        else:
            col = tuple(z) + tuple(vsub(F, z, sv))
        cols.append(col)
    diff = from_columns(triple, out, cols)
    return [(v[:n], v[n : 2 * n], v[2 * n :]) for v in kernel(diff).basis]


def validate_cat_algebra(c: CatAlgebra, subject: str = "cat") -> ValidationReport:
    """Structural checks Cat1..Cat4 with witnesses.

    Cat1: s, t, e are algebra homomorphisms.  Cat2: s.e = id, t.e = id.
    Cat3: the forced composition is an algebra homomorphism on the
    pullback.  Cat4: identity and associativity laws of composition.
    """
    entries = []

    def hom_entry(f, a, b):
        return sweep(
            "Cat1",
            (a.dim, a.dim),
            lambda i, j: (
                f.apply(a.mult.on_basis(i, j)),
                b.product(f.column(i), f.column(j)),
            ),
        )

    entries.append(hom_entry(c.s, c.c1, c.c0))
    entries.append(hom_entry(c.t, c.c1, c.c0))
    entries.append(hom_entry(c.e, c.c0, c.c1))
    ident = identity_map(c.c0.space)
    entries.append(
        sweep("Cat2", (c.c0.dim,), lambda i: (c.s.after(c.e).column(i), ident.column(i)))
    )
    entries.append(
        sweep("Cat2", (c.c0.dim,), lambda i: (c.t.after(c.e).column(i), ident.column(i)))
    )

    pairs = composable_pair_basis(c)
    kvals = [k_formula(c, x, y) for x, y in pairs]
    left_x = [c.c1.mult.left_mul_matrix(x) for x, _ in pairs]
    left_y = [c.c1.mult.left_mul_matrix(y) for _, y in pairs]
    left_k = [c.c1.mult.left_mul_matrix(kv) for kv in kvals]

    def k_hom(i, j):
        prod_k = k_formula(c, left_x[i].apply(pairs[j][0]), left_y[i].apply(pairs[j][1]))
        return prod_k, left_k[i].apply(kvals[j])

    entries.append(sweep("Cat3", (len(pairs), len(pairs)), k_hom))

    bv = c.c1.space.basis_vector
    entries.append(
        sweep(
            "Cat4",
            (c.c1.dim,),
            lambda i: (k_formula(c, bv(i), c.e.apply(c.t.apply(bv(i)))), bv(i)),
        )
    )
    entries.append(
        sweep(
            "Cat4",
            (c.c1.dim,),
            lambda i: (k_formula(c, c.e.apply(c.s.apply(bv(i))), bv(i)), bv(i)),
        )
    )
    triples = composable_triple_basis(c)
    entries.append(
        sweep(
            "Cat4",
            (len(triples),),
            lambda i: (
                k_formula(c, k_formula(c, triples[i][0], triples[i][1]), triples[i][2]),
                k_formula(c, triples[i][0], k_formula(c, triples[i][1], triples[i][2])),
            ),
        )
    )
    return merge(subject, entries)


def kernel_product_check(c: CatAlgebra) -> bool:
    """ker(s) * ker(t) = 0; equivalent to Cat3, kept as a cross-check."""
    ks = kernel(c.s).basis
    kt = kernel(c.t).basis
    for u in ks:
        for v in kt:
            if any(a != 0 for a in c.c1.product(u, v)):
                return False
    return True


def require_valid_cat(c: CatAlgebra):
    flavor_ok = is_associative if c.flavor == ASSOC else is_lie
    if not flavor_ok(c.c1) or not flavor_ok(c.c0):
        raise InvalidCatAlgebra(f"C1 and C0 must be {c.flavor} algebras")
    rep = validate_cat_algebra(c)
    if not rep.ok:
        raise InvalidCatAlgebra("categorical algebra axioms fail", rep)


def cat_liefy(c: CatAlgebra) -> CatAlgebra:
    """(C1^L, C0^L, s, t, e), a categorical Lie algebra."""
    if c.flavor != ASSOC:
        raise InvalidCatAlgebra("cat_liefy requires an associative categorical algebra")
    require_valid_cat(c)
    return CatAlgebra(liefy(c.c1), liefy(c.c0), c.s, c.t, c.e, LIE)
