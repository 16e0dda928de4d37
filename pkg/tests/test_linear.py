from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from braidalg.fields import GF, QQ
from braidalg.linear import (
    BilMap,
    LinMap,
    Space,
    Subspace,
    bilinear_from_rule,
    direct_sum,
    from_columns,
    identity_map,
    in_subspace,
    is_zero,
    kernel,
    pullback_space,
    quotient,
    rref,
    vadd,
    vscale,
    zero_map,
)

scalars = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def vec(dim):
    return st.tuples(*([scalars] * dim))


def matrix(rows, cols):
    return st.tuples(*([vec(cols)] * rows))


def space(dim, stem="x"):
    return Space(QQ, tuple(f"{stem}{i}" for i in range(dim)))


V3 = space(3)
V4 = space(4, "y")


@given(matrix(4, 3))
@settings(max_examples=50)
def test_kernel_vectors_map_to_zero(rows):
    f = LinMap(V3, V4, rows)
    for v in kernel(f).basis:
        assert is_zero(f.apply(v))


@given(matrix(4, 3))
@settings(max_examples=50)
def test_rank_nullity(rows):
    f = LinMap(V3, V4, rows)
    rank = Subspace.span(V4, [f.column(j) for j in range(3)]).dim
    assert rank + kernel(f).dim == 3


@given(matrix(3, 3))
@settings(max_examples=50)
def test_rref_idempotent(rows):
    once = rref(QQ, list(rows))
    assert rref(QQ, once) == once


@given(matrix(4, 3), vec(3), vec(3), scalars, scalars)
@settings(max_examples=50)
def test_linmap_linearity(rows, u, v, a, b):
    f = LinMap(V3, V4, rows)
    combo = vadd(QQ, vscale(QQ, a, u), vscale(QQ, b, v))
    expect = vadd(QQ, vscale(QQ, a, f.apply(u)), vscale(QQ, b, f.apply(v)))
    assert f.apply(combo) == expect


@given(vec(3), vec(3), scalars)
@settings(max_examples=50)
def test_bilmap_bilinearity(u, v, c):
    b = bilinear_from_rule(
        V3, V3, V3, lambda i, j: V3.basis_vector((i + j) % 3)
    )
    left = b.apply(vscale(QQ, c, u), v)
    assert left == vscale(QQ, c, b.apply(u, v))
    assert b.apply(vadd(QQ, u, v), v) == vadd(QQ, b.apply(u, v), b.apply(v, v))


@given(matrix(2, 3))
@settings(max_examples=50)
def test_span_membership_and_coords(vectors):
    sub = Subspace.span(V3, list(vectors))
    for v in vectors:
        assert in_subspace(v, sub)
        coords = sub.coords(v)
        assert coords is not None
        rebuilt = V3.zero()
        for c, basis_vec in zip(coords, sub.basis):
            rebuilt = vadd(QQ, rebuilt, vscale(QQ, c, basis_vec))
        assert rebuilt == tuple(v)


@given(matrix(2, 3), vec(3))
@settings(max_examples=50)
def test_quotient_projection(vectors, v):
    sub = Subspace.span(V3, list(vectors))
    qspace, proj = quotient(V3, sub)
    assert qspace.dim == 3 - sub.dim
    # the projection kills exactly the subspace
    for basis_vec in sub.basis:
        assert is_zero(proj.apply(basis_vec))
    assert proj.apply(v) == proj.apply(sub.reduce(v))


def test_direct_sum_structure():
    total, ia, ib, pa, pb = direct_sum(V3, V4)
    assert total.dim == 7
    assert pa.after(ia) == identity_map(V3)
    assert pb.after(ib) == identity_map(V4)
    assert pa.after(ib) == zero_map(V4, V3)


@given(matrix(2, 3), matrix(2, 4))
@settings(max_examples=30)
def test_pullback_members_agree(t_rows, s_rows):
    out = space(2, "w")
    t = LinMap(V3, out, t_rows)
    s = LinMap(V4, out, s_rows)
    pb = pullback_space(t, s)
    for v in pb.basis:
        x, y = v[:3], v[3:]
        assert t.apply(x) == s.apply(y)


def test_kernel_over_prime_field():
    F5 = GF(5)
    sp = Space(F5, ("a", "b", "c"))
    out = Space(F5, ("u",))
    f = from_columns(sp, out, [(1,), (2,), (3,)])
    k = kernel(f)
    assert k.dim == 2
    for v in k.basis:
        assert is_zero(f.apply(v))


def test_from_columns_roundtrip():
    cols = [(Fraction(1), Fraction(2)), (Fraction(0), Fraction(3)), (Fraction(4), Fraction(0))]
    out = space(2, "z")
    f = from_columns(V3, out, cols)
    for j, col in enumerate(cols):
        assert f.column(j) == col
        assert f.apply(V3.basis_vector(j)) == col
