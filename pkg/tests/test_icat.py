import pytest

from braidalg.algebra import catalog, is_lie
from braidalg.braid import commutator_braiding, cx_functor
from braidalg.errors import NotComposable
from braidalg.fields import QQ
from braidalg.icat import (
    ASSOC,
    LIE,
    cat_liefy,
    compose,
    composable_pair_basis,
    composable_triple_basis,
    discrete_cat,
    invert_morphism,
    k_formula,
    validate_cat_algebra,
)
from braidalg.linear import vadd, vsub

ASSOC_NAMES = ("Mat(2)", "Upper(2)", "Upper(3)")


def cat_fixtures():
    cats = []
    for name in ASSOC_NAMES:
        cats.append((f"discrete {name}", discrete_cat(catalog(name, QQ), ASSOC)))
    for name in ("sl2", "Heis3"):
        cats.append((f"discrete {name}", discrete_cat(catalog(name, QQ), LIE)))
    for name in ("Mat(2)", "Upper(3)"):
        bar = cx_functor(commutator_braiding(catalog(name, QQ))).base
        cats.append((f"bar {name}", bar))
    return cats


@pytest.mark.parametrize("label,cat", cat_fixtures())
def test_cat_fixtures_validate(label, cat):
    assert validate_cat_algebra(cat).ok, label


@pytest.mark.parametrize("label,cat", cat_fixtures())
def test_identity_laws_on_pullback_basis(label, cat):
    F = cat.c1.field
    for x, y in composable_pair_basis(cat):
        # right identity on x, left identity on y
        assert compose(cat, x, cat.e.apply(cat.t.apply(x))) == tuple(x)
        assert compose(cat, cat.e.apply(cat.s.apply(y)), y) == tuple(y)


@pytest.mark.parametrize("label,cat", cat_fixtures())
def test_associativity_on_triple_basis(label, cat):
    for x, y, z in composable_triple_basis(cat):
        left = compose(cat, compose(cat, x, y), z)
        right = compose(cat, x, compose(cat, y, z))
        assert left == right


@pytest.mark.parametrize("label,cat", cat_fixtures())
def test_invert_morphism_postconditions(label, cat):
    for i in range(cat.c1.dim):
        f = cat.c1.space.basis_vector(i)
        g = invert_morphism(cat, f)
        assert compose(cat, f, g) == cat.e.apply(cat.s.apply(f))
        assert compose(cat, g, f) == cat.e.apply(cat.t.apply(f))
        assert cat.s.apply(g) == cat.t.apply(f)
        assert cat.t.apply(g) == cat.s.apply(f)


def test_compose_rejects_non_composable():
    bar = cx_functor(commutator_braiding(catalog("Mat(2)", QQ))).base
    # find a basis morphism with t(x) != s(x); composing with itself fails
    for i in range(bar.c1.dim):
        x = bar.c1.space.basis_vector(i)
        if bar.t.apply(x) != bar.s.apply(x):
            with pytest.raises(NotComposable):
                compose(bar, x, x)
            return
    pytest.skip("no non-composable basis pair in fixture")


def test_k_formula_matches_compose():
    bar = cx_functor(commutator_braiding(catalog("Upper(2)", QQ))).base
    for x, y in composable_pair_basis(bar):
        assert compose(bar, x, y) == k_formula(bar, x, y)


def test_cat_liefy_valid_and_lie():
    bar = cx_functor(commutator_braiding(catalog("Mat(2)", QQ))).base
    lie_bar = cat_liefy(bar)
    assert lie_bar.flavor == LIE
    assert is_lie(lie_bar.c1)
    assert validate_cat_algebra(lie_bar).ok
    # structural maps are unchanged
    assert lie_bar.s.matrix == bar.s.matrix
    assert lie_bar.t.matrix == bar.t.matrix
    assert lie_bar.e.matrix == bar.e.matrix
