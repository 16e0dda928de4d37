import pytest

from braidalg.algebra import catalog
from braidalg.braid import (
    alpha_iso,
    beta_iso,
    bracket_braiding,
    cat_braiding_liefy,
    check_anticoherence,
    commutator_braiding,
    cx_functor,
    validate_braided_internal_functor,
    validate_braided_xmod_morphism,
    validate_braiding_cat_assoc,
    validate_braiding_cat_lie_alt,
    validate_braiding_cat_lie_ulualan,
    validate_braiding_xmod_assoc,
    validate_braiding_xmod_lie,
    xc_functor,
    xmod_braiding_liefy,
)
from braidalg.errors import CharTwo
from braidalg.fields import GF, QQ

ASSOC_NAMES = ("Mat(2)", "Mat(3)", "Upper(3)")
LIE_NAMES = ("sl2", "Heis3", "gl2")


@pytest.mark.parametrize("name", ASSOC_NAMES)
def test_commutator_braiding_passes(name):
    rep = validate_braiding_xmod_assoc(commutator_braiding(catalog(name, QQ)))
    assert rep.ok
    assert {e.tag for e in rep.entries} >= {f"BAs{i}" for i in range(1, 7)}


@pytest.mark.parametrize("name", LIE_NAMES)
def test_bracket_braiding_passes(name):
    rep = validate_braiding_xmod_lie(bracket_braiding(catalog(name, QQ)))
    assert rep.ok
    assert {e.tag for e in rep.entries} >= {f"BLie{i}" for i in range(1, 7)}


@pytest.mark.parametrize("name", ASSOC_NAMES)
def test_bar_construction_validates(name):
    cb = cx_functor(commutator_braiding(catalog(name, QQ)))
    assert validate_braiding_cat_assoc(cb).ok


@pytest.mark.parametrize("name", ASSOC_NAMES)
def test_alpha_iso_is_braided_isomorphism(name):
    b = commutator_braiding(catalog(name, QQ))
    target = xc_functor(cx_functor(b))
    phi = alpha_iso(b)
    assert validate_braided_xmod_morphism(phi, b, target).ok


@pytest.mark.parametrize("name", ASSOC_NAMES)
def test_beta_iso_is_braided_functor(name):
    cb = cx_functor(commutator_braiding(catalog(name, QQ)))
    target = cx_functor(xc_functor(cb))
    f1, f0 = beta_iso(cb)
    assert validate_braided_internal_functor(f1, f0, cb, target).ok


@pytest.mark.parametrize("name", ASSOC_NAMES)
def test_xmod_braiding_liefy_passes(name):
    b = commutator_braiding(catalog(name, QQ))
    assert validate_braiding_xmod_lie(xmod_braiding_liefy(b)).ok


@pytest.mark.parametrize("name", ASSOC_NAMES)
def test_cat_braiding_liefy_passes_both_validators(name):
    cb = cx_functor(commutator_braiding(catalog(name, QQ)))
    lie_cb = cat_braiding_liefy(cb)
    assert validate_braiding_cat_lie_ulualan(lie_cb).ok
    assert validate_braiding_cat_lie_alt(lie_cb).ok
    assert check_anticoherence(lie_cb).ok


@pytest.mark.parametrize("field", (QQ, GF(5)))
@pytest.mark.parametrize("name", ("Mat(2)", "Upper(3)"))
def test_validators_agree_away_from_char_two(name, field):
    """On every Lie categorical braiding fixture passing LieT1-2, the
    two axiom lists give the same verdict and anticoherence holds."""
    cb = cx_functor(commutator_braiding(catalog(name, field)))
    lie_cb = cat_braiding_liefy(cb)
    ul = validate_braiding_cat_lie_ulualan(lie_cb)
    alt = validate_braiding_cat_lie_alt(lie_cb)
    t12 = all(e.ok for e in ul.entries if e.tag in ("LieT1", "LieT2"))
    assert t12
    assert ul.ok == alt.ok
    assert check_anticoherence(lie_cb).ok


def test_char_two_transport_guards():
    b = commutator_braiding(catalog("Mat(2)", GF(2)))
    with pytest.raises(CharTwo):
        xmod_braiding_liefy(b)
    cb = cx_functor(b)
    with pytest.raises(CharTwo):
        cat_braiding_liefy(cb)


def test_xc_functor_recovers_braiding_data():
    b = commutator_braiding(catalog("Mat(2)", QQ))
    back = xc_functor(cx_functor(b))
    assert validate_braiding_xmod_assoc(back).ok
    assert back.base.m.dim == b.base.m.dim
    assert back.base.n.mult.tensor == b.base.n.mult.tensor
