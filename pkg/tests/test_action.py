import pytest

from braidalg.action import (
    AssocAction,
    LieAction,
    adjoint_action,
    induced_lie_action,
    self_action,
    semidirect_assoc,
    semidirect_lie,
    validate_assoc_action,
    validate_lie_action,
    zero_action_assoc,
    zero_action_lie,
)
from braidalg.algebra import catalog, is_associative, is_homomorphism, is_lie, liefy
from braidalg.fields import QQ

ASSOC_NAMES = ("Mat(2)", "Upper(2)", "Upper(3)")
LIE_NAMES = ("sl2", "Heis3", "gl2")


@pytest.mark.parametrize("name", ASSOC_NAMES)
def test_self_action_valid(name):
    a = self_action(catalog(name, QQ))
    assert validate_assoc_action(a).ok


@pytest.mark.parametrize("name", LIE_NAMES)
def test_adjoint_action_valid(name):
    a = adjoint_action(catalog(name, QQ))
    assert validate_lie_action(a).ok


def test_zero_actions_valid():
    m = catalog("Ab(2)", QQ)
    n = catalog("Mat(2)", QQ)
    assert validate_assoc_action(zero_action_assoc(n, m)).ok
    assert validate_lie_action(zero_action_lie(catalog("sl2", QQ), m)).ok


@pytest.mark.parametrize("name", ASSOC_NAMES)
def test_induced_lie_action_valid(name):
    a = self_action(catalog(name, QQ))
    assert validate_lie_action(induced_lie_action(a)).ok


@pytest.mark.parametrize("name", ASSOC_NAMES)
def test_semidirect_assoc_structure(name):
    a = self_action(catalog(name, QQ))
    sd = semidirect_assoc(a)
    assert is_associative(sd.algebra)
    assert is_homomorphism(sd.incl_actor, a.actor, sd.algebra)
    assert is_homomorphism(sd.proj_actor, sd.algebra, a.actor)


@pytest.mark.parametrize("name", LIE_NAMES)
def test_semidirect_lie_is_lie(name):
    a = adjoint_action(catalog(name, QQ))
    assert is_lie(semidirect_lie(a))


@pytest.mark.parametrize("name", ASSOC_NAMES)
def test_liefy_commutes_with_semidirect(name):
    """liefy(M x| N) and the semidirect product of the induced Lie
    action have identical structure tensors."""
    a = self_action(catalog(name, QQ))
    left = liefy(semidirect_assoc(a).algebra)
    right = semidirect_lie(induced_lie_action(a))
    assert left.mult.tensor == right.mult.tensor


def test_action_field_order():
    """AssocAction stores the actor first; star1 is N x M -> M."""
    m = catalog("Ab(1)", QQ)
    n = catalog("Mat(2)", QQ)
    a = zero_action_assoc(n, m)
    assert a.actor is n
    assert a.module is m
    assert a.star1.left == n.space and a.star1.right == m.space
    assert a.star2.left == m.space and a.star2.right == n.space
