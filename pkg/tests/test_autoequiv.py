import pytest

from ddcat.autoequiv import (
    IDENTITY, AutoEq, NotZComponent, apply, compose, equal, group_structure, invert,
    parse_autoeq, transitive_witness, twist_x, twist_y,
)
from ddcat.core import X, Y, Z, make_params, tau

P231 = make_params(2, 3, 1)


def test_twists():
    assert twist_x(Z(0, 0, 0)) == Z(0, 1, 0)
    assert twist_x(Y(0, 3, 1)) == Y(0, 3, 1)
    assert twist_x(twist_y(X(0, 2, 4))) == X(0, 3, 5) == tau(X(0, 2, 4), -1)


def test_group_law():
    assert equal(P231, compose(P231, AutoEq(1, 0, 0), AutoEq(-1, 0, 0)), IDENTITY)
    assert equal(P231, AutoEq(2, 0, 0), AutoEq(0, 3, -1))
    assert invert(P231, AutoEq(0, 2, 5)) == AutoEq(0, -2, -5)
    phi = parse_autoeq("S^1 TX^2 TY^-1")
    assert phi == AutoEq(1, 2, -1)


def test_group_structure():
    assert group_structure(P231) == (2, 1)
    assert group_structure(make_params(2, 4, 2)) == (2, 2)
    assert group_structure(make_params(1, 2, 0)) == (2, 1)


def test_transitive_witness():
    assert transitive_witness(P231, Z(0, 0, 0), Z(0, 2, 5)) == AutoEq(0, 2, 5)
    phi = transitive_witness(P231, Z(0, 0, 0), Z(1, 3, -2))
    assert apply(P231, phi, Z(0, 0, 0)) == Z(1, 3, -2)
    with pytest.raises(NotZComponent):
        transitive_witness(P231, X(0, 0, 0), Z(0, 0, 0))
