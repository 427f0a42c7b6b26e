import pytest

from ddcat.core import X, Z, make_params, sigma
from ddcat.oracle import dictionary as Dm
from ddcat.oracle import strings as S
from ddcat.oracle.reps import stable_hom_dim, string_rep

P231 = make_params(2, 3, 1)


@pytest.fixture(scope="module")
def D():
    return Dm.build_dictionary(P231, window=3)


def test_anchors(D):
    assert S.same_module(D.string(Z(0, 0, 0)), S.trivial((0, 0), 1))
    assert S.same_module(D.string(sigma(P231, X(0, 0, 0), 1)), S.trivial((0, -1), 1))
    proj = D.coord(Dm.projective_string(D.q))
    assert proj is not None and proj.kind == "Z"


def test_all_components_covered(D):
    assert len(D.components()) == 3 * P231.r


def test_tau_and_sigma_equivariance(D):
    assert Dm.check_tau(D) == []
    assert Dm.check_sigma_power(D, P231.r) == []


def test_degree_one_homs(D):
    for d in (1, -1):
        rows = Dm.cross_check_degree(D, d, count=15, seed=3)
        assert rows
        assert all(engine == oracle for _, _, engine, oracle in rows)


def test_cross_check_small(D):
    checks = Dm.cross_check(D, count=40, seed=1)
    assert len(checks) == 40 and all(c.ok for c in checks)
    assert sum(c.engine > 0 for c in checks) >= 20


def test_r1_coverage():
    D1 = Dm.build_dictionary(make_params(1, 3, 1), window=3)
    A = Z(0, 1, 1)
    M = string_rep(D1.q, D1.string(A))
    assert stable_hom_dim(M, M) == 1
