import pytest

from ddcat.core import X, Y, Z, make_params, window_objects
from ddcat.hammocks import (
    TargetArray, classify, endo_complex, euler_char, graded_hom, graded_scan,
    hom_dim, hom_dims, region_r1_square,
)

P231 = make_params(2, 3, 1)
P252 = make_params(2, 5, 2)
P121 = make_params(1, 2, 1)


def test_mouth_hammocks():
    assert hom_dim(P252, X(0, 0, 0), X(0, 0, 3)) == 1
    assert hom_dim(P252, X(0, 0, 0), Y(0, 1, 0)) == 0
    assert hom_dim(P121, X(0, 0, 0), X(0, 0, 1)) == 2
    assert hom_dim(P231, X(0, 0, 0), Y(0, 1, 0)) == 0


def test_ray_band_any_second_coordinate():
    for j in (-5, 0, 7):
        assert hom_dim(P231, X(0, 0, 2), Z(0, 0, j)) == 1


def test_graded_hom_examples():
    assert graded_hom(P231, X(0, 0, 2), X(0, 0, 2)) == {-1: 1, 0: 1}
    for A in (Z(0, 0, 0), Z(1, 5, -2), Z(0, -3, 4)):
        assert graded_hom(P231, A, A) == {0: 1}


def test_endo_complex_examples():
    assert endo_complex(P231, X(0, 3, 5)) == {-1: 1, 0: 1}
    assert endo_complex(P231, X(1, 4, 4)) == {0: 1}


def test_classify():
    assert str(classify(P231, Z(0, 5, -2))) == "Exceptional"
    c = classify(P231, X(0, 0, 2))
    assert c.tag == "Spherelike" and c.d == -1
    big = classify(P231, X(0, 0, 5))
    assert big.tag == "Big"
    assert any(d < 0 for d in graded_hom(P231, X(0, 0, 5), X(0, 0, 5)))


def test_euler_char():
    assert euler_char(P231, Z(0, 1, 1), Z(0, 1, 1)) == 1
    assert euler_char(P231, X(0, 0, 2), X(0, 0, 2)) == 0


def test_region_r1_square_only_for_r1():
    assert not region_r1_square(P231, X(0, 0, 0), X(0, 0, 1))
    assert region_r1_square(P121, X(0, 0, 0), X(0, 0, 1))


def test_vector_scans_agree_with_scalar():
    objs = window_objects(P231, 3)
    T = TargetArray.from_objects(objs)
    for A in objs[::17]:
        row = hom_dims(P231, A, T)
        assert list(row) == [hom_dim(P231, A, B) for B in objs]
        degs, M = graded_scan(P231, A, T)
        for b, B in enumerate(objs[::5]):
            col = {degs[k]: int(M[k, 5 * b]) for k in range(len(degs)) if M[k, 5 * b]}
            assert col == graded_hom(P231, A, B)


def test_bad_component_rejected():
    from ddcat.core import InvalidCoord

    with pytest.raises(InvalidCoord):
        hom_dim(P231, X(3, 0, 0), X(0, 0, 0))
