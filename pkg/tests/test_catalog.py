import pytest

from hopfcyc.catalog import (CatalogError, GroupPresentation, catalog_algebras, cyclic_group, function_algebra,
                             group_algebra, standard_pairs, sweedler_h4, symmetric_group, taft, taft_modular_pairs)
from hopfcyc.cyclic import CocyclicModule
from hopfcyc.fields import RATIONALS, FieldError
from hopfcyc.hopf import is_cocommutative, is_commutative, is_modular_pair_in_involution, modular_pair


def test_group_validation():
    with pytest.raises(CatalogError):
        GroupPresentation(2, [[0, 1], [1, 1]], [0, 1], 0)
    with pytest.raises(CatalogError):
        GroupPresentation(2, [[0, 1], [1, 0]], [0, 0], 0)


def test_group_algebras():
    Z2 = group_algebra(cyclic_group(2))
    assert Z2.dim == 2 and is_commutative(Z2) and is_cocommutative(Z2)
    S3 = group_algebra(symmetric_group(3))
    assert S3.dim == 6 and not is_commutative(S3) and is_cocommutative(S3)
    assert is_modular_pair_in_involution(S3, modular_pair(S3, S3.counit, S3.unit))


def test_function_algebras():
    F = function_algebra(symmetric_group(3))
    assert is_commutative(F) and not is_cocommutative(F)
    F2 = function_algebra(cyclic_group(2))
    assert F2.mult.cols == {0: {0: 1}, 3: {1: 1}}  # p_a p_b = [a = b] p_a


def test_h4_relations():
    H = sweedler_h4()
    g, x = H.vector({"g": 1}), H.vector({"x": 1})
    assert H.multiply(g, g) == H.unit
    assert not H.multiply(x, x).cols
    assert H.multiply(x, g) == -H.multiply(g, x)
    S2x = H.antipode @ (H.antipode @ x)
    assert S2x == -x


def test_taft2_is_h4():
    assert taft(2).same_structure(sweedler_h4())


def test_taft_needs_root():
    with pytest.raises((CatalogError, FieldError)):
        taft(3, RATIONALS)


def test_taft3_pairs_found_by_search():
    H = taft(3)
    found = taft_modular_pairs(H)
    assert [(d, s) for d, s, _ in found] == [("eps", "g2"), ("delta2", "1")]


def test_every_catalog_algebra_and_pair():
    for fld in ("rationals", "cyclotomic3"):
        for name, H in catalog_algebras(fld).items():
            for pname, pair in standard_pairs(H).items():
                if pair.in_involution and pair.normalized:
                    assert CocyclicModule(H, pair).verify_cocyclic(2 if H.dim > 4 else 3).ok, (name, pname)
