import itertools
import random

import pytest

from hopfcyc.catalog import catalog_algebras, cyclic_group, group_algebra, standard_pairs, trivial_hopf
from hopfcyc.charmap import (InvalidTrace, broken_translation_module, catalog_module_algebras,
                             characteristic_cochain, characteristic_map, conjugation_module_m2, ground_module,
                             is_delta_invariant, is_sigma_trace, sigma_trace_space, trace_candidate,
                             translation_module, validate_action, verify_characteristic_map)
from hopfcyc.hopf import modular_pair
from hopfcyc.tensormap import TensorMap, tensor, tensor_all

Z3 = cyclic_group(3)


@pytest.fixture(scope="module")
def kZ3():
    return group_algebra(Z3)


@pytest.fixture(scope="module")
def trans(kZ3):
    return translation_module(kZ3, Z3)


@pytest.fixture(scope="module")
def eps_one(kZ3):
    return standard_pairs(kZ3)["eps_one"]


def haar(M):
    return M.covector({i: 1 for i in range(M.dim)})


def test_examples_validate(kZ3, trans):
    assert validate_action(ground_module(kZ3)).ok
    assert validate_action(trans).ok


def test_broken_action_fails_product_rule(kZ3):
    rep = validate_action(broken_translation_module(kZ3))
    assert not rep.checks["action respects products"]
    assert rep.witnesses["action respects products"] == "g⊗1⊗p_g"


def test_trace_conditions_separate(trans, eps_one):
    ev = trans.covector({"p_e": 1})
    assert is_sigma_trace(trans, ev, eps_one.sigma)
    assert not is_delta_invariant(trans, ev, eps_one.delta)
    assert is_sigma_trace(trans, haar(trans), eps_one.sigma)
    assert is_delta_invariant(trans, haar(trans), eps_one.delta)
    tc = trace_candidate(trans, ev, eps_one)
    assert tc.sigma_trace and not tc.delta_invariant


def test_trace_space_translation(trans, eps_one):
    space = sigma_trace_space(trans, eps_one.sigma, eps_one.delta)
    assert space == [haar(trans)]


def test_trace_space_checked_independently():
    for name, (h, M, _, pname) in catalog_module_algebras(catalog_algebras()).items():
        pair = standard_pairs(M.H)[pname]
        for t in sigma_trace_space(M, pair.sigma, pair.delta):
            assert is_sigma_trace(M, t, pair.sigma) and is_delta_invariant(M, t, pair.delta), name


def test_trace_space_golden_dimensions():
    dims = {}
    for name, (h, M, _, pname) in catalog_module_algebras(catalog_algebras()).items():
        pair = standard_pairs(M.H)[pname]
        dims[name] = len(sigma_trace_space(M, pair.sigma, pair.delta))
    assert dims == {"translation_Z3": 1, "broken_Z3": 0, "conjugation_M2": 1, "ground_trivial": 1, "ground_H4": 1}


def test_ground_field_trace_space_is_everything():
    H = trivial_hopf()
    M = ground_module(H)
    pair = standard_pairs(H)["eps_one"]
    assert len(sigma_trace_space(M, pair.sigma, pair.delta)) == 1


def test_gamma_degree_zero_is_tau(trans):
    t = haar(trans)
    assert characteristic_map(trans, t, 0).transpose() == t


def test_gamma_of_units_is_tau_of_product(trans, kZ3, eps_one):
    t = haar(trans)
    for n in (1, 2):
        c = tensor_all([kZ3.unit] * n)
        phi = characteristic_cochain(trans, t, c, eps_one)
        for xs in itertools.product(range(3), repeat=n + 1):
            # a product of point indicators is nonzero only when all points agree
            expected = 1 if len(set(xs)) == 1 else 0
            assert phi.cols.get(sum(x * 3 ** (n - k) for k, x in enumerate(xs)), {}).get(0, 0) == expected


def test_gamma_g_expansion(trans, kZ3, eps_one):
    # gamma(g)(f0, f1) = sum_h f0(h) f1(hg), checked on random functions
    rng = random.Random(1)
    phi = characteristic_cochain(trans, haar(trans), kZ3.vector({"g": 1}), eps_one)
    for _ in range(20):
        f0, f1 = [rng.randint(-3, 3) for _ in range(3)], [rng.randint(-3, 3) for _ in range(3)]
        v = tensor(TensorMap.vector(trans.field, (3,), {(i,): a for i, a in enumerate(f0)}),
                   TensorMap.vector(trans.field, (3,), {(i,): a for i, a in enumerate(f1)}))
        got = (phi @ v).cols.get(0, {}).get(0, 0)
        assert got == sum(f0[h] * f1[Z3.mul(h, 1)] for h in range(3))


def test_invalid_tau_rejected(trans, kZ3, eps_one):
    with pytest.raises(InvalidTrace):
        characteristic_cochain(trans, trans.covector({"p_e": 1}), kZ3.unit, eps_one)


def test_verify_translation(trans, eps_one):
    rep = verify_characteristic_map(trans, haar(trans), eps_one, 3)
    assert rep.ok, rep.failures()
    assert rep.checks["b at level 3"]


def test_un_invariant_tau_fails_cyclic(trans, eps_one):
    rep = verify_characteristic_map(trans, trans.covector({"p_e": 1}), eps_one, 2)
    assert not rep.checks["cyclic t1"]
    assert rep.witnesses["cyclic t1"] == "g"


def test_trivial_on_ground():
    H = trivial_hopf()
    M = ground_module(H)
    assert verify_characteristic_map(M, M.covector({0: 1}), standard_pairs(H)["eps_one"], 3).ok


def test_twisted_example_decides_convention():
    H = group_algebra(cyclic_group(2))
    M = conjugation_module_m2(H)
    pair = modular_pair(H, H.counit, H.vector({"g": 1}), "eps_g")
    tau = M.covector({"E11": 1, "E22": -1})
    assert is_sigma_trace(M, tau, pair.sigma) and is_delta_invariant(M, tau, pair.delta)
    assert not is_sigma_trace(M, M.covector({"E11": 1, "E22": 1}), pair.sigma)
    assert verify_characteristic_map(M, tau, pair, 3).ok
    twisted = verify_characteristic_map(M, tau, pair, 3, twisted_convention=True)
    assert not twisted.checks["cyclic t1"]
    assert not twisted.checks["face d1 at level 1"]
