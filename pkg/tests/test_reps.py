import json
from math import comb

import pytest

from lssa.linalg import Matrix, rank
from lssa.reps import (AlgebraMismatch, check_representation, direct_sum, dual_rep,
                       exterior_square, find_isomorphism, intertwiners, multiple, parity_shift,
                       rep_from_json, rep_to_json, standard_rep, submodule_generated,
                       symmetric_square, tensor, trivial_rep, twist)
from lssa.sl21 import kac_module
from lssa.superlie import NotAnAutomorphism, make_algebra, neg_st_matrix

SHAPES = [("sl", 2, 1), ("gl", 2, 1), ("sl", 2, 2), ("sl", 3, 1)]


@pytest.fixture(params=SHAPES, ids=lambda s: f"{s[0]}({s[1]}|{s[2]})")
def std(request):
    return standard_rep(make_algebra(*request.param))


def test_constructions_are_representations(std):
    for r in (std, dual_rep(std), parity_shift(std), direct_sum(std, std),
              exterior_square(std), symmetric_square(std), parity_shift(exterior_square(std))):
        assert check_representation(r)


def test_tensor_is_a_representation():
    std = standard_rep(make_algebra("sl", 2, 1))
    assert check_representation(tensor(std, dual_rep(std)))


def test_square_dimensions(std):
    m, n = std.algebra.m, std.algebra.n
    assert exterior_square(std).superdim == (comb(m, 2) + comb(n + 1, 2), m * n)
    assert symmetric_square(std).superdim == (comb(m + 1, 2) + comb(n, 2), m * n)


def test_tensor_square_splits():
    std = standard_rep(make_algebra("sl", 2, 1))
    cert = find_isomorphism(tensor(std, std), direct_sum(symmetric_square(std), exterior_square(std)))
    assert cert.isomorphic and rank(cert.witness) == 9


def test_wedge_labels():
    w = exterior_square(standard_rep(make_algebra("sl", 2, 1)))
    assert w.space.even == ("e1^e2", "xi1^xi1")
    assert w.space.odd == ("e1^xi1", "e2^xi1")


def test_schur_and_parity():
    std = standard_rep(make_algebra("sl", 2, 1))
    assert len(intertwiners(std, std)) == 1
    assert not find_isomorphism(std, parity_shift(std)).isomorphic
    assert not find_isomorphism(std, dual_rep(std)).isomorphic


def test_parity_shift_keeps_matrices():
    std = standard_rep(make_algebra("sl", 2, 1))
    pi = parity_shift(std)
    assert pi.superdim == (1, 2)
    assert pi.labels == ("xi1", "e1", "e2")
    x = std.algebra.index("y3")  # E13 : xi1 -> e1
    assert pi.act(x)[1, 0] == std.act(x)[0, 2] == 1


def test_double_dual_is_conjugation_by_parity_sign():
    std = standard_rep(make_algebra("sl", 2, 1))
    dd = dual_rep(dual_rep(std))
    P = Matrix.diagonal([1 if p == 0 else -1 for p in std.parities])
    for a, b in zip(dd.action, std.action):
        assert a == P @ b @ P
    assert find_isomorphism(dd, std).isomorphic


def test_direct_sum_tags():
    std = standard_rep(make_algebra("sl", 2, 1))
    assert direct_sum(std, std).space.even == ("e1'", "e2'", "e1''", "e2''")
    assert multiple(std, 3).space.odd == ("xi1(1)", "xi1(2)", "xi1(3)")
    with pytest.raises(AlgebraMismatch):
        direct_sum(std, standard_rep(make_algebra("gl", 2, 1)))


def test_twist_by_negst_is_dual_for_standard():
    alg = make_algebra("sl", 2, 1)
    std = standard_rep(alg)
    assert find_isomorphism(twist(std, neg_st_matrix(alg)), dual_rep(std)).isomorphic
    with pytest.raises(NotAnAutomorphism):
        twist(std, Matrix.identity(alg.dim).scale(3))


def test_submodule_generated():
    k = kac_module((1, 1))
    top = [1 if lab == "1*u0" else 0 for lab in k.labels]
    assert submodule_generated(k, top).dim == 8
    triv = trivial_rep(k.algebra)
    assert submodule_generated(triv, [1]).superdim == (1, 0)


def test_json_round_trip():
    k = kac_module((1, "k"))
    data = json.loads(json.dumps(rep_to_json(k)))
    assert data["algebra"] == "sl(2|1)" and data["parameters"] == ["k"]
    back = rep_from_json(data)
    assert back.labels == k.labels
    assert all(a == b for a, b in zip(back.action, k.action))


def test_double_parity_shift_is_identity():
    k = kac_module((1, 2))
    pp = parity_shift(parity_shift(k))
    assert pp.space == k.space
    assert all(a == b for a, b in zip(pp.action, k.action))
