import json
from fractions import Fraction

import pytest

from lssa.core import (Cocycle, NotBijective, OddBasePoint, ProductTable, associated_bracket,
                       associative_product, check_cocycle, check_equivalence, check_lssa,
                       cocycle_space, evaluation_map, find_right_identities, gamma,
                       identity_cocycle, left_regular, lssa_from_cocycle, recovers_bracket,
                       supertrace_of, supertraces_vanish, table_from_json, table_to_json,
                       transport, zero_product)
from lssa.linalg import Matrix, exp_nilpotent
from lssa.reps import standard_rep, twist
from lssa.sl21 import build_family, kac_module
from lssa.superlie import make_algebra, neg_st_matrix


@pytest.fixture(scope="module")
def table_a():
    return build_family("A", {"k": 2}).table


@pytest.mark.parametrize("shape", [("gl", 1, 1), ("gl", 2, 1), ("gl", 1, 2)])
def test_matrix_multiplication_is_left_symmetric(shape):
    p = associative_product(make_algebra(*shape))
    assert check_lssa(p) and recovers_bracket(p) and p.respects_parity()


def test_zero_product_is_left_symmetric_but_wrong_bracket():
    p = zero_product(make_algebra("sl", 2, 1))
    assert check_lssa(p)
    assert not recovers_bracket(p)


def test_right_identity_and_supertrace():
    alg = make_algebra("gl", 2, 1)
    p = associative_product(alg)
    ri = find_right_identities(p)
    assert ri.unique
    e = {i: v for i, v in enumerate(ri.particular) if v}
    assert alg.element(ri.particular) == alg.element([1 if l in ("E_1_1", "E_2_2", "E_3_3") else 0
                                                    for l in alg.labels])
    g = sum((gamma(p, i).scale(v) for i, v in e.items()), Matrix.zeros(alg.dim, alg.dim))
    assert g == Matrix.identity(alg.dim)
    # str(id) = 5 - 4, so the supertraces cannot all vanish
    assert supertrace_of(g, alg.parities) == 1
    assert not supertraces_vanish(p)


def test_family_right_identity(table_a):
    ri = find_right_identities(table_a)
    assert ri.unique
    assert supertraces_vanish(table_a)


def test_mutations_are_detected(table_a):
    """Changing any one coefficient breaks the identity or the bracket."""
    for key in sorted(table_a.coeffs)[::5]:
        l, v = next(iter(table_a.coeffs[key].items()))
        coeffs = dict(table_a.coeffs)
        coeffs[key] = {**coeffs[key], l: v + 1}
        bad = ProductTable(table_a.algebra, coeffs)
        assert not (check_lssa(bad) and recovers_bracket(bad)), key


def test_associated_bracket(table_a):
    br = associated_bracket(table_a)
    alg = table_a.algebra
    for i in range(alg.dim):
        for j in range(alg.dim):
            assert br[(i, j)] == {l: v for l, v in alg.bracket(i, j).items() if v}


def test_cocycle_round_trip(table_a):
    c = identity_cocycle(table_a)
    assert check_cocycle(c)
    assert lssa_from_cocycle(c) == table_a
    assert check_lssa(ProductTable(table_a.algebra, table_a.coeffs))


def test_left_regular_is_a_representation(table_a):
    from lssa.reps import check_representation
    assert check_representation(left_regular(table_a))


def test_evaluation_map_rejects_odd_points():
    k = kac_module((0, 1))
    a = [1 if lab == "y1*u0" else 0 for lab in k.labels]
    with pytest.raises(OddBasePoint):
        evaluation_map(k, a)


def test_non_bijective_cocycle():
    k = kac_module((1, 3))
    a = [1 if lab == "1*u0" else 0 for lab in k.labels]
    c = evaluation_map(k, a)
    assert check_cocycle(c)
    with pytest.raises(NotBijective):
        lssa_from_cocycle(c)
    std = standard_rep(make_algebra("sl", 2, 1))
    with pytest.raises(NotBijective):
        lssa_from_cocycle(evaluation_map(std, [1, 0, 0]))


def test_cocycle_check_rejects_perturbation():
    fb = build_family("C", {"k": 2})
    q = fb.cocycle.q
    bad = Cocycle(fb.rep, q + Matrix.from_rows([[1 if (i, j) == (0, 0) else 0 for j in range(8)]
                                                for i in range(8)]))
    assert not check_cocycle(bad)


def test_cocycle_space_contains_evaluation_maps():
    k = kac_module((1, 2))
    z = cocycle_space(k)
    # H^1 vanishes here: every cocycle is ev_a for an even a
    assert len(z) == k.superdim[0]
    assert all(check_cocycle(Cocycle(k, q)) for q in z)
    assert cocycle_space(k, vanish_on_even=True) == []


def test_equivalence_under_inner_automorphism():
    """A cocycle and its transport along exp(ad x) are equivalent via exp(f(x))."""
    fb = build_family("B", {"k1": 1, "k2": 3})
    alg = fb.rep.algebra
    x = alg.index("x1")
    t = Fraction(3, 2)
    T = exp_nilpotent(alg.structure_matrix(x).scale(t))
    phi = exp_nilpotent(fb.rep.act(x).scale(t))
    c1 = fb.cocycle
    # f2(y) = phi^-1 f1(T y) phi, q2 = phi^-1 q1 T
    from lssa.linalg import inverse
    pinv = inverse(phi)
    rep2 = twist(fb.rep, T)
    rep2 = type(rep2)(alg, rep2.space, tuple(pinv @ a @ phi for a in rep2.action))
    c2 = Cocycle(rep2, pinv @ c1.q @ T)
    assert check_cocycle(c2)
    assert check_equivalence(c1, c2, phi, T)
    # inner automorphisms act trivially on the module: f2 = f1, and the LSSA is transported
    assert all(a == b for a, b in zip(rep2.action, fb.rep.action))
    assert lssa_from_cocycle(c2) == transport(lssa_from_cocycle(c1), T)
    assert not check_equivalence(c1, c2, phi.scale(2), T)


def test_transport_along_negst(table_a):
    T = neg_st_matrix(table_a.algebra)
    t2 = transport(table_a, T)
    assert check_lssa(t2) and recovers_bracket(t2)


def test_json_round_trip():
    fb = build_family("B")
    data = json.loads(json.dumps(table_to_json(fb.table, ["k1", "k2"])))
    assert data["algebra"] == "sl(2|1)"
    assert table_from_json(data) == fb.table
    data["version"] = 7  # unknown keys are ignored
    assert table_from_json(json.dumps(data)) == fb.table
