import json
from fractions import Fraction

import pytest

from lssa.core import ProductTable, check_lssa, recovers_bracket, supertraces_vanish, table_from_json
from lssa.linalg import Matrix, rank
from lssa.reps import check_representation, find_isomorphism
from lssa.scalars import parse_scalar
from lssa.sl21 import (AtypicalIndex, ExcludedParameter, TypicalWeight, Weight21, build_family,
                       compare_tables, family_module, is_typical, kac_data, kac_double, kac_module,
                       load_fixture, t_minus, t_plus, verify_reference_tables, verify_degenerate_failures,
                       verify_distinct_families, verify_negst_relations)


@pytest.fixture(scope="module")
def families():
    return {w: build_family(w) for w in "ABC"}


def test_symbolic_tables_match_reference(families):
    reports = verify_reference_tables()
    assert [r.which for r in reports] == ["A", "B", "C"]
    for r in reports:
        assert r.ok and r.checked == 64 and r.matched == 64, r.mismatches


@pytest.mark.parametrize("which", "ABC")
def test_family_axioms(families, which):
    t = families[which].table
    assert check_lssa(t) and recovers_bracket(t) and supertraces_vanish(t)
    assert t.respects_parity()


@pytest.mark.parametrize("which,cell,expected", [
    ("A", ("x4", "x4"), {"x3": "-k*(k+2)/(k+1)", "x4": "(k^2+2*k+2)/(k+1)"}),
    ("A", ("y3", "x1"), {"y2": "-(k+3)/4"}),
    ("C", ("x4", "x4"), {"x1": "k+1", "x4": "k+1"}),
    ("C", ("y1", "x4"), {"y1": "k+1", "y2": "1"}),
])
def test_spot_entries(families, which, cell, expected):
    """A few entries read straight from the reference tables."""
    t = families[which].table
    alg = t.algebra
    got = t.product(alg.index(cell[0]), alg.index(cell[1]))
    want = {alg.index(lab): parse_scalar(text, ("k",)) for lab, text in expected.items()}
    assert got == want


def test_fixture_mutation_is_detected(families):
    ref = load_fixture("A")
    key = sorted(ref.coeffs)[3]
    l, v = next(iter(ref.coeffs[key].items()))
    bad = ProductTable(ref.algebra, {**ref.coeffs, key: {**ref.coeffs[key], l: v * 2}})
    rep = compare_tables(families["A"].table, bad, "A")
    assert not rep.ok and len(rep.mismatches) == 1


@pytest.mark.parametrize("bindings", [{"k": 2}, {"k": Fraction(5, 3)}, {"k1": 1, "k2": 2},
                                      {"k": 4, "k1": -5, "k2": Fraction(1, 2)}])
def test_specialised_tables(bindings):
    reports = verify_reference_tables(bindings)
    assert reports and all(r.ok for r in reports)


def test_a_at_zero_where_c_is_excluded():
    a, c = verify_reference_tables({"k": 0}, families=("A", "C"))
    assert a.ok and a.matched == 64
    assert c.error and "ExcludedParameter" in c.error


@pytest.mark.parametrize("which,params", [("A", {"k": -1}), ("A", {"k": -3}), ("C", {"k": 0}),
                                          ("C", {"k": -1}), ("B", {"k1": 3, "k2": -5}),
                                          ("B", {"k1": 0, "k2": 2})])
def test_excluded_parameters(which, params):
    with pytest.raises(ExcludedParameter):
        build_family(which, params)


def test_w1_scale_gives_isomorphic_modules_and_valid_products():
    for s in (1, Fraction(-1, 2), 3):
        fb = build_family("A", {"k": 2}, w1_scale=s)
        assert check_lssa(fb.table) and recovers_bracket(fb.table)
    # only the reference scale reproduces the printed structure constants
    assert build_family("A", w1_scale=1).table != build_family("A").table
    assert build_family("B", w1_scale=5).table == build_family("B").table


@pytest.mark.parametrize("i", range(4))
def test_kac_modules(i):
    r = kac_module((i, Fraction(1, 3)))
    assert r.superdim == (2 * (i + 1), 2 * (i + 1))
    assert check_representation(r)


def test_kac_double_is_indecomposable_with_jordan_block():
    r = kac_double(2)
    assert r.superdim == (4, 4) and check_representation(r)
    # z is not semisimple: z - k has nonzero square-zero part on the top
    n = r.act("x4") - Matrix.identity(8).scale(2)
    assert not n.is_zero() and rank(n) < 8


def test_typicality_and_t_maps():
    assert is_typical(Weight21(1, 3)) and not is_typical(Weight21(1, 1))
    assert not is_typical(Weight21(1, -3))
    assert t_minus(Weight21(0, -2)) == Weight21(0, 0)
    assert t_minus(Weight21(2, 2)) == Weight21(3, 3)
    assert t_minus(Weight21(2, -4)) == Weight21(1, -3)
    assert t_plus(Weight21(0, 0)) == Weight21(0, -2)
    assert t_plus(Weight21(1, -3)) == Weight21(2, -4)
    with pytest.raises(TypicalWeight):
        t_minus(Weight21(1, 5))


def test_atypical_index_bijection():
    for j in range(-6, 6):
        w = AtypicalIndex(j).weight()
        assert not is_typical(w)
        assert AtypicalIndex.of(w).j == j
    # T- lowers and T+ raises the index by one
    for j in range(1, 5):
        assert AtypicalIndex.of(t_minus(AtypicalIndex(j).weight())).j == j + 1


@pytest.mark.parametrize("i", range(3))
def test_kac_submodules(i):
    top = kac_data(i, i)
    assert top.irreducible_superdim == (i + 1, i)
    assert top.t_minus_matches
    low = kac_data(i, -i - 2)
    assert low.irreducible_superdim == (i + 1, i + 2)
    assert low.t_minus_matches


def test_k11_submodule():
    d = kac_data(1, 1)
    assert d.submodule_superdim == (2, 3)
    assert d.singular_weight == (2, 2)


def test_negst_relations():
    checks = verify_negst_relations(samples=[("K1", {"k": 3}), ("A", {"k": 3}), ("C", {"k": 3})])
    assert checks and all(c.ok for c in checks)


def test_distinct_families():
    assert all(c.ok and not c.found for c in verify_distinct_families())


def test_degenerate_failures():
    for d in verify_degenerate_failures():
        assert d.ok and d.generic_rank < 8, d


def test_family_module_base_point_is_even():
    for w in "ABC":
        r, a = family_module(w)
        assert all(not v for v, p in zip(a, r.parities) if p)
