"""Quantale construction, builtins, residuation tables.

Expected values for the chain families come from the textbook closed
forms, computed here with exact rationals, independently of the table
machinery under test:

    lukasiewicz:  a * b = max(0, a + b - 1),   a -> b = min(1, 1 - a + b)
    godel:        a * b = min(a, b),           a -> b = 1 if a <= b else b
"""

from fractions import Fraction

import pytest

from quantalab import (
    BadParameter,
    NotALattice,
    UnitLawFails,
    UnknownLabel,
    build_quantale,
    builtin_quantale,
    verify_quantale_laws,
)
from quantalab.quantale import with_tensor_entry


def frac(q, i):
    return Fraction(q.label(i))


def luk_tensor(a, b):
    return max(Fraction(0), a + b - 1)


def luk_impl(a, b):
    return min(Fraction(1), 1 - a + b)


def godel_impl(a, b):
    return Fraction(1) if a <= b else b


def test_two_chain_document_builds_boolean_quantale():
    q = build_quantale({
        "name": "two",
        "elements": ["0", "1"],
        "leq": [["0", "1"]],
        "tensor": [["0", "0"], ["0", "1"]],
        "unit": "1",
    })
    assert q.n == 2
    assert q.bottom == 0 and q.top == 1
    assert q.tensor(1, 1) == 1 and q.tensor(1, 0) == 0
    assert verify_quantale_laws(q).overall == "pass"


def test_godel_three_chain_document_validates():
    els = ["0", "h", "1"]
    q = build_quantale({
        "name": "godel3-doc",
        "elements": els,
        "leq": [["0", "h"], ["h", "1"]],
        "tensor": [[els[min(i, j)] for j in range(3)] for i in range(3)],
        "unit": "1",
    })
    assert verify_quantale_laws(q).overall == "pass"


def test_unit_zero_on_two_chain_fails_unit_law():
    with pytest.raises(UnitLawFails) as exc:
        build_quantale({
            "name": "bad",
            "elements": ["0", "1"],
            "leq": [["0", "1"]],
            "tensor": [["0", "0"], ["0", "1"]],
            "unit": "0",
        })
    assert exc.value.witness["element"] == "1"


def test_not_a_lattice_without_upper_bound():
    with pytest.raises(NotALattice):
        build_quantale({
            "name": "antichain",
            "elements": ["a", "b"],
            "leq": [],
            "tensor": [["a", "a"], ["a", "b"]],
            "unit": "b",
        })


def test_unknown_label_in_tensor():
    with pytest.raises(UnknownLabel):
        build_quantale({
            "name": "bad",
            "elements": ["0", "1"],
            "leq": [["0", "1"]],
            "tensor": [["0", "0"], ["0", "x"]],
            "unit": "1",
        })


def test_builtin_rejects_small_parameter():
    with pytest.raises(BadParameter):
        builtin_quantale("godel:1")
    with pytest.raises(BadParameter):
        builtin_quantale("nonsense:3")


def test_bool_coincides_with_two_element_chains(qbool):
    for family in ("godel:2", "lukasiewicz:2"):
        other = builtin_quantale(family)
        assert other.tensor_table == qbool.tensor_table
        assert other.leq == qbool.leq
        assert other.unit == qbool.unit


def test_lukasiewicz_tensor_matches_closed_form(qluk3, qluk4):
    for q in (qluk3, qluk4):
        for a in range(q.n):
            for b in range(q.n):
                want = luk_tensor(frac(q, a), frac(q, b))
                assert frac(q, q.tensor(a, b)) == want


def test_lukasiewicz_residuals_match_closed_form(qluk3, qluk4):
    for q in (qluk3, qluk4):
        for r in range(q.n):
            for s in range(q.n):
                want = luk_impl(frac(q, s), frac(q, r))
                assert frac(q, q.ldd(r, s)) == want
                assert frac(q, q.rdd(s, r)) == want


def test_godel_residuals_match_closed_form(qgodel3):
    q = qgodel3
    for r in range(q.n):
        for s in range(q.n):
            assert frac(q, q.ldd(r, s)) == godel_impl(frac(q, s), frac(q, r))


def test_lukasiewicz3_spot_values(qluk3):
    q = qluk3
    half, one = q.index("1/2"), q.index("1")
    assert q.tensor(half, half) == q.bottom
    assert q.ldd(q.bottom, half) == half
    assert q.rdd(half, q.bottom) == half


def test_unit_neutral_for_residuals_everywhere():
    for family in ("bool", "godel:3", "lukasiewicz:4", "endo:3"):
        q = builtin_quantale(family)
        for x in range(q.n):
            assert q.ldd(x, q.unit) == x
            assert q.rdd(q.unit, x) == x


def test_residual_by_bottom_is_top():
    for family in ("bool", "lukasiewicz:3", "endo:3"):
        q = builtin_quantale(family)
        for r in range(q.n):
            assert q.ldd(r, q.bottom) == q.top
            assert q.rdd(q.bottom, r) == q.top


def test_join_meet_extremes(qbool, qluk3):
    assert qbool.join([]) == qbool.bottom
    assert qbool.meet([]) == qbool.top
    half, one = qluk3.index("1/2"), qluk3.index("1")
    assert qluk3.meet([half, one]) == half
    assert qluk3.join([half, one]) == one


def test_endo3_carrier_and_noncommutativity(qendo3):
    q = qendo3
    assert q.n == 6
    assert not q.commutative
    f = q.index("(0,2)")   # collapses the middle, keeps the top
    g = q.index("(1,1)")   # sends everything above bottom to the middle
    assert q.label(q.tensor(f, g)) == "(0,0)"
    assert q.label(q.tensor(g, f)) == "(0,1)"


def test_endo3_pointwise_join(qendo3):
    q = qendo3
    assert q.label(q.join([q.index("(0,2)"), q.index("(1,1)")])) == "(1,2)"


def test_endo3_residuals_diverge(qendo3):
    q = qendo3
    assert any(q.ldd(r, p) != q.rdd(p, r)
               for p in range(q.n) for r in range(q.n))


@pytest.mark.parametrize("family", [
    "bool", "godel:3", "godel:4", "lukasiewicz:3", "lukasiewicz:4", "endo:3",
])
def test_builtin_families_pass_all_laws(family):
    rep = verify_quantale_laws(builtin_quantale(family))
    assert rep.overall == "pass"
    assert all(c.counterexample is None for c in rep.checks)


def test_corrupted_tensor_reports_associativity_witness(qluk4):
    bad = with_tensor_entry(qluk4, 1, 2, 3)
    rep = verify_quantale_laws(bad)
    assert rep.overall == "fail"
    assoc = rep.check("tensor-associative")
    assert assoc.status == "fail"
    assert set(assoc.counterexample) >= {"args", "lhs", "rhs"}


def test_adjunction_table_exhaustive(qgodel3, qendo3):
    for q in (qgodel3, qendo3):
        for p in range(q.n):
            for s in range(q.n):
                for r in range(q.n):
                    lhs = q.le(q.tensor(p, s), r)
                    assert lhs == q.le(p, q.ldd(r, s))
                    assert lhs == q.le(s, q.rdd(p, r))
