"""Membership maps, structure maps, adjunction, monad law verifiers."""

from fractions import Fraction

import pytest

from quantalab import Functional, Space, apply, encode, enumerate_functions, \
    hat, materialize
from quantalab.errors import NotAPullback
from quantalab.fuzzy import constant, delta, tables
from quantalab.monads import (
    beck_chevalley_check,
    beck_chevalley_suite,
    goguen_structure_maps,
    membership_circ,
    membership_dag,
    membership_down,
    membership_p2,
    membership_up,
    mult_m,
    mult_mu,
    noncommutative_witness,
    p2_map,
    powerset_lift_check,
    transpose,
    unit_e,
    unit_eta,
    verify_adjunction,
    verify_lifting,
    verify_monad_laws,
)
from quantalab.submonads import j_embed


def test_membership_down_of_unit_delta_is_membership(qluk3):
    q = qluk3
    for alpha in tables(q, 2):
        for x in range(2):
            assert membership_down(q, alpha, unit_e(q, 2, x)) == alpha[x]


def test_membership_circ_basics(qbool, qluk3):
    assert membership_circ(qbool, (), ()) == qbool.bottom
    assert membership_circ(qbool, (1,), (1,)) == 1
    h = qluk3.index("1/2")
    assert membership_circ(qluk3, (h,), (h,)) == qluk3.bottom


def test_membership_up_and_dag(qluk3, qendo3):
    q = qluk3
    for alpha in tables(q, 1):
        assert q.le(q.unit, membership_up(q, alpha, alpha))
        assert q.le(q.unit, membership_dag(q, alpha, alpha))
    assert membership_up(q, (), ()) == q.top
    # the two duals coincide over a commutative quantale
    for alpha in tables(q, 2):
        for gam in tables(q, 2):
            assert membership_up(q, alpha, gam) == membership_dag(q, alpha, gam)
    qe = qendo3
    assert any(membership_up(qe, (a,), (g,)) != membership_dag(qe, (a,), (g,))
               for a in range(qe.n) for g in range(qe.n))


def test_membership_p2_examples(qbool, qluk3):
    q = qluk3
    half, one = q.index("1/2"), q.index("1")
    got = membership_p2(q, (half,), j_embed(q, (one,)))
    assert got == half
    # empty carrier: the one functional value passes через r over top
    for r in range(qbool.n):
        lam = Functional(Space(qbool, 0, 2), table=(r,))
        assert membership_p2(qbool, (), lam) == qbool.ldd(r, qbool.top)


def test_membership_p2_dominates_eta(qluk3):
    q = qluk3
    for alpha in tables(q, 1):
        for x in range(1):
            eta = materialize(unit_eta(q, 1, x)).table
            assert q.le(alpha[x], membership_p2(q, alpha, eta))


def test_unit_e_is_unit_delta(qluk3):
    q = qluk3
    assert unit_e(q, 3, 1) == delta(q, q.unit, 1, 3)


def test_mult_m_examples(qluk3):
    q = qluk3
    sp1 = Space(q, 1, 1)
    c1 = q.n
    # m of the delta at gamma gives gamma back
    for gamma in enumerate_functions(sp1):
        lam = [q.bottom] * c1
        lam[encode(sp1, gamma)] = q.unit
        assert mult_m(q, 1, tuple(lam)) == gamma
    # m of the evaluation weighting joins q (.) q over the chain
    lam = tuple(g[0] for g in enumerate_functions(sp1))
    assert mult_m(q, 1, lam) == (q.top,)
    # zero weights give the bottom table
    assert mult_m(q, 1, constant(q.bottom, c1)) == (q.bottom,)


def test_unit_eta_codec_table(qbool):
    table = materialize(unit_eta(qbool, 2, 0)).table
    assert table == (0, 1, 0, 1)
    table = materialize(unit_eta(qbool, 2, 1)).table
    assert table == (0, 0, 1, 1)


def test_mult_mu_constant_and_tabulated(qbool):
    q = qbool
    sp4 = Space(q, 1, 4)
    const = Functional(sp4, fn=lambda t: 1)
    got = materialize(mult_mu(q, 1, const)).table
    assert got == (1, 1)
    # explicit level-4 table versus hand-rolled evaluation of hat(gamma)
    sp2, sp3 = Space(q, 1, 2), Space(q, 1, 3)
    lvl2 = list(enumerate_functions(sp2))
    big = tuple(t.count(1) % 2 for t in enumerate_functions(sp3))
    big_f = Functional(sp4, table=big)
    mu_tab = materialize(mult_mu(q, 1, big_f)).table
    for gi, gamma in enumerate(enumerate_functions(Space(q, 1, 1))):
        hat_table = tuple(lam[encode(Space(q, 1, 1), gamma)] for lam in lvl2)
        assert mu_tab[gi] == big[encode(sp3, hat_table)]


def test_mu_of_eta_is_identity_on_samples(qluk3):
    q = qluk3
    sp2 = Space(q, 1, 2)
    for lam in enumerate_functions(sp2):
        lam_f = Functional(sp2, table=lam)
        eta_at = Functional(Space(q, 1, 4),
                            fn=lambda gp, _l=lam_f: apply(gp, _l))
        assert materialize(mult_mu(q, 1, eta_at)).table == lam


def test_p2_map_identity_constant_composition(qbool):
    q = qbool
    sp2 = Space(q, 2, 2)
    for lam in enumerate_functions(sp2):
        lam_f = Functional(sp2, table=lam)
        assert materialize(p2_map(q, (0, 1), 2, lam_f)).table == lam
    const = Functional(sp2, fn=lambda g: 1)
    pushed = p2_map(q, (0, 0), 2, const)
    assert materialize(pushed).table == (1, 1, 1, 1)
    f, g = (1, 0), (0, 0)
    gof = tuple(g[f[x]] for x in range(2))
    for lam in enumerate_functions(sp2):
        lam_f = Functional(sp2, table=lam)
        two = materialize(p2_map(q, g, 2, p2_map(q, f, 2, lam_f))).table
        one = materialize(p2_map(q, gof, 2, lam_f)).table
        assert two == one


def test_transpose_involutive_and_explicit(qbool):
    f = ((0, 1), (1, 1))
    assert transpose(transpose(f)) == f
    assert transpose(((1,),)) == ((1,),)
    from itertools import product
    for rows in product(list(tables(qbool, 2)), repeat=2):
        assert transpose(transpose(rows)) == rows


def test_adjunction_all_quantales(qbool, qluk3, qendo3):
    assert verify_adjunction(qbool, 2).overall == "pass"
    assert verify_adjunction(qluk3, 1).overall == "pass"
    assert verify_adjunction(qendo3, 1).overall == "pass"


def test_monad_laws_expq_exhaustive(qbool):
    rep = verify_monad_laws("expQ", qbool, max_size=2, mode="exhaustive",
                            samples=8, seed=1)
    assert rep.overall == "pass"
    assert rep.check("associativity").cases >= 16


def test_monad_laws_all_tags_small(qbool, qluk3):
    for tag in ("expQ", "U", "W"):
        assert verify_monad_laws(tag, qbool, 2, samples=64).overall == "pass"
        assert verify_monad_laws(tag, qluk3, 1, samples=64).overall == "pass"
    assert verify_monad_laws("expQ2", qbool, 1, samples=32).overall == "pass"
    assert verify_monad_laws("P2", qluk3, 1, samples=32).overall == "pass"


def test_corrupted_mult_fails_with_witness(qluk3):
    q = qluk3

    def bad_mult(size, lam):
        good = mult_m(q, size, lam)
        return tuple(q.join_table[v][q.unit] for v in good)

    rep = verify_monad_laws("expQ", q, max_size=1, samples=16, seed=7,
                            mult_override=bad_mult)
    assert rep.overall == "fail"
    failing = [c for c in rep.checks if c.status == "fail"]
    assert failing and all(c.counterexample for c in failing)


def test_liftings_pass(qbool):
    for tag in ("U", "W", "P2", "F"):
        assert verify_lifting(tag, qbool, 2, samples=16).overall == "pass"


def test_goguen_structure_maps_suite(qluk3):
    rep = goguen_structure_maps(qluk3, 1)
    assert rep.overall == "pass"
    names = [c.name for c in rep.checks]
    assert "U-membership-unit-exact" in names
    assert "P2-membership-unit-goguen" in names


def test_beck_chevalley_product_pullback(qbool):
    # B x C over the singleton: h and f are the projections
    b = c = 2
    apex = [(x, y) for x in range(b) for y in range(c)]
    h = tuple(x for x, _ in apex)
    f = tuple(y for _, y in apex)
    rep = beck_chevalley_check(qbool, 4, b, c, 1, h, f, (0, 0), (0, 0))
    assert rep.overall == "pass"
    assert rep.checks[0].cases == 4


def test_beck_chevalley_identity_pullback(qluk3):
    rep = beck_chevalley_check(qluk3, 2, 2, 2, 2, (0, 1), (0, 1),
                               (0, 1), (0, 1))
    assert rep.overall == "pass"


def test_beck_chevalley_rejects_non_pullback(qbool):
    # apex too small for the fiber product of two constant maps
    with pytest.raises(NotAPullback):
        beck_chevalley_check(qbool, 1, 2, 2, 1, (0,), (0,), (0, 0), (0, 0))


def test_beck_chevalley_suite_small(qbool, qluk3):
    assert beck_chevalley_suite(qbool, 2).overall == "pass"
    assert beck_chevalley_suite(qluk3, 2).overall == "pass"


def test_powerset_lift_membership_values(qluk3):
    from quantalab.monads import _alpha_p
    q = qluk3
    alpha = (q.index("1/2"), q.index("1"))
    assert _alpha_p(q, alpha, (0, 0)) == q.top
    assert _alpha_p(q, alpha, (1, 0)) == alpha[0]
    assert _alpha_p(q, alpha, (1, 1)) == q.meet(alpha)


def test_powerset_lift_check_passes(qbool):
    assert powerset_lift_check(qbool, 3, samples=64).overall == "pass"


def test_noncommutative_witness_reports(qendo3, qluk3):
    rep = noncommutative_witness(qendo3, 1)
    obs = rep.check("up-dag-witness-search")
    assert obs.status == "observation"
    assert "witness found" in obs.note
    rep = noncommutative_witness(qluk3, 1)
    assert rep.check("up-dag-coincide-when-commutative").status == "pass"
