"""Modules, orders, Eilenberg-Moore algebras, monadicity ingredients."""

import pytest

from quantalab import Carrier, FuzzySet, GoguenMap, Space, enumerate_functions
from quantalab.algebras import (
    EMAlgebra,
    QModule,
    QOrder,
    coequalizer_suite,
    coequalizer_verify,
    em_base_suite,
    em_check_base,
    em_check_goguen,
    em_goguen_agreement,
    enumerate_em_algebras,
    enumerate_qmodules,
    is_cocomplete,
    is_separated,
    module_from_em,
    module_from_order,
    module_order_roundtrip,
    module_sup,
    order_from_module,
    qmodule_check,
    qorder_axioms,
    qorder_sup,
    reflects_iso_check,
    reflexive_pair_equalizer,
)
from quantalab.errors import NotReflexivePair, NotSeparated
from quantalab.fuzzy import swarrow, tables
from quantalab.monads import mult_m
from quantalab.quantale import builtin_quantale
from quantalab.towers import encode


def chain_module(q):
    """The 2-chain as a module: r (.) x = meet-like action."""
    join = ((0, 1), (1, 1))
    action = tuple(tuple(x if q.le(q.unit, r) or q.tensor(r, q.top) == q.top
                         else 0 for x in range(2)) for r in range(q.n))
    # for bool this is r (.) x = r and x
    return QModule(q, 2, join, 0, action)


def pointwise_module(q, size):
    """Q^size with the pointwise action: the canonical free example."""
    sp = Space(q, size, 1)
    pool = list(enumerate_functions(sp))
    idx = {t: i for i, t in enumerate(pool)}
    join = tuple(tuple(idx[tuple(q.join_table[a][b] for a, b in zip(s, t))]
                       for t in pool) for s in pool)
    action = tuple(tuple(idx[tuple(q.tensor_table[r][v] for v in t)]
                         for t in pool) for r in range(q.n))
    return QModule(q, len(pool), join, idx[tuple([q.bottom] * size)], action)


def test_pointwise_module_is_module(qbool):
    for size in (1, 2):
        assert qmodule_check(pointwise_module(qbool, size)).overall == "pass"


def test_one_point_module(qluk3):
    m = QModule(qluk3, 1, ((0,),), 0, tuple((0,) for _ in range(qluk3.n)))
    assert qmodule_check(m).overall == "pass"
    order = order_from_module(m)
    assert order.table == ((qluk3.top,),)


def test_unit_action_mutation_fails(qbool):
    q = qbool
    bad = QModule(q, 2, ((0, 1), (1, 1)), 0,
                  (tuple((0, 0)), tuple((0, 0))))  # unit no longer acts as id
    rep = qmodule_check(bad)
    assert rep.overall == "fail"
    assert rep.check("action-monoid").counterexample["law"] == "unit-action"


def test_order_from_chain_module(qbool):
    m = chain_module(qbool)
    order = order_from_module(m)
    assert order.o(0, 1) == qbool.top
    assert order.o(1, 0) == qbool.bottom
    assert is_separated(order) and is_cocomplete(order)


def test_order_of_pointwise_module_is_graded_inclusion(qbool):
    q = qbool
    m = pointwise_module(q, 1)
    order = order_from_module(m)
    pool = list(enumerate_functions(Space(q, 1, 1)))
    for i, g in enumerate(pool):
        for j, d in enumerate(pool):
            assert order.o(i, j) == swarrow(q, d, g)


def test_qorder_sup_examples(qbool):
    m = chain_module(qbool)
    order = order_from_module(m)
    # delta at a point recovers the point; the zero table gives bottom
    assert qorder_sup(order, (qbool.unit, qbool.bottom)) == 0
    assert qorder_sup(order, (qbool.bottom, qbool.bottom)) == 0
    assert qorder_sup(order, (qbool.bottom, qbool.unit)) == 1
    for gamma in tables(qbool, 2):
        assert qorder_sup(order, gamma) == module_sup(m, gamma)


def test_module_order_roundtrip_guard(qbool):
    q = qbool
    codiscrete = QOrder(q, 2, ((1, 1), (1, 1)))
    assert qorder_axioms(codiscrete) is None
    assert not is_separated(codiscrete)
    with pytest.raises(NotSeparated):
        module_from_order(codiscrete)


def test_module_order_roundtrip_suite(qbool):
    rep = module_order_roundtrip(qbool, 2)
    assert rep.overall == "pass"
    assert rep.check("module-roundtrip").cases == 3
    assert rep.check("order-roundtrip").cases == 3


def test_free_algebra_passes(qluk3):
    # the free algebra on one generator: carrier Q^Z, structure map the
    # monad multiplication
    q = qluk3
    size_z = 1
    carrier = q.n ** size_z
    sp2 = Space(q, size_z, 2)
    h = tuple(encode(Space(q, size_z, 1), mult_m(q, size_z, lam))
              for lam in enumerate_functions(sp2))
    alg = EMAlgebra(q, "expQ", carrier, h)
    assert em_check_base(alg).overall == "pass"


def test_unit_mutation_fails_base_check(qbool):
    q = qbool
    algs = enumerate_em_algebras("expQ", q, 2)
    good = algs[0]
    bad_h = list(good.h)
    sp1 = Space(q, 2, 1)
    from quantalab.fuzzy import delta
    i = encode(sp1, delta(q, q.unit, 0, 2))
    bad_h[i] = 1 - bad_h[i]
    rep = em_check_base(EMAlgebra(q, "expQ", 2, tuple(bad_h)))
    assert rep.check("unit-diagram").status == "fail"


def test_join_structure_map_gives_chain_module(qbool):
    q = qbool
    # h = join of marked coordinates in the order 0 < 1
    sp1 = Space(q, 2, 1)
    h = tuple(1 if g[1] else 0 for g in enumerate_functions(sp1))
    alg = EMAlgebra(q, "expQ", 2, h)
    rep = em_check_base(alg)
    assert rep.overall == "pass"
    m = module_from_em(alg)
    assert m.join_table == ((0, 1), (1, 1))


def test_em_algebra_counts(qbool, qluk3, qendo3):
    assert len(enumerate_em_algebras("exp", qbool, 2)) == 2
    assert len(enumerate_em_algebras("exp", qbool, 3)) == 6
    for q in (qbool, qluk3, qendo3):
        assert len(enumerate_em_algebras("expQ", q, 1)) == 1


def test_em_base_suite(qbool):
    rep = em_base_suite(qbool, 2)
    assert rep.overall == "pass"
    assert "size 2: 2" in rep.check("algebra-counts").note


def test_em_goguen_full_membership_always_passes(qbool):
    m = chain_module(qbool)
    rep = em_check_goguen(m, (qbool.unit, qbool.unit))
    assert rep.overall == "pass"


def test_em_goguen_upset_and_downset(qbool):
    # the verdicts themselves are data; the assertion is that the two
    # characterizations agree on every membership vector
    m = chain_module(qbool)
    up = em_check_goguen(m, (0, 1))
    # the up-set misses the empty join: sup of the zero table is bottom
    assert up.check("sup-closure").status == "fail"
    assert up.check("crisp-join-and-action").status == "fail"
    assert up.check("characterizations-agree").status == "pass"
    down = em_check_goguen(m, (1, 0))
    assert down.check("sup-closure").status == "pass"
    assert down.check("crisp-join-and-action").status == "pass"
    assert down.check("characterizations-agree").status == "pass"


def test_em_goguen_agreement_sweep(qbool):
    assert em_goguen_agreement(qbool, 2).overall == "pass"


def test_reflects_iso(qbool, qluk3):
    rep = reflects_iso_check(qbool, 2)
    assert rep.overall == "pass"
    assert "vacuous" in rep.checks[0].note
    assert reflects_iso_check(qluk3, 1).overall == "pass"


def _pair(q, alpha, beta, ff, gf, hf):
    a = FuzzySet(q, Carrier("X", len(alpha)), alpha)
    b = FuzzySet(q, Carrier("Y", len(beta)), beta)
    return GoguenMap(a, b, ff), GoguenMap(a, b, gf), GoguenMap(b, a, hf)


def test_reflexive_pair_equal_maps(qbool):
    q = qbool
    f, g, h = _pair(q, (1, 0), (1, 0), (0, 1), (0, 1), (0, 1))
    points, z, incl = reflexive_pair_equalizer(f, g, h)
    assert points == [0, 1]
    assert z.membership == (1, 0)


def test_reflexive_pair_empty_equalizer(qbool):
    q = qbool
    f, g, h = _pair(q, (0,), (0, 0), (0,), (1,), (0, 0))
    points, z, incl = reflexive_pair_equalizer(f, g, h)
    assert points == [] and z.size == 0


def test_reflexive_pair_guard(qbool):
    q = qbool
    with pytest.raises(NotReflexivePair):
        f, g, h = _pair(q, (0, 0), (0, 0), (0, 1), (0, 1), (0, 0))
        reflexive_pair_equalizer(f, g, h)


def test_coequalizer_trivial_when_maps_equal(qbool):
    q = qbool
    f, g, h = _pair(q, (0, 0), (0, 0), (0, 1), (0, 1), (0, 1))
    targets = [FuzzySet(q, Carrier("W", 1), (w,)) for w in range(2)]
    rep = coequalizer_verify(q, f, g, h, targets)
    assert rep.overall == "pass"


def test_coequalizer_singleton_source(qbool):
    q = qbool
    f, g, h = _pair(q, (0,), (0, 0), (0,), (1,), (0, 0))
    targets = [FuzzySet(q, Carrier("W", 2), t) for t in tables(q, 2)]
    rep = coequalizer_verify(q, f, g, h, targets)
    assert rep.overall == "pass"
    assert rep.check("factorization").cases > 0


def test_coequalizer_suite_default_bounds(qbool):
    rep = coequalizer_suite(qbool, 2, 3, 2)
    assert rep.overall == "pass"
    assert "configurations" in rep.check("factorization").note
    assert rep.check("gluing-well-defined").cases > 0


def test_module_json_shape(qbool):
    # modules and orders mirror their field lists in plain containers
    m = chain_module(qbool)
    order = order_from_module(m)
    assert isinstance(m.join_table, tuple) and isinstance(order.table, tuple)
