"""Q-modules, Q-orders, Eilenberg-Moore algebras, monadicity ingredients.

A Q-module is a finite complete lattice with a unital, associative,
join-preserving action of the quantale; a separated cocomplete Q-order is
the same thing in order-theoretic clothing, and the two presentations are
interconvertible:

    o(x, y) = join{ r : r (.) x <= y },     action(r, x) = sup of r_x.

Algebras of the Q-valued powerset monad on plain sets are exactly such
structures, with structure map h(gamma) = join_x gamma(x) (.) x; the
fuzzy versions add a membership vector closed under weighted suprema.
The last section holds the finite ingredients used to certify that the
contravariant table functor reflects isomorphisms and preserves
coequalizers of reflexive pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import (
    BadParameter,
    CapExceeded,
    NotReflexivePair,
    NotSeparated,
)
from .fuzzy import (
    Carrier,
    FuzzySet,
    GoguenMap,
    all_maps,
    constant,
    delta,
    goguen_ok,
    preimage,
    swarrow,
    tables,
)
from .quantale import Quantale, builtin_quantale
from .report import Check, VerificationReport, failed, passed
from .towers import DEFAULT_CAP, Space, encode, enumerate_functions

# -- Q-orders -------------------------------------------------------------------


@dataclass(frozen=True)
class QOrder:
    quantale: Quantale
    size: int
    table: tuple  # table[x][y] = hom-degree o(x, y)

    def o(self, x: int, y: int) -> int:
        return self.table[x][y]


def qorder_axioms(order: QOrder) -> dict | None:
    """None when the reflexivity and composition axioms hold, else a witness."""
    q, n, o = order.quantale, order.size, order.table
    for x in range(n):
        if not q.le(q.unit, o[x][x]):
            return {"axiom": "reflexive", "x": x}
    for x, y, z in product(range(n), repeat=3):
        if not q.le(q.tensor_table[o[y][z]][o[x][y]], o[x][z]):
            return {"axiom": "composition", "chain": [x, y, z]}
    return None


def is_separated(order: QOrder) -> bool:
    q, n, o = order.quantale, order.size, order.table
    for x in range(n):
        for y in range(n):
            if x != y and q.le(q.unit, q.meet_table[o[x][y]][o[y][x]]):
                return False
    return True


def qorder_sup(order: QOrder, gamma: tuple) -> int | None:
    """The point a with o(a, y) = meet_x ldd(o(x, y), gamma(x)) for all y,
    or None when no point satisfies the defining display."""
    q, n, o = order.quantale, order.size, order.table
    targets = []
    for y in range(n):
        acc = q.top
        for x in range(n):
            acc = q.meet_table[acc][q.ldd_table[o[x][y]][gamma[x]]]
        targets.append(acc)
    for a in range(n):
        if all(o[a][y] == targets[y] for y in range(n)):
            return a
    return None


def is_cocomplete(order: QOrder, cap: int = DEFAULT_CAP) -> bool:
    return all(qorder_sup(order, g) is not None
               for g in tables(order.quantale, order.size))


# -- Q-modules ------------------------------------------------------------------


@dataclass(frozen=True)
class QModule:
    """Complete lattice (join table + bottom) with a quantale action.

    action[r][x] is the element r (.) x; meets are derived from joins on
    a finite lattice and are not stored.
    """

    quantale: Quantale
    size: int
    join_table: tuple
    bottom: int
    action: tuple

    def le(self, x: int, y: int) -> bool:
        return self.join_table[x][y] == y

    def join(self, elements) -> int:
        acc = self.bottom
        for x in elements:
            acc = self.join_table[acc][x]
        return acc

    def act(self, r: int, x: int) -> int:
        return self.action[r][x]


def lattice_witness(m: QModule) -> dict | None:
    """Check the join table is a semilattice with neutral bottom."""
    n, jt = m.size, m.join_table
    for x in range(n):
        if jt[x][x] != x:
            return {"law": "idempotent", "x": x}
        if jt[m.bottom][x] != x or jt[x][m.bottom] != x:
            return {"law": "bottom-neutral", "x": x}
        for y in range(n):
            if jt[x][y] != jt[y][x]:
                return {"law": "commutative", "pair": [x, y]}
            for z in range(n):
                if jt[jt[x][y]][z] != jt[x][jt[y][z]]:
                    return {"law": "associative", "triple": [x, y, z]}
    return None


def qmodule_check(m: QModule) -> VerificationReport:
    """Unit, mixed associativity, and join preservation in both variables
    (binary joins plus the empty join)."""
    q = m.quantale
    rep = VerificationReport("qmodule", q.name, {"size": m.size})
    w = lattice_witness(m)
    rep.add(failed("carrier-lattice", m.size ** 3, w) if w
            else passed("carrier-lattice", m.size ** 3))

    cases = 0
    witness = None
    for x in range(m.size):
        cases += 1
        if m.act(q.unit, x) != x and witness is None:
            witness = {"law": "unit-action", "x": x}
    for s, r in product(range(q.n), repeat=2):
        for x in range(m.size):
            cases += 1
            if m.act(s, m.act(r, x)) != m.act(q.tensor_table[s][r], x) \
                    and witness is None:
                witness = {"law": "mixed-associativity",
                           "args": [q.label(s), q.label(r), x]}
    rep.add(failed("action-monoid", cases, witness) if witness
            else passed("action-monoid", cases))

    cases = 0
    witness = None
    for r in range(q.n):
        cases += 1
        if m.act(r, m.bottom) != m.bottom and witness is None:
            witness = {"law": "action-preserves-empty-join", "r": q.label(r)}
        for x, y in product(range(m.size), repeat=2):
            cases += 1
            if m.act(r, m.join_table[x][y]) \
                    != m.join_table[m.act(r, x)][m.act(r, y)] \
                    and witness is None:
                witness = {"law": "action-preserves-joins",
                           "args": [q.label(r), x, y]}
    for x in range(m.size):
        cases += 1
        if m.act(q.bottom, x) != m.bottom and witness is None:
            witness = {"law": "zero-acts-as-bottom", "x": x}
        for r, s in product(range(q.n), repeat=2):
            cases += 1
            if m.act(q.join_table[r][s], x) \
                    != m.join_table[m.act(r, x)][m.act(s, x)] \
                    and witness is None:
                witness = {"law": "action-join-in-scalar",
                           "args": [q.label(r), q.label(s), x]}
    rep.add(failed("action-joins", cases, witness) if witness
            else passed("action-joins", cases))
    return rep


def module_sup(m: QModule, gamma: tuple) -> int:
    """Weighted supremum join_x gamma(x) (.) x."""
    return m.join(m.act(gamma[x], x) for x in range(m.size))


def order_from_module(m: QModule) -> QOrder:
    """o(x, y) = join{r : r (.) x <= y}; separated and cocomplete."""
    q = m.quantale
    table = tuple(
        tuple(q.join(r for r in range(q.n) if m.le(m.act(r, x), y))
              for y in range(m.size))
        for x in range(m.size))
    return QOrder(q, m.size, table)


def module_from_order(order: QOrder, cap: int = DEFAULT_CAP) -> QModule:
    """Rebuild the module: joins from the unit-level order, action from
    weighted suprema of singleton tables."""
    q, n = order.quantale, order.size
    w = qorder_axioms(order)
    if w is not None:
        raise BadParameter("not a Q-order", w)
    if not is_separated(order):
        raise NotSeparated("order is not separated", {})
    if not is_cocomplete(order, cap):
        raise BadParameter("order is not cocomplete", {})
    bottom = qorder_sup(order, constant(q.bottom, n))
    join_table = []
    for x in range(n):
        row = []
        for y in range(n):
            two = list(delta(q, q.unit, x, n))
            two[y] = q.join_table[two[y]][q.unit]
            row.append(qorder_sup(order, tuple(two)))
        join_table.append(tuple(row))
    action = tuple(
        tuple(qorder_sup(order, delta(q, r, x, n)) for x in range(n))
        for r in range(q.n))
    if bottom is None or any(v is None for row in join_table for v in row) \
            or any(v is None for row in action for v in row):
        raise BadParameter("order is not cocomplete", {})
    return QModule(q, n, tuple(join_table), bottom, action)


def enumerate_qmodules(q: Quantale, size: int,
                       cap: int = DEFAULT_CAP) -> list[QModule]:
    """Brute-force all (join table, bottom, action) structures that pass
    the module laws, for roundtrip sweeps at small sizes."""
    if size == 0:
        return []
    total = size ** (size * size) * size ** (q.n * size)
    if total > cap:
        raise CapExceeded("module search space exceeds cap",
                          {"size": size, "total": total})
    out = []
    for jt_flat in product(range(size), repeat=size * size):
        jt = tuple(tuple(jt_flat[x * size + y] for y in range(size))
                   for x in range(size))
        bottoms = [b for b in range(size) if all(jt[b][x] == x
                                                 for x in range(size))]
        if len(bottoms) != 1:
            continue
        probe = QModule(q, size, jt, bottoms[0],
                        tuple(tuple(range(size)) for _ in range(q.n)))
        if lattice_witness(probe) is not None:
            continue
        for act_flat in product(range(size), repeat=q.n * size):
            action = tuple(tuple(act_flat[r * size + x] for x in range(size))
                           for r in range(q.n))
            m = QModule(q, size, jt, bottoms[0], action)
            if qmodule_check(m).overall == "pass":
                out.append(m)
    return out


def module_order_roundtrip(q: Quantale, max_size: int = 2,
                           cap: int = DEFAULT_CAP) -> VerificationReport:
    """Both roundtrips are identities: module -> order -> module on every
    enumerated module, and order -> module -> order on every enumerated
    separated cocomplete order."""
    rep = VerificationReport("module-order-roundtrip", q.name,
                             {"max_size": max_size})
    cases = 0
    witness = None
    for size in range(1, max_size + 1):
        for m in enumerate_qmodules(q, size, cap):
            cases += 1
            back = module_from_order(order_from_module(m), cap)
            if (back.join_table, back.bottom, back.action) \
                    != (m.join_table, m.bottom, m.action) and witness is None:
                witness = {"size": size, "module": m.action}
    rep.add(failed("module-roundtrip", cases, witness) if witness
            else passed("module-roundtrip", cases))

    cases = 0
    witness = None
    for size in range(1, max_size + 1):
        if q.n ** (size * size) > cap:
            continue
        for flat in product(range(q.n), repeat=size * size):
            table = tuple(tuple(flat[x * size + y] for y in range(size))
                          for x in range(size))
            order = QOrder(q, size, table)
            if qorder_axioms(order) is not None or not is_separated(order) \
                    or not is_cocomplete(order, cap):
                continue
            cases += 1
            back = order_from_module(module_from_order(order, cap))
            if back.table != order.table and witness is None:
                witness = {"size": size, "order": [list(r) for r in table]}
    rep.add(failed("order-roundtrip", cases, witness) if witness
            else passed("order-roundtrip", cases))

    # the weighted supremum of a module-induced order matches the action form
    cases = 0
    witness = None
    for size in range(1, max_size + 1):
        for m in enumerate_qmodules(q, size, cap):
            order = order_from_module(m)
            for gamma in tables(q, size):
                cases += 1
                if qorder_sup(order, gamma) != module_sup(m, gamma) \
                        and witness is None:
                    witness = {"size": size,
                               "gamma": [q.label(v) for v in gamma]}
    rep.add(failed("sup-cross-check", cases, witness) if witness
            else passed("sup-cross-check", cases))
    return rep


# -- Eilenberg-Moore algebras --------------------------------------------------------


@dataclass(frozen=True)
class EMAlgebra:
    """A structure map h: T(carrier) -> carrier for the powerset-style
    monad tagged "exp" (crisp, h over 2^X) or "expQ" (h over Q^X)."""

    quantale: Quantale
    tag: str
    size: int
    h: tuple

    def carrier_quantale(self) -> Quantale:
        return builtin_quantale("bool") if self.tag == "exp" else self.quantale


def em_check_base(alg: EMAlgebra, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Unit and multiplication diagrams for the structure map, plus the
    derived-module reading: the action r (.) x = h(r_x) and crisp joins
    make a Q-module, and h is recovered as the weighted supremum."""
    qe = alg.carrier_quantale()
    q = alg.quantale
    n = alg.size
    rep = VerificationReport("em-base", q.name, {"tag": alg.tag, "size": n})
    sp1 = Space(qe, n, 1)
    c1 = qe.n ** n
    if len(alg.h) != c1:
        raise BadParameter("structure map has wrong length",
                           {"expected": c1, "got": len(alg.h)})

    cases = 0
    witness = None
    for x in range(n):
        cases += 1
        if alg.h[encode(sp1, delta(qe, qe.unit, x, n))] != x \
                and witness is None:
            witness = {"diagram": "unit", "x": x}
    rep.add(failed("unit-diagram", cases, witness) if witness
            else passed("unit-diagram", cases))

    cases = 0
    witness = None
    lvl1 = list(enumerate_functions(sp1, cap))
    sp2 = Space(qe, n, 2)
    if sp2.cardinality is not None and sp2.cardinality <= cap:
        for lam in enumerate_functions(sp2, cap):
            cases += 1
            # push lam along h, then apply h; against h of the flattening
            pushed = [qe.bottom] * n
            for i, w in enumerate(lam):
                a = alg.h[i]
                pushed[a] = qe.join_table[pushed[a]][w]
            via_h = alg.h[encode(sp1, tuple(pushed))]
            flat = [qe.bottom] * n
            for i, w in enumerate(lam):
                for x in range(n):
                    flat[x] = qe.join_table[flat[x]][
                        qe.tensor_table[w][lvl1[i][x]]]
            via_m = alg.h[encode(sp1, tuple(flat))]
            if via_h != via_m and witness is None:
                witness = {"diagram": "multiplication", "level2-index": cases}
    rep.add(failed("multiplication-diagram", cases, witness) if witness
            else passed("multiplication-diagram", cases))

    if rep.overall == "pass" and alg.tag == "expQ":
        m = module_from_em(alg)
        sub = qmodule_check(m)
        for c in sub.checks:
            c.name = f"derived-module-{c.name}"
            rep.add(c)
        cases = 0
        witness = None
        for gamma in lvl1:
            cases += 1
            if alg.h[encode(sp1, gamma)] != module_sup(m, gamma) \
                    and witness is None:
                witness = {"gamma": [q.label(v) for v in gamma]}
        rep.add(failed("h-is-weighted-sup", cases, witness) if witness
                else passed("h-is-weighted-sup", cases))
    return rep


def module_from_em(alg: EMAlgebra) -> QModule:
    """Read off the module: joins from crisp tables, action from deltas."""
    if alg.tag != "expQ":
        raise BadParameter("module extraction needs the expQ tag",
                           {"tag": alg.tag})
    q, n = alg.quantale, alg.size
    sp1 = Space(q, n, 1)
    join_table = []
    for x in range(n):
        row = []
        for y in range(n):
            crisp = [q.bottom] * n
            crisp[x] = q.unit
            crisp[y] = q.unit
            row.append(alg.h[encode(sp1, tuple(crisp))])
        join_table.append(tuple(row))
    bottom = alg.h[encode(sp1, constant(q.bottom, n))]
    action = tuple(
        tuple(alg.h[encode(sp1, delta(q, r, x, n))] for x in range(n))
        for r in range(q.n))
    return QModule(q, n, tuple(join_table), bottom, action)


def enumerate_em_algebras(tag: str, q: Quantale, size: int,
                          cap: int = DEFAULT_CAP) -> list[EMAlgebra]:
    """Brute force over all candidate structure maps, keeping those whose
    unit and multiplication diagrams commute."""
    if tag not in ("exp", "expQ"):
        raise BadParameter("tag must be exp or expQ", {"tag": tag})
    qe = builtin_quantale("bool") if tag == "exp" else q
    c1 = qe.n ** size
    if size == 0:
        return []
    if size ** c1 > cap:
        raise CapExceeded("candidate space exceeds cap",
                          {"size": size, "candidates": size ** c1})
    sp1 = Space(qe, size, 1)
    unit_idx = [encode(sp1, delta(qe, qe.unit, x, size)) for x in range(size)]
    out = []
    for h in product(range(size), repeat=c1):
        if any(h[unit_idx[x]] != x for x in range(size)):
            continue
        alg = EMAlgebra(q, tag, size, tuple(h))
        if em_check_base(alg, cap).overall == "pass":
            out.append(alg)
    return out


def em_check_goguen(m: QModule, alpha: tuple,
                    cap: int = DEFAULT_CAP) -> VerificationReport:
    """The two characterizations of membership vectors that make a module
    a fuzzy-set algebra: closure under weighted suprema, versus crisp-join
    closure plus the action condition.  The assertion is that the two
    verdicts agree (and each is reported)."""
    q = m.quantale
    rep = VerificationReport("em-goguen", q.name, {"size": m.size})

    sup_closed = True
    sup_witness = None
    cases = 0
    for gamma in tables(q, m.size):
        cases += 1
        if not q.le(swarrow(q, alpha, gamma), alpha[module_sup(m, gamma)]):
            sup_closed = False
            if sup_witness is None:
                sup_witness = {"gamma": [q.label(v) for v in gamma]}
    rep.add(Check("sup-closure", "pass" if sup_closed else "fail", cases,
                  counterexample=None if sup_closed else sup_witness))

    crisp_ok = True
    crisp_witness = None
    cases = 0
    for bits in product((0, 1), repeat=m.size):
        cases += 1
        subset = [x for x in range(m.size) if bits[x]]
        lhs = q.meet(alpha[x] for x in subset)
        if not q.le(lhs, alpha[m.join(subset)]):
            crisp_ok = False
            if crisp_witness is None:
                crisp_witness = {"subset": subset}
    for r in range(q.n):
        for x in range(m.size):
            cases += 1
            if not q.le(q.ldd_table[alpha[x]][r], alpha[m.act(r, x)]):
                crisp_ok = False
                if crisp_witness is None:
                    crisp_witness = {"r": q.label(r), "x": x}
    rep.add(Check("crisp-join-and-action", "pass" if crisp_ok else "fail",
                  cases, counterexample=None if crisp_ok else crisp_witness))

    agree = sup_closed == crisp_ok
    rep.add(passed("characterizations-agree", 1) if agree
            else failed("characterizations-agree", 1,
                        {"sup-closure": sup_closed,
                         "crisp-join-and-action": crisp_ok}))
    return rep


def em_goguen_agreement(q: Quantale, max_size: int = 2,
                        cap: int = DEFAULT_CAP) -> VerificationReport:
    """Sweep every enumerated module and every membership vector; the two
    characterizations must give the same verdict each time."""
    rep = VerificationReport("em-goguen", q.name, {"max_size": max_size})
    cases = 0
    witness = None
    for size in range(1, max_size + 1):
        for m in enumerate_qmodules(q, size, cap):
            for alpha in tables(q, size):
                cases += 1
                sub = em_check_goguen(m, alpha, cap)
                verdicts = [c.status for c in sub.checks[:2]]
                if sub.check("characterizations-agree").status == "fail" \
                        and witness is None:
                    witness = {"size": size,
                               "alpha": [q.label(v) for v in alpha],
                               "verdicts": verdicts}
    rep.add(failed("characterizations-agree", cases, witness) if witness
            else passed("characterizations-agree", cases))
    return rep


def em_base_suite(q: Quantale, max_size: int = 2,
                  cap: int = DEFAULT_CAP) -> VerificationReport:
    """Enumerate algebras of both base monads at small sizes and
    cross-validate the module equivalence in both directions."""
    rep = VerificationReport("em-base", q.name, {"max_size": max_size})
    counts = {}
    for size in range(1, max_size + 1):
        try:
            algs = enumerate_em_algebras("expQ", q, size, cap)
        except CapExceeded:
            continue
        counts[size] = len(algs)
        cases = 0
        witness = None
        for alg in algs:
            cases += 1
            m = module_from_em(alg)
            if qmodule_check(m).overall != "pass" and witness is None:
                witness = {"size": size, "h": list(alg.h)}
        rep.add(failed(f"algebras-give-modules-size{size}", cases, witness)
                if witness else
                passed(f"algebras-give-modules-size{size}", cases))

        # converse: every module's weighted sup is an algebra
        cases = 0
        witness = None
        sp1 = Space(q, size, 1)
        try:
            modules = enumerate_qmodules(q, size, cap)
        except CapExceeded:
            modules = []
        for m in modules:
            cases += 1
            h = tuple(module_sup(m, g) for g in enumerate_functions(sp1, cap))
            alg = EMAlgebra(q, "expQ", size, h)
            if em_check_base(alg, cap).overall != "pass" and witness is None:
                witness = {"size": size, "action": m.action}
        rep.add(failed(f"modules-give-algebras-size{size}", cases, witness)
                if witness else
                passed(f"modules-give-algebras-size{size}", cases))
    note = ", ".join(f"size {s}: {c}" for s, c in counts.items())
    rep.add(passed("algebra-counts", sum(counts.values())))
    rep.check("algebra-counts").note = note
    return rep


# -- monadicity ingredients ------------------------------------------------------------


def reflects_iso_check(q: Quantale, max_size: int = 2) -> VerificationReport:
    """Whenever precomposition by a Goguen map is an isomorphism on table
    objects (bijective and membership-equal), the map itself must be an
    isomorphism of fuzzy sets; triples where the precomposition is not an
    isomorphism count as vacuous."""
    rep = VerificationReport("reflects-iso", q.name, {"max_size": max_size})
    cases = 0
    vacuous_cases = 0
    witness = None
    for sx in range(max_size + 1):
        for sy in range(max_size + 1):
            pool_x = list(tables(q, sx))
            pool_y = list(tables(q, sy))
            for f in all_maps(sx, sy):
                for alpha in pool_x:
                    for beta in pool_y:
                        if not goguen_ok(q, f, alpha, beta):
                            continue
                        cases += 1
                        img = {preimage(f, lam) for lam in pool_y}
                        bijective = len(img) == len(pool_y) \
                            and len(pool_y) == len(pool_x)
                        memb_eq = all(
                            swarrow(q, lam, beta)
                            == swarrow(q, preimage(f, lam), alpha)
                            for lam in pool_y)
                        if not (bijective and memb_eq):
                            vacuous_cases += 1
                            continue
                        f_bij = len(set(f)) == sx == sy
                        f_memb = all(beta[f[x]] == alpha[x] for x in range(sx))
                        if not (f_bij and f_memb) and witness is None:
                            witness = {
                                "f": list(f),
                                "alpha": [q.label(v) for v in alpha],
                                "beta": [q.label(v) for v in beta],
                            }
    check = failed("reflects-isomorphisms", cases, witness) if witness \
        else passed("reflects-isomorphisms", cases)
    check.note = f"{vacuous_cases} vacuous (precomposition not iso)"
    rep.add(check)
    return rep


def reflexive_pair_equalizer(f: GoguenMap, g: GoguenMap, h: GoguenMap):
    """The equalizer of a reflexive pair, concretely: the subset where the
    two maps agree, carrying the restricted membership.

    Returns (points of Z, the fuzzy set on Z, the inclusion as a tuple).
    Validates the common-retraction hypothesis and the three facts it
    forces: injectivity of both maps, membership preservation on the
    nose, and cross-equality separation.
    """
    a, b = f.source, f.target
    if g.source != a or g.target != b or h.source != b or h.target != a:
        raise NotReflexivePair("endpoints do not match", {})
    n = a.size
    if any(h.function[f.function[x]] != x for x in range(n)) \
            or any(h.function[g.function[x]] != x for x in range(n)):
        raise NotReflexivePair("no common left inverse", {})
    # facts forced by the retraction
    if len(set(f.function)) != n or len(set(g.function)) != n:
        raise AssertionError("retracted maps must be injective")
    if any(b.membership[f.function[x]] != a.membership[x] for x in range(n)) \
            or any(b.membership[g.function[x]] != a.membership[x]
                   for x in range(n)):
        raise AssertionError("retracted maps must preserve membership")
    for x1 in range(n):
        for x2 in range(n):
            if f.function[x1] == g.function[x2] and x1 != x2:
                raise AssertionError("cross equality must force x1 = x2")
    points = [x for x in range(n) if f.function[x] == g.function[x]]
    z = FuzzySet(a.quantale,
                 Carrier("equalizer", len(points)),
                 tuple(a.membership[x] for x in points))
    return points, z, tuple(points)


def coequalizer_verify(q: Quantale, f: GoguenMap, g: GoguenMap, h: GoguenMap,
                       targets: list[FuzzySet],
                       cap: int = DEFAULT_CAP) -> VerificationReport:
    """Precomposition sends the equalizer inclusion to a coequalizer: for
    every eligible d (Goguen on tables, coequalizing the pair), the
    extension-by-top of the restriction factors d through restriction,
    uniquely.  Also certifies the gluing well-definedness step and that
    the extension map preserves membership exactly."""
    rep = VerificationReport("coequalizer", q.name, {})
    alpha = f.source.membership
    sx, sy = f.source.size, f.target.size
    points, z_fuzzy, _ = reflexive_pair_equalizer(f, g, h)
    gamma = z_fuzzy.membership
    sz = len(points)
    pool_x = list(tables(q, sx))
    pool_y = list(tables(q, sy))

    def restrict(xi):
        return tuple(xi[x] for x in points)

    def extend(zeta):
        out = [q.top] * sx
        for i, x in enumerate(points):
            out[x] = zeta[i]
        return tuple(out)

    # extension preserves the table membership exactly
    cases = 0
    witness = None
    for zeta in tables(q, sz):
        cases += 1
        lhs = swarrow(q, zeta, gamma)
        rhs = swarrow(q, extend(zeta), alpha)
        if lhs != rhs and witness is None:
            witness = {"zeta": [q.label(v) for v in zeta],
                       "lhs": q.label(lhs), "rhs": q.label(rhs)}
    rep.add(failed("extension-goguen-exact", cases, witness) if witness
            else passed("extension-goguen-exact", cases))

    # restriction is surjective, so factorizations are unique
    images = {restrict(xi) for xi in pool_x}
    rep.add(passed("restriction-epi", 1) if len(images) == q.n ** sz
            else failed("restriction-epi", 1, {"got": len(images)}))

    # d-independent part of the gluing step: the explicit glued table
    # really does pull back to the two given tables
    groups: dict[tuple, list[int]] = {}
    for i, xi in enumerate(pool_x):
        groups.setdefault(restrict(xi), []).append(i)
    glue_cases = 0
    glue_witness = None
    for members in groups.values():
        for i1 in members:
            for i2 in members:
                glue_cases += 1
                glued = _glue(q, f.function, g.function,
                              pool_x[i1], pool_x[i2], sy)
                if (preimage(f.function, glued) != pool_x[i1]
                        or preimage(g.function, glued) != pool_x[i2]) \
                        and glue_witness is None:
                    glue_witness = {"xi1": [q.label(v) for v in pool_x[i1]],
                                    "xi2": [q.label(v) for v in pool_x[i2]]}

    # eligible maps d: Goguen on the table object and coequalizing
    mem_x = [swarrow(q, xi, alpha) for xi in pool_x]
    sp1x = Space(q, sx, 1)
    pair_idx = [(encode(sp1x, preimage(f.function, th)),
                 encode(sp1x, preimage(g.function, th))) for th in pool_y]
    ext_idx = [encode(sp1x, extend(restrict(xi))) for xi in pool_x]
    factor_cases = 0
    factor_witness = None
    eligible_total = 0
    for target in targets:
        lam = target.membership
        for d in all_maps(len(pool_x), target.size):
            if not all(q.le(mem_x[i], lam[d[i]]) for i in range(len(pool_x))):
                continue
            if any(d[i1] != d[i2] for i1, i2 in pair_idx):
                continue
            eligible_total += 1
            # d collapses each restriction class (well-definedness) ...
            for members in groups.values():
                glue_cases += 1
                if len({d[i] for i in members}) != 1 and glue_witness is None:
                    glue_witness = {"d-differs-on-class": True,
                                    "class": [list(pool_x[i])
                                              for i in members]}
            # ... and factors through restriction via the extension
            for i in range(len(pool_x)):
                factor_cases += 1
                if d[ext_idx[i]] != d[i] and factor_witness is None:
                    factor_witness = {"xi": [q.label(v) for v in pool_x[i]],
                                      "target": [q.label(v) for v in lam]}
    check = failed("gluing-well-defined", glue_cases, glue_witness) \
        if glue_witness else passed("gluing-well-defined", glue_cases)
    rep.add(check)
    check = failed("factorization", factor_cases, factor_witness) \
        if factor_witness else passed("factorization", factor_cases)
    check.note = f"{eligible_total} eligible maps"
    rep.add(check)
    return rep


def _glue(q, ff, gf, xi1, xi2, sy):
    out = [q.top] * sy
    for x, y in enumerate(ff):
        out[y] = xi1[x]
    for x, y in enumerate(gf):
        out[y] = xi2[x]
    return tuple(out)


def coequalizer_suite(q: Quantale, max_x: int = 2, max_y: int = 3,
                      max_w: int = 2, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Enumerate reflexive pairs with their retractions and memberships at
    the default bounds and run the factorization check against every
    small test target."""
    from .fuzzy import Carrier
    rep = VerificationReport("coequalizer", q.name,
                             {"max_x": max_x, "max_y": max_y, "max_w": max_w})
    targets = []
    for sw in range(1, max_w + 1):
        for lam in tables(q, sw):
            targets.append(FuzzySet(q, Carrier("W", sw), lam))
    agg = {"extension-goguen-exact": [0, None],
           "restriction-epi": [0, None],
           "gluing-well-defined": [0, None],
           "factorization": [0, None]}
    configs = 0
    for sx in range(1, max_x + 1):
        for sy in range(1, max_y + 1):
            for ff in all_maps(sx, sy):
                for gf in all_maps(sx, sy):
                    for hf in all_maps(sy, sx):
                        if any(hf[ff[x]] != x for x in range(sx)):
                            continue
                        if any(hf[gf[x]] != x for x in range(sx)):
                            continue
                        for alpha in tables(q, sx):
                            for beta in tables(q, sy):
                                if not (goguen_ok(q, ff, alpha, beta)
                                        and goguen_ok(q, gf, alpha, beta)
                                        and goguen_ok(q, hf, beta, alpha)):
                                    continue
                                configs += 1
                                a = FuzzySet(q, Carrier("X", sx), alpha)
                                b = FuzzySet(q, Carrier("Y", sy), beta)
                                sub = coequalizer_verify(
                                    q, GoguenMap(a, b, ff),
                                    GoguenMap(a, b, gf),
                                    GoguenMap(b, a, hf), targets, cap)
                                for c in sub.checks:
                                    agg[c.name][0] += c.cases
                                    if c.status == "fail" \
                                            and agg[c.name][1] is None:
                                        agg[c.name][1] = c.counterexample
    for name, (cases, witness) in agg.items():
        check = failed(name, cases, witness) if witness \
            else passed(name, cases)
        if name == "factorization":
            check.note = f"{configs} reflexive-pair configurations"
        rep.add(check)
    return rep
