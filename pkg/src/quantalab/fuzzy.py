"""Fuzzy sets, Goguen maps, images/preimages, graded inclusion.

Membership tables are plain tuples of quantale element indices; the same
vector type serves both as object structure (a fuzzy set's membership)
and as data fed to the powerset-style functors.  Empty carriers are
allowed everywhere: Q^X over the empty carrier is the one-element space,
and meets/joins over nothing take the lattice extremes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from .errors import CarrierMismatch, NotGoguen, PointOutOfRange
from .quantale import Quantale
from .report import VerificationReport, failed, passed


@dataclass(frozen=True)
class Carrier:
    name: str
    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 0:
            raise PointOutOfRange("carrier size must be >= 0", {"size": self.size})
        if self.labels is not None and len(self.labels) != self.size:
            raise CarrierMismatch("label count differs from carrier size",
                                  {"size": self.size, "labels": len(self.labels)})

    def point(self, label: str) -> int:
        if self.labels is None:
            raise PointOutOfRange("carrier has no point labels", {"label": label})
        try:
            return self.labels.index(label)
        except ValueError:
            raise PointOutOfRange("unknown point", {"label": label}) from None


@dataclass(frozen=True)
class FuzzySet:
    quantale: Quantale
    carrier: Carrier
    membership: tuple[int, ...]

    def __post_init__(self):
        if len(self.membership) != self.carrier.size:
            raise CarrierMismatch(
                "membership length differs from carrier size",
                {"carrier": self.carrier.size, "membership": len(self.membership)})
        for v in self.membership:
            if not 0 <= v < self.quantale.n:
                raise PointOutOfRange("membership value outside quantale",
                                      {"value": v})

    @property
    def size(self) -> int:
        return self.carrier.size


@dataclass(frozen=True)
class GoguenMap:
    """A point function f with alpha(x) <= beta(f(x)); validated on build."""

    source: FuzzySet
    target: FuzzySet
    function: tuple[int, ...]

    def __post_init__(self):
        if self.source.quantale is not self.target.quantale:
            raise CarrierMismatch("source and target quantales differ", {})
        if len(self.function) != self.source.size:
            raise CarrierMismatch("function length differs from source size", {})
        for y in self.function:
            if not 0 <= y < self.target.size:
                raise PointOutOfRange("function value outside target",
                                      {"value": y})
        q = self.source.quantale
        for x, y in enumerate(self.function):
            if not q.le(self.source.membership[x], self.target.membership[y]):
                raise NotGoguen("Goguen condition fails", {
                    "point": x,
                    "alpha": q.label(self.source.membership[x]),
                    "beta": q.label(self.target.membership[y]),
                })

    @classmethod
    def identity(cls, a: FuzzySet) -> "GoguenMap":
        return cls(a, a, tuple(range(a.size)))

    def compose(self, inner: "GoguenMap") -> "GoguenMap":
        """self o inner, defined when inner.target is self.source."""
        if inner.target is not self.source and inner.target != self.source:
            raise CarrierMismatch("composition endpoints do not match", {})
        return GoguenMap(inner.source, self.target,
                         tuple(self.function[x] for x in inner.function))


def is_goguen(f, a: FuzzySet, b: FuzzySet) -> bool:
    """True iff alpha(x) <= beta(f(x)) for all points x."""
    if a.quantale is not b.quantale:
        raise CarrierMismatch("fuzzy sets live over different quantales", {})
    f = tuple(f)
    if len(f) != a.size:
        raise CarrierMismatch("function length differs from source size", {})
    q = a.quantale
    return all(q.le(a.membership[x], b.membership[f[x]]) for x in range(a.size))


def goguen_ok(q: Quantale, f, alpha, beta) -> bool:
    # table-level form used by the exhaustive sweeps
    return all(q.le(alpha[x], beta[f[x]]) for x in range(len(alpha)))


# -- table operations -----------------------------------------------------------


def image(q: Quantale, f, gamma, target_size: int) -> tuple:
    """f(gamma)(y) = join of gamma over the fiber of y; empty fiber gives 0."""
    out = [q.bottom] * target_size
    for x, v in enumerate(gamma):
        y = f[x]
        out[y] = q.join_table[out[y]][v]
    return tuple(out)


def preimage(f, lam) -> tuple:
    """f^{-1}(lam) = lam o f."""
    return tuple(lam[y] for y in f)


def swarrow(q: Quantale, lam, gam) -> int:
    """Graded inclusion lam <swarrow> gam = meet_x ldd(lam(x), gam(x))."""
    if len(lam) != len(gam):
        raise CarrierMismatch("tables live on different carriers",
                              {"sizes": [len(lam), len(gam)]})
    acc = q.top
    for a, b in zip(lam, gam):
        acc = q.meet_table[acc][q.ldd_table[a][b]]
    return acc


def searrow(q: Quantale, gam, lam) -> int:
    """Graded inclusion gam <searrow> lam = meet_x rdd(gam(x), lam(x))."""
    if len(lam) != len(gam):
        raise CarrierMismatch("tables live on different carriers",
                              {"sizes": [len(gam), len(lam)]})
    acc = q.top
    for a, b in zip(gam, lam):
        acc = q.meet_table[acc][q.rdd_table[a][b]]
    return acc


def delta(q: Quantale, r: int, x: int, size: int) -> tuple:
    """The table with value r at point x and bottom elsewhere."""
    if not 0 <= x < size:
        raise PointOutOfRange("point outside carrier", {"point": x, "size": size})
    return tuple(r if i == x else q.bottom for i in range(size))


def constant(r: int, size: int) -> tuple:
    return (r,) * size


def pointwise_meet(q: Quantale, a, b) -> tuple:
    return tuple(q.meet_table[x][y] for x, y in zip(a, b))


def pointwise_join(q: Quantale, a, b) -> tuple:
    return tuple(q.join_table[x][y] for x, y in zip(a, b))


def table_le(q: Quantale, a, b) -> bool:
    return all(q.le(x, y) for x, y in zip(a, b))


def tables(q: Quantale, size: int):
    """All tables in Q^size in codec order (coordinate 0 varies fastest)."""
    for combo in product(range(q.n), repeat=size):
        yield combo[::-1]


def all_maps(size_x: int, size_y: int):
    """All functions size_x -> size_y as tuples (coordinate 0 fastest)."""
    if size_x == 0:
        yield ()
        return
    for combo in product(range(size_y), repeat=size_x):
        yield combo[::-1]


# -- JSON document support --------------------------------------------------------


def fuzzy_set_from_doc(doc: dict, q: Quantale) -> FuzzySet:
    """Load {"carrier": [...], "membership": {point: element}}; omitted
    points default to bottom."""
    labels = tuple(doc["carrier"])
    carrier = Carrier(doc.get("name", "X"), len(labels), labels)
    memb = [q.bottom] * len(labels)
    for point, element in doc.get("membership", {}).items():
        memb[carrier.point(point)] = q.index(element)
    return FuzzySet(q, carrier, tuple(memb))


def fuzzy_set_to_doc(a: FuzzySet) -> dict:
    labels = a.carrier.labels or tuple(str(i) for i in range(a.size))
    return {
        "carrier": list(labels),
        "membership": {labels[x]: a.quantale.label(v)
                       for x, v in enumerate(a.membership)},
        "quantale": a.quantale.name,
    }


def load_fuzzy_set(path: str, q: Quantale) -> FuzzySet:
    with open(path, "r", encoding="utf-8") as fh:
        return fuzzy_set_from_doc(json.load(fh), q)


# -- verification suites ------------------------------------------------------------


def verify_residuation_tables(q: Quantale, max_size: int = 2) -> VerificationReport:
    """The four graded-inclusion laws for meets/joins of table families,
    checked for binary and empty families over all tables at small sizes."""
    rep = VerificationReport("residuation", q.name, {"max_size": max_size})
    lab = q.label

    def run(name, predicate):
        cases = 0
        witness = None
        for size in range(max_size + 1):
            pool = list(tables(q, size))
            for lam1, lam2, gam in product(pool, repeat=3):
                cases += 1
                if witness is None and not predicate(lam1, lam2, gam):
                    witness = {"size": size,
                               "tables": [[lab(v) for v in t]
                                          for t in (lam1, lam2, gam)]}
        rep.add(failed(name, cases, witness) if witness else passed(name, cases))

    run("meet-left-of-swarrow", lambda l1, l2, g:
        swarrow(q, pointwise_meet(q, l1, l2), g)
        == q.meet_table[swarrow(q, l1, g)][swarrow(q, l2, g)])
    run("join-right-of-swarrow", lambda g1, g2, l:
        swarrow(q, l, pointwise_join(q, g1, g2))
        == q.meet_table[swarrow(q, l, g1)][swarrow(q, l, g2)])
    run("meet-right-of-searrow", lambda l1, l2, g:
        searrow(q, g, pointwise_meet(q, l1, l2))
        == q.meet_table[searrow(q, g, l1)][searrow(q, g, l2)])
    run("join-left-of-searrow", lambda g1, g2, l:
        searrow(q, pointwise_join(q, g1, g2), l)
        == q.meet_table[searrow(q, g1, l)][searrow(q, g2, l)])

    # empty families: top <swarrow> gam = 1 and lam <swarrow> bottom-table = 1
    cases = 0
    witness = None
    for size in range(max_size + 1):
        for t in tables(q, size):
            cases += 2
            if witness is not None:
                continue
            if swarrow(q, constant(q.top, size), t) != q.top:
                witness = {"law": "empty meet family", "table": [lab(v) for v in t]}
            elif swarrow(q, t, constant(q.bottom, size)) != q.top:
                witness = {"law": "empty join family", "table": [lab(v) for v in t]}
    rep.add(failed("empty-families", cases, witness) if witness
            else passed("empty-families", cases))
    return rep


def verify_image_preimage(q: Quantale, max_size: int = 2) -> VerificationReport:
    """Image/preimage vs graded inclusion, all maps and tables at small sizes:

    (i)   a >arrow g <= f(a) >arrow f(g), and the swarrow mirror;
    (ii)  f(a) >arrow b = a >arrow f^{-1}(b), and the swarrow mirror;
    (iii) f(a) <= b  iff  a <= b o f.
    """
    rep = VerificationReport("image-preimage", q.name, {"max_size": max_size})
    lab = q.label
    cases = [0, 0, 0]
    witness: list = [None, None, None]

    for sx in range(max_size + 1):
        for sy in range(max_size + 1):
            pool_x = list(tables(q, sx))
            pool_y = list(tables(q, sy))
            for f in all_maps(sx, sy):
                for alpha in pool_x:
                    fa = image(q, f, alpha, sy)
                    for gam in pool_x:
                        cases[0] += 1
                        fg = image(q, f, gam, sy)
                        ok = (q.le(searrow(q, alpha, gam), searrow(q, fa, fg))
                              and q.le(swarrow(q, gam, alpha), swarrow(q, fg, fa)))
                        if not ok and witness[0] is None:
                            witness[0] = {"f": list(f),
                                          "alpha": [lab(v) for v in alpha],
                                          "gamma": [lab(v) for v in gam]}
                    for beta in pool_y:
                        cases[1] += 1
                        pb = preimage(f, beta)
                        ok = (searrow(q, fa, beta) == searrow(q, alpha, pb)
                              and swarrow(q, beta, fa) == swarrow(q, pb, alpha))
                        if not ok and witness[1] is None:
                            witness[1] = {"f": list(f),
                                          "alpha": [lab(v) for v in alpha],
                                          "beta": [lab(v) for v in beta]}
                        cases[2] += 1
                        ok = table_le(q, fa, beta) == table_le(q, alpha, pb)
                        if not ok and witness[2] is None:
                            witness[2] = {"f": list(f),
                                          "alpha": [lab(v) for v in alpha],
                                          "beta": [lab(v) for v in beta]}

    names = ("image-monotone-inclusions", "image-preimage-transpose",
             "image-adjoint-order")
    for i, name in enumerate(names):
        rep.add(failed(name, cases[i], witness[i]) if witness[i]
                else passed(name, cases[i]))
    return rep
