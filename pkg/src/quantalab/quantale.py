"""Finite unital quantales: construction, validation, residuation tables.

A quantale here is a finite complete lattice with an associative tensor
that has a unit and distributes over joins on both sides.  Elements are
canonicalized to dense indices 0..n-1 in carrier order and every
operation is a table lookup; the two residuals

    ldd(r, q) = join{ p : p * q <= r }     (left implication,  r "over" q)
    rdd(p, r) = join{ q : p * q <= r }     (right implication, p "under" r)

are precomputed eagerly because all higher modules read them in inner
loops.  On a finite lattice, distributivity over binary joins plus bottom
absorption is equivalent to distributivity over arbitrary suprema, which
is what construction validates.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import product

from .errors import (
    BadParameter,
    NotALattice,
    NotAssociative,
    NotDistributive,
    UnitLawFails,
    UnknownLabel,
)
from .report import VerificationReport, failed, passed


class Quantale:
    """Immutable finite unital quantale with index-addressed tables.

    Attributes:
        name: display name
        labels: element labels, position = element index
        n: carrier size (>= 2)
        leq: n x n boolean table, leq[p][q] iff p <= q
        join_table, meet_table: n x n element tables
        tensor_table: n x n element table, row p, column q = p * q
        unit, bottom, top: element indices
        ldd_table: ldd_table[r][q] = r over q
        rdd_table: rdd_table[p][r] = p under r
        commutative: derived flag
    """

    __slots__ = (
        "name", "labels", "n", "leq", "join_table", "meet_table",
        "tensor_table", "unit", "bottom", "top", "ldd_table", "rdd_table",
        "commutative", "_index",
    )

    def __init__(self, name, labels, leq, tensor_table, unit, *, validate=True):
        if len(labels) < 2:
            raise BadParameter(
                "a quantale needs at least two elements",
                {"size": len(labels)},
            )
        self.name = name
        self.labels = tuple(labels)
        self.n = len(labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != self.n:
            dup = next(l for l in labels if labels.count(l) > 1)
            raise BadParameter("duplicate element label", {"label": dup})
        self.leq = tuple(tuple(row) for row in leq)
        self.tensor_table = tuple(tuple(row) for row in tensor_table)
        self.unit = unit
        _check_order(self)
        self.join_table, self.meet_table = _lub_glb_tables(self)
        self.bottom, self.top = _extremes(self)
        if validate:
            _validate_monoid(self)
        self.ldd_table, self.rdd_table = _residual_tables(self)
        self.commutative = all(
            self.tensor_table[p][q] == self.tensor_table[q][p]
            for p in range(self.n) for q in range(self.n)
        )

    # -- element bookkeeping -------------------------------------------------

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel("unknown element label", {"label": label}) from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def __repr__(self):
        return f"Quantale({self.name!r}, n={self.n})"

    # -- lattice and monoid operations ---------------------------------------

    def le(self, p: int, q: int) -> bool:
        return self.leq[p][q]

    def join(self, elements) -> int:
        """Least upper bound; the empty join is bottom."""
        acc = self.bottom
        for x in elements:
            acc = self.join_table[acc][x]
        return acc

    def meet(self, elements) -> int:
        """Greatest lower bound; the empty meet is top."""
        acc = self.top
        for x in elements:
            acc = self.meet_table[acc][x]
        return acc

    def tensor(self, p: int, q: int) -> int:
        return self.tensor_table[p][q]

    def ldd(self, r: int, q: int) -> int:
        return self.ldd_table[r][q]

    def rdd(self, p: int, r: int) -> int:
        return self.rdd_table[p][r]


# -- construction helpers ----------------------------------------------------


def _check_order(q: Quantale) -> None:
    n, leq = q.n, q.leq
    for p in range(n):
        if not leq[p][p]:
            raise NotALattice("order is not reflexive", {"element": q.labels[p]})
    for p in range(n):
        for r in range(n):
            if p != r and leq[p][r] and leq[r][p]:
                raise NotALattice(
                    "order is not antisymmetric",
                    {"pair": [q.labels[p], q.labels[r]]},
                )
    for p in range(n):
        for r in range(n):
            if not leq[p][r]:
                continue
            for s in range(n):
                if leq[r][s] and not leq[p][s]:
                    raise NotALattice(
                        "order is not transitive",
                        {"chain": [q.labels[p], q.labels[r], q.labels[s]]},
                    )


def _lub_glb_tables(q: Quantale):
    n, leq = q.n, q.leq
    join_t = [[0] * n for _ in range(n)]
    meet_t = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            uppers = [c for c in range(n) if leq[a][c] and leq[b][c]]
            lub = next((c for c in uppers if all(leq[c][d] for d in uppers)), None)
            lowers = [c for c in range(n) if leq[c][a] and leq[c][b]]
            glb = next((c for c in lowers if all(leq[d][c] for d in lowers)), None)
            if lub is None or glb is None:
                raise NotALattice(
                    "pair has no join or no meet",
                    {"pair": [q.labels[a], q.labels[b]],
                     "missing": "join" if lub is None else "meet"},
                )
            join_t[a][b] = lub
            meet_t[a][b] = glb
    return tuple(map(tuple, join_t)), tuple(map(tuple, meet_t))


def _extremes(q: Quantale):
    n, leq = q.n, q.leq
    bottom = next((b for b in range(n) if all(leq[b][x] for x in range(n))), None)
    top = next((t for t in range(n) if all(leq[x][t] for x in range(n))), None)
    if bottom is None or top is None:
        raise NotALattice("no global bottom or top", {})
    return bottom, top


def _validate_monoid(q: Quantale) -> None:
    for name, cases, witness in _monoid_law_scan(q):
        if witness is not None:
            if name == "tensor-associative":
                raise NotAssociative("tensor is not associative", witness)
            if name == "tensor-unit":
                raise UnitLawFails("declared unit is not neutral", witness)
            raise NotDistributive("tensor does not distribute over joins", witness)


def _monoid_law_scan(q: Quantale):
    """Yield (law name, case count, first witness or None) for the monoid laws."""
    n, t = q.n, q.tensor_table
    lab = q.labels

    witness = None
    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            witness = {
                "args": [lab[a], lab[b], lab[c]],
                "lhs": lab[t[t[a][b]][c]],
                "rhs": lab[t[a][t[b][c]]],
            }
            break
    yield "tensor-associative", n ** 3, witness

    witness = None
    k = q.unit
    for x in range(n):
        if t[k][x] != x or t[x][k] != x:
            witness = {"unit": lab[k], "element": lab[x],
                       "left": lab[t[k][x]], "right": lab[t[x][k]]}
            break
    yield "tensor-unit", n, witness

    witness = None
    jt, bot = q.join_table, q.bottom
    for p in range(n):
        if t[p][bot] != bot or t[bot][p] != bot:
            witness = {"element": lab[p], "law": "bottom absorption"}
            break
    if witness is None:
        for p, a, b in product(range(n), repeat=3):
            if t[p][jt[a][b]] != jt[t[p][a]][t[p][b]]:
                witness = {"side": "left", "args": [lab[p], lab[a], lab[b]],
                           "lhs": lab[t[p][jt[a][b]]],
                           "rhs": lab[jt[t[p][a]][t[p][b]]]}
                break
            if t[jt[a][b]][p] != jt[t[a][p]][t[b][p]]:
                witness = {"side": "right", "args": [lab[a], lab[b], lab[p]],
                           "lhs": lab[t[jt[a][b]][p]],
                           "rhs": lab[jt[t[a][p]][t[b][p]]]}
                break
    yield "tensor-distributes", 2 * n ** 3 + 2 * n, witness


def _residual_tables(q: Quantale):
    n, t = q.n, q.tensor_table
    ldd_t = [[0] * n for _ in range(n)]
    rdd_t = [[0] * n for _ in range(n)]
    for r in range(n):
        for x in range(n):
            ldd_t[r][x] = q.join(p for p in range(n) if q.leq[t[p][x]][r])
            rdd_t[x][r] = q.join(p for p in range(n) if q.leq[t[x][p]][r])
    return tuple(map(tuple, ldd_t)), tuple(map(tuple, rdd_t))


# -- builders ------------------------------------------------------------------


def build_quantale(doc: dict) -> Quantale:
    """Build and fully validate a quantale from its definition document.

    Document shape::

        {"name": str,
         "elements": [label, ...],
         "leq": [[a, b], ...],        # generating pairs, a <= b; the
                                      # reflexive-transitive closure is taken
         "tensor": [[label, ...], ...],  # row p, column q, entry p * q
         "unit": label}

    Raises NotALattice / NotAssociative / UnitLawFails / NotDistributive /
    UnknownLabel / BadParameter with a minimal witness.
    """
    for key in ("elements", "leq", "tensor", "unit"):
        if key not in doc:
            raise BadParameter("missing document field", {"field": key})
    labels = list(doc["elements"])
    if len(labels) < 2:
        raise BadParameter("a quantale needs at least two elements",
                           {"size": len(labels)})
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise BadParameter("duplicate element label", {"elements": labels})
    n = len(labels)

    def look(lab):
        if lab not in index:
            raise UnknownLabel("unknown element label", {"label": lab})
        return index[lab]

    rel = [[False] * n for _ in range(n)]
    for i in range(n):
        rel[i][i] = True
    for pair in doc["leq"]:
        if len(pair) != 2:
            raise BadParameter("leq entries must be pairs", {"entry": pair})
        a, b = look(pair[0]), look(pair[1])
        rel[a][b] = True
    for k in range(n):  # Warshall closure
        for i in range(n):
            if rel[i][k]:
                row_k = rel[k]
                row_i = rel[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True

    tensor = doc["tensor"]
    if len(tensor) != n or any(len(row) != n for row in tensor):
        raise BadParameter("tensor table must be n x n", {"n": n})
    tensor_idx = [[look(entry) for entry in row] for row in tensor]
    unit = look(doc["unit"])
    return Quantale(doc.get("name", "quantale"), labels, rel, tensor_idx, unit)


def _chain(n: int):
    leq = [[i <= j for j in range(n)] for i in range(n)]
    labels = [str(Fraction(i, n - 1)) for i in range(n)]
    return labels, leq


def builtin_quantale(family: str) -> Quantale:
    """One of the builtin families: bool, godel:n, lukasiewicz:n, endo:n.

    bool is the two-element Boolean algebra with meet as tensor; godel:n is
    the n-chain with min; lukasiewicz:n is the n-chain {0, 1/(n-1), ..., 1}
    with a * b = max(0, a + b - 1); endo:n is the quantale of monotone
    bottom-preserving self-maps of the n-chain under composition
    (f * g = f o g), pointwise order -- a noncommutative test case.
    """
    parts = family.split(":")
    kind = parts[0]
    if kind == "bool":
        if len(parts) != 1:
            raise BadParameter("bool takes no parameter", {"family": family})
        n = 2
    elif kind in ("godel", "lukasiewicz", "endo"):
        if len(parts) != 2 or not parts[1].isdigit():
            raise BadParameter("expected family:n", {"family": family})
        n = int(parts[1])
        if n < 2:
            raise BadParameter("family parameter must be >= 2", {"n": n})
    else:
        raise BadParameter("unknown builtin family", {"family": family})

    if kind == "bool" or kind == "godel":
        labels, leq = _chain(2 if kind == "bool" else n)
        m = len(labels)
        tensor = [[min(i, j) for j in range(m)] for i in range(m)]
        return Quantale(family, labels, leq, tensor, m - 1)

    if kind == "lukasiewicz":
        labels, leq = _chain(n)
        tensor = [[max(0, i + j - (n - 1)) for j in range(n)] for i in range(n)]
        return Quantale(family, labels, leq, tensor, n - 1)

    # endo:n -- monotone maps f on the n-chain with f(0) = 0, ordered
    # pointwise; carrier elements are labeled by their values at points 1..n-1
    maps = sorted(
        f for f in product(range(n), repeat=n)
        if f[0] == 0 and all(f[i] <= f[i + 1] for i in range(n - 1))
    )
    labels = ["(" + ",".join(str(v) for v in f[1:]) + ")" for f in maps]
    m = len(maps)
    leq = [[all(maps[i][x] <= maps[j][x] for x in range(n)) for j in range(m)]
           for i in range(m)]
    pos = {f: i for i, f in enumerate(maps)}
    tensor = [[pos[tuple(maps[i][maps[j][x]] for x in range(n))]
               for j in range(m)] for i in range(m)]
    unit = pos[tuple(range(n))]
    return Quantale(family, labels, leq, tensor, unit)


def load_quantale(ref: str) -> Quantale:
    """Resolve "builtin:..." or a path to a JSON definition document."""
    if ref.startswith("builtin:"):
        return builtin_quantale(ref[len("builtin:"):])
    with open(ref, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise BadParameter("quantale document must be a JSON object", {})
    return build_quantale(doc)


def with_tensor_entry(q: Quantale, p: int, r: int, value: int) -> Quantale:
    """Mutation-testing hook: rebuild with one corrupted tensor entry.

    Skips monoid/distributivity validation so the broken table survives to
    be caught by verify_quantale_laws; residual tables are recomputed from
    the corrupted tensor.
    """
    tensor = [list(row) for row in q.tensor_table]
    tensor[p][r] = value
    return Quantale(q.name + "+mutated", q.labels, q.leq, tensor, q.unit,
                    validate=False)


# -- verification ---------------------------------------------------------------


def verify_quantale_laws(q: Quantale) -> VerificationReport:
    """Exhaustively check the lattice, monoid, distributivity, residuation
    adjunction, and the six standard implication identities."""
    rep = VerificationReport("quantale-laws", q.name, {"n": q.n})
    n, lab = q.n, q.labels
    t, jt, mt = q.tensor_table, q.join_table, q.meet_table
    le = q.leq
    ldd, rdd = q.ldd_table, q.rdd_table

    # lattice sanity: the tables really are lubs/glbs for the order
    witness = None
    for a, b in product(range(n), repeat=2):
        j, m = jt[a][b], mt[a][b]
        if not (le[a][j] and le[b][j] and le[m][a] and le[m][b]):
            witness = {"pair": [lab[a], lab[b]]}
            break
        if any(le[a][c] and le[b][c] and not le[j][c] for c in range(n)):
            witness = {"pair": [lab[a], lab[b]], "join-not-least": True}
            break
        if any(le[c][a] and le[c][b] and not le[c][m] for c in range(n)):
            witness = {"pair": [lab[a], lab[b]], "meet-not-greatest": True}
            break
    rep.add(failed("lattice-bounds", n * n, witness) if witness
            else passed("lattice-bounds", n * n))

    for name, cases, witness in _monoid_law_scan(q):
        rep.add(failed(name, cases, witness) if witness else passed(name, cases))

    # Galois adjunction: p*q <= r  iff  p <= r over q  iff  q <= p under r
    witness = None
    for p, x, r in product(range(n), repeat=3):
        a = le[t[p][x]][r]
        b = le[p][ldd[r][x]]
        c = le[x][rdd[p][r]]
        if not (a == b == c):
            witness = {"args": [lab[p], lab[x], lab[r]],
                       "tensor<=r": a, "p<=ldd": b, "q<=rdd": c}
            break
    rep.add(failed("residuation-adjunction", n ** 3, witness) if witness
            else passed("residuation-adjunction", n ** 3))

    k = q.unit

    def law(name, cases, gen):
        witness = next((w for w in gen if w is not None), None)
        rep.add(failed(name, cases, witness) if witness else passed(name, cases))

    law("impl-unit-reflects-order", n * n, (
        None if (le[k][ldd[y][x]] == le[x][y] == le[k][rdd[x][y]]) else
        {"args": [lab[x], lab[y]]}
        for x, y in product(range(n), repeat=2)))

    law("impl-unit-neutral", n, (
        None if (ldd[x][k] == x == rdd[k][x]) else
        {"element": lab[x], "ldd": lab[ldd[x][k]], "rdd": lab[rdd[k][x]]}
        for x in range(n)))

    law("impl-exchange", n ** 3, (
        None if ldd[rdd[y][z]][x] == rdd[y][ldd[z][x]] else
        {"args": [lab[x], lab[y], lab[z]]}
        for x, y, z in product(range(n), repeat=3)))

    law("impl-counit", n * n, (
        None if (le[t[ldd[y][x]][x]][y] and le[t[x][rdd[x][y]]][y]) else
        {"args": [lab[x], lab[y]]}
        for x, y in product(range(n), repeat=2)))

    law("impl-currying", 2 * n ** 3, (
        None if (ldd[ldd[z][y]][x] == ldd[z][t[x][y]]
                 and rdd[x][rdd[y][z]] == rdd[t[y][x]][z]) else
        {"args": [lab[x], lab[y], lab[z]]}
        for x, y, z in product(range(n), repeat=3)))

    law("impl-composition", 2 * n ** 3, (
        None if (le[t[ldd[z][y]][ldd[y][x]]][ldd[z][x]]
                 and le[t[rdd[x][y]][rdd[y][z]]][rdd[x][z]]) else
        {"args": [lab[x], lab[y], lab[z]]}
        for x, y, z in product(range(n), repeat=3)))

    # the commutative flag has to match the tables it summarizes
    witness = None
    if q.commutative:
        for x, r in product(range(n), repeat=2):
            if ldd[r][x] != rdd[x][r]:
                witness = {"args": [lab[x], lab[r]],
                           "ldd": lab[ldd[r][x]], "rdd": lab[rdd[x][r]]}
                break
    else:
        if all(t[a][b] == t[b][a] for a in range(n) for b in range(n)):
            witness = {"flag": "false but tensor commutes"}
    rep.add(failed("commutative-flag", n * n, witness) if witness
            else passed("commutative-flag", n * n))
    return rep
