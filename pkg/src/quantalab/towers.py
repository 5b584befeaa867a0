"""Function-space towers Q^X, Q^{Q^X}, ... : codec, enumeration, sampling.

Spaces are described by (quantale, base carrier size, level) where level 0
is the carrier itself, level 1 is Q^X, level 2 is Q^{Q^X}, and so on.  A
function at level L+1 is represented either as a materialized table (a
tuple indexed by the canonical index of its level-L argument) or as a
procedural evaluator.

Canonical index codec
    A function g maps to the base-|Q| positional code sum_i g(i) * |Q|^i
    over argument indices i, so coordinate 0 is the least significant
    digit.  The codec is bijective and order-stable; every enumeration in
    the package walks it in increasing index order.

Seeded sampling
    All pseudorandomness comes from the splitmix64 mix-and-split scheme
    (64-bit adds/xors/multiplies), so sampled functions and hence whole
    reports are reproducible bit-for-bit across platforms.  A sampled
    function over an enumerable space is drawn uniformly by index.  Over a
    space too large to enumerate it is procedural: its value at an
    argument is a seeded hash of the argument's canonical key.  The
    canonical key of an argument is its full codec index while the
    argument's own argument space stays small (<= KEY_FULL_LIMIT entries),
    and otherwise a fingerprint: the tuple of the argument's values at a
    fixed, seed-independent probe family of its argument space.  Keys
    depend only on the argument's extension, never on its representation,
    so a sampled procedural function is a genuine, well-defined element of
    its space; hashing merely makes it uniform per distinguishable
    argument class rather than uniform over the whole (doubly exponential)
    space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BadParameter, CapExceeded
from .quantale import Quantale

DEFAULT_CAP = 1_000_000
CARD_LIMIT = 10 ** 18
KEY_FULL_LIMIT = 4096
PROBE_COUNT = 8

MASK64 = (1 << 64) - 1
_PROBE_SALT = 0x9E3779B97F4A7C15
_MIX_SEED = 0x243F6A8885A308D3


def splitmix64(x: int) -> int:
    """One output of the splitmix64 generator for state x."""
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def _fold(h: int, v: int) -> int:
    # absorb an arbitrarily large nonnegative integer 64 bits at a time
    while True:
        h = splitmix64(h ^ (v & MASK64))
        v >>= 64
        if not v:
            return h


def mix(*values: int) -> int:
    """Deterministically fold integers into one 64-bit hash."""
    h = _MIX_SEED
    for v in values:
        h = _fold(h, v)
    return h


def element_of(n: int, h: int) -> int:
    """Map a 64-bit hash to an element index in range(n), near-uniformly."""
    return (h * n) >> 64


@dataclass(frozen=True)
class Space:
    """Level-L function space over a finite carrier.

    cardinality is the exact count of elements, or None once it exceeds
    CARD_LIMIT (the overflow marker propagates upward through levels).
    """

    quantale: Quantale
    base_size: int
    level: int

    def __post_init__(self):
        if self.base_size < 0 or self.level < 0:
            raise BadParameter("space dimensions must be nonnegative",
                               {"base_size": self.base_size, "level": self.level})

    @property
    def cardinality(self) -> int | None:
        return _cardinality(self.quantale.n, self.base_size, self.level)

    def arg_space(self) -> "Space":
        if self.level == 0:
            raise BadParameter("level-0 spaces have no argument space", {})
        return Space(self.quantale, self.base_size, self.level - 1)

    def lifted(self, by: int = 2) -> "Space":
        return Space(self.quantale, self.base_size, self.level + by)

    def _dims(self) -> tuple[int, int, int]:
        return (self.quantale.n, self.base_size, self.level)


@lru_cache(maxsize=None)
def _cardinality(n: int, base: int, level: int) -> int | None:
    c: int | None = base
    for _ in range(level):
        if c is None or c > 64:
            return None
        c = n ** c
        if c > CARD_LIMIT:
            return None
    return c


@dataclass(frozen=True)
class Functional:
    """An element of a level >= 1 space: a table or a procedural evaluator.

    Tables are indexed by the canonical index of the argument; procedural
    evaluators receive the argument as an int (point, when the space is
    level 1) or as a Functional, and must be deterministic.
    """

    space: Space
    table: tuple | None = None
    fn: object = None

    def __post_init__(self):
        if self.space.level < 1:
            raise BadParameter("functionals live at level >= 1", {})
        if (self.table is None) == (self.fn is None):
            raise BadParameter("exactly one of table/fn is required", {})

    def __call__(self, arg, cap: int = DEFAULT_CAP) -> int:
        return apply(self, arg, cap)


def func(space: Space, table_or_fn) -> Functional:
    if callable(table_or_fn):
        return Functional(space, fn=table_or_fn)
    return Functional(space, table=tuple(table_or_fn))


# -- codec ---------------------------------------------------------------------


def encode(space: Space, table) -> int:
    """Canonical index of a materialized function in its space."""
    n = space.quantale.n
    acc = 0
    for v in reversed(table):
        acc = acc * n + v
    return acc


def decode(space: Space, index: int, cap: int = DEFAULT_CAP) -> tuple:
    """Inverse of encode; needs the argument space to be enumerable."""
    length = _arg_count(space, cap)
    n = space.quantale.n
    out = []
    for _ in range(length):
        index, d = divmod(index, n)
        out.append(d)
    return tuple(out)


def index_codec(space: Space, cap: int = DEFAULT_CAP):
    """The (encode, decode) bijection for an enumerable space."""
    _arg_count(space, cap)
    return (lambda table: encode(space, table),
            lambda index: decode(space, index, cap))


def _arg_count(space: Space, cap: int) -> int:
    count = space.arg_space().cardinality
    if count is None or count > cap:
        raise CapExceeded("argument space exceeds cap",
                          {"space": space._dims(), "cap": cap})
    return count


def enumerate_functions(space: Space, cap: int = DEFAULT_CAP):
    """All functions of the space as tables, in codec order."""
    card = space.cardinality
    if card is None or card > cap:
        raise CapExceeded("space exceeds cap",
                          {"space": space._dims(), "cap": cap})
    if space.level == 0:
        yield from range(card)
        return
    length = _arg_count(space, cap)
    n = space.quantale.n
    digits = [0] * length
    for _ in range(card):
        yield tuple(digits)
        for j in range(length):  # odometer increment, digit 0 fastest
            digits[j] += 1
            if digits[j] < n:
                break
            digits[j] = 0


def space_elements(space: Space, cap: int = DEFAULT_CAP):
    """Points for level 0, tables otherwise."""
    return enumerate_functions(space, cap)


# -- application ------------------------------------------------------------------


def as_index(arg, space: Space, cap: int = DEFAULT_CAP) -> int:
    """Canonical index of arg viewed as an element of `space`."""
    if isinstance(arg, int):
        return arg
    if isinstance(arg, tuple):
        return encode(space, arg)
    return encode(space, materialize(arg, cap).table)


def as_element(arg, space: Space, cap: int = DEFAULT_CAP):
    """Normalize arg to an int (level 0) or a Functional in `space`."""
    if space.level == 0:
        if isinstance(arg, int):
            return arg
        raise BadParameter("level-0 arguments are point indices", {"arg": arg})
    if isinstance(arg, Functional):
        return arg
    if isinstance(arg, tuple):
        return Functional(space, table=arg)
    return Functional(space, table=decode(space, arg, cap))


def apply(f: Functional, arg, cap: int = DEFAULT_CAP) -> int:
    """Evaluate a functional at an argument of either representation."""
    if f.table is not None:
        return f.table[as_index(arg, f.space.arg_space(), cap)]
    return f.fn(as_element(arg, f.space.arg_space(), cap))


def materialize(f: Functional, cap: int = DEFAULT_CAP) -> Functional:
    """Tabulate a procedural evaluator over its whole argument space."""
    if f.table is not None:
        return f
    argsp = f.space.arg_space()
    table = tuple(apply(f, a, cap) for a in space_elements(argsp, cap))
    return Functional(f.space, table=table)


def hat(g, space: Space | None = None) -> Functional:
    """Two levels up: hat(g)(L) = L(g)."""
    if isinstance(g, Functional):
        space = g.space
    elif space is None:
        raise BadParameter("hat of a bare table needs its space", {})
    else:
        g = Functional(space, table=tuple(g))
    return Functional(space.lifted(2), fn=lambda lam, _g=g: apply(lam, _g))


# -- canonical keys and probes ------------------------------------------------------


def canonical_key(arg, space: Space, cap: int = DEFAULT_CAP) -> int:
    """Extensional key for hashing: full codec index when the argument
    space is small, otherwise a probe fingerprint."""
    if space.level == 0:
        return arg if isinstance(arg, int) else int(arg)
    count = space.arg_space().cardinality
    if count is not None and count <= KEY_FULL_LIMIT:
        return as_index(arg, space, cap)
    g = as_element(arg, space, cap)
    h = mix(*space._dims())
    for p in probes(space.arg_space()):
        h = _fold(h, apply(g, p, cap))
    return h


@lru_cache(maxsize=None)
def probes(space: Space) -> tuple:
    """Fixed probe family of a space, used to fingerprint arguments one
    level up.  Probes are procedural and ground out at enumerable levels
    through canonical_key recursion."""
    if space.level == 0:
        return tuple(element_of(space.base_size or 1,
                                mix(_PROBE_SALT, *space._dims(), i))
                     for i in range(PROBE_COUNT))
    n = space.quantale.n
    argsp = space.arg_space()
    out = []
    for i in range(PROBE_COUNT):
        salt = mix(_PROBE_SALT, *space._dims(), i)
        out.append(Functional(
            space,
            fn=lambda a, _s=salt, _sp=argsp: element_of(
                n, mix(_s, canonical_key(a, _sp))),
        ))
    return tuple(out)


# -- sampling ----------------------------------------------------------------------


def sample_function(space: Space, count: int, seed: int,
                    cap: int = DEFAULT_CAP) -> list[Functional]:
    """Deterministic seeded sample of `count` functions from the space.

    Uniform by index over enumerable spaces; procedural hash-of-key
    functions otherwise (see the module docstring for the exact scheme).
    """
    card = space.cardinality
    n = space.quantale.n
    out = []
    for t in range(count):
        h = mix(seed, t, *space._dims())
        if card is not None and card <= cap:
            out.append(Functional(space, table=decode(space, element_of(card, h), cap)))
        else:
            argsp = space.arg_space()
            out.append(Functional(
                space,
                fn=lambda a, _h=h, _sp=argsp: element_of(
                    n, mix(_h, canonical_key(a, _sp, cap))),
            ))
    return out
