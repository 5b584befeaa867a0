"""Command-line surface: load quantales, run named suites, enumerate.

Exit codes: 0 all checks pass, 1 at least one check fails, 2 malformed
input or usage error.  The JSON report written with --json is canonical
and byte-identical across runs with the same suite, parameters, and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebras, fuzzy, monads, quantale, submonads
from .errors import (
    BadParameter,
    CapExceeded,
    NotALattice,
    NotAssociative,
    NotDistributive,
    QuantalabError,
    UnitLawFails,
    UnknownLabel,
)
from .report import VerificationReport, failed

_LAW_ERRORS = (NotALattice, NotAssociative, UnitLawFails, NotDistributive)


def _suite_registry():
    def mk(fn):
        return fn

    reg = {
        "quantale-laws": mk(lambda q, a: quantale.verify_quantale_laws(q)),
        "residuation": mk(lambda q, a: fuzzy.verify_residuation_tables(
            q, a.max_size)),
        "image-preimage": mk(lambda q, a: fuzzy.verify_image_preimage(
            q, a.max_size)),
        "goguen-structure-maps": mk(lambda q, a: monads.goguen_structure_maps(
            q, a.max_size, a.cap)),
        "adjunction": mk(lambda q, a: monads.verify_adjunction(
            q, a.max_size, a.cap)),
        "step1": mk(lambda q, a: submonads.step1_check(q, a.max_size, a.cap)),
        "qfilter-axioms": mk(lambda q, a: _qfilter_suite(q, a)),
        "kowalsky": mk(lambda q, a: _kowalsky_suite(q, a)),
        "em-base": mk(lambda q, a: algebras.em_base_suite(
            q, a.max_size, a.cap)),
        "em-goguen": mk(lambda q, a: algebras.em_goguen_agreement(
            q, a.max_size, a.cap)),
        "module-order-roundtrip": mk(lambda q, a: algebras.module_order_roundtrip(
            q, a.max_size, a.cap)),
        "reflects-iso": mk(lambda q, a: algebras.reflects_iso_check(
            q, a.max_size)),
        "coequalizer": mk(lambda q, a: algebras.coequalizer_suite(
            q, min(a.max_size, 2), 3, 2, a.cap)),
        "beck-chevalley": mk(lambda q, a: monads.beck_chevalley_suite(
            q, a.max_size, a.cap)),
        "noncomm-witness": mk(lambda q, a: monads.noncommutative_witness(
            q, a.max_size)),
    }
    for tag in ("U", "W", "P2", "expQ", "expQ2", "F"):
        reg[f"monad:{tag}"] = mk(
            lambda q, a, _t=tag: monads.verify_monad_laws(
                _t, q, a.max_size, a.cap, "sampled", a.samples, a.seed))
    reg["monad:powerset-lift"] = mk(
        lambda q, a: monads.powerset_lift_check(
            q, max(a.max_size, 3), a.cap, "sampled", a.samples, a.seed))
    for tag in ("U", "W", "P2", "F"):
        reg[f"lifting:{tag}"] = mk(
            lambda q, a, _t=tag: monads.verify_lifting(
                _t, q, a.max_size, a.cap, a.samples, a.seed))
    for which in ("exp-in-expQ", "U-in-P2", "F-in-P2"):
        reg[f"submonad:{which}"] = mk(
            lambda q, a, _w=which: submonads.verify_monad_map(
                _w, q, a.max_size, a.cap))
    return reg


def _qfilter_suite(q, a) -> VerificationReport:
    from .report import passed
    rep = VerificationReport("qfilter-axioms", q.name,
                             {"max_size": a.max_size, "cap": a.cap})
    counts = {}
    witness = None
    cases = 0
    sharp_cases = 0
    sharp_witness = None
    for size in range(a.max_size + 1):
        try:
            filters = submonads.enumerate_qfilters(q, size, a.cap)
        except CapExceeded:
            continue
        counts[size] = len(filters)
        for x in range(size):
            cases += 1
            try:
                submonads.eta_filter(q, size, x, a.cap)
            except AssertionError as exc:
                if witness is None:
                    witness = {"size": size, "x": x, "error": str(exc)}
        for filt in filters:
            sharp_cases += 1
            if not filt.sharp and sharp_witness is None:
                sharp_witness = {"size": size, "table": list(filt.table)}
    rep.add(failed("evaluation-functionals-are-filters", cases, witness)
            if witness else passed("evaluation-functionals-are-filters", cases))
    rep.add(failed("f2-f4-sharp-equalities", sharp_cases, sharp_witness)
            if sharp_witness else passed("f2-f4-sharp-equalities", sharp_cases))
    count_check = passed("filter-counts", sum(counts.values()))
    count_check.note = ", ".join(f"size {s}: {c}" for s, c in counts.items())
    rep.add(count_check)
    return rep


def _kowalsky_suite(q, a) -> VerificationReport:
    from .report import passed
    rep = VerificationReport("kowalsky", q.name,
                             {"max_size": a.max_size, "cap": a.cap})
    cases = 0
    witness = None
    for size in range(a.max_size + 1):
        try:
            filters = submonads.enumerate_qfilters(q, size, a.cap)
            doubles = submonads.enumerate_filter_functionals(q, filters, a.cap)
        except CapExceeded:
            continue
        for big_f in doubles:
            cases += 1
            try:
                submonads.kowalsky_sum(q, size, big_f, filters, a.cap)
            except AssertionError as exc:
                if witness is None:
                    witness = {"size": size, "functional": list(big_f),
                               "error": str(exc)}
    rep.add(failed("kowalsky-closure-and-mu-identity", cases, witness)
            if witness else passed("kowalsky-closure-and-mu-identity", cases))
    return rep


def _emit(rep: VerificationReport, json_path: str | None) -> int:
    for line in rep.summary_lines():
        print(line)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(rep.to_json())
    return 0 if rep.overall == "pass" else 1


def cmd_check_quantale(args) -> int:
    try:
        q = quantale.load_quantale(args.quantale)
    except _LAW_ERRORS as exc:
        rep = VerificationReport("check-quantale", args.quantale, {})
        rep.add(failed(type(exc).__name__, 0,
                       dict(exc.witness, message=str(exc).split(" (")[0])))
        return _emit(rep, args.json)
    except (OSError, json.JSONDecodeError, UnknownLabel, BadParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep = quantale.verify_quantale_laws(q)
    rep.suite = "check-quantale"
    return _emit(rep, args.json)


def cmd_verify(args) -> int:
    reg = _suite_registry()
    if args.suite not in reg:
        print(f"error: unknown suite {args.suite!r}; available: "
              f"{', '.join(sorted(reg))}", file=sys.stderr)
        return 2
    try:
        q = quantale.load_quantale(args.quantale)
    except (OSError, json.JSONDecodeError, QuantalabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        rep = reg[args.suite](q, args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep.params.setdefault("cap", args.cap)
    rep.params.setdefault("samples", args.samples)
    rep.params.setdefault("seed", args.seed)
    return _emit(rep, args.json)


def cmd_enumerate(args) -> int:
    try:
        q = quantale.load_quantale(args.quantale)
    except (OSError, json.JSONDecodeError, QuantalabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.kind == "filters":
            items = submonads.enumerate_qfilters(q, args.size, args.cap)
            docs = [submonads.filter_to_doc(f) for f in items]
        else:
            items = algebras.enumerate_em_algebras("expQ" if args.base == "expQ"
                                                   else "exp",
                                                   q, args.size, args.cap)
            docs = [{"tag": a.tag, "size": a.size, "h": list(a.h)}
                    for a in items]
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"count: {len(items)}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(json.dumps({"kind": args.kind, "quantale": q.name,
                                 "size": args.size, "count": len(items),
                                 "items": docs},
                                sort_keys=True, separators=(",", ":")) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="quantalab",
        description="Finite verification lab for quantale-valued fuzzy set "
                    "constructions.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check-quantale",
                       help="validate a quantale document or builtin")
    c.add_argument("quantale", help="path to JSON document or builtin:NAME")
    c.add_argument("--json", help="write the JSON report here")
    c.set_defaults(fn=cmd_check_quantale)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite")
    v.add_argument("--quantale", required=True)
    v.add_argument("--max-size", dest="max_size", type=int, default=2)
    v.add_argument("--cap", type=int, default=1_000_000)
    v.add_argument("--samples", type=int, default=256)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--json", help="write the JSON report here")
    v.set_defaults(fn=cmd_verify)

    e = sub.add_parser("enumerate", help="list filters or algebras")
    e.add_argument("kind", choices=["filters", "algebras"])
    e.add_argument("--quantale", required=True)
    e.add_argument("--size", type=int, required=True)
    e.add_argument("--base", choices=["exp", "expQ"], default="exp",
                   help="base monad for algebra enumeration")
    e.add_argument("--cap", type=int, default=1_000_000)
    e.add_argument("--json", help="write the JSON listing here")
    e.set_defaults(fn=cmd_enumerate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
