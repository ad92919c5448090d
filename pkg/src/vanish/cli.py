"""Command-line front end.

Subcommands operate on named ideals from a self-describing ideal file
(see :mod:`vanish.idealfile`) or on the bundled fixture suites. Output
is deterministic: identical inputs and flags produce byte-identical
reports. Timings are only included when explicitly requested, since
they would break that guarantee.

Exit codes: 0 success, 1 claim failure, 2 usage or parse error,
3 resource-cap abort.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import config
from .errors import (
    OrdSearchCapError,
    ParseError,
    RingMismatchError,
    TermCapExceededError,
    UncertifiedSymbolicPowerError,
    UnitIdealError,
    VanishError,
    WitnessError,
    ZeroDivisorRequestError,
)
from .fixtures import fixture_reports
from .idealfile import IdealFile
from .local import associativity_check, multiplicity_graded, ord_along, symbolic_power
from .orders import GREVLEX, GRLEX, LEX, MonomialOrder
from .parser import parse_polynomial
from .reports import VerificationReport
from .theorems import (
    affine_vanishing_report,
    verify_ci_product,
    verify_multi,
    verify_regular_case,
    verify_sp1,
    verify_sp2,
)

_ORDERS: dict[str, MonomialOrder] = {
    "lex": LEX,
    "grlex": GRLEX,
    "grevlex": GREVLEX,
}

VERIFY_MODES = ("sp1", "sp2", "multi", "regular", "ci", "affine")

EXIT_OK = 0
EXIT_CLAIM_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass
class SessionConfig:
    """Resolved run configuration; one instance per CLI invocation."""

    file: str | None = None
    order: MonomialOrder = GREVLEX
    order_name: str = "grevlex"
    fmt: str = "text"
    out: str | None = None
    seed: int | None = None
    timings: bool = False
    max_exp: int = 3
    term_cap: int | None = None
    jobs: int = 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vanish",
        description="Exact ideal computations and symbolic-power "
                    "containment checks over Q and GF(p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, need_file: bool = True,
               csv_ok: bool = False) -> None:
        if need_file:
            p.add_argument("-f", "--file", required=True,
                           help="ideal file (ring header + named ideals)")
        p.add_argument("--json", action="store_true",
                       help="emit a JSON report instead of text")
        if csv_ok:
            p.add_argument("--csv", action="store_true",
                           help="emit CSV rows instead of text")
        p.add_argument("--out", metavar="PATH",
                       help="write the report to PATH instead of stdout")
        p.add_argument("--term-cap", type=int, metavar="N",
                       help="abort any product exceeding N terms")
        p.add_argument("--jobs", type=int, default=1, metavar="N",
                       help="parallelism degree (results are identical "
                            "for every value)")

    p_gb = sub.add_parser("gb", help="reduced Groebner basis of a named ideal")
    p_gb.add_argument("-i", "--ideal", required=True, metavar="NAME")
    p_gb.add_argument("--order", choices=sorted(_ORDERS), default="grevlex")
    common(p_gb)

    p_member = sub.add_parser("member", help="test polynomial membership")
    p_member.add_argument("-i", "--ideal", required=True, metavar="NAME")
    p_member.add_argument("--poly", required=True, metavar="POLY")
    common(p_member)

    p_int = sub.add_parser("intersect", help="intersection of two named ideals")
    p_int.add_argument("-i", "--ideal", required=True, metavar="NAME")
    p_int.add_argument("-j", "--other", required=True, metavar="NAME")
    common(p_int)

    p_sat = sub.add_parser("saturate",
                           help="saturation of a named ideal by a polynomial")
    p_sat.add_argument("-i", "--ideal", required=True, metavar="NAME")
    p_sat.add_argument("--poly", required=True, metavar="POLY")
    common(p_sat)

    p_dim = sub.add_parser("dim", help="Krull dimension of the quotient ring")
    p_dim.add_argument("-i", "--ideal", required=True, metavar="NAME")
    common(p_dim)

    p_sym = sub.add_parser("symbolic-power",
                           help="certified symbolic power of a declared prime")
    p_sym.add_argument("-i", "--ideal", required=True, metavar="NAME")
    p_sym.add_argument("-m", type=int, required=True, metavar="M")
    common(p_sym)

    p_ord = sub.add_parser("ord",
                           help="order of vanishing along a declared prime")
    p_ord.add_argument("-i", "--ideal", required=True, metavar="NAME")
    p_ord.add_argument("--poly", required=True, metavar="POLY")
    common(p_ord)

    p_mult = sub.add_parser("mult", help="Hilbert-Samuel multiplicity")
    p_mult.add_argument("-i", "--ideal", required=True, metavar="NAME")
    common(p_mult)

    p_assoc = sub.add_parser(
        "assoc-check",
        help="multiplicity additivity check for a monomial ideal")
    p_assoc.add_argument("-i", "--ideal", required=True, metavar="NAME")
    common(p_assoc, csv_ok=True)

    p_verify = sub.add_parser(
        "verify", help="run a containment or product-equality verification")
    p_verify.add_argument("mode", choices=VERIFY_MODES)
    p_verify.add_argument("--fixtures", action="store_true",
                          help="run the bundled suite for this mode")
    p_verify.add_argument("-f", "--file", metavar="PATH",
                          help="ideal file for a single custom case")
    p_verify.add_argument("-i", "--ideal", metavar="NAME",
                          help="first ideal/prime name")
    p_verify.add_argument("-j", "--other", metavar="NAME",
                          help="second ideal/prime name")
    p_verify.add_argument("--primes", metavar="NAMES",
                          help="comma-separated prime names (multi mode)")
    p_verify.add_argument("--exponents", metavar="INTS",
                          help="comma-separated exponents (multi mode)")
    p_verify.add_argument("--poly", metavar="POLY",
                          help="polynomial to test (affine mode)")
    p_verify.add_argument("-m", type=int, default=1, metavar="M")
    p_verify.add_argument("-n", type=int, default=1, metavar="N")
    p_verify.add_argument("--max-exp", type=int, default=3, metavar="K",
                          help="fixture exponent sweep bound (default 3)")
    p_verify.add_argument("--seed", type=int, metavar="SEED",
                          help="echoed into the report envelope")
    p_verify.add_argument("--timings", action="store_true",
                          help="include wall-clock timings (breaks "
                               "byte-identical output)")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--csv", action="store_true")
    p_verify.add_argument("--out", metavar="PATH")
    p_verify.add_argument("--term-cap", type=int, metavar="N")
    p_verify.add_argument("--jobs", type=int, default=1, metavar="N")
    return parser


def _session_from_args(args: argparse.Namespace) -> SessionConfig:
    fmt = "text"
    if getattr(args, "json", False) and getattr(args, "csv", False):
        raise ParseError("choose at most one of --json and --csv")
    if getattr(args, "json", False):
        fmt = "json"
    elif getattr(args, "csv", False):
        fmt = "csv"
    order_name = getattr(args, "order", "grevlex")
    session = SessionConfig(
        file=getattr(args, "file", None),
        order=_ORDERS[order_name],
        order_name=order_name,
        fmt=fmt,
        out=getattr(args, "out", None),
        seed=getattr(args, "seed", None),
        timings=getattr(args, "timings", False),
        max_exp=getattr(args, "max_exp", 3),
        term_cap=getattr(args, "term_cap", None),
        jobs=getattr(args, "jobs", 1),
    )
    if session.term_cap is not None:
        if session.term_cap <= 0:
            raise ParseError("--term-cap must be positive")
        config.set_term_cap(session.term_cap)
    if session.jobs < 1:
        raise ParseError("--jobs must be at least 1")
    if session.max_exp < 1:
        raise ParseError("--max-exp must be at least 1")
    return session


def _emit(text: str, session: SessionConfig) -> None:
    if session.out:
        with open(session.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _basis_lines(ideal, order: MonomialOrder) -> list[str]:
    return [g.render(order) for g in ideal.groebner_basis(order)]


def _json_dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# report formatting
# ---------------------------------------------------------------------------

def _flatten_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, str)):
        return str(value)
    return json.dumps(value, sort_keys=True)


def _report_text(rep: VerificationReport) -> str:
    d = rep.to_dict()
    lines = []
    if d.get("case_id"):
        lines.append(f"case: {d['case_id']}")
    lines.append(f"claim: {d['claim']}")
    for key in ("holds", "applicable", "certified"):
        lines.append(f"{key}: {_flatten_value(d[key])}")
    if d.get("witness") is not None:
        lines.append(f"witness: {d['witness']}")
    if d.get("hypotheses") is not None:
        hyp = d["hypotheses"]
        parts = [f"{k}={_flatten_value(v)}" for k, v in sorted(hyp.items())
                 if k != "notes"]
        lines.append("hypotheses: " + " ".join(parts))
    if d["notes"]:
        for note in d["notes"]:
            lines.append(f"note: {note}")
    if d["data"]:
        parts = [f"{k}={_flatten_value(v)}" for k, v in sorted(d["data"].items())]
        lines.append("data: " + " ".join(parts))
    return "\n".join(lines) + "\n"


def _summary(reports: list[VerificationReport]) -> dict:
    return {
        "cases": len(reports),
        "holds": sum(1 for r in reports if r.holds),
        "failures": sum(1 for r in reports if r.is_failure),
        "inapplicable": sum(1 for r in reports if not r.applicable),
        "uncertified": sum(1 for r in reports if not r.certified),
    }


def _render_reports(reports: list[VerificationReport], session: SessionConfig,
                    envelope: dict) -> str:
    if session.fmt == "json":
        payload = dict(envelope)
        payload["reports"] = [r.to_dict(include_timings=session.timings)
                              for r in reports]
        payload["summary"] = _summary(reports)
        return _json_dump(payload)
    if session.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["case", "claim", "applicable", "certified",
                         "holds", "failure", "witness", "notes"])
        for r in reports:
            writer.writerow([
                r.case_id or "", r.claim,
                _flatten_value(r.applicable), _flatten_value(r.certified),
                _flatten_value(r.holds), _flatten_value(r.is_failure),
                "" if r.witness is None else str(r.witness),
                "; ".join(r.notes),
            ])
        return buf.getvalue()
    blocks = [_report_text(r) for r in reports]
    s = _summary(reports)
    if len(reports) > 1:
        blocks.append(
            f"cases: {s['cases']}  holds: {s['holds']}  "
            f"failures: {s['failures']}  inapplicable: {s['inapplicable']}  "
            f"uncertified: {s['uncertified']}\n")
    if session.seed is not None:
        blocks.insert(0, f"seed: {session.seed}\n")
    return "\n".join(blocks)


def _reports_exit(reports: list[VerificationReport]) -> int:
    if any(r.is_failure for r in reports):
        return EXIT_CLAIM_FAILURE
    return EXIT_OK


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_gb(args, session: SessionConfig) -> int:
    f = IdealFile.load(session.file)
    ideal = f.ideal(args.ideal)
    lines = _basis_lines(ideal, session.order)
    if session.fmt == "json":
        _emit(_json_dump({"command": "gb", "ideal": args.ideal,
                          "order": session.order_name, "basis": lines}),
              session)
    else:
        _emit("".join(line + "\n" for line in lines), session)
    return EXIT_OK


def _cmd_member(args, session: SessionConfig) -> int:
    f = IdealFile.load(session.file)
    ideal = f.ideal(args.ideal)
    poly = parse_polynomial(args.poly, f.ring)
    inside = poly in ideal
    if session.fmt == "json":
        _emit(_json_dump({"command": "member", "ideal": args.ideal,
                          "poly": str(poly), "member": inside}), session)
    else:
        _emit(("true" if inside else "false") + "\n", session)
    return EXIT_OK


def _cmd_intersect(args, session: SessionConfig) -> int:
    f = IdealFile.load(session.file)
    result = f.ideal(args.ideal).intersect(f.ideal(args.other))
    lines = _basis_lines(result, GREVLEX)
    if session.fmt == "json":
        _emit(_json_dump({"command": "intersect", "ideals":
                          [args.ideal, args.other], "basis": lines}), session)
    else:
        _emit("".join(line + "\n" for line in lines), session)
    return EXIT_OK


def _cmd_saturate(args, session: SessionConfig) -> int:
    f = IdealFile.load(session.file)
    poly = parse_polynomial(args.poly, f.ring)
    result, index = f.ideal(args.ideal).saturate(poly)
    lines = _basis_lines(result, GREVLEX)
    if session.fmt == "json":
        _emit(_json_dump({"command": "saturate", "ideal": args.ideal,
                          "poly": str(poly), "saturation_index": index,
                          "basis": lines}), session)
    else:
        _emit(f"saturation index {index}\n"
              + "".join(line + "\n" for line in lines), session)
    return EXIT_OK


def _cmd_dim(args, session: SessionConfig) -> int:
    f = IdealFile.load(session.file)
    value = f.ideal(args.ideal).dimension()
    if session.fmt == "json":
        _emit(_json_dump({"command": "dim", "ideal": args.ideal,
                          "dimension": value}), session)
    else:
        _emit(f"{value}\n", session)
    return EXIT_OK


def _cmd_symbolic_power(args, session: SessionConfig) -> int:
    f = IdealFile.load(session.file)
    prime = f.prime_witness(args.ideal)
    if args.m < 1:
        raise ParseError("-m must be at least 1")
    result = symbolic_power(prime, args.m)
    lines = _basis_lines(result, GREVLEX)
    if session.fmt == "json":
        _emit(_json_dump({"command": "symbolic-power", "ideal": args.ideal,
                          "m": args.m, "certified": prime.certified,
                          "basis": lines}), session)
    else:
        _emit("".join(line + "\n" for line in lines), session)
    return EXIT_OK


def _cmd_ord(args, session: SessionConfig) -> int:
    f = IdealFile.load(session.file)
    prime = f.prime_witness(args.ideal)
    poly = parse_polynomial(args.poly, f.ring)
    value = ord_along(prime, poly)
    if session.fmt == "json":
        _emit(_json_dump({"command": "ord", "ideal": args.ideal,
                          "poly": str(poly), "order": value}), session)
    else:
        _emit(f"{value}\n", session)
    return EXIT_OK


def _cmd_mult(args, session: SessionConfig) -> int:
    f = IdealFile.load(session.file)
    value = multiplicity_graded(f.ideal(args.ideal))
    if session.fmt == "json":
        _emit(_json_dump({"command": "mult", "ideal": args.ideal,
                          "multiplicity": value}), session)
    else:
        _emit(f"{value}\n", session)
    return EXIT_OK


def _cmd_assoc_check(args, session: SessionConfig) -> int:
    f = IdealFile.load(session.file)
    report = associativity_check(f.ideal(args.ideal))
    report.case_id = args.ideal
    _emit(_render_reports([report], session,
                          {"command": "assoc-check"}), session)
    return _reports_exit([report])


def _verify_single(args, session: SessionConfig) -> list[VerificationReport]:
    if session.file is None:
        raise ParseError(
            "verify needs --fixtures or an ideal file with -f")
    f = IdealFile.load(session.file)
    mode = args.mode
    if args.m < 1 or args.n < 1:
        raise ParseError("-m and -n must be at least 1")
    if mode == "multi":
        if not args.primes or not args.exponents:
            raise ParseError("multi mode needs --primes and --exponents")
        names = [s.strip() for s in args.primes.split(",") if s.strip()]
        try:
            exps = [int(s) for s in args.exponents.split(",")]
        except ValueError:
            raise ParseError("--exponents must be comma-separated "
                             "integers") from None
        primes = [f.prime_witness(name) for name in names]
        rep = verify_multi(primes, exps)
        rep.case_id = "+".join(names)
        return [rep]
    if not args.ideal or not args.other:
        raise ParseError(f"{mode} mode needs -i and -j ideal names")
    case_id = f"{args.ideal}-vs-{args.other}"
    if mode == "ci":
        rep = verify_ci_product(f.ideal(args.ideal), f.ideal(args.other),
                                args.m, args.n)
    elif mode == "affine":
        if not args.poly:
            raise ParseError("affine mode needs --poly")
        poly = parse_polynomial(args.poly, f.ring)
        rep = affine_vanishing_report(poly, f.prime_witness(args.ideal),
                                      f.prime_witness(args.other))
    elif mode == "regular":
        rep = verify_regular_case(f.prime_witness(args.ideal),
                                  f.prime_witness(args.other), args.m, args.n)
    elif mode == "sp1":
        rep = verify_sp1(f.prime_witness(args.ideal),
                         f.prime_witness(args.other), args.m)
    else:
        rep = verify_sp2(f.prime_witness(args.ideal),
                         f.prime_witness(args.other), args.m, args.n)
    rep.case_id = case_id
    return [rep]


def _cmd_verify(args, session: SessionConfig) -> int:
    if args.fixtures:
        if args.file is not None:
            raise ParseError("--fixtures and -f are mutually exclusive")
        reports = fixture_reports(args.mode, max_exp=session.max_exp)
    else:
        reports = _verify_single(args, session)
    envelope = {"command": "verify", "mode": args.mode,
                "max_exp": session.max_exp, "seed": session.seed}
    _emit(_render_reports(reports, session, envelope), session)
    return _reports_exit(reports)


_HANDLERS = {
    "gb": _cmd_gb,
    "member": _cmd_member,
    "intersect": _cmd_intersect,
    "saturate": _cmd_saturate,
    "dim": _cmd_dim,
    "symbolic-power": _cmd_symbolic_power,
    "ord": _cmd_ord,
    "mult": _cmd_mult,
    "assoc-check": _cmd_assoc_check,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return code
    # --term-cap is per invocation; don't leak it to later in-process calls
    saved_cap = config.term_cap()
    try:
        session = _session_from_args(args)
        return _HANDLERS[args.command](args, session)
    except UncertifiedSymbolicPowerError as exc:
        print(f"error: uncertified symbolic power: {exc}", file=sys.stderr)
        for diag in exc.diagnostics:
            print(f"  diagnostic: {diag}", file=sys.stderr)
        return EXIT_CLAIM_FAILURE
    except (TermCapExceededError, OrdSearchCapError) as exc:
        print(f"error: resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, WitnessError, UnitIdealError, ZeroDivisorRequestError,
            RingMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VanishError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        config.set_term_cap(saved_cap)


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
