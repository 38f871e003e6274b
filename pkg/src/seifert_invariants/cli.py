"""Command-line front end.

Input is a JSON document with exactly one of the keys ``unnormalized``,
``normalized`` or ``brieskorn`` (see INPUT_SCHEMA). Rationals are written as
exact "p/q" strings. Exit codes: 0 ok, 1 identity failure, 2 invalid input,
3 internal error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import jsonschema

from .abelian_group import build_group, word_label
from .batch import BatchConfig, run_batch
from .errors import InternalError, InvalidInputError
from .invariants import InvariantReport, compute_report, conjecture_gap
from .plumbing import to_dot, to_plumbing
from .seifert import SeifertData, UnnormalizedSeifert, brieskorn, normalize
from .series import poincare_coefficients
from .torsion import spinc_from_word, torsion_at_one, torsion_table

EXIT_OK, EXIT_IDENTITY_FAILURE, EXIT_INVALID_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

_INT_PAIR = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}

INPUT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Seifert input document",
    "type": "object",
    "oneOf": [
        {"required": ["unnormalized"]},
        {"required": ["normalized"]},
        {"required": ["brieskorn"]},
    ],
    "properties": {
        "unnormalized": {"type": "array", "items": _INT_PAIR, "minItems": 1},
        "normalized": {
            "type": "object",
            "required": ["b", "pairs"],
            "additionalProperties": False,
            "properties": {
                "b": {"type": "integer"},
                "pairs": {"type": "array", "items": _INT_PAIR, "minItems": 1},
            },
        },
        "brieskorn": {"type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3},
    },
    "additionalProperties": False,
}


class SchemaError(InvalidInputError):
    """Malformed JSON or a document that violates INPUT_SCHEMA."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class InputDocument:
    kind: str
    payload: Any
    seifert: SeifertData


def _path(err: jsonschema.ValidationError) -> str:
    return "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)


def parse_input(text: str) -> InputDocument:
    """Parse and validate; raises SchemaError or a mathematical InvalidInputError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    validator = jsonschema.Draft202012Validator(INPUT_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = max(errors, key=lambda e: len(e.absolute_path))
        raise SchemaError(err.message, _path(err))
    (kind, payload), = doc.items()
    if kind == "unnormalized":
        s = normalize(UnnormalizedSeifert(tuple(tuple(p) for p in payload)))
    elif kind == "normalized":
        s = SeifertData(payload["b"], tuple(tuple(p) for p in payload["pairs"]))
    else:
        s = normalize(brieskorn(*payload))
    return InputDocument(kind, payload, s)


# --- serialization --------------------------------------------------------------

def q(x: Fraction | int) -> str:
    return str(Fraction(x))


def report_to_json(r: InvariantReport) -> dict:
    return {
        "b": r.b,
        "pairs": [list(p) for p in r.pairs],
        "e": q(r.e),
        "chi": q(r.chi),
        "alpha": r.alpha,
        "o": r.o,
        "h_order": r.h_order,
        "casson_walker": q(r.lam),
        "k2_plus_v_formula": q(r.k2_plus_v_formula),
        "k2_plus_v_graph": q(r.k2_plus_v_graph),
        "det": r.det,
        "dp": r.dp,
        "torsion_can": q(r.torsion_can),
        "torsion_closed_form": q(r.torsion_closed),
        "sw0_can": q(r.sw0_can),
        "theta": q(r.theta),
        "identity": {"lhs": q(r.identity_lhs), "rhs": q(r.identity_rhs), "verdict": "equal" if r.verdict else "differ"},
        "checks": r.checks,
    }


def _table(rows: list[tuple[str, Any]]) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows) + "\n"


def _flatten(d: dict, prefix: str = "") -> list[tuple[str, Any]]:
    out = []
    for k, v in d.items():
        if isinstance(v, dict):
            out.extend(_flatten(v, f"{prefix}{k}."))
        else:
            out.append((prefix + k, v))
    return out


def _csv(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(obj: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2) + "\n"
    rows = _flatten(obj)
    if fmt == "csv":
        return _csv([k for k, _ in rows], [[v for _, v in rows]])
    return _table(rows)


# --- commands ---------------------------------------------------------------------

def cmd_normalize(doc: InputDocument, args) -> tuple[str, int]:
    s = doc.seifert
    out = {**s.to_json(), "e": q(s.e), "chi": q(s.chi), "alpha": s.alpha_lcm, "o": s.o, "h_order": s.h_order}
    return _emit(out, args.format), EXIT_OK


def cmd_invariants(doc: InputDocument, args) -> tuple[str, int]:
    s = doc.seifert
    out = report_to_json(compute_report(s))
    if args.terms is not None:
        out["poincare"] = poincare_coefficients(s, args.terms)
    if args.dot:
        out["dot"] = to_dot(to_plumbing(s))
    if args.torsion_table:
        out["torsion_table"] = _torsion_rows(s)
    return _emit(out, args.format), EXIT_OK


def _torsion_rows(s: SeifertData) -> list[dict]:
    return [
        {"element": word_label(h.word), "word": list(h.word), "coords": list(h.coords), "torsion": q(v)}
        for h, v in torsion_table(s)
    ]


def cmd_torsion(doc: InputDocument, args) -> tuple[str, int]:
    s = doc.seifert
    G = build_group(s)
    if args.all:
        rows = _torsion_rows(s)
        total = sum((Fraction(r["torsion"]) for r in rows), Fraction(0))
        if args.format == "json":
            return json.dumps({"h_order": G.order, "rows": rows, "sum": q(total)}, indent=2) + "\n", EXIT_OK
        body = [[r["element"], r["torsion"]] for r in rows] + [["sum", q(total)]]
        if args.format == "csv":
            return _csv(["element", "torsion"], body), EXIT_OK
        return _table([(a, b) for a, b in body]), EXIT_OK
    word = [0] * (s.nu + 1)
    if args.spinc:
        try:
            word = [int(x) for x in args.spinc.split(",")]
        except ValueError:
            raise SchemaError("--spinc expects comma-separated integers", "--spinc") from None
        if len(word) != s.nu + 1:
            raise SchemaError(f"--spinc needs {s.nu + 1} exponents a0,...,a{s.nu}", "--spinc")
    sigma = spinc_from_word(s, G, word)
    out = {
        "word": list(sigma.word),
        "element": list(sigma.element.coords),
        "a_tilde": q(sigma.a_tilde),
        "torsion": q(torsion_at_one(s, G, sigma)),
    }
    return _emit(out, args.format), EXIT_OK


def cmd_plumbing(doc: InputDocument, args) -> tuple[str, int]:
    return to_dot(to_plumbing(doc.seifert)), EXIT_OK


def cmd_poincare(doc: InputDocument, args) -> tuple[str, int]:
    coeffs = poincare_coefficients(doc.seifert, args.terms)
    if args.format == "json":
        return json.dumps({"terms": args.terms, "coefficients": coeffs}) + "\n", EXIT_OK
    return _csv(["l", "coefficient"], list(enumerate(coeffs))), EXIT_OK


def cmd_verify(doc: InputDocument, args) -> tuple[str, int]:
    r = compute_report(doc.seifert)
    out = {
        "lhs": q(r.identity_lhs),
        "rhs": q(r.identity_rhs),
        "verdict": "equal" if r.verdict else "differ",
        "torsion_fourier": q(r.torsion_can),
        "torsion_closed_form": q(r.torsion_closed),
        "checks": r.checks,
    }
    return _emit(out, args.format), EXIT_OK if r.all_ok else EXIT_IDENTITY_FAILURE


def cmd_conjecture(doc: InputDocument, args) -> tuple[str, int]:
    gap = conjecture_gap(doc.seifert, args.pg)
    out = {"pg": args.pg, "gap": q(gap), "bound_attained": gap == 0}
    return _emit(out, args.format), EXIT_OK


BATCH_COLUMNS = [
    "index", "b", "pairs", "h_order", "o", "casson_walker", "k2_plus_v_formula",
    "k2_plus_v_graph", "det", "dp", "torsion_fourier", "torsion_closed_form",
    "lhs", "rhs", "identity", "torsion_paths", "k2v_paths", "det_ok", "gap_zero",
]


def _batch_row(i: int, r: InvariantReport) -> list[Any]:
    c = r.checks
    pairs = " ".join(f"({a},{w})" for a, w in r.pairs)
    return [
        i, r.b, pairs, r.h_order, r.o, q(r.lam), q(r.k2_plus_v_formula), q(r.k2_plus_v_graph),
        r.det, r.dp, q(r.torsion_can), q(r.torsion_closed), q(r.identity_lhs), q(r.identity_rhs),
        c["identity"], c["torsion_paths"], c["k2v_paths"], c["det"], c["gap_zero"],
    ]


def cmd_batch(args) -> tuple[str, int]:
    cfg = BatchConfig(args.count, args.seed, args.max_alpha, args.max_arms, args.h_cap)
    reports = run_batch(cfg, workers=args.workers)
    rows = [_batch_row(i, r) for i, r in enumerate(reports)]
    failures = sum(not r.all_ok for r in reports)
    print(f"batch-verify: {len(reports)} manifolds, {failures} failures", file=sys.stderr)
    if args.format == "json":
        text = json.dumps([dict(zip(BATCH_COLUMNS, row)) for row in rows], indent=2) + "\n"
    else:
        text = _csv(BATCH_COLUMNS, rows)
    return text, EXIT_IDENTITY_FAILURE if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifert-inv",
        description="Exact invariants of Seifert rational homology spheres with e < 0.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table", "csv"], default="json")
    single = argparse.ArgumentParser(add_help=False, parents=[common])
    single.add_argument("input", nargs="?", default="-", help="JSON input file, '-' for stdin (default)")
    single.add_argument("--data", help="inline JSON document instead of a file")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("normalize", parents=[single], help="normalized Seifert data and derived scalars")
    p = sub.add_parser("invariants", parents=[single], help="full invariant report")
    p.add_argument("--terms", type=int, help="also list Poincare coefficients up to l = TERMS")
    p.add_argument("--dot", action="store_true", help="include the plumbing graph in DOT")
    p.add_argument("--torsion-table", action="store_true", help="include torsion for every spin^c structure")
    p = sub.add_parser("torsion", parents=[single], help="torsion T_sigma(1)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--spinc", help="word exponents a0,a1,...,anu of h_sigma")
    g.add_argument("--all", action="store_true", help="table over all |H| spin^c structures")
    sub.add_parser("plumbing", parents=[single], help="plumbing graph as DOT")
    p = sub.add_parser("poincare", parents=[single], help="Poincare series coefficients")
    p.add_argument("--terms", type=int, default=20)
    sub.add_parser("verify", parents=[single], help="check the main identity")
    p = sub.add_parser("conjecture", parents=[single], help="gap against a given geometric genus")
    p.add_argument("--pg", type=int, required=True)
    p = sub.add_parser("batch-verify", help="randomized verification")
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-alpha", type=int, default=10)
    p.add_argument("--max-arms", type=int, default=5)
    p.add_argument("--h-cap", type=int, default=5000)
    p.add_argument("--workers", type=int, default=1)
    return parser


COMMANDS = {
    "normalize": cmd_normalize,
    "invariants": cmd_invariants,
    "torsion": cmd_torsion,
    "plumbing": cmd_plumbing,
    "poincare": cmd_poincare,
    "verify": cmd_verify,
    "conjecture": cmd_conjecture,
}


def run(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "batch-verify":
            text, code = cmd_batch(args)
        else:
            if args.data is not None:
                raw = args.data
            elif args.input == "-":
                raw = stdin.read()
            else:
                with open(args.input, encoding="utf-8") as fh:
                    raw = fh.read()
            text, code = COMMANDS[args.command](parse_input(raw), args)
    except InvalidInputError as exc:
        kind = type(exc).__name__
        print(json.dumps({"error": kind, "message": str(exc)}), file=stderr)
        return EXIT_INVALID_INPUT
    except OSError as exc:
        print(json.dumps({"error": "IOError", "message": str(exc)}), file=stderr)
        return EXIT_INVALID_INPUT
    except InternalError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=stderr)
        return EXIT_INTERNAL
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
