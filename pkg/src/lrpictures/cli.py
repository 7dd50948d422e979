"""JSON-in/JSON-out command line front end.

Exit codes: 0 for success, 1 when a verification suite (or cross-check)
reports a violation, 2 for usage or input errors.  Stdout carries exactly
one JSON document; diagnostics go to stderr.  For a fixed argv and seed the
stdout bytes are reproducible, so timing is reported on stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from .correspondence import (
    CorrespondenceContext,
    CrystalPair,
    InternalError,
    full_c,
    full_s,
    lr_coefficient,
    lr_routes,
)
from .pictures import Picture, enumerate_pictures
from .rsk import TwoRowedArray, rsk_forward, rsk_inverse
from .shapes import Partition, SkewShape
from .tableaux import SkewTableau
from .verify import SUITE_NAMES, run_suite

__all__ = ["CommandReport", "cmd_run", "cmd_verify", "main", "OUTPUT_SCHEMAS"]

_ENV_BOUND = "LRPK_MAX_CELLS"

OUTPUT_SCHEMAS = {
    "pictures": {
        "type": "object",
        "properties": {
            "count": {"type": "integer", "minimum": 0},
            "pictures": {"type": "array"},
        },
        "required": ["count"],
        "additionalProperties": False,
    },
    "lr-coeff": {
        "type": "object",
        "properties": {
            "coefficient": {"type": "integer", "minimum": 0},
            "routes_agree": {"type": "boolean"},
        },
        "required": ["coefficient"],
        "additionalProperties": False,
    },
    "rsk": {
        "type": "object",
        "properties": {"p": {"type": "object"}, "q": {"type": "object"}},
        "required": ["p", "q"],
        "additionalProperties": False,
    },
    "verify": {
        "type": "object",
        "properties": {
            "status": {"enum": ["ok", "violation"]},
            "payload": {"type": "object"},
        },
        "required": ["status", "payload"],
        "additionalProperties": False,
    },
}


@dataclass
class CommandReport:
    """Outcome of a verification run; elapsed_ms never reaches stdout."""

    status: str
    payload: dict
    elapsed_ms: int

    def to_json(self) -> dict:
        return {"status": self.status, "payload": self.payload}


def _read_json(raw: str, stdin_text: str | None):
    if raw == "-":
        raw = sys.stdin.read() if stdin_text is None else stdin_text
    return json.loads(raw)


def _bound_override() -> int | None:
    raw = os.environ.get(_ENV_BOUND)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{_ENV_BOUND} must be an integer, got {raw!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrpictures",
        description="Pictures between skew diagrams and Littlewood-Richardson crystals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pictures", help="enumerate or count pictures between two skew shapes")
    p.add_argument("--kappa1", required=True, help='skew shape JSON, e.g. {"outer":[2,1],"inner":[1]}')
    p.add_argument("--kappa2", required=True, help="skew shape JSON, or 'same'")
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("to-pair", help="map a picture to its crystal pair")
    p.add_argument("--picture", required=True, help="picture JSON, or - for stdin")

    p = sub.add_parser("to-picture", help="map a crystal pair back to a picture")
    p.add_argument("--kappa1", required=True)
    p.add_argument("--kappa2", required=True)
    p.add_argument("--pair", required=True, help="crystal pair JSON, or - for stdin")

    p = sub.add_parser("lr-coeff", help="Littlewood-Richardson coefficient")
    p.add_argument("--lambda", dest="lam", required=True, help="partition JSON, e.g. [2,1]")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--cross-check", action="store_true", help="compare all three counting routes")

    p = sub.add_parser("rsk", help="column-insert a lexicographic two-rowed array")
    p.add_argument("--array", required=True, help="array JSON, or - for stdin")

    p = sub.add_parser("unrsk", help="invert rsk on a pair of same-shaped tableaux")
    p.add_argument("--pair", required=True, help='{"p":tableau,"q":tableau}, or - for stdin')

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, help=f"one of {', '.join(SUITE_NAMES)} or all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=10000)
    p.add_argument("--max-cells", type=int, default=5)
    return parser


def _same_or_json(raw: str, other_raw: str, stdin_text: str | None):
    if raw == "same":
        raw = other_raw
    return _read_json(raw, stdin_text)


def _run_pictures(args, stdin_text):
    kappa1 = SkewShape.from_json(_read_json(args.kappa1, stdin_text))
    kappa2 = SkewShape.from_json(_same_or_json(args.kappa2, args.kappa1, stdin_text))
    found = list(enumerate_pictures(kappa1, kappa2, max_cells=_bound_override()))
    if args.count_only:
        return {"count": len(found)}, 0
    return {"count": len(found), "pictures": [f.to_json() for f in found]}, 0


def _run_to_pair(args, stdin_text):
    f = Picture.from_json(_read_json(args.picture, stdin_text))
    ctx = CorrespondenceContext(f.domain, f.codomain)
    return full_s(ctx, f).to_json(), 0


def _run_to_picture(args, stdin_text):
    ctx = CorrespondenceContext(
        SkewShape.from_json(_read_json(args.kappa1, stdin_text)),
        SkewShape.from_json(_same_or_json(args.kappa2, args.kappa1, stdin_text)),
    )
    pair = CrystalPair.from_json(_read_json(args.pair, stdin_text))
    return full_c(ctx, pair).to_json(), 0


def _run_lr_coeff(args, stdin_text):
    lam = Partition.from_json(_read_json(args.lam, stdin_text))
    mu = Partition.from_json(_read_json(args.mu, stdin_text))
    nu = Partition.from_json(_read_json(args.nu, stdin_text))
    if not args.cross_check:
        return {"coefficient": lr_coefficient(lam, mu, nu)}, 0
    routes = lr_routes(lam, mu, nu, max_cells=_bound_override())
    agree = len(set(routes.values())) == 1
    doc = {"coefficient": routes["crystal"], "routes_agree": agree}
    return doc, 0 if agree else 1


def _run_rsk(args, stdin_text):
    w = TwoRowedArray.from_json(_read_json(args.array, stdin_text))
    p, q = rsk_forward(w)
    return {"p": p.to_json(), "q": q.to_json()}, 0


def _run_unrsk(args, stdin_text):
    obj = _read_json(args.pair, stdin_text)
    p = SkewTableau.from_json(obj["p"])
    q = SkewTableau.from_json(obj["q"])
    return rsk_inverse(p, q).to_json(), 0


def cmd_verify(suite: str, seed: int = 0, instances: int = 10000, max_cells: int = 5) -> CommandReport:
    """Run a named suite and wrap the reports."""
    start = time.monotonic()
    reports = run_suite(suite, seed=seed, instances=instances, max_cells=max_cells)
    elapsed = int((time.monotonic() - start) * 1000)
    ok = all(r.ok for r in reports)
    payload = {"reports": [r.to_json() for r in reports]}
    return CommandReport("ok" if ok else "violation", payload, elapsed)


def _run_verify(args, stdin_text):
    report = cmd_verify(
        args.suite, seed=args.seed, instances=args.instances, max_cells=args.max_cells
    )
    print(f"elapsed_ms={report.elapsed_ms}", file=sys.stderr)
    return report.to_json(), 0 if report.status == "ok" else 1


_HANDLERS = {
    "pictures": _run_pictures,
    "to-pair": _run_to_pair,
    "to-picture": _run_to_picture,
    "lr-coeff": _run_lr_coeff,
    "rsk": _run_rsk,
    "unrsk": _run_unrsk,
    "verify": _run_verify,
}


def cmd_run(argv: list[str], stdin_text: str | None = None) -> tuple[int, str]:
    """Parse argv, run the subcommand, and return (exit_code, stdout text)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (int(exc.code) if exc.code else 0), ""
    try:
        doc, code = _HANDLERS[args.command](args, stdin_text)
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON input: {exc}", file=sys.stderr)
        return 2, ""
    except InternalError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1, ""
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, ""
    return code, json.dumps(doc, separators=(",", ":")) + "\n"


def main() -> None:
    code, out = cmd_run(sys.argv[1:])
    if out:
        sys.stdout.write(out)
    raise SystemExit(code)


if __name__ == "__main__":
    main()
