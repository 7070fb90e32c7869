"""Command-line front end: one JSON document in, one JSON report out.

Exit status: 0 converges/precompact (or a plain success), 1 diverges/not
precompact, 2 inconclusive, 3 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from .basis import BasisDescriptor, UnresolvedCoordinate, expand, y_norm
from .compactness import check_precompact, set_from_dict
from .convergence import (
    DEFAULT_DELTA,
    DEFAULT_EPS_GRID,
    DEFAULT_K_MAX,
    decide_c,
    decide_c0,
    decide_convergence,
    decide_hilbert,
    decide_lp,
    family_from_dict,
)
from .fixtures import fixture_documents
from .spaces import DEFAULT_SLACK, SeqElement, ValidationError, norm_bounds, tail_norm_bounds

EXIT_OK, EXIT_NEGATIVE, EXIT_INCONCLUSIVE, EXIT_INPUT = 0, 1, 2, 3

DECIDERS = {
    "general": decide_convergence,
    "lp": decide_lp,
    "c0": decide_c0,
    "hilbert": decide_hilbert,
    "c": decide_c,
}


class InputError(Exception):
    pass


def _eps_grid(text: str) -> tuple[float, ...]:
    try:
        grid = tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None
    if not grid or any(e <= 0 for e in grid):
        raise argparse.ArgumentTypeError("eps grid entries must be positive")
    if any(b >= a for a, b in zip(grid, grid[1:])):
        raise argparse.ArgumentTypeError("eps grid must be strictly descending")
    return grid


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schauderkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps-grid", type=_eps_grid, default=DEFAULT_EPS_GRID)
    common.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    common.add_argument("--delta", type=_positive, default=DEFAULT_DELTA)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", type=Path, default=None,
                        help="output file (a directory for 'fixtures'); stdout if omitted")

    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("check-convergence", "decide whether a family converges to a candidate"),
        ("check-compactness", "decide whether a described set is precompact"),
        ("expand", "Schauder coordinates c_1..c_K of an element (K = --k-max)"),
        ("norms", "norm, Y-norm and remainder-norm enclosures of an element"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("input", type=Path)
    sub.add_parser("fixtures", parents=[common], help="write the canonical fixture documents")
    return parser


def _config(args) -> dict:
    return {
        "eps_grid": list(args.eps_grid),
        "k_max": args.k_max,
        "delta": args.delta,
        "slack": DEFAULT_SLACK,
        "seed": args.seed,
    }


def _load(path: Path) -> tuple[dict, str]:
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(raw.decode("utf-8"))
    except UnicodeDecodeError:
        raise InputError(f"{path} is not UTF-8") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    return doc, hashlib.sha256(raw).hexdigest()


def _check_convergence(doc: dict, args) -> dict:
    family = family_from_dict(doc)
    candidate = SeqElement.from_dict(doc["candidate"]) if "candidate" in doc else None
    decider = doc.get("decider", "general")
    if decider not in DECIDERS:
        raise ValidationError(f"field 'decider': unknown decider {decider!r}")
    verdict = DECIDERS[decider](family, candidate, eps_grid=args.eps_grid, k_max=args.k_max, delta=args.delta)
    return {"decider": decider, **verdict.to_dict()}


def _check_compactness(doc: dict, args) -> dict:
    verdict = check_precompact(set_from_dict(doc), args.eps_grid, args.k_max)
    return verdict.to_dict()


def _basis(doc: dict, x: SeqElement) -> BasisDescriptor:
    desc = doc.get("basis", {"type": "standard"})
    return BasisDescriptor(x.space, desc.get("type", "standard"), desc.get("matrix"))


def _expand(doc: dict, args) -> dict:
    x = SeqElement.from_dict(doc)
    basis = _basis(doc, x)
    try:
        coords = expand(x, basis, args.k_max)
    except UnresolvedCoordinate as exc:
        return {"verdict": "inconclusive", "reason": {"reason": str(exc), "k": exc.index}}
    return {"first_index": basis.first_index, "coordinates": coords}


def _norms(doc: dict, args) -> dict:
    x = SeqElement.from_dict(doc)
    basis = _basis(doc, x)
    return {
        "norm": norm_bounds(x).to_list(),
        "y_norm": y_norm(x, basis, max(args.k_max, 1)).to_list(),
        "tail_norms": [tail_norm_bounds(x, K).to_list() for K in range(args.k_max + 1)],
    }


HANDLERS = {
    "check-convergence": _check_convergence,
    "check-compactness": _check_compactness,
    "expand": _expand,
    "norms": _norms,
}


def _exit_code(result: dict) -> int:
    tag = result.get("verdict")
    if tag in ("diverges", "not_precompact"):
        return EXIT_NEGATIVE
    if tag == "inconclusive":
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _emit(report: dict, out: Path | None):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _write_fixtures(args) -> int:
    out = args.out or Path("fixtures")
    out.mkdir(parents=True, exist_ok=True)
    names = []
    for name, doc in fixture_documents().items():
        (out / f"{name}.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        names.append(name)
    _emit({"tool": "schauderkit", "version": __version__, "command": "fixtures",
           "config": _config(args), "written": sorted(names), "directory": str(out)}, None)
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "fixtures":
        return _write_fixtures(args)
    report = {"tool": "schauderkit", "version": __version__, "command": args.command,
              "config": _config(args), "input": str(args.input)}
    try:
        if args.k_max < 0:
            raise ValidationError("--k-max must be >= 0")
        doc, digest = _load(args.input)
        report["input_sha256"] = digest
        result = HANDLERS[args.command](doc, args)
    except (InputError, ValidationError, IndexError) as exc:
        report["error"] = str(exc)
        _emit(report, args.out)
        return EXIT_INPUT
    except KeyError as exc:
        report["error"] = f"missing field {exc.args[0]!r}"
        _emit(report, args.out)
        return EXIT_INPUT
    except (TypeError, ValueError) as exc:
        report["error"] = f"malformed input: {exc}"
        _emit(report, args.out)
        return EXIT_INPUT
    report.update(result)
    _emit(report, args.out)
    return _exit_code(result)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
