"""Command-line front end.

Two subcommands: ``compute`` reads a JSON job specification from a file,
``preset`` names one of the built-in groups directly.  Both run the same
pipeline: build the root datum and involution, compute the component group,
optionally the Galois cohomology group and the brute-force oracle, then
render a text or JSON report.

Exit codes: 0 on success, 1 for invalid input of any kind, 2 when an
internal consistency check or the oracle fails (which would mean a bug).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .components import (
    ComputationError,
    Elementary2Group,
    h1_pi1,
    oracle_check,
    pi0,
    representative,
)
from .intlattice import BoundExceeded
from .realform import (
    Involution,
    involution_from_eigenspaces,
    involution_from_matrix,
)
from .rootdata import Lattice, PresetSpec, RootDatum, build_preset

ORACLE_BOUND_ENV = "PI0_ORACLE_BOUND"
DEFAULT_ORACLE_BOUND = 4096

# past this many components the report lists only the generators themselves
MAX_LISTED_COMPONENTS = 128


@dataclass(frozen=True)
class OutputFlags:
    pi0: bool = True
    h1: bool = False
    representatives: bool = True
    oracle: bool = False


@dataclass(frozen=True)
class JobSpec:
    datum: RootDatum
    involution: Involution
    outputs: OutputFlags
    fmt: str


# ---------------------------------------------------------------------------
# job parsing


def _fraction(x, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ValueError(
            f"{where}: expected an integer or a fraction string like '1/2', got {x!r}"
        )
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"{where}: {exc}") from exc


def _vector(row, length: int, where: str) -> tuple:
    if not isinstance(row, list) or len(row) != length:
        raise ValueError(f"{where}: expected a list of {length} entries, got {row!r}")
    return tuple(_fraction(x, where) for x in row)


def _int_vector(row, length: int, where: str) -> tuple[int, ...]:
    vec = _vector(row, length, where)
    if any(x.denominator != 1 for x in vec):
        raise ValueError(f"{where}: entries must be integers, got {row!r}")
    return tuple(int(x) for x in vec)


def _matrix(rows, n: int, where: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(rows, list) or len(rows) != n:
        raise ValueError(f"{where}: expected {n} rows")
    return tuple(_int_vector(r, n, f"{where} row {i}") for i, r in enumerate(rows))


_PRESET_FIELDS = {"preset", "n", "p", "q", "form", "type", "rank", "isogeny", "real"}
_INLINE_FIELDS = {
    "rank",
    "coroots",
    "theta",
    "split_span",
    "compact_span",
    "display_weights",
    "named_vectors",
    "name",
}
_COMMON_FIELDS = {"outputs", "format"}
_OUTPUT_KEYS = {"pi0", "h1", "representatives", "oracle_check"}


def _parse_outputs(doc: dict) -> OutputFlags:
    raw = doc.get("outputs", {})
    if not isinstance(raw, dict):
        raise ValueError("'outputs' must be an object of booleans")
    unknown = set(raw) - _OUTPUT_KEYS
    if unknown:
        raise ValueError(f"unknown output flags: {sorted(unknown)}")
    for key, val in raw.items():
        if not isinstance(val, bool):
            raise ValueError(f"output flag {key!r} must be true or false")
    return OutputFlags(
        pi0=raw.get("pi0", True),
        h1=raw.get("h1", False),
        representatives=raw.get("representatives", True),
        oracle=raw.get("oracle_check", False),
    )


# "json-like" and "structured" are accepted aliases for the JSON renderer
_FORMAT_ALIASES = {"text": "text", "json": "json", "json-like": "json", "structured": "json"}


def _parse_format(doc: dict) -> str:
    fmt = doc.get("format", "text")
    if fmt not in _FORMAT_ALIASES:
        raise ValueError(f"format must be 'text' or 'json', got {fmt!r}")
    return _FORMAT_ALIASES[fmt]


def _preset_job(doc: dict) -> tuple[RootDatum, Involution]:
    unknown = set(doc) - _PRESET_FIELDS - _COMMON_FIELDS
    if unknown:
        raise ValueError(f"unknown fields in preset job: {sorted(unknown)}")
    spec = PresetSpec(
        family=str(doc["preset"]),
        n=doc.get("n"),
        p=doc.get("p"),
        q=doc.get("q"),
        form=doc.get("form"),
        cartan_type=doc.get("type"),
        rank=doc.get("rank"),
        isogeny=doc.get("isogeny", "sc"),
        real=doc.get("real"),
    )
    rd, inv = build_preset(spec)
    if inv is None:
        # SIMPLE presets without an explicit real form default to split
        spec = PresetSpec(
            family=spec.family,
            cartan_type=spec.cartan_type,
            rank=spec.rank,
            isogeny=spec.isogeny,
            real="split",
        )
        rd, inv = build_preset(spec)
    return rd, inv


def _inline_job(doc: dict) -> tuple[RootDatum, Involution]:
    unknown = set(doc) - _INLINE_FIELDS - _COMMON_FIELDS
    if unknown:
        raise ValueError(f"unknown fields in job: {sorted(unknown)}")
    rank = doc["rank"]
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
        raise ValueError("'rank' must be a nonnegative integer")
    if "coroots" not in doc or not isinstance(doc["coroots"], list):
        raise ValueError("'coroots' must be a list of coroot rows (possibly empty)")

    gens: list[tuple[int, ...]] = []
    for i, row in enumerate(doc["coroots"]):
        v = _int_vector(row, rank, f"coroot {i}")
        for w in (v, tuple(-x for x in v)):
            if w not in gens:
                gens.append(w)
    coroots = Lattice.from_vectors(rank, gens) if gens else Lattice.zero(rank)

    weights = []
    for i, pair in enumerate(doc.get("display_weights", [])):
        if not isinstance(pair, list) or len(pair) != 2 or not isinstance(pair[0], str):
            raise ValueError(f"display weight {i}: expected [label, vector]")
        weights.append((pair[0], _vector(pair[1], rank, f"display weight {i}")))

    named = []
    for i, pair in enumerate(doc.get("named_vectors", [])):
        if not isinstance(pair, list) or len(pair) != 2 or not isinstance(pair[0], str):
            raise ValueError(f"named vector {i}: expected [name, vector]")
        named.append((pair[0], _int_vector(pair[1], rank, f"named vector {i}")))

    rd = RootDatum(
        rank=rank,
        cochar=Lattice.standard(rank),
        coroots=coroots,
        coroot_generators=tuple(gens),
        display_weights=tuple(weights),
        named_vectors=tuple(named),
        name=str(doc.get("name", "custom datum")),
    )
    problems = rd.validate()
    if problems:
        raise ValueError("invalid root datum: " + "; ".join(problems))

    has_theta = "theta" in doc
    has_spans = "split_span" in doc or "compact_span" in doc
    if has_theta == has_spans:
        raise ValueError(
            "provide exactly one of 'theta' or 'split_span'/'compact_span'"
        )
    if has_theta:
        theta = _matrix(doc["theta"], rank, "theta")
        inv = involution_from_matrix(rd, theta, name=rd.name)
    else:
        split = [
            _vector(r, rank, f"split_span {i}")
            for i, r in enumerate(doc.get("split_span", []))
        ]
        compact = [
            _vector(r, rank, f"compact_span {i}")
            for i, r in enumerate(doc.get("compact_span", []))
        ]
        inv = involution_from_eigenspaces(rd, split, compact, name=rd.name)
    return rd, inv


def parse_jobspec(doc) -> JobSpec:
    """Validate a JSON job document and build the objects it describes."""
    if not isinstance(doc, dict):
        raise ValueError("job specification must be a JSON object")
    has_preset = "preset" in doc
    has_inline = "rank" in doc and not has_preset
    if has_preset:
        rd, inv = _preset_job(doc)
    elif has_inline:
        rd, inv = _inline_job(doc)
    else:
        raise ValueError("job must contain either 'preset' or inline 'rank' data")
    return JobSpec(
        datum=rd,
        involution=inv,
        outputs=_parse_outputs(doc),
        fmt=_parse_format(doc),
    )


# ---------------------------------------------------------------------------
# running a job


def _oracle_bound() -> int:
    raw = os.environ.get(ORACLE_BOUND_ENV)
    if raw is None:
        return DEFAULT_ORACLE_BOUND
    try:
        bound = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ORACLE_BOUND_ENV} must be an integer, got {raw!r}") from exc
    if bound < 1:
        raise ValueError(f"{ORACLE_BOUND_ENV} must be positive")
    return bound


def _oracle_verdict(groups: list[Elementary2Group]) -> str:
    bound = _oracle_bound()
    for g in groups:
        if g.order > bound:
            return "skipped"
        try:
            agrees = oracle_check(g, bound=bound)
        except BoundExceeded:
            return "skipped"
        if not agrees:
            raise ComputationError(
                "brute-force oracle disagrees with the Smith-form computation"
            )
    return "agree"


def _component_list(group: Elementary2Group) -> list[tuple[int, ...]]:
    if group.order > MAX_LISTED_COMPONENTS:
        return list(group.generators)
    return list(group.elements()[1:])


def run(job: JobSpec) -> dict:
    """Execute a job and return the report as a plain dict with fixed key order."""
    group = pi0(job.datum, job.involution)
    reps = []
    if job.outputs.representatives:
        for nu in _component_list(group):
            r = representative(job.datum, job.involution, nu)
            reps.append(
                {
                    "nu": list(r.nu),
                    "evaluations": [[label, value] for label, value in r.evaluations],
                    "note": r.note,
                }
            )
    h1_order = None
    checked: list[Elementary2Group] = []
    if job.outputs.h1 or job.outputs.oracle:
        h = h1_pi1(job.datum, job.involution)
        if job.outputs.h1:
            h1_order = h.order
        checked = [group, h]
    verdict = _oracle_verdict(checked) if job.outputs.oracle else None
    return {
        "order": group.order,
        "rank": group.rank,
        "generators": [list(v) for v in group.generators],
        "representatives": reps,
        "h1_order": h1_order,
        "oracle": verdict,
        "_names": group.generator_names,  # stripped before serialization
    }


# ---------------------------------------------------------------------------
# rendering


def render_json(report: dict) -> str:
    clean = {k: v for k, v in report.items() if not k.startswith("_")}
    return json.dumps(clean, indent=2)


def _vec_str(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def render_text(report: dict, job: JobSpec) -> str:
    rd, inv = job.datum, job.involution
    lines = []
    header = rd.name or "unnamed datum"
    if inv.name and inv.name != rd.name:
        header += f", involution {inv.name}"
    lines.append(f"group: {header}")
    if report["order"] == 1:
        lines.append("pi0 order 1 (connected)")
    else:
        lines.append(f"pi0 order {report['order']} (rank {report['rank']})")

    names = report["_names"]
    if job.outputs.pi0 and report["generators"]:
        lines.append("")
        width = max(len(nm or "-") for nm in names)
        width = max(width, len("generator"))
        lines.append(f"  {'generator':<{width}}  vector")
        for nm, v in zip(names, report["generators"]):
            lines.append(f"  {nm or '-':<{width}}  {_vec_str(v)}")

    reps = report["representatives"]
    if job.outputs.representatives and reps:
        lines.append("")
        tags = [f"t{i + 1}" for i in range(len(reps))]
        nus = [_vec_str(r["nu"]) for r in reps]
        widths = (
            max(len(t) for t in tags + ["element"]),
            max(len(s) for s in nus + ["nu"]),
        )
        has_matrix = any(r["evaluations"] for r in reps)
        head = f"  {'element':<{widths[0]}}  {'nu':<{widths[1]}}"
        lines.append((head + "  matrix").rstrip() if has_matrix else head.rstrip())
        sign = "+-" if rd.lift_note else ""
        for tag, nu_s, r in zip(tags, nus, reps):
            row = f"  {tag:<{widths[0]}}  {nu_s:<{widths[1]}}"
            if r["evaluations"]:
                diag = ", ".join(val for _, val in r["evaluations"])
                row += f"  {sign}diag({diag})"
            lines.append(row.rstrip())
        if rd.lift_note:
            lines.append(f"  note: {rd.lift_note}")

    if report["h1_order"] is not None or report["oracle"] is not None:
        lines.append("")
        if report["h1_order"] is not None:
            lines.append(f"h1 order {report['h1_order']}")
        if report["oracle"] is not None:
            lines.append(f"oracle: {report['oracle']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# argument parsing and entry point


class _Parser(argparse.ArgumentParser):
    """Argparse that reports usage problems as ValueError (exit code 1)."""

    def error(self, message):
        raise ValueError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="pi0", description="component groups of real reductive groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p):
        p.add_argument("--pi0", action="store_true", help="list pi0 generators")
        p.add_argument("--h1", action="store_true", help="also compute H1 of the fundamental group")
        p.add_argument("--reps", action="store_true", help="list component representatives")
        p.add_argument("--oracle", action="store_true", help="cross-check with brute-force coset enumeration")
        p.add_argument("--format", choices=("text", "json", "json-like"), default=None)

    comp = sub.add_parser("compute", help="run a JSON job specification")
    comp.add_argument("spec_file", help="path to the JSON job file, or '-' for stdin")
    add_output_flags(comp)

    pre = sub.add_parser("preset", help="run a built-in group")
    pre.add_argument(
        "name",
        help="GL, SO, PSO, TORUS_SPLIT, TORUS_COMPACT, TORUS_WEIL, E7, or SIMPLE",
    )
    pre.add_argument("--n", type=int, help="size parameter for GL and the tori")
    pre.add_argument("--p", type=int, help="signature for SO/PSO")
    pre.add_argument("--q", type=int, help="signature for SO/PSO")
    pre.add_argument("--form", help="E7 real form: EV, EVI, or EVII")
    pre.add_argument("--type", dest="cartan_type", help="Cartan type A..G for SIMPLE")
    pre.add_argument("--rank", type=int, help="rank for SIMPLE")
    pre.add_argument("--isogeny", choices=("sc", "adj"), default="sc")
    pre.add_argument(
        "--real",
        choices=("split", "compact"),
        default=None,
        help="real form for SIMPLE (default split)",
    )
    add_output_flags(pre)
    return parser


def _doc_from_args(args) -> dict:
    if args.command == "compute":
        if args.spec_file == "-":
            text = sys.stdin.read()
        else:
            with open(args.spec_file, "r", encoding="utf-8") as fh:
                text = fh.read()
        doc = json.loads(text)
        if not isinstance(doc, dict):
            raise ValueError("job specification must be a JSON object")
    else:
        doc = {"preset": args.name}
        for key in ("n", "p", "q", "form", "rank"):
            val = getattr(args, key)
            if val is not None:
                doc[key] = val
        if args.cartan_type is not None:
            doc["type"] = args.cartan_type
            doc["isogeny"] = args.isogeny
            if args.real is not None:
                doc["real"] = args.real

    # command-line flags override the document's output selection
    if args.pi0 or args.h1 or args.reps or args.oracle:
        doc["outputs"] = {
            "pi0": args.pi0,
            "h1": args.h1,
            "representatives": args.reps,
            "oracle_check": args.oracle,
        }
    if args.format is not None:
        doc["format"] = args.format
    return doc


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        job = parse_jobspec(_doc_from_args(args))
        report = run(job)
        if job.fmt == "json":
            print(render_json(report))
        else:
            print(render_text(report, job))
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
