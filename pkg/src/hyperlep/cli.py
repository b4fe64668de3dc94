"""``hyperlep`` command-line front end."""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass
from pathlib import Path

from . import axioms, export, substructures
from .conservation import derive_table, leptons, load_particles
from .hypercore import HyperError, HyperTable
from .paperdata import load_fixtures
from .reproduce import fixtures_with_corrupt_cell, format_claims, run_claims

COMMANDS = ("derive", "check", "violations", "subgroups", "lattice", "reproduce-paper")
FORMATS = ("text", "csv", "json")
TABLES = ("derived", "transcribed")

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: Path | None = None
    output_format: str = "text"
    output_path: Path | None = None
    unicode: bool = False
    table: str = "derived"
    corrupt_cell: tuple[str, str] | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise HyperError(f"unknown command {self.command!r}")
        if self.output_format not in FORMATS:
            raise HyperError(f"unknown format {self.output_format!r}")
        if self.table not in TABLES:
            raise HyperError(f"unknown table {self.table!r}")
        if self.table == "transcribed" and self.input_path is not None:
            raise HyperError("--table transcribed cannot be combined with --input")
        if self.corrupt_cell is not None and self.command != "reproduce-paper":
            raise HyperError("--corrupt-cell only applies to reproduce-paper")


def _namer(cfg: RunConfig):
    return export.unicode_name if cfg.unicode else export.ascii_name


def _load_table(cfg: RunConfig) -> HyperTable:
    if cfg.table == "transcribed":
        return load_fixtures().table2
    ps = load_particles(cfg.input_path) if cfg.input_path else leptons()
    return derive_table(ps)


def _reference_labels(t: HyperTable):
    fx = load_fixtures()
    return fx.labels() if t.carrier == fx.table2.carrier else None


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def summarize_report(r: axioms.AxiomReport) -> str:
    prefix = "abelian " if r.commutative else ""
    verdict = "holds" if r.strongly_associative else "FAILS"
    return f"{prefix}{r.classification}; strong associativity: {verdict} ({r.unequal_triples} unequal triples)"


def _report_dict(t: HyperTable, r: axioms.AxiomReport, namer) -> dict:
    el = [namer(n) for n in t.carrier]
    return {
        "carrier": el,
        "classification": r.classification,
        "commutative": r.commutative,
        "reproductive": r.reproductive,
        "weakly_associative": r.weakly_associative,
        "strongly_associative": r.strongly_associative,
        "triples_checked": r.triples_checked,
        "unequal_triples": r.unequal_triples,
        "reproduction_failures": [el[x] for x in r.reproduction_failures],
        "weak_failures": [[el[k] for k in tri] for tri in r.weak_failures],
        "noncommuting_pairs": [[el[x], el[y]] for x, y in r.noncommuting_pairs],
    }


def cmd_derive(cfg: RunConfig) -> tuple[str, int]:
    t = _load_table(cfg)
    namer = _namer(cfg)
    if cfg.output_format == "csv":
        return export.table_to_csv(t, namer), EXIT_OK
    if cfg.output_format == "json":
        return export.dumps(export.table_to_dict(t, namer)), EXIT_OK
    return export.table_to_text(t, namer), EXIT_OK


def cmd_check(cfg: RunConfig) -> tuple[str, int]:
    t = _load_table(cfg)
    r = axioms.classify(t)
    code = EXIT_OK if r.is_hv_group else EXIT_VERIFY
    namer = _namer(cfg)
    if cfg.output_format == "json":
        data = _report_dict(t, r, namer)
        data["summary"] = summarize_report(r)
        return export.dumps(data), code
    if cfg.output_format == "csv":
        d = _report_dict(t, r, namer)
        rows = [["property", "value"]]
        for k in ("classification", "commutative", "reproductive", "weakly_associative",
                  "strongly_associative", "triples_checked", "unequal_triples"):
            rows.append([k, d[k]])
        return _csv(rows), code

    def yn(ok: bool) -> str:
        return "holds" if ok else "FAILS"

    n = t.size
    lines = [
        summarize_report(r),
        f"commutative: {yn(r.commutative)} ({len(r.noncommuting_pairs)} non-commuting pairs)",
        f"reproduction: {yn(r.reproductive)} ({n - len(r.reproduction_failures)}/{n} elements)",
        f"weak associativity: {yn(r.weakly_associative)} "
        f"({r.triples_checked - len(r.weak_failures)}/{r.triples_checked} triples)",
        f"strong associativity: {yn(r.strongly_associative)} "
        f"({r.triples_checked - r.unequal_triples}/{r.triples_checked} triples)",
    ]
    return "\n".join(lines) + "\n", code


def cmd_violations(cfg: RunConfig) -> tuple[str, int]:
    t = _load_table(cfg)
    lists = axioms.associativity_violations(t)
    namer = _namer(cfg)
    if cfg.output_format == "csv":
        return export.violations_to_csv(t, lists, namer), EXIT_OK
    if cfg.output_format == "json":
        return export.dumps(export.violations_to_dict(t, lists, namer)), EXIT_OK
    return export.violations_to_text(t, lists, namer), EXIT_OK


def cmd_subgroups(cfg: RunConfig) -> tuple[str, int]:
    t = _load_table(cfg)
    census = substructures.enumerate_subgroups(t)
    namer = _namer(cfg)
    c = t.carrier
    if cfg.output_format == "json":
        return export.dumps(export.census_to_dict(census, c, namer)), EXIT_OK
    if cfg.output_format == "csv":
        labels = census.labels()
        rows = [["dimension", "label", "elements"]]
        rows += [[len(m), labels[m], " ".join(namer(x) for x in c.names(m))] for m in census.members()]
        return _csv(rows), EXIT_OK
    return export.census_to_text(census, c, namer, _reference_labels(t)), EXIT_OK


def cmd_lattice(cfg: RunConfig) -> tuple[str, int]:
    t = _load_table(cfg)
    census = substructures.enumerate_subgroups(t)
    lat = substructures.inclusion_lattice(census)
    namer = _namer(cfg)
    c = t.carrier
    if cfg.output_format == "json":
        return export.dumps(export.lattice_to_dict(lat, c, namer)), EXIT_OK
    if cfg.output_format == "csv":
        labels = census.labels()
        rows = [["lower", "upper"]] + [[labels[a], labels[b]] for a, b in lat.hasse_edges]
        return _csv(rows), EXIT_OK
    return export.lattice_to_dot(lat, c, census.labels(), namer, _reference_labels(t)), EXIT_OK


def cmd_reproduce_paper(cfg: RunConfig) -> tuple[str, int]:
    fx = load_fixtures()
    if cfg.corrupt_cell is not None:
        row, col = cfg.corrupt_cell
        fx = fixtures_with_corrupt_cell(fx, row, col)
    claims = run_claims(fx, subject=cfg.table)
    code = EXIT_OK if all(cl.passed for cl in claims) else EXIT_VERIFY
    if cfg.output_format == "json":
        data = [{"claim": cl.name, "passed": cl.passed, "detail": cl.detail} for cl in claims]
        return export.dumps({"claims": data}), code
    if cfg.output_format == "csv":
        rows = [["claim", "status", "detail"]]
        rows += [[cl.name, "PASS" if cl.passed else "FAIL", cl.detail] for cl in claims]
        return _csv(rows), code
    return format_claims(claims), code


HANDLERS = {
    "derive": cmd_derive,
    "check": cmd_check,
    "violations": cmd_violations,
    "subgroups": cmd_subgroups,
    "lattice": cmd_lattice,
    "reproduce-paper": cmd_reproduce_paper,
}


def _cell_arg(s: str) -> tuple[str, str]:
    parts = [p.strip() for p in s.split(",")]
    if len(parts) != 2 or not all(parts):
        raise argparse.ArgumentTypeError("expected ROW,COL element names")
    return parts[0], parts[1]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hyperlep",
        description="Derive and verify hyperoperation tables from conservation laws.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", type=Path, help="particle definition file (default: bundled leptons)")
    p.add_argument("--format", choices=FORMATS, default="text", dest="output_format")
    p.add_argument("--output", type=Path, help="write here instead of standard output")
    p.add_argument("--unicode", action="store_true", help="use ν, μ, τ glyphs in element names")
    p.add_argument(
        "--table", choices=TABLES, default="derived",
        help="operate on the conservation-derived table or on the transcribed table",
    )
    p.add_argument(
        "--corrupt-cell", type=_cell_arg, metavar="ROW,COL",
        help="reproduce-paper harness mode: perturb one transcribed cell before comparing",
    )
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            # reproduce-paper always works from the bundled definitions
            input_path=None if args.command == "reproduce-paper" else args.input,
            output_format=args.output_format,
            output_path=args.output,
            unicode=args.unicode,
            table=args.table,
            corrupt_cell=args.corrupt_cell,
        )
        text, code = HANDLERS[cfg.command](cfg)
    except (HyperError, OSError) as exc:
        print(f"hyperlep: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.output_path is not None:
        cfg.output_path.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
