"""Command-line front end.

    itertor list
    itertor compute thh_n_zpm_zp --n 1 --p 2 --m 3 --cap 10 --format json
    itertor series thh_function_field --d 2 --p 5 --cap 4
    itertor generators shukla_n --n 2 --p 3 --cap 20 --format latex
    itertor verify shukla_n --n 2 --p 3 --cap 10 --total-cap 10

Exit codes: 0 success or match, 1 usage error, 2 verification mismatch.
The oracle's memory guard reads ITERTOR_MAX_NNZ.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from .catalog import ENTRIES, CatalogResult
from .errors import ItertorError
from .render import emit_json, generator_table, latex_table, load_series, series_line
from .verify import verify

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2
COMMANDS = ("compute", "series", "generators", "verify", "list")
FORMATS = ("table", "json", "latex")
NUMERIC = ("n", "p", "m", "d", "r", "e", "x_deg")
DEFAULTS = {"x_deg": 2, "reduced": False}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    entry: str | None = None
    params: dict = field(default_factory=dict)
    cap: int = 12
    total_cap: int | None = None
    format: str = "table"
    series_file: str | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.cap < 1:
            raise UsageError("--cap must be >= 1")
        if self.total_cap is not None and self.total_cap < 0:
            raise UsageError("--total-cap must be >= 0")
        if self.command == "list":
            return
        if self.entry not in ENTRIES:
            known = ", ".join(ENTRIES)
            raise UsageError(f"unknown entry {self.entry!r}; known entries: {known}")

    def call_args(self) -> dict:
        """Keyword arguments for the entry function, with defaults filled in."""
        spec = ENTRIES[self.entry]
        args = {}
        for name in spec.params:
            if name == "cap":
                args["cap"] = self.cap
            elif name == "series":
                if self.series_file is None:
                    raise UsageError(f"{self.entry} needs --series-file")
                args["series"] = load_series(self.series_file)
            elif self.params.get(name) is not None:
                args[name] = self.params[name]
            elif name in DEFAULTS:
                args[name] = DEFAULTS[name]
            elif self.entry == "tate_tor" and name == "p":
                args["p"] = 0
            else:
                raise UsageError(f"{self.entry} needs --{name.replace('_', '-')}")
        return args


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="itertor", description="Iterated Tor towers and their oracle checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("list", help="list catalog entries").add_argument(
        "--format", choices=FORMATS, default="table")
    for cmd in ("compute", "series", "generators", "verify"):
        sp = sub.add_parser(cmd)
        sp.add_argument("entry")
        for name in NUMERIC:
            sp.add_argument("--" + name.replace("_", "-"), dest=name, type=int)
        sp.add_argument("--cap", type=int, default=12)
        sp.add_argument("--total-cap", dest="total_cap", type=int)
        sp.add_argument("--reduced", action="store_true", default=None)
        sp.add_argument("--format", choices=FORMATS, default="table")
        sp.add_argument("--series-file", dest="series_file")
    return parser


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    params = {k: getattr(ns, k, None) for k in NUMERIC + ("reduced",)}
    cfg = RunConfig(
        command=ns.command,
        entry=getattr(ns, "entry", None),
        params={k: v for k, v in params.items() if v is not None},
        cap=getattr(ns, "cap", 12),
        total_cap=getattr(ns, "total_cap", None),
        format=ns.format,
        series_file=getattr(ns, "series_file", None),
    )
    cfg.validate()
    return cfg


def _call(cfg: RunConfig):
    spec = ENTRIES[cfg.entry]
    args = cfg.call_args()
    if spec.takes_series:
        series = args.pop("series")
        key = "thh_R_series" if spec.returns_series else "residue_thh_series"
        args[key] = series
    return spec.func(**args)


def _render_list(fmt: str) -> str:
    if fmt == "json":
        return emit_json([{"entry": e.id, "provenance": e.provenance, "params": list(e.params),
                           "summary": e.summary} for e in ENTRIES.values()])
    width = max(len(e) for e in ENTRIES)
    return "\n".join(f"{e.id:<{width}}  {e.provenance:<36}  {e.summary}"
                     for e in ENTRIES.values()) + "\n"


def _render_result(cfg: RunConfig, result) -> str:
    if not isinstance(result, CatalogResult):
        # entries that only produce a series
        if cfg.command == "generators":
            raise UsageError(f"{cfg.entry} produces a series, not generators")
        if cfg.format == "json":
            return emit_json(result)
        return series_line(result) + "\n"

    series = result.series()
    if cfg.command == "series":
        return emit_json(series) if cfg.format == "json" else series_line(series) + "\n"
    if cfg.format == "json":
        return emit_json(result.algebra if cfg.command == "generators" else result)
    if cfg.format == "latex":
        return latex_table(result.algebra, series if cfg.command == "compute" else None) + "\n"
    if cfg.command == "generators":
        return generator_table(result.algebra) + "\n"
    A = result.algebra
    lines = [
        f"entry: {result.entry}  (provenance: {result.provenance})",
        f"characteristic: {A.characteristic}  cap: {A.cap}",
        f"multiplicity: {result.multiplicity.description}",
        "",
        generator_table(A),
        "",
        f"series: {series_line(series)}",
    ]
    return "\n".join(lines) + "\n"


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute a validated config; returns (exit status, rendered output)."""
    if cfg.command == "list":
        return EXIT_OK, _render_list(cfg.format)
    if cfg.command == "verify":
        args = cfg.call_args()
        if "m" in cfg.params:
            args.setdefault("m", cfg.params["m"])
        report = verify(cfg.entry, args, cfg.total_cap)
        text = emit_json(report) if cfg.format == "json" else report.render() + "\n"
        return (EXIT_OK if report.match else EXIT_MISMATCH), text
    return EXIT_OK, _render_result(cfg, _call(cfg))


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
        status, text = run(cfg)
    except (UsageError, ItertorError) as exc:
        print(f"itertor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
