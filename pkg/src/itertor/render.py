"""Text, LaTeX and JSON renderings of algebras, series and results."""
from __future__ import annotations

import json
import re
from pathlib import Path

from .algebra import GradedGenerator, Kind, PoincareSeries, TensorAlgebra
from .errors import SeriesFormatError

__all__ = [
    "emit_json",
    "load_series",
    "parse_series",
    "series_line",
    "generator_table",
    "latex_generator",
    "latex_table",
]

_GREEK = ("omega", "tau", "mu", "rho", "phi", "gamma")
_LATEX_PREFIX = {"eps": r"\varepsilon", "rho": r"\varrho", "phi": r"\varphi", "gamma": r"\gamma"}


def emit_json(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def parse_series(text: str, source: str = "<string>") -> PoincareSeries:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        lines = text.splitlines()
        context = lines[exc.lineno - 1] if 0 < exc.lineno <= len(lines) else ""
        raise SeriesFormatError(
            f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}\n    {context}\n"
            f"    {' ' * (exc.colno - 1)}^") from None
    if not isinstance(data, dict):
        raise SeriesFormatError(f"{source}: expected an object with 'cap' and 'coefficients'")
    if "coefficients" not in data:
        raise SeriesFormatError(f"{source}: missing 'coefficients' field")
    coeffs = data["coefficients"]
    if not isinstance(coeffs, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in coeffs):
        raise SeriesFormatError(f"{source}: 'coefficients' must be a list of nonnegative integers")
    if not coeffs:
        raise SeriesFormatError(f"{source}: 'coefficients' is empty")
    cap = data.get("cap", len(coeffs) - 1)
    if not isinstance(cap, int) or cap != len(coeffs) - 1:
        raise SeriesFormatError(
            f"{source}: cap {cap!r} does not match {len(coeffs)} coefficients")
    return PoincareSeries(cap, tuple(coeffs))


def load_series(path) -> PoincareSeries:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SeriesFormatError(f"{path}: {exc.strerror}") from None
    return parse_series(text, str(path))


def series_line(s: PoincareSeries) -> str:
    return ",".join(str(c) for c in s.coefficients)


def generator_table(A: TensorAlgebra) -> str:
    rows = [(b.name, b.label(), str(b.degree)) for b in A.blocks]
    header = ("generator", "kind", "degree")
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(3)]
    fmt = f"{{:<{widths[0]}}}  {{:<{widths[1]}}}  {{:>{widths[2]}}}"
    out = [fmt.format(*header)]
    out += [fmt.format(*r) for r in rows]
    return "\n".join(out)


def _latex_base(base: str) -> str:
    base, _, suffix = base.partition("#")
    for g in _GREEK:
        if base.startswith(g):
            base = "\\" + base
            break
    base = re.sub(r"\^\((.*)\)$", r"^{(\1)}", base)
    return base + (rf"\#{suffix}" if suffix else "")


def latex_generator(g: GradedGenerator) -> str:
    out = _latex_base(g.base)
    for pre in g.prefixes:
        tok = _LATEX_PREFIX[pre.op]
        if pre.op != "eps":
            tok += f"^{{{pre.index}}}"
        out = tok + out
    return out


def _latex_block(b, field_name: str) -> str:
    g = latex_generator(b.generator)
    if b.kind is Kind.POLYNOMIAL:
        return f"{field_name}[{g}]"
    if b.kind is Kind.EXTERIOR:
        return rf"\Lambda({g})"
    if b.kind is Kind.TRUNCATED:
        return f"{field_name}[{g}]/({g})^{{{b.m}}}"
    return rf"\Gamma({g})"


def latex_table(A: TensorAlgebra, series: PoincareSeries | None = None) -> str:
    field_name = r"\mathbb{Q}" if A.characteristic == 0 else rf"\mathbb{{F}}_{{{A.characteristic}}}"
    lines = [r"\begin{tabular}{llr}", r"generator & factor & degree \\ \hline"]
    for b in A.blocks:
        lines.append(f"${latex_generator(b.generator)}$ & ${_latex_block(b, field_name)}$ "
                     f"& {b.degree} \\\\")
    lines.append(r"\end{tabular}")
    if series is not None:
        lines.append("% series: " + series_line(series))
    return "\n".join(lines)
