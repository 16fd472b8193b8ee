"""Engine-vs-oracle comparison for catalog entries.

Every entry with an oracle path is checked degree by degree: the engine's
closed-form series against ranks the oracle computes by brute force.  The
oracle side of an entry is a product of independent steps (Kunneth over a
field), each one of

    bar         bar-complex homology of the previous tower stage
    basis       monomial count of an explicitly materialized algebra
    hochschild  the small 2-periodic Hochschild complex
    periodic    the periodic resolution of Z/p over Z/p^m
    supplied    a caller-supplied factor taken as given
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import PoincareSeries, TensorAlgebra, ext, gen, poly, series_mul, trunc
from .catalog import ENTRIES, CatalogResult
from .engine import TowerSpec, b_tower, bpp_tower, iterate_tor
from .errors import ItertorError
from .oracle import bar_homology, hochschild_small_complex, materialize, tor_over_zpm

__all__ = ["NoOraclePath", "OracleStep", "VerifyReport", "oracle_plan", "verify"]


class NoOraclePath(ItertorError):
    pass


@dataclass(frozen=True)
class OracleStep:
    kind: str
    description: str
    algebra: TensorAlgebra | None = None
    args: tuple = ()
    series: PoincareSeries | None = None

    def run(self, total_cap: int) -> PoincareSeries:
        if self.kind == "bar":
            P = materialize(self.algebra, total_cap)
            return bar_homology(P, total_cap).series()
        if self.kind == "basis":
            return materialize(self.algebra, total_cap).series
        if self.kind == "hochschild":
            p, m, x_deg, coeffs = self.args
            return hochschild_small_complex(p, m, x_deg, coeffs, total_cap).series()
        if self.kind == "periodic":
            p, m = self.args
            return tor_over_zpm(p, m, total_cap).series()
        if self.kind == "supplied":
            return self.series.truncate(total_cap)
        raise ItertorError(f"unknown oracle step {self.kind!r}")


def _shukla_stage(n, p, cap):
    seed = TensorAlgebra.of(p, cap, ext(gen("tau_1", 1)))
    return iterate_tor(TowerSpec.of(seed, n))


def _b_plan(d, n, p, cap, base):
    if n == 1:
        return [OracleStep("basis", f"B^1({base}) = F_{p}[{base}]",
                           TensorAlgebra.of(p, cap, poly(gen(base, d))))]
    return [OracleStep("bar", f"Tor over B^{n - 1}({base})", b_tower(d, n - 1, p, cap, base))]


def _shukla_plan(n, p, cap):
    if n == 0:
        return [OracleStep("basis", "Lambda(tau_1)", _shukla_stage(0, p, cap))]
    return [OracleStep("bar", f"Tor over Sh^[{n - 1}]", _shukla_stage(n - 1, p, cap))]


def _hh_plan(n, p, m, x_deg, reduced, cap):
    if not reduced and n == 1:
        return [OracleStep("hochschild", f"small Hochschild complex of F_{p}[x]/x^{m}",
                           args=(p, m, x_deg, "full"))]
    steps = []
    if not reduced:
        steps.append(OracleStep("basis", f"F_{p}[x]/x^{m}",
                                TensorAlgebra.of(p, cap, trunc(gen("x", x_deg), m))))
    if n == 1:
        prev = TensorAlgebra.of(p, cap, trunc(gen("x", x_deg), m))
        steps.append(OracleStep("bar", f"Tor over F_{p}[x]/x^{m}", prev))
    else:
        steps.append(OracleStep("bar", f"Tor over B''_{n - 1}", bpp_tower(m, x_deg, n - 1, p, cap)))
    return steps


def oracle_plan(entry: str, params: dict, cap: int) -> list[OracleStep]:
    """Independent oracle computation for ``entry``; raises NoOraclePath if none."""
    g = params.get
    if entry == "thh_n_fp":
        return _b_plan(2, g("n"), g("p"), cap, "mu")
    if entry == "thh_n_Z_modp":
        n, p = g("n"), g("p")
        return _b_plan(2 * p, n, p, cap, "x") + _b_plan(2 * p - 2, n + 1, p, cap, "y")
    if entry == "shukla_n":
        return _shukla_plan(g("n"), g("p"), cap)
    if entry == "thh_n_zpm_zp":
        n, p = g("n"), g("p")
        return oracle_plan("thh_n_Z_modp", params, cap) + _shukla_plan(n, p, cap)
    if entry == "shukla_over_zpm":
        return _shukla_plan(2, g("p"), cap) + _shukla_plan(1, g("p"), cap)
    if entry == "hh_n_truncated":
        return _hh_plan(g("n"), g("p"), g("m"), g("x_deg"), g("reduced"), cap)
    if entry == "thh_n_truncated":
        return (_b_plan(2, g("n"), g("p"), cap, "mu")
                + _hh_plan(g("n"), g("p"), g("m"), g("x_deg"), g("reduced"), cap))
    if entry == "tate_tor":
        d, r = g("d"), g("r")
        if (d, r) == (0, 0):
            return []
        if (d, r) == (1, 1):
            p, m = g("p") or 2, g("m") or 2
            return [OracleStep("periodic", f"periodic resolution of Z/{p} over Z/{p}^{m}",
                               args=(p, m))]
        raise NoOraclePath("tate_tor has an oracle path only for (d, r) = (1, 1) or (0, 0)")
    if entry == "thh_number_ring_quotient":
        return ([OracleStep("supplied", "THH^[n](O_K; O_K/P_i)", series=g("series"))]
                + _shukla_plan(g("n"), g("p"), cap))
    raise NoOraclePath(f"{entry} has no oracle path")


@dataclass(frozen=True)
class VerifyReport:
    entry: str
    params: dict
    total_cap: int
    engine: PoincareSeries
    oracle: PoincareSeries
    steps: tuple[str, ...] = field(default=())

    @property
    def mismatches(self) -> list[int]:
        return [k for k in range(self.total_cap + 1) if self.engine[k] != self.oracle[k]]

    @property
    def match(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        params = {k: (v.to_dict() if isinstance(v, PoincareSeries) else v)
                  for k, v in sorted(self.params.items())}
        return {
            "entry": self.entry,
            "params": params,
            "total_cap": self.total_cap,
            "oracle_steps": list(self.steps),
            "degrees": [
                {"degree": k, "engine": self.engine[k], "oracle": self.oracle[k],
                 "match": self.engine[k] == self.oracle[k]}
                for k in range(self.total_cap + 1)
            ],
            "match": self.match,
        }

    def render(self) -> str:
        lines = [f"verify {self.entry}  (total degree <= {self.total_cap})"]
        lines += [f"  oracle: {s}" for s in self.steps]
        for k in range(self.total_cap + 1):
            e, o = self.engine[k], self.oracle[k]
            flag = "ok" if e == o else "MISMATCH"
            lines.append(f"  degree {k:3d}: engine {e:4d}  oracle {o:4d}  {flag}")
        if self.match:
            lines.append(f"MATCH at all degrees <= {self.total_cap}")
        else:
            lines.append("MISMATCH at degrees " + ", ".join(map(str, self.mismatches)))
        return "\n".join(lines)


def verify(entry: str, params: dict, total_cap: int | None = None) -> VerifyReport:
    if entry not in ENTRIES:
        raise ItertorError(f"unknown entry {entry!r}")
    spec = ENTRIES[entry]
    if spec.returns_series:
        raise NoOraclePath(f"{entry} has no oracle path")
    call = {k: params[k] for k in spec.params if k in params and k != "series"}
    if spec.takes_series:
        call["residue_thh_series"] = params["series"]
    result: CatalogResult = spec.func(**call)
    cap = result.cap if total_cap is None else min(total_cap, result.cap)
    plan = oracle_plan(entry, {**result.params, **params}, cap)
    oracle = PoincareSeries.one(cap)
    for step in plan:
        oracle = series_mul(oracle, step.run(cap))
    return VerifyReport(entry, dict(params), cap, result.series(cap), oracle,
                        tuple(s.description for s in plan))
