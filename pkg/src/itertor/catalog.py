"""Named closed forms for higher (topological) Hochschild and Shukla homology.

Each entry returns a :class:`CatalogResult`: a tensor algebra computed by
the engine, plus the coefficient module it is tensored with when that
module is not the ground field (for example F_p[x]/x^m, or "free over L").
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .algebra import (
    PoincareSeries,
    TensorAlgebra,
    algebra_series,
    block_series,
    divpow,
    ext,
    gen,
    is_prime,
    series_mul,
    tensor,
    trunc,
)
from .engine import TowerSpec, b_tower, bpp_tower, gamma_split, iterate_tor
from .errors import CapMismatchError, PreconditionError

__all__ = [
    "Multiplicity",
    "CatalogResult",
    "Entry",
    "ENTRIES",
    "PROVENANCE",
    "thh_n_fp",
    "thh_n_Z_modp",
    "shukla_n",
    "thh_n_zpm_zp",
    "shukla_over_zpm",
    "hh_n_truncated",
    "thh_n_truncated",
    "tate_tor",
    "thh_weak_split",
    "thh_number_ring_quotient",
    "number_ring_reduced_route",
    "thh_function_field",
    "shukla_label",
]

PROVENANCE = {
    "thh_n_fp": "higher-thh-of-fp",
    "thh_n_Z_modp": "higher-thh-of-z-mod-p",
    "shukla_n": "higher-shukla-tower",
    "thh_n_zpm_zp": "higher-thh-of-z-mod-pm-splitting",
    "shukla_over_zpm": "shukla-over-z-mod-pm",
    "hh_n_truncated": "higher-hh-of-truncated-polynomial",
    "thh_n_truncated": "higher-thh-of-truncated-polynomial",
    "tate_tor": "tate-tor-of-regular-quotient",
    "thh_weak_split": "tate-weak-splitting",
    "thh_number_ring_quotient": "number-ring-quotient-splitting",
    "thh_function_field": "thh-of-function-field",
}


@dataclass(frozen=True)
class Multiplicity:
    """Coefficient module the algebra is tensored with.

    ``series`` counts its graded rank; for modules free over a field L it is
    the constant series 1 and ranks are reported over L.
    """

    description: str
    series: PoincareSeries

    @classmethod
    def trivial(cls, cap: int) -> Multiplicity:
        return cls("trivial", PoincareSeries.one(cap))

    @property
    def is_trivial(self) -> bool:
        return self.description == "trivial"

    def to_dict(self) -> dict:
        return {"description": self.description, "series": self.series.to_dict()}


@dataclass(frozen=True)
class CatalogResult:
    entry: str
    algebra: TensorAlgebra
    multiplicity: Multiplicity
    provenance: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.provenance not in PROVENANCE.values():
            raise PreconditionError(f"unknown provenance tag {self.provenance!r}")

    @property
    def cap(self) -> int:
        return self.algebra.cap

    def series(self, cap: int | None = None) -> PoincareSeries:
        if cap is None:
            cap = self.cap
        return series_mul(self.multiplicity.series.truncate(cap), algebra_series(self.algebra, cap))

    def to_dict(self) -> dict:
        return {
            "entry": self.entry,
            "provenance": self.provenance,
            "params": dict(sorted(self.params.items())),
            "algebra": self.algebra.to_dict(),
            "multiplicity": self.multiplicity.to_dict(),
            "series": self.series().to_dict(),
        }


def _result(entry, algebra, params, multiplicity=None):
    if multiplicity is None:
        multiplicity = Multiplicity.trivial(algebra.cap)
    return CatalogResult(entry, algebra, multiplicity, PROVENANCE[entry], params)


def _prime(p):
    if not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p}")


def shukla_label(p: int, m: int | None = None) -> str:
    """Base label of the degree-1 class: tau_1^(p) or tau_1^(p^m)."""
    return f"tau_1^({p})" if m is None else f"tau_1^({p}^{m})"


def thh_n_fp(n: int, p: int, cap: int) -> CatalogResult:
    """THH^[n](F_p) = B^n(mu), |mu| = 2."""
    _prime(p)
    if n < 1:
        raise PreconditionError("THH^[n](F_p) is defined here for n >= 1")
    return _result("thh_n_fp", b_tower(2, n, p, cap, base="mu"), dict(n=n, p=p, cap=cap))


def thh_n_Z_modp(n: int, p: int, cap: int) -> CatalogResult:
    """THH^[n](Z; Z/p) = B^n(x) (x) B^(n+1)(y), |x| = 2p, |y| = 2p - 2."""
    _prime(p)
    if n < 1:
        raise PreconditionError("n must be >= 1")
    A = tensor(b_tower(2 * p, n, p, cap, base="x"), b_tower(2 * p - 2, n + 1, p, cap, base="y"))
    return _result("thh_n_Z_modp", A, dict(n=n, p=p, cap=cap))


def _shukla_algebra(n, p, cap, label):
    seed = TensorAlgebra.of(p, cap, ext(gen(label, 1)))
    return iterate_tor(TowerSpec.of(seed, n))


def shukla_n(n: int, cap: int, p: int, label: str = "tau_1") -> CatalogResult:
    """Sh^[n](R/p), and equally Sh^[n](R/a; R/p): n-fold Tor dual of Lambda(tau_1)."""
    _prime(p)
    if n < 0:
        raise PreconditionError("n must be >= 0")
    return _result("shukla_n", _shukla_algebra(n, p, cap, label), dict(n=n, p=p, cap=cap))


def thh_n_zpm_zp(n: int, p: int, m: int, cap: int) -> CatalogResult:
    """THH^[n](Z/p^m; Z/p) = THH^[n](Z; Z/p) (x) Sh^[n](Z/p^m; Z/p)."""
    _prime(p)
    if m < 2:
        raise PreconditionError("m must be >= 2: the splitting needs p^m in (p)^2")
    if n < 1:
        raise PreconditionError("n must be >= 1")
    A = tensor(thh_n_Z_modp(n, p, cap).algebra, _shukla_algebra(n, p, cap, shukla_label(p, m)))
    return _result("thh_n_zpm_zp", A, dict(n=n, p=p, m=m, cap=cap))


def shukla_over_zpm(m: int, p: int, cap: int) -> CatalogResult:
    """Sh^{Z/p^m}(Z/p) = Sh^[2](Z/p^m; Z/p) (x) Sh(Z/p)."""
    _prime(p)
    if m < 2:
        raise PreconditionError("m must be >= 2")
    A = tensor(_shukla_algebra(2, p, cap, shukla_label(p, m)),
               _shukla_algebra(1, p, cap, shukla_label(p)))
    return _result("shukla_over_zpm", A, dict(m=m, p=p, cap=cap))


def _truncated_module(p, m, x_deg, cap, base="x"):
    ser = block_series(trunc(gen(base, x_deg), m), p, cap)
    return Multiplicity(f"F_{p}[{base}]/{base}^{m}, |{base}| = {x_deg}", ser)


def hh_n_truncated(n: int, p: int, m: int, x_deg: int = 2, reduced: bool = False,
                   cap: int = 12) -> CatalogResult:
    """HH^[n](F_p[x]/x^m) (needs p | m) or, reduced, HH^[n](F_p[x]/x^m; F_p) (any p, m)."""
    _prime(p)
    if m < 2:
        raise PreconditionError("m must be >= 2")
    if x_deg < 2 or x_deg % 2:
        raise PreconditionError(f"|x| must be even and positive, got {x_deg}")
    if not reduced and m % p:
        raise PreconditionError(
            f"full coefficients require p | m (p={p}, m={m}); when gcd(p, m) = 1 "
            "multiplication by m is invertible and the answer is not a free "
            "module -- use the oracle's small Hochschild complex instead")
    params = dict(n=n, p=p, m=m, x_deg=x_deg, reduced=reduced, cap=cap)
    A = bpp_tower(m, x_deg, n, p, cap)
    mult = None if reduced else _truncated_module(p, m, x_deg, cap)
    return _result("hh_n_truncated", A, params, mult)


def thh_n_truncated(n: int, p: int, m: int, x_deg: int = 2, reduced: bool = False,
                    cap: int = 12) -> CatalogResult:
    """THH^[n](F_p[x]/x^m [; F_p]) = THH^[n](F_p) (x) HH^[n](F_p[x]/x^m [; F_p])."""
    hh = hh_n_truncated(n, p, m, x_deg, reduced, cap)
    A = tensor(thh_n_fp(n, p, cap).algebra, hh.algebra)
    mult = None if reduced else hh.multiplicity
    return _result("thh_n_truncated", A, hh.params, mult)


def tate_tor(d: int, r: int, cap: int, p: int = 0, split: bool = False) -> CatalogResult:
    """Tor^{R/I}(R/m, R/m) = Lambda(T_1..T_d) (x) Gamma(S_1..S_r), |T| = 1, |S| = 2.

    Divided powers stay unsplit unless ``split`` is set, which needs p prime.
    """
    if d < 0 or r < 0:
        raise PreconditionError("d and r must be nonnegative")
    if split or p:
        _prime(p)
    blocks = [ext(gen(f"T_{i}", 1)) for i in range(1, d + 1)]
    gammas = [gen(f"S_{i}", 2) for i in range(1, r + 1)]
    A = TensorAlgebra.of(p, cap, *blocks, *(divpow(g) for g in gammas))
    if split:
        A = tensor(TensorAlgebra.of(p, cap, *blocks), *(gamma_split(g, p, cap) for g in gammas))
    return _result("tate_tor", A, dict(d=d, r=r, p=p, cap=cap, split=split))


def thh_weak_split(thh_R_series: PoincareSeries, r: int, cap: int) -> PoincareSeries:
    """Series of THH(R/(a_1..a_r); R/m) = THH(R; R/m) (x) Gamma(S_1..S_r).

    The THH(R; R/m) series is supplied by the caller.
    """
    if thh_R_series.cap != cap:
        raise CapMismatchError(f"input series has cap {thh_R_series.cap}, expected {cap}")
    if r < 0:
        raise PreconditionError("r must be nonnegative")
    out = thh_R_series
    gamma = divpow(gen("S", 2))
    for _ in range(r):
        out = series_mul(out, block_series(gamma, 0, cap))
    return out


def thh_number_ring_quotient(n: int, p: int, e: int, residue_thh_series: PoincareSeries,
                             cap: int) -> CatalogResult:
    """THH^[n](O_K/p; O_K/P_i) = THH^[n](O_K; O_K/P_i) (x) Sh^[n](O_K/p; O_K/P_i).

    The first factor has no closed form here and enters as
    ``residue_thh_series``; the algebra part is the Shukla tower, which does
    not depend on the ramification index ``e``.
    """
    _prime(p)
    if e < 2:
        raise PreconditionError("e_i = 1 is unramified: the splitting needs p in P_i^2")
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if residue_thh_series.cap != cap:
        raise CapMismatchError(f"residue series has cap {residue_thh_series.cap}, expected {cap}")
    A = _shukla_algebra(n, p, cap, shukla_label(p))
    mult = Multiplicity("THH^[n](O_K; O_K/P_i), caller-supplied", residue_thh_series)
    return _result("thh_number_ring_quotient", A, dict(n=n, p=p, e=e, cap=cap), mult)


def number_ring_reduced_route(n: int, p: int, e: int, cap: int, x_deg: int = 2) -> CatalogResult:
    """O_K/p = (O_K/P_i)[x]/x^e, so the reduced higher HH is the B''-tower."""
    if e < 2:
        raise PreconditionError("e_i = 1 is unramified")
    return hh_n_truncated(n, p, e, x_deg, reduced=True, cap=cap)


def thh_function_field(d: int, p: int, cap: int) -> CatalogResult:
    """THH_*(L) = L (x) THH_*(F_p) (x) Lambda(eps x_1, ..., eps x_d), ranks over L."""
    _prime(p)
    if d < 0:
        raise PreconditionError("transcendence degree must be nonnegative")
    eps_blocks = [ext(gen(f"x_{i}", 0).eps()) for i in range(1, d + 1)]
    A = tensor(thh_n_fp(1, p, cap).algebra, TensorAlgebra.of(p, cap, *eps_blocks))
    mult = Multiplicity("free over L", PoincareSeries.one(cap))
    return _result("thh_function_field", A, dict(d=d, p=p, cap=cap), mult)


@dataclass(frozen=True)
class Entry:
    id: str
    func: Callable
    params: tuple[str, ...]
    summary: str
    takes_series: bool = False
    returns_series: bool = False

    @property
    def provenance(self) -> str:
        return PROVENANCE[self.id]


ENTRIES: dict[str, Entry] = {e.id: e for e in [
    Entry("thh_n_fp", thh_n_fp, ("n", "p", "cap"), "THH^[n](F_p)"),
    Entry("thh_n_Z_modp", thh_n_Z_modp, ("n", "p", "cap"), "THH^[n](Z; Z/p)"),
    Entry("shukla_n", shukla_n, ("n", "cap", "p"), "Sh^[n](Z/p) and Sh^[n](Z/p^m; Z/p)"),
    Entry("thh_n_zpm_zp", thh_n_zpm_zp, ("n", "p", "m", "cap"), "THH^[n](Z/p^m; Z/p)"),
    Entry("shukla_over_zpm", shukla_over_zpm, ("m", "p", "cap"), "Sh^{Z/p^m}(Z/p)"),
    Entry("hh_n_truncated", hh_n_truncated, ("n", "p", "m", "x_deg", "reduced", "cap"),
          "HH^[n](F_p[x]/x^m [; F_p])"),
    Entry("thh_n_truncated", thh_n_truncated, ("n", "p", "m", "x_deg", "reduced", "cap"),
          "THH^[n](F_p[x]/x^m [; F_p])"),
    Entry("tate_tor", tate_tor, ("d", "r", "cap", "p"), "Tor^{R/I}(R/m, R/m)"),
    Entry("thh_weak_split", thh_weak_split, ("series", "r", "cap"),
          "THH(R/(a_1..a_r); R/m) from a supplied THH(R; R/m)",
          takes_series=True, returns_series=True),
    Entry("thh_number_ring_quotient", thh_number_ring_quotient, ("n", "p", "e", "series", "cap"),
          "THH^[n](O_K/p; O_K/P_i) from a supplied THH^[n](O_K; O_K/P_i)", takes_series=True),
    Entry("thh_function_field", thh_function_field, ("d", "p", "cap"), "THH(L), L a function field"),
]}
