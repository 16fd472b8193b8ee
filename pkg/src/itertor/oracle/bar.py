"""Homology of the normalized bar complex B(F_p, A, F_p)."""
from __future__ import annotations

import os
from dataclasses import dataclass, field

from ..algebra import PoincareSeries
from ..errors import CapMismatchError, MemoryGuardError
from .linalg import rank_mod_p
from .presentation import AlgebraPresentation

__all__ = ["RankTable", "bar_homology", "max_nnz_limit", "DEFAULT_MAX_NNZ", "MAX_NNZ_ENV"]

DEFAULT_MAX_NNZ = 2_000_000
MAX_NNZ_ENV = "ITERTOR_MAX_NNZ"


def max_nnz_limit() -> int:
    raw = os.environ.get(MAX_NNZ_ENV)
    if raw is None:
        return DEFAULT_MAX_NNZ
    try:
        return int(raw)
    except ValueError:
        raise MemoryGuardError(f"{MAX_NNZ_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class RankTable:
    """Homology ranks indexed by total degree and by (homological, internal)."""

    total_cap: int
    hom_cap: int
    ranks: dict  # (s, internal) -> rank, zero entries omitted
    chain_dims: dict = field(default_factory=dict)  # (s, internal) -> dim, when known

    @property
    def by_total_degree(self) -> tuple[int, ...]:
        out = [0] * (self.total_cap + 1)
        for (s, q), r in self.ranks.items():
            if s + q <= self.total_cap:
                out[s + q] += r
        return tuple(out)

    def by_homological_degree(self) -> tuple[int, ...]:
        out = [0] * (self.hom_cap + 1)
        for (s, _), r in self.ranks.items():
            if s <= self.hom_cap:
                out[s] += r
        return tuple(out)

    def series(self) -> PoincareSeries:
        return PoincareSeries(self.total_cap, self.by_total_degree)

    def to_dict(self) -> dict:
        return {
            "by_total_degree": list(self.by_total_degree),
            "by_bidegree": [
                {"s": s, "internal": q, "rank": r}
                for (s, q), r in sorted(self.ranks.items())
            ],
        }


class _BarChains:
    """Basis of the normalized bar complex, enumerated lazily by bidegree."""

    def __init__(self, P: AlgebraPresentation):
        self.P = P
        self.by_degree: dict[int, list[int]] = {}
        for i in P.aug_ideal:
            self.by_degree.setdefault(P.degrees[i], []).append(i)
        self._chains: dict[tuple[int, int], list[tuple[int, ...]]] = {(0, 0): [()]}
        self._counts: dict[tuple[int, int], int] = {}

    def count(self, s: int, q: int) -> int:
        key = (s, q)
        if key not in self._counts:
            if s == 0:
                n = 1 if q == 0 else 0
            elif q < s:
                n = 0
            else:
                n = sum(len(idx) * self.count(s - 1, q - d)
                        for d, idx in self.by_degree.items() if d <= q)
            self._counts[key] = n
        return self._counts[key]

    def chains(self, s: int, q: int) -> list[tuple[int, ...]]:
        key = (s, q)
        if key not in self._chains:
            out = []
            if s > 0 and q >= s:
                for d in sorted(self.by_degree):
                    if d > q:
                        break
                    tails = self.chains(s - 1, q - d)
                    for a in self.by_degree[d]:
                        out.extend((a,) + t for t in tails)
            self._chains[key] = out
        return self._chains[key]


def _differential_rows(bar: _BarChains, s: int, q: int) -> list[dict[int, int]]:
    """Rows of d_s : B_{s,q} -> B_{s-1,q}, one per source chain."""
    P = bar.P
    p = P.p
    target = {c: i for i, c in enumerate(bar.chains(s - 1, q))}
    rows = []
    for c in bar.chains(s, q):
        row: dict[int, int] = {}
        for i in range(s - 1):
            prod = P.multiply(c[i], c[i + 1])
            if prod is None:
                continue
            coef, k = prod
            if i % 2 == 0:
                # face i+1 carries sign (-1)^(i+1)
                coef = -coef
            col = target[c[:i] + (k,) + c[i + 2:]]
            v = (row.get(col, 0) + coef) % p
            if v:
                row[col] = v
            else:
                row.pop(col, None)
        rows.append(row)
    return rows


def bar_homology(P: AlgebraPresentation, total_cap: int,
                 max_nnz: int | None = None) -> RankTable:
    """Ranks of Tor^A(F_p, F_p) by bidegree, for total degree <= total_cap.

    Raises :class:`MemoryGuardError` before building any differential whose
    nonzero count could exceed ``max_nnz`` (default from ITERTOR_MAX_NNZ).
    """
    if total_cap > P.cap:
        raise CapMismatchError(f"presentation is only complete up to {P.cap}, asked for {total_cap}")
    if max_nnz is None:
        max_nnz = max_nnz_limit()
    bar = _BarChains(P)

    # rank of d_s on B_{s,q} is needed for homology at (s, q) and (s-1, q)
    needed = [(s, q) for q in range(total_cap + 1)
              for s in range(2, q + 1) if s - 1 + q <= total_cap]
    for s, q in needed:
        est = bar.count(s, q) * (s - 1)
        if est > max_nnz:
            raise MemoryGuardError(
                f"bar differential d_{s} in internal degree {q} may hold {est} nonzeros "
                f"(limit {max_nnz}); raise the cap limit or shrink the input")

    drank: dict[tuple[int, int], int] = {}
    for s, q in needed:
        if bar.count(s, q) and bar.count(s - 1, q):
            drank[(s, q)] = rank_mod_p(_differential_rows(bar, s, q), P.p)

    ranks = {}
    dims = {}
    for q in range(total_cap + 1):
        for s in range(0, total_cap - q + 1):
            dim = bar.count(s, q)
            if not dim:
                continue
            dims[(s, q)] = dim
            h = dim - drank.get((s, q), 0) - drank.get((s + 1, q), 0)
            if h:
                ranks[(s, q)] = h
    return RankTable(total_cap=total_cap, hom_cap=total_cap, ranks=ranks, chain_dims=dims)
