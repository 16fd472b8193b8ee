"""Explicit monomial bases and multiplication tables for tensor algebras."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..algebra import Kind, PoincareSeries, TensorAlgebra
from ..engine import gamma_split
from ..errors import GradingError, PreconditionError

__all__ = ["AlgebraPresentation", "materialize"]


@dataclass(frozen=True)
class AlgebraPresentation:
    """Finite presentation of a graded-commutative algebra below a degree cap.

    ``basis[i]`` is an exponent vector over ``generators``; ``mult`` maps an
    ordered pair of basis indices to ``(coefficient, index)`` for every
    nonzero product of degree <= cap.  Koszul signs live in the coefficients.
    """

    p: int
    cap: int
    generators: tuple[str, ...]
    generator_degrees: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    mult: dict
    aug_ideal: tuple[int, ...]

    @property
    def series(self) -> PoincareSeries:
        out = [0] * (self.cap + 1)
        for d in self.degrees:
            out[d] += 1
        return PoincareSeries(self.cap, tuple(out))

    def multiply(self, i: int, j: int) -> tuple[int, int] | None:
        return self.mult.get((i, j))

    def monomial_name(self, i: int) -> str:
        parts = []
        for g, e in zip(self.generators, self.basis[i]):
            if e == 1:
                parts.append(g)
            elif e:
                parts.append(f"{g}^{e}")
        return "*".join(parts) or "1"


def _exponent_ranges(kinds, heights, degrees, cap):
    for kind, m, d in zip(kinds, heights, degrees):
        if d > cap:
            top = 0
        elif kind is Kind.EXTERIOR:
            top = 1
        elif kind is Kind.TRUNCATED:
            top = m - 1
        else:
            top = cap // d
        yield range(min(top, cap // d) + 1)


def materialize(A: TensorAlgebra, cap: int | None = None) -> AlgebraPresentation:
    p = A.characteristic
    if p == 0:
        raise PreconditionError("the oracle works over finite fields only")
    if cap is None:
        cap = A.cap
    blocks = []
    for b in A.blocks:
        if b.degree == 0:
            raise GradingError(f"generator {b.name} has degree 0")
        if b.kind is Kind.DIVIDED_POWER:
            blocks.extend(gamma_split(b.generator, p, cap).blocks)
        else:
            blocks.append(b)

    kinds = [b.kind for b in blocks]
    heights = [b.m for b in blocks]
    gdeg = [b.degree for b in blocks]
    # exponent beyond which a block's power vanishes
    limit = [2 if k is Kind.EXTERIOR else (m if k is Kind.TRUNCATED else None)
             for k, m in zip(kinds, heights)]

    monos = []
    for exps in product(*_exponent_ranges(kinds, heights, gdeg, cap)):
        deg = sum(e * d for e, d in zip(exps, gdeg))
        if deg <= cap:
            monos.append((deg, exps))
    monos.sort()
    basis = tuple(e for _, e in monos)
    degrees = tuple(d for d, _ in monos)
    index = {e: i for i, e in enumerate(basis)}

    # parity of each factor g_k^{e_k}, for the graded-commutativity sign
    odd = [d % 2 == 1 for d in gdeg]
    mult = {}
    n = len(basis)
    for i in range(n):
        u = basis[i]
        for j in range(n):
            if degrees[i] + degrees[j] > cap:
                # degrees are sorted, so every later j is too big as well
                break
            v = basis[j]
            w = []
            for k in range(len(u)):
                e = u[k] + v[k]
                if limit[k] is not None and e >= limit[k]:
                    w = None
                    break
                w.append(e)
            if w is None:
                continue
            sign = 1
            if p != 2:
                # move each v_k past the u_l with l > k
                flips = 0
                odd_u_after = 0
                for k in range(len(u) - 1, -1, -1):
                    if odd[k] and v[k] % 2:
                        flips += odd_u_after
                    if odd[k] and u[k] % 2:
                        odd_u_after += 1
                if flips % 2:
                    sign = p - 1
            mult[(i, j)] = (sign, index[tuple(w)])

    return AlgebraPresentation(
        p=p,
        cap=cap,
        generators=tuple(b.name for b in blocks),
        generator_degrees=tuple(gdeg),
        basis=basis,
        degrees=degrees,
        mult=mult,
        aug_ideal=tuple(i for i, d in enumerate(degrees) if d > 0),
    )
