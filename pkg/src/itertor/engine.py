"""Iterated Tor by rewriting blocks.

Over a field F the Tor dual Tor^A(F, F) of a tensor product of single
generator algebras is the tensor product of the duals of the blocks, and
each block kind has a fixed dual:

    char p:  F[z]        -> Lambda(eps z)
             Lambda(y)   -> Gamma(rho^0 y)  = (x)_k F[rho^k y]/(rho^k y)^p
             F[z]/z^m    -> Lambda(eps z) (x) Gamma(phi^0 z)
             Gamma(z)    -> split first, then dualize each truncated factor
    char 0:  F[z]        -> Lambda(eps z)
             Lambda(y)   -> F[rho^0 y]
             F[z]/z^m    -> Lambda(eps z) (x) F[phi^0 z]

Divided powers never survive as engine-internal state: in characteristic p
they are split eagerly, in characteristic 0 they are polynomial algebras.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    BlockAlgebra,
    GradedGenerator,
    Kind,
    TensorAlgebra,
    ext,
    gen,
    is_prime,
    poly,
    tensor,
    trunc,
)
from .errors import CapMismatchError, ItertorError, ParityError, PreconditionError

__all__ = [
    "TowerSpec",
    "gamma_split",
    "tor_dual_block",
    "tor_dual",
    "iterate_tor",
    "b_tower",
    "bpp_tower",
]


def gamma_split(g: GradedGenerator, p: int, cap: int) -> TensorAlgebra:
    """Gamma(g) over F_p as the tensor product of F_p[g_k]/g_k^p, |g_k| = p^k |g|."""
    if p == 0:
        raise PreconditionError("divided powers only split in positive characteristic")
    if not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p}")
    d = g.degree
    if d < 1:
        raise PreconditionError(f"cannot split a divided power on a degree-{d} generator")
    if p != 2 and d % 2:
        raise ParityError(f"divided power generator {g.name} has odd degree {d}")
    blocks = []
    k = 0
    while p**k * d <= cap:
        blocks.append(trunc(g.split(k, p), p))
        k += 1
    return TensorAlgebra(p, tuple(blocks), cap)


def tor_dual_block(b: BlockAlgebra, characteristic: int, cap: int) -> TensorAlgebra:
    b.check(characteristic)
    g = b.generator
    p = characteristic
    if p == 0:
        if b.kind is Kind.POLYNOMIAL:
            return TensorAlgebra.of(0, cap, ext(g.eps()))
        if b.kind is Kind.EXTERIOR:
            return TensorAlgebra.of(0, cap, poly(g.rho0()))
        if b.kind is Kind.TRUNCATED:
            return TensorAlgebra.of(0, cap, ext(g.eps()), poly(g.phi0(b.m)))
        raise PreconditionError(
            "characteristic-0 divided power block: rewrite it as a polynomial block first")

    if b.kind is Kind.POLYNOMIAL:
        return TensorAlgebra.of(p, cap, ext(g.eps()))
    if b.kind is Kind.EXTERIOR:
        return gamma_split(g.rho0(p), p, cap)
    if b.kind is Kind.TRUNCATED:
        eps_part = TensorAlgebra.of(p, cap, ext(g.eps()))
        return tensor(eps_part, gamma_split(g.phi0(b.m, p), p, cap))
    parts = [tor_dual_block(f, p, cap) for f in gamma_split(g, p, cap).blocks]
    return tensor(TensorAlgebra.empty(p, cap), *parts)


def tor_dual(A: TensorAlgebra, cap: int | None = None) -> TensorAlgebra:
    """Tor^A(F, F) as a cap-truncated tensor algebra."""
    if cap is None:
        cap = A.cap
    elif cap > A.cap:
        raise CapMismatchError(f"input is only complete up to {A.cap}, asked for {cap}")
    parts = [tor_dual_block(b, A.characteristic, cap) for b in A.blocks]
    return tensor(TensorAlgebra.empty(A.characteristic, cap), *parts)


@dataclass(frozen=True)
class TowerSpec:
    seed: TensorAlgebra
    iterations: int
    characteristic: int
    cap: int

    def __post_init__(self):
        if self.iterations < 0:
            raise PreconditionError("iterations must be nonnegative")
        if self.characteristic != self.seed.characteristic:
            raise ItertorError("tower characteristic differs from the seed's")
        if self.cap > self.seed.cap:
            raise CapMismatchError(f"seed is only complete up to {self.seed.cap}")

    @classmethod
    def of(cls, seed: TensorAlgebra, iterations: int, cap: int | None = None) -> TowerSpec:
        return cls(seed, iterations, seed.characteristic, seed.cap if cap is None else cap)


def iterate_tor(spec: TowerSpec) -> TensorAlgebra:
    A = spec.seed.truncate(spec.cap)
    for _ in range(spec.iterations):
        A = tor_dual(A)
    return A


def b_tower(d: int, n: int, p: int, cap: int, base: str = "z") -> TensorAlgebra:
    """B^n(z): B^1 = F_p[z] with |z| = d, B^n = Tor over B^(n-1)."""
    if d % 2 or d < 2:
        raise PreconditionError(f"B-tower generator degree must be even and positive, got {d}")
    if n < 1:
        raise PreconditionError("B-tower starts at n = 1")
    seed = TensorAlgebra.of(p, cap, poly(gen(base, d)))
    return iterate_tor(TowerSpec.of(seed, n - 1))


def bpp_tower(m: int, x_deg: int, n: int, p: int, cap: int, base: str = "x") -> TensorAlgebra:
    """B''_n(F_p[x]/x^m): n-fold Tor dual of the truncated algebra.

    B''_1 = Lambda(eps x) (x) Gamma(phi^0 x) with |phi^0 x| = 2 + m|x|.
    """
    if n < 1:
        raise PreconditionError("B''-tower starts at n = 1")
    if m < 2:
        raise PreconditionError("truncation height m must be >= 2")
    seed = TensorAlgebra.of(p, cap, trunc(gen(base, x_deg), m))
    return iterate_tor(TowerSpec.of(seed, n))
