"""Graded-commutative algebras on one generator per block, their tensor
products, and Poincare series bookkeeping.

Everything here is immutable.  A :class:`TensorAlgebra` is always "complete
up to its cap": every generator of degree <= cap is listed, blocks above the
cap may be missing.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .errors import (
    CapMismatchError,
    CharacteristicMismatchError,
    GradingError,
    ItertorError,
    ParityError,
)

__all__ = [
    "Prefix",
    "GradedGenerator",
    "Kind",
    "BlockAlgebra",
    "TensorAlgebra",
    "PoincareSeries",
    "gen",
    "poly",
    "ext",
    "trunc",
    "divpow",
    "is_prime",
    "block_series",
    "series_mul",
    "tensor",
    "algebra_series",
]

PREFIX_OPS = ("eps", "rho", "phi", "gamma")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_characteristic(characteristic: int) -> None:
    if characteristic != 0 and not is_prime(characteristic):
        raise ItertorError(f"characteristic must be 0 or a prime, got {characteristic}")


@dataclass(frozen=True)
class Prefix:
    """One step of a generator's construction history.

    ``eps``    suspension of a polynomial/truncated generator, degree d+1.
    ``rho``    rho^k: the k-th divided-power splitting generator of the dual
               of an exterior class, degree p^k (d+1).
    ``phi``    phi^i: the i-th splitting generator of the divided-power class
               dual to a height-m truncation, degree p^i (2 + m d).
    ``gamma``  gamma^k: gamma_{p^k} of a bare divided-power generator,
               degree p^k d.

    ``p`` and ``m`` are part of the token: the degree rule needs them and
    they are not recoverable from the rendered superscript alone.
    """

    op: str
    index: int = 0
    p: int = 0
    m: int = 0

    def __post_init__(self):
        if self.op not in PREFIX_OPS:
            raise ItertorError(f"unknown prefix {self.op!r}")
        if self.index < 0:
            raise ItertorError("prefix index must be nonnegative")
        if self.op == "eps" and self.index != 0:
            raise ItertorError("eps carries no index")
        if self.index > 0 and not is_prime(self.p):
            raise ItertorError(f"{self.op}^{self.index} needs a prime, got p={self.p}")
        if self.op == "phi" and self.m < 2:
            raise ItertorError("phi needs the truncation height m >= 2")

    def apply(self, degree: int) -> int:
        scale = self.p**self.index if self.index else 1
        if self.op == "eps":
            return degree + 1
        if self.op == "rho":
            return scale * (degree + 1)
        if self.op == "phi":
            return scale * (2 + self.m * degree)
        return scale * degree

    def render(self) -> str:
        if self.op == "eps":
            return "eps"
        return f"{self.op}^{self.index}"


@dataclass(frozen=True)
class GradedGenerator:
    """A named generator; its degree is derived from ``base_degree`` and the
    prefix history, never stored on its own."""

    base: str
    base_degree: int
    prefixes: tuple[Prefix, ...] = ()

    def __post_init__(self):
        if self.base_degree < 0:
            raise GradingError("base degree must be nonnegative")
        object.__setattr__(self, "prefixes", tuple(self.prefixes))

    @property
    def degree(self) -> int:
        d = self.base_degree
        for pre in self.prefixes:
            d = pre.apply(d)
        return d

    @property
    def name(self) -> str:
        s = self.base
        for pre in self.prefixes:
            s = f"{pre.render()}({s})"
        return s

    def then(self, prefix: Prefix) -> GradedGenerator:
        return replace(self, prefixes=self.prefixes + (prefix,))

    def eps(self) -> GradedGenerator:
        return self.then(Prefix("eps"))

    def rho0(self, p: int = 0) -> GradedGenerator:
        return self.then(Prefix("rho", 0, p))

    def phi0(self, m: int, p: int = 0) -> GradedGenerator:
        return self.then(Prefix("phi", 0, p, m))

    def split(self, k: int, p: int) -> GradedGenerator:
        """Generator gamma_{p^k} of the divided power algebra on ``self``.

        A trailing rho^0 / phi^0 / gamma^0 is re-indexed (rho^0 -> rho^k);
        any other history gets a gamma^k token appended.
        """
        last = self.prefixes[-1] if self.prefixes else None
        if last is not None and last.op in ("rho", "phi", "gamma") and last.index == 0:
            return replace(self, prefixes=self.prefixes[:-1] + (replace(last, index=k, p=p),))
        return self.then(Prefix("gamma", k, p))

    def renamed(self, suffix: str) -> GradedGenerator:
        return replace(self, base=self.base + suffix)

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "prefixes": [pre.render() for pre in self.prefixes],
            "degree": self.degree,
        }

    def __str__(self):
        return self.name


def gen(base: str, degree: int) -> GradedGenerator:
    return GradedGenerator(base, degree)


class Kind(str, enum.Enum):
    POLYNOMIAL = "Polynomial"
    EXTERIOR = "Exterior"
    TRUNCATED = "Truncated"
    DIVIDED_POWER = "DividedPower"


@dataclass(frozen=True)
class BlockAlgebra:
    kind: Kind
    generator: GradedGenerator
    m: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.TRUNCATED:
            if self.m is None or self.m < 2:
                raise ItertorError(f"Truncated block needs m >= 2, got {self.m}")
        elif self.m is not None:
            raise ItertorError(f"{self.kind.value} block takes no height m")

    @property
    def degree(self) -> int:
        return self.generator.degree

    @property
    def name(self) -> str:
        return self.generator.name

    def check(self, characteristic: int) -> None:
        """Raise unless the block is valid over a field of this characteristic."""
        d = self.degree
        if d == 0:
            raise GradingError(
                f"{self.kind.value} block on {self.name} has degree 0; "
                "grading must be positive (use the |x| = 2 convention)")
        if characteristic == 2:
            return
        if self.kind is Kind.EXTERIOR and d % 2 == 0:
            raise ParityError(f"exterior generator {self.name} has even degree {d}")
        if self.kind is not Kind.EXTERIOR and d % 2 == 1:
            raise ParityError(f"{self.kind.value} generator {self.name} has odd degree {d}")

    def with_generator(self, g: GradedGenerator) -> BlockAlgebra:
        return replace(self, generator=g)

    def label(self) -> str:
        if self.kind is Kind.TRUNCATED:
            return f"Truncated({self.m})"
        return self.kind.value

    def to_dict(self) -> dict:
        out = {"kind": self.kind.value, "generator": self.generator.to_dict()}
        if self.m is not None:
            out["m"] = self.m
        return out


def poly(g: GradedGenerator) -> BlockAlgebra:
    return BlockAlgebra(Kind.POLYNOMIAL, g)


def ext(g: GradedGenerator) -> BlockAlgebra:
    return BlockAlgebra(Kind.EXTERIOR, g)


def trunc(g: GradedGenerator, m: int) -> BlockAlgebra:
    return BlockAlgebra(Kind.TRUNCATED, g, m)


def divpow(g: GradedGenerator) -> BlockAlgebra:
    return BlockAlgebra(Kind.DIVIDED_POWER, g)


@dataclass(frozen=True)
class PoincareSeries:
    cap: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if self.cap < 0:
            raise ItertorError("series cap must be nonnegative")
        if len(coeffs) != self.cap + 1:
            raise ItertorError(
                f"series of cap {self.cap} needs {self.cap + 1} coefficients, got {len(coeffs)}")
        if any(c < 0 for c in coeffs):
            raise ItertorError("series coefficients must be nonnegative")

    @classmethod
    def from_list(cls, coefficients: Sequence[int]) -> PoincareSeries:
        return cls(len(coefficients) - 1, tuple(coefficients))

    @classmethod
    def one(cls, cap: int) -> PoincareSeries:
        return cls(cap, (1,) + (0,) * cap)

    def truncate(self, cap: int) -> PoincareSeries:
        if cap > self.cap:
            raise CapMismatchError(f"cannot extend a series of cap {self.cap} to {cap}")
        return PoincareSeries(cap, self.coefficients[: cap + 1])

    def __mul__(self, other: PoincareSeries) -> PoincareSeries:
        return series_mul(self, other)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __len__(self):
        return len(self.coefficients)

    def to_dict(self) -> dict:
        return {"cap": self.cap, "coefficients": list(self.coefficients)}


def series_mul(s: PoincareSeries, t: PoincareSeries) -> PoincareSeries:
    """Cauchy product truncated at the common cap."""
    if s.cap != t.cap:
        raise CapMismatchError(f"series caps differ: {s.cap} vs {t.cap}")
    n = s.cap + 1
    out = [0] * n
    for i, a in enumerate(s.coefficients):
        if a:
            for j in range(n - i):
                out[i + j] += a * t.coefficients[j]
    return PoincareSeries(s.cap, tuple(out))


def block_series(b: BlockAlgebra, characteristic: int, cap: int) -> PoincareSeries:
    b.check(characteristic)
    d = b.degree
    out = [0] * (cap + 1)
    if b.kind is Kind.EXTERIOR:
        top = 1
    elif b.kind is Kind.TRUNCATED:
        top = b.m - 1
    else:
        # polynomial and divided power: one basis element per multiple of d
        top = cap // d
    for j in range(top + 1):
        if j * d <= cap:
            out[j * d] += 1
    return PoincareSeries(cap, tuple(out))


@dataclass(frozen=True)
class TensorAlgebra:
    characteristic: int
    blocks: tuple[BlockAlgebra, ...] = ()
    cap: int = 0

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        check_characteristic(self.characteristic)
        if self.cap < 0:
            raise ItertorError("cap must be nonnegative")
        for b in self.blocks:
            b.check(self.characteristic)
        names = Counter(b.name for b in self.blocks)
        dupes = sorted(n for n, c in names.items() if c > 1)
        if dupes:
            raise ItertorError(f"duplicate generator names: {dupes}")

    @classmethod
    def empty(cls, characteristic: int, cap: int) -> TensorAlgebra:
        return cls(characteristic, (), cap)

    @classmethod
    def of(cls, characteristic: int, cap: int, *blocks: BlockAlgebra) -> TensorAlgebra:
        """Build an algebra, dropping blocks whose generator lies above the cap."""
        return cls(characteristic, tuple(b for b in blocks if b.degree <= cap), cap)

    @property
    def generators(self) -> tuple[GradedGenerator, ...]:
        return tuple(b.generator for b in self.blocks)

    def truncate(self, cap: int) -> TensorAlgebra:
        if cap > self.cap:
            raise CapMismatchError(f"algebra is only complete up to {self.cap}, asked for {cap}")
        return TensorAlgebra.of(self.characteristic, cap, *self.blocks)

    def kind_degree_multiset(self) -> list[tuple[str, int]]:
        """Sorted (kind label, degree) pairs: the algebra up to renaming."""
        return sorted((b.label(), b.degree) for b in self.blocks)

    def series(self, cap: int | None = None) -> PoincareSeries:
        return algebra_series(self, cap)

    def to_dict(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "cap": self.cap,
            "blocks": [b.to_dict() for b in self.blocks],
        }

    def __len__(self):
        return len(self.blocks)


def _disambiguate(blocks: Iterable[BlockAlgebra]) -> list[BlockAlgebra]:
    blocks = list(blocks)
    counts = Counter(b.name for b in blocks)
    seen: Counter = Counter()
    out = []
    for b in blocks:
        if counts[b.name] > 1:
            seen[b.name] += 1
            b = b.with_generator(b.generator.renamed(f"#{seen[b.name]}"))
        out.append(b)
    return out


def tensor(*algebras: TensorAlgebra) -> TensorAlgebra:
    """Tensor product over the common ground field; cap is the minimum cap.

    Colliding generator names get ``#1``, ``#2``, ... suffixes on their base
    label, numbered in block-list order.
    """
    if not algebras:
        raise ItertorError("tensor needs at least one algebra")
    chars = {a.characteristic for a in algebras}
    if len(chars) != 1:
        raise CharacteristicMismatchError(f"characteristics differ: {sorted(chars)}")
    cap = min(a.cap for a in algebras)
    blocks = [b for a in algebras for b in a.blocks if b.degree <= cap]
    return TensorAlgebra(chars.pop(), tuple(_disambiguate(blocks)), cap)


def algebra_series(A: TensorAlgebra, cap: int | None = None) -> PoincareSeries:
    if cap is None:
        cap = A.cap
    out = PoincareSeries.one(cap)
    for b in A.blocks:
        if b.degree <= cap:
            out = series_mul(out, block_series(b, A.characteristic, cap))
    return out
