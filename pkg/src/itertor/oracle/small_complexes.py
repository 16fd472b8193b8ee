"""Hand-sized complexes: the 2-periodic Hochschild complex of F_p[x]/x^m and
the 2-periodic resolution of Z/p over Z/p^m."""
from __future__ import annotations

from ..algebra import is_prime
from ..errors import PreconditionError
from .bar import RankTable
from .linalg import rank_mod_p

__all__ = [
    "hochschild_shift",
    "hochschild_small_complex",
    "coprime_remark_ranks",
    "tor_over_zpm",
]

COEFFICIENTS = ("full", "reduced")


def _check(p, m, x_deg):
    if not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p}")
    if m < 2:
        raise PreconditionError("m must be >= 2")
    if x_deg < 2 or x_deg % 2:
        raise PreconditionError(f"|x| must be even and positive, got {x_deg}")


def hochschild_shift(s: int, m: int, x_deg: int) -> int:
    """Internal suspension of the s-th spot: k m|x| for s = 2k, k m|x| + |x| for s = 2k+1."""
    k, odd = divmod(s, 2)
    return k * m * x_deg + odd * x_deg


def _spot(s, m, x_deg, coefficients):
    """Internal degrees of the basis x^j of the s-th spot."""
    shift = hochschild_shift(s, m, x_deg)
    top = m if coefficients == "full" else 1
    return [shift + j * x_deg for j in range(top)]


def hochschild_small_complex(p: int, m: int, x_deg: int, coefficients: str = "full",
                             cap: int = 12) -> RankTable:
    """Homology of ... -> S^{m|x|} C -> S^{|x|} C -> C.

    C is F_p[x]/x^m (full) or F_p (reduced).  Maps out of odd spots are 0;
    maps out of positive even spots multiply by m x^(m-1) (full) or are 0
    (reduced).  The s-th spot is placed in total degree s + internal.
    """
    _check(p, m, x_deg)
    if coefficients not in COEFFICIENTS:
        raise PreconditionError(f"coefficients must be one of {COEFFICIENTS}")

    def differential(s: int, q: int) -> list[dict[int, int]]:
        # d_s restricted to internal degree q: rows = source basis, cols = target basis
        if s == 0 or s % 2 or coefficients == "reduced":
            return []
        src = _spot(s, m, x_deg, coefficients)
        tgt = _spot(s - 1, m, x_deg, coefficients)
        tgt_shift = hochschild_shift(s - 1, m, x_deg)
        rows = []
        for j, deg in enumerate(src):
            if deg != q:
                continue
            e = j + m - 1
            if e < m:
                col = tgt.index(tgt_shift + e * x_deg)
                rows.append({col: m % p})
        return rows

    ranks, dims = {}, {}
    s = 0
    while s + hochschild_shift(s, m, x_deg) <= cap:
        for q in _spot(s, m, x_deg, coefficients):
            if s + q > cap:
                continue
            dim = sum(1 for d in _spot(s, m, x_deg, coefficients) if d == q)
            h = dim - rank_mod_p(differential(s, q), p) - rank_mod_p(differential(s + 1, q), p)
            dims[(s, q)] = dim
            if h:
                ranks[(s, q)] = h
        s += 1
    return RankTable(total_cap=cap, hom_cap=max(s - 1, 0), ranks=ranks, chain_dims=dims)


def coprime_remark_ranks(p: int, m: int, x_deg: int, cap: int = 12) -> RankTable:
    """HH_*(F_p[x]/x^m) for p not dividing m, read off kernel and cokernel of x^(m-1).

    HH_0 = C, HH_{2k+1} = S^{|x|(km+1)} C / x^(m-1), HH_{2k} = S^{km|x|} ker(x^(m-1)).
    """
    _check(p, m, x_deg)
    if m % p == 0:
        raise PreconditionError("the coprime formula needs gcd(p, m) = 1")
    image = {j + m - 1 for j in range(m) if j + m - 1 < m}
    kernel = [j for j in range(m) if j + m - 1 >= m]
    cokernel = [j for j in range(m) if j not in image]

    ranks = {}
    s = 0
    while s + hochschild_shift(s, m, x_deg) <= cap:
        k = s // 2
        if s == 0:
            shift, exps = 0, range(m)
        elif s % 2:
            shift, exps = x_deg * (k * m + 1), cokernel
        else:
            shift, exps = k * m * x_deg, kernel
        for j in exps:
            q = shift + j * x_deg
            if s + q <= cap:
                ranks[(s, q)] = ranks.get((s, q), 0) + 1
        s += 1
    return RankTable(total_cap=cap, hom_cap=max(s - 1, 0), ranks=ranks)


def tor_over_zpm(p: int, m: int, hom_cap: int) -> RankTable:
    """Tor^{Z/p^m}_s(Z/p, Z/p) from the periodic resolution
    ... -> Z/p^m --p^(m-1)--> Z/p^m --p--> Z/p^m -> Z/p."""
    if not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p}")
    if m < 2:
        raise PreconditionError(
            "m = 1: Z/p is free over itself, so Tor is Z/p concentrated in degree 0")
    if hom_cap < 0:
        raise PreconditionError("hom_cap must be nonnegative")

    def boundary(s: int) -> list[list[int]]:
        # d_s : F_s -> F_{s-1} after tensoring with Z/p, as a 1x1 matrix
        if s == 0:
            return []
        entry = p if s % 2 else p ** (m - 1)
        return [[entry % p]]

    ranks, dims = {}, {}
    for s in range(hom_cap + 1):
        h = 1 - rank_mod_p(boundary(s), p) - rank_mod_p(boundary(s + 1), p)
        dims[(s, 0)] = 1
        if h:
            ranks[(s, 0)] = h
    return RankTable(total_cap=hom_cap, hom_cap=hom_cap, ranks=ranks, chain_dims=dims)
