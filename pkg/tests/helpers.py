"""Independent brute-force oracles used by the tests.

None of these touch the code paths they check: monomials are enumerated
directly instead of multiplying generating functions, ranks come from
counting row spaces, and Tor over Z/p^m comes from a minimal resolution
built by enumerating module elements.
"""
from itertools import product


def brute_series(blocks, cap):
    """Graded dimensions of a tensor product of single-generator algebras.

    ``blocks`` is a list of (kind, degree, m) with kind in
    {"poly", "ext", "trunc", "dp"}; divided powers have one basis element per
    multiple of the degree, like polynomials.
    """
    ranges = []
    for kind, d, m in blocks:
        if kind == "ext":
            top = 1
        elif kind == "trunc":
            top = m - 1
        else:
            top = cap // d
        ranges.append(range(top + 1))
    out = [0] * (cap + 1)
    for exps in product(*ranges):
        deg = sum(e * b[1] for e, b in zip(exps, blocks))
        if deg <= cap:
            out[deg] += 1
    return out


def brute_rank(rows, p):
    """Rank over F_p as log_p of the size of the row space."""
    rows = [tuple(v % p for v in r) for r in rows]
    if not rows:
        return 0
    n = len(rows[0])
    span = {tuple([0] * n)}
    for r in rows:
        span = {tuple((a + c * b) % p for a, b in zip(v, r)) for v in span for c in range(p)}
    size, rank = len(span), 0
    while size > 1:
        size //= p
        rank += 1
    return rank


def _rspan(gens, N, k):
    span = {tuple([0] * k)}
    for g in gens:
        span = {tuple((a + c * b) % N for a, b in zip(v, g)) for v in span for c in range(N)}
    return span


def minimal_resolution_ranks(p, m, length):
    """Ranks of a minimal free resolution of Z/p over R = Z/p^m, by enumeration.

    For a local ring the ranks of a minimal resolution are dim Tor_s(F_p, F_p).
    """
    N = p**m
    ranks = [1]
    # kernel of R -> Z/p
    kernel = {(x,) for x in range(N) if x % p == 0}
    k = 1
    for _ in range(length):
        if kernel == {tuple([0] * k)}:
            ranks.append(0)
            continue
        pK = {tuple((p * a) % N for a in v) for v in kernel}
        gens = []
        covered = set(pK)
        for v in sorted(kernel):
            if v not in covered:
                gens.append(v)
                covered = _rspan(gens + sorted(pK), N, k)
        assert _rspan(gens, N, k) == kernel
        r = len(gens)
        ranks.append(r)
        new_kernel = set()
        for coeffs in product(range(N), repeat=r):
            img = tuple(sum(c * g[i] for c, g in zip(coeffs, gens)) % N for i in range(k))
            if not any(img):
                new_kernel.add(coeffs)
        kernel, k = new_kernel, r
    return ranks
