import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_series
from itertor.algebra import (
    Kind,
    TensorAlgebra,
    divpow,
    ext,
    gen,
    poly,
    series_mul,
    tensor,
    trunc,
)
from itertor.engine import (
    TowerSpec,
    b_tower,
    bpp_tower,
    gamma_split,
    iterate_tor,
    tor_dual,
    tor_dual_block,
)
from itertor.errors import CapMismatchError, ParityError, PreconditionError
from itertor.oracle import bar_homology, materialize


def shape(A):
    return [(b.label(), b.name, b.degree) for b in A.blocks]


# -- gamma_split ---------------------------------------------------------------

def test_gamma_split_rho_generator():
    g = gen("omega", 2).eps().rho0(3)
    assert g.degree == 4
    A = gamma_split(g, 3, 36)
    assert shape(A) == [
        ("Truncated(3)", "rho^0(eps(omega))", 4),
        ("Truncated(3)", "rho^1(eps(omega))", 12),
        ("Truncated(3)", "rho^2(eps(omega))", 36),
    ]


def test_gamma_split_single_factor():
    A = gamma_split(gen("z", 2), 2, 2)
    assert [(b.m, b.degree) for b in A.blocks] == [(2, 2)]


@pytest.mark.parametrize("p,d,cap", [(2, 2, 30), (3, 4, 40), (5, 2, 60), (2, 3, 25)])
def test_gamma_split_series_is_divided_power(p, d, cap):
    A = gamma_split(gen("z", d), p, cap)
    assert list(A.series().coefficients) == brute_series([("dp", d, None)], cap)


def test_gamma_split_errors():
    with pytest.raises(PreconditionError):
        gamma_split(gen("z", 2), 0, 10)
    with pytest.raises(ParityError):
        gamma_split(gen("z", 3), 3, 10)


# -- tor_dual_block -------------------------------------------------------------

def test_dual_of_polynomial():
    A = tor_dual_block(poly(gen("omega", 2)), 3, 20)
    assert shape(A) == [("Exterior", "eps(omega)", 3)]


def test_dual_of_truncated_char_two():
    A = tor_dual_block(trunc(gen("x", 2), 4), 2, 10)
    assert shape(A) == [("Exterior", "eps(x)", 3), ("Truncated(2)", "phi^0(x)", 10)]


def test_dual_of_exterior_char_zero():
    A = tor_dual_block(ext(gen("g", 1)), 0, 10)
    assert shape(A) == [("Polynomial", "rho^0(g)", 2)]


def test_dual_of_truncated_char_zero():
    A = tor_dual_block(trunc(gen("x", 2), 3), 0, 10)
    assert shape(A) == [("Exterior", "eps(x)", 3), ("Polynomial", "phi^0(x)", 8)]


def test_dual_of_divided_power_goes_through_split():
    A = tor_dual_block(divpow(gen("S", 2)), 3, 30)
    # Gamma(S) = F[S]/S^3 (x) F[g1 S]/(g1 S)^3 (x) ..., degrees 2, 6, 18
    assert shape(A) == [
        ("Exterior", "eps(gamma^0(S))", 3),
        ("Truncated(3)", "phi^0(gamma^0(S))", 8),
        ("Truncated(3)", "phi^1(gamma^0(S))", 24),
        ("Exterior", "eps(gamma^1(S))", 7),
        ("Truncated(3)", "phi^0(gamma^1(S))", 20),
        ("Exterior", "eps(gamma^2(S))", 19),
    ]


def test_dual_rejects_char_zero_divided_power():
    with pytest.raises(PreconditionError):
        tor_dual_block(divpow(gen("S", 2)), 0, 10)


def test_dual_rejects_parity_violation():
    with pytest.raises(ParityError):
        tor_dual_block(ext(gen("y", 2)), 3, 10)


# -- tor_dual / iterate_tor -----------------------------------------------------

def test_tor_dual_of_exterior_degree_one():
    A = TensorAlgebra.of(3, 18, ext(gen("tau_1", 1)))
    assert shape(tor_dual(A)) == [
        ("Truncated(3)", "rho^0(tau_1)", 2),
        ("Truncated(3)", "rho^1(tau_1)", 6),
        ("Truncated(3)", "rho^2(tau_1)", 18),
    ]


def test_tor_dual_of_empty():
    assert tor_dual(TensorAlgebra.empty(5, 7)) == TensorAlgebra.empty(5, 7)


def test_tor_dual_cap_cannot_exceed_input():
    with pytest.raises(CapMismatchError):
        tor_dual(TensorAlgebra.empty(5, 7), 9)


def test_iterate_zero_times_is_seed():
    seed = TensorAlgebra.of(3, 10, ext(gen("tau_1", 1)))
    assert iterate_tor(TowerSpec.of(seed, 0)) == seed


def test_iterate_once_is_split_divided_power():
    seed = TensorAlgebra.of(5, 60, ext(gen("tau_1", 1)))
    A = iterate_tor(TowerSpec.of(seed, 1))
    assert [b.degree for b in A.blocks] == [2, 10, 50]
    assert all(b.kind is Kind.TRUNCATED and b.m == 5 for b in A.blocks)
    assert list(A.series().coefficients) == brute_series([("dp", 2, None)], 60)


def test_iterate_twice_p3():
    seed = TensorAlgebra.of(3, 8, ext(gen("tau_1", 1)))
    A = iterate_tor(TowerSpec.of(seed, 2))
    assert shape(A) == [
        ("Exterior", "eps(rho^0(tau_1))", 3),
        ("Truncated(3)", "phi^0(rho^0(tau_1))", 8),
        ("Exterior", "eps(rho^1(tau_1))", 7),
    ]


def test_char_zero_alternation():
    seed = TensorAlgebra.of(0, 20, poly(gen("x", 2)))
    kinds = [[b.kind for b in iterate_tor(TowerSpec.of(seed, n)).blocks] for n in range(4)]
    assert kinds == [[Kind.POLYNOMIAL], [Kind.EXTERIOR], [Kind.POLYNOMIAL], [Kind.EXTERIOR]]


def test_tower_spec_validation():
    seed = TensorAlgebra.of(3, 10, ext(gen("tau_1", 1)))
    with pytest.raises(PreconditionError):
        TowerSpec.of(seed, -1)
    with pytest.raises(CapMismatchError):
        TowerSpec.of(seed, 1, cap=12)


# -- named towers ------------------------------------------------------------------

def test_b_tower_first_stages():
    assert shape(b_tower(2, 1, 3, 12, base="mu")) == [("Polynomial", "mu", 2)]
    assert shape(b_tower(2, 2, 3, 12, base="mu")) == [("Exterior", "eps(mu)", 3)]
    assert shape(b_tower(4, 2, 3, 12, base="y")) == [("Exterior", "eps(y)", 5)]


def test_b_tower_third_stage_p2():
    A = b_tower(2, 3, 2, 8, base="mu")
    assert shape(A) == [("Truncated(2)", "rho^0(eps(mu))", 4),
                        ("Truncated(2)", "rho^1(eps(mu))", 8)]


def test_b_tower_rejects_odd_degree():
    with pytest.raises(PreconditionError):
        b_tower(3, 2, 3, 10)


def test_bpp_tower_first_stage():
    for m in (2, 3, 4, 6):
        A = bpp_tower(m, 2, 1, 3, 40)
        assert [(b.kind, b.name, b.degree) for b in A.blocks][:2] == [
            (Kind.EXTERIOR, "eps(x)", 3), (Kind.TRUNCATED, "phi^0(x)", 2 + 2 * m)]


def test_bpp_tower_depends_on_m_only_through_phi_degree():
    a = bpp_tower(9, 2, 1, 3, 50)
    b = bpp_tower(12, 2, 1, 3, 50)
    assert [b_.name for b_ in a.blocks] == [b_.name for b_ in b.blocks]
    assert a.blocks[0] == b.blocks[0]
    assert a.blocks[1].degree == 20 and b.blocks[1].degree == 26


def test_bpp_tower_second_stage_matches_oracle():
    B1 = bpp_tower(2, 2, 1, 2, 8)
    assert shape(B1) == [("Exterior", "eps(x)", 3), ("Truncated(2)", "phi^0(x)", 6)]
    B2 = bpp_tower(2, 2, 2, 2, 8)
    assert B2.series() == bar_homology(materialize(B1), 8).series()


# -- properties ----------------------------------------------------------------------

@st.composite
def reachable_block(draw, p, base, max_half=3):
    kind = draw(st.sampled_from(["poly", "ext", "trunc", "dp"]))
    half = draw(st.integers(1, max_half))
    if kind == "ext":
        return ext(gen(base, 2 * half - 1))
    if kind == "trunc":
        return trunc(gen(base, 2 * half), draw(st.integers(2, 5)))
    if kind == "poly":
        return poly(gen(base, 2 * half))
    return divpow(gen(base, 2 * half))


@given(st.data(), st.sampled_from([2, 3]))
def test_kunneth(data, p):
    a = data.draw(reachable_block(p, "a"))
    b = data.draw(reachable_block(p, "b"))
    A, B = TensorAlgebra.of(p, 10, a), TensorAlgebra.of(p, 10, b)
    assert tor_dual(tensor(A, B)).series() == series_mul(tor_dual(A).series(), tor_dual(B).series())


@given(st.data(), st.sampled_from([3, 5]), st.integers(0, 4))
def test_parity_discipline(data, p, n):
    blocks = [data.draw(reachable_block(p, name)) for name in ("a", "b")]
    A = iterate_tor(TowerSpec.of(TensorAlgebra.of(p, 30, *blocks), n))
    for b in A.blocks:
        if b.kind is Kind.EXTERIOR:
            assert b.degree % 2 == 1
        else:
            assert b.degree % 2 == 0
    # eps raises degree by exactly one
    for b in A.blocks:
        g = b.generator
        if g.prefixes and g.prefixes[-1].op == "eps":
            inner = type(g)(g.base, g.base_degree, g.prefixes[:-1])
            assert g.degree == inner.degree + 1


@given(st.data(), st.sampled_from([2, 3]), st.integers(1, 3), st.integers(4, 40), st.integers(0, 40))
def test_idempotent_cap(data, p, n, big, small):
    small = min(small, big)
    blocks = [data.draw(reachable_block(p, name)) for name in ("a", "b")]
    seed = TensorAlgebra.of(p, big, *blocks)
    full = iterate_tor(TowerSpec.of(seed, n)).truncate(small)
    direct = iterate_tor(TowerSpec.of(seed.truncate(small), n))
    assert full == direct


@settings(max_examples=25, deadline=None)
@given(st.data(), st.sampled_from([2, 3]))
def test_oracle_agreement(data, p):
    cap = 8
    n_blocks = data.draw(st.integers(1, 2))
    blocks = [data.draw(reachable_block(p, name, max_half=2)) for name in "ab"[:n_blocks]]
    A = TensorAlgebra.of(p, cap, *blocks)
    P = materialize(A, cap)
    if len(P.basis) > 64:
        return
    assert tor_dual(A).series() == bar_homology(P, cap).series()
