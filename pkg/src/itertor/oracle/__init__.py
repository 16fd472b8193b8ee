"""Brute-force checks over finite fields: explicit algebras, bar complexes,
sparse ranks mod p and a few hand-sized complexes."""
from .bar import DEFAULT_MAX_NNZ, MAX_NNZ_ENV, RankTable, bar_homology
from .linalg import rank_mod_p
from .presentation import AlgebraPresentation, materialize
from .small_complexes import (
    coprime_remark_ranks,
    hochschild_shift,
    hochschild_small_complex,
    tor_over_zpm,
)

__all__ = [
    "AlgebraPresentation",
    "DEFAULT_MAX_NNZ",
    "MAX_NNZ_ENV",
    "RankTable",
    "bar_homology",
    "coprime_remark_ranks",
    "hochschild_shift",
    "hochschild_small_complex",
    "materialize",
    "rank_mod_p",
    "tor_over_zpm",
]
