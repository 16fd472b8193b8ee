"""Iterated Tor computations for higher Hochschild and Shukla homology,
with a bar-complex oracle over finite fields."""
from .algebra import (
    BlockAlgebra,
    GradedGenerator,
    Kind,
    PoincareSeries,
    Prefix,
    TensorAlgebra,
    algebra_series,
    block_series,
    divpow,
    ext,
    gen,
    poly,
    series_mul,
    tensor,
    trunc,
)
from .engine import TowerSpec, b_tower, bpp_tower, gamma_split, iterate_tor, tor_dual, tor_dual_block

__version__ = "0.1.0"
