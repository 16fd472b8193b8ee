"""Sparse Gaussian elimination over F_p."""
from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping, Sequence, Union

SparseRow = Mapping[int, int]
MatrixLike = Union[Sequence[SparseRow], Sequence[Sequence[int]]]


def _as_sparse_rows(M: MatrixLike, p: int) -> list[dict[int, int]]:
    rows = []
    for row in M:
        if isinstance(row, Mapping):
            items = row.items()
        else:
            items = enumerate(row)
        r = {}
        for c, v in items:
            v = int(v) % p
            if v:
                r[c] = v
        if r:
            rows.append(r)
    return rows


def rank_mod_p(M: MatrixLike, p: int) -> int:
    """Rank of ``M`` over F_p.

    ``M`` is a sequence of rows, each either a dense sequence or a
    ``{column: value}`` mapping.  Rows are processed sparsest first; each is
    reduced against the current pivots and, if it survives, pivots on the
    column of its support that is least populated in the whole matrix.
    """
    rows = _as_sparse_rows(M, p)
    if not rows:
        return 0
    col_count = Counter(c for r in rows for c in r)
    rows.sort(key=len)
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = dict(row)
        while True:
            hit = next((c for c in row if c in pivots), None)
            if hit is None:
                break
            factor = row[hit]
            for c, v in pivots[hit].items():
                nv = (row.get(c, 0) - factor * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        if not row:
            continue
        col = min(row, key=lambda c: (col_count[c], c))
        inv = pow(row[col], -1, p)
        pivots[col] = {c: (v * inv) % p for c, v in row.items()}
    return len(pivots)


def rank_of_blocks(blocks: Iterable[MatrixLike], p: int) -> int:
    return sum(rank_mod_p(b, p) for b in blocks)
