"""Pointwise finite dimensional modules on a finite chain and their barcodes.

The decomposition into interval summands is computed from the rank
invariant by inclusion-exclusion: the multiplicity of the bar [i, j) is

    r(i, j-1) - r(i, j) - r(i-1, j-1) + r(i-1, j)

with the conventions r(-1, .) = 0 and r(., L) = 0.  Ranks are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DomainError
from .fields import Field, QQ
from . import linalg


@dataclass(frozen=True)
class ChainModule:
    """dims[t] for t in 0..L-1 plus structure maps; maps[i] has shape dims[i+1] x dims[i]."""

    dims: tuple[int, ...]
    maps: tuple[tuple[tuple, ...], ...]
    field: Field = dc_field(default_factory=lambda: QQ)

    def __post_init__(self):
        if len(self.dims) < 1:
            raise DomainError("bad_chain", "a chain module needs positive length")
        if any(d < 0 for d in self.dims):
            raise DomainError("bad_chain", "dimensions must be non-negative")
        if len(self.maps) != len(self.dims) - 1:
            raise DomainError("bad_chain", "expected one map per consecutive pair")
        for i, m in enumerate(self.maps):
            rows, cols = self.dims[i + 1], self.dims[i]
            if len(m) != rows or any(len(r) != cols for r in m):
                raise DomainError(
                    "bad_chain", f"map {i} must have shape {rows}x{cols}"
                )

    @property
    def length(self) -> int:
        return len(self.dims)

    def map_matrix(self, i: int):
        return [list(r) for r in self.maps[i]]


def chain_module(dims, maps, field: Field = QQ) -> ChainModule:
    frozen_maps = tuple(tuple(tuple(row) for row in m) for m in maps)
    return ChainModule(tuple(dims), frozen_maps, field)


@dataclass(frozen=True)
class Barcode:
    """Multiset of grid bars [i, j), 0 <= i < j <= L; j = L means alive to the end."""

    bars: tuple[tuple[int, int, int], ...]  # (start, end, multiplicity), sorted

    def __post_init__(self):
        for s, e, m in self.bars:
            if not (0 <= s < e):
                raise DomainError("bad_barcode", f"bar [{s},{e}) is not a valid range")
            if m < 1:
                raise DomainError("bad_barcode", "multiplicities must be positive")

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(s, e): m for s, e, m in self.bars}

    def total_at(self, t: int) -> int:
        return sum(m for s, e, m in self.bars if s <= t < e)

    def __iter__(self):
        return iter(self.bars)


def barcode(bar_dict) -> Barcode:
    items = []
    for (s, e), m in sorted(bar_dict.items()):
        if m:
            items.append((s, e, m))
    return Barcode(tuple(items))


def rank_invariant(m: ChainModule, i: int, j: int) -> int:
    """Rank of the composite structure map from slot i to slot j."""
    L = m.length
    if not (0 <= i <= j < L):
        raise DomainError("index_out_of_range", f"need 0 <= {i} <= {j} < {L}")
    if i == j:
        return m.dims[i]
    comp = linalg.identity(m.field, m.dims[i])
    for t in range(i, j):
        comp = linalg.mat_mul(m.field, m.map_matrix(t), comp)
    return linalg.rank(m.field, comp)


def _rank_table(m: ChainModule):
    """r[i][j] for i <= j < L, with early cutoff once a composite hits rank 0."""
    L = m.length
    table = [dict() for _ in range(L)]
    for i in range(L):
        table[i][i] = m.dims[i]
        comp = linalg.identity(m.field, m.dims[i])
        r = m.dims[i]
        for j in range(i + 1, L):
            if r == 0 or m.dims[j] == 0:
                r = 0
                table[i][j] = 0
                continue
            comp = linalg.mat_mul(m.field, m.map_matrix(j - 1), comp)
            r = linalg.rank(m.field, comp)
            table[i][j] = r
    return table


def decompose(m: ChainModule) -> Barcode:
    """The unique interval decomposition of a chain module."""
    L = m.length
    table = _rank_table(m)

    def r(i: int, j: int) -> int:
        if i < 0 or j >= L:
            return 0
        return table[i][j]

    bars = {}
    for i in range(L):
        for j in range(i + 1, L + 1):
            mult = r(i, j - 1) - r(i, j) - r(i - 1, j - 1) + r(i - 1, j)
            if mult < 0:
                raise AssertionError(
                    f"negative multiplicity for bar [{i},{j}): rank table is inconsistent"
                )
            if mult:
                bars[(i, j)] = mult
    return barcode(bars)


def realize(b: Barcode, length: int, field: Field = QQ) -> ChainModule:
    """Block-diagonal chain module whose summands are exactly the given bars."""
    if length < 1:
        raise DomainError("bad_length", "length must be positive")
    blocks = []
    for s, e, m in b:
        if e > length:
            raise DomainError("bar_out_of_range", f"bar [{s},{e}) exceeds length {length}")
        blocks.extend([(s, e)] * m)
    dims = [sum(1 for s, e in blocks if s <= t < e) for t in range(length)]
    maps = []
    for t in range(length - 1):
        rows = [ix for ix, (s, e) in enumerate(blocks) if s <= t + 1 < e]
        cols = [ix for ix, (s, e) in enumerate(blocks) if s <= t < e]
        mat = linalg.zeros(field, len(rows), len(cols))
        for ri, block_ix in enumerate(rows):
            if block_ix in cols:
                mat[ri][cols.index(block_ix)] = field.one
        maps.append(mat)
    return chain_module(dims, maps, field)
