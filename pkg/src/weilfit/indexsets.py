"""Multi-index sets for tensor-product and total-degree polynomial spaces."""

from __future__ import annotations

import math
from dataclasses import dataclass

KINDS = ("TP", "TD")

# Cardinalities beyond this are rejected outright: row/column counts must stay
# exactly representable as doubles and within any sane desk-scale budget.
MAX_CARDINALITY = 2**53


def total_order(n) -> int:
    """Sum of the entries of a multi-index."""
    return sum(n)


def order_less(a, b) -> bool:
    """Strict order on multi-indices: total order first, ties broken by the
    first differing coordinate.

    Raises ValueError if the two indices have different lengths.
    """
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: len {len(a)} vs {len(b)}")
    sa, sb = sum(a), sum(b)
    if sa != sb:
        return sa < sb
    for x, y in zip(a, b):
        if x != y:
            return x < y
    return False


def _order_key(n):
    # Consistent with order_less: (total order, tuple lexicographic).
    return (sum(n), n)


@dataclass(frozen=True)
class IndexSet:
    """An ordered multi-index set.

    kind    -- "TP" (max_i n_i <= q) or "TD" (sum_i n_i <= q)
    q       -- order parameter
    d       -- number of coordinates
    indices -- tuple of d-tuples, sorted by order_less
    """

    kind: str
    q: int
    d: int
    indices: tuple

    @property
    def N(self) -> int:
        return len(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


def tp_cardinality(q: int, d: int) -> int:
    return (q + 1) ** d

def td_cardinality(q: int, d: int) -> int:
    return math.comb(q + d, d)


def _tp_indices(q, d):
    if d == 1:
        for n in range(q + 1):
            yield (n,)
    else:
        for head in range(q + 1):
            for tail in _tp_indices(q, d - 1):
                yield (head,) + tail


def _td_indices(q, d):
    if d == 1:
        for n in range(q + 1):
            yield (n,)
    else:
        for head in range(q + 1):
            for tail in _td_indices(q - head, d - 1):
                yield (head,) + tail


def build_index_set(kind: str, q: int, d: int) -> IndexSet:
    """Build the TP or TD multi-index set of order q in d coordinates,
    sorted by order_less.

    Rejects d < 1, q < 0, unknown kinds, and cardinalities above 2**53.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if kind not in KINDS:
        raise ValueError(f"unknown index set kind {kind!r}; expected one of {KINDS}")
    n_expected = tp_cardinality(q, d) if kind == "TP" else td_cardinality(q, d)
    if n_expected > MAX_CARDINALITY:
        raise ValueError(
            f"index set {kind}(q={q}, d={d}) has {n_expected} elements, "
            f"beyond the supported limit 2**53"
        )
    gen = _tp_indices(q, d) if kind == "TP" else _td_indices(q, d)
    indices = tuple(sorted(gen, key=_order_key))
    assert len(indices) == n_expected
    return IndexSet(kind, q, d, indices)


def as_indices(index_set) -> list:
    """Normalize an IndexSet or a plain sequence of equal-length tuples of
    nonnegative ints into a list of tuples.  Raises ValueError on empty input,
    ragged lengths, or negative entries.
    """
    raw = getattr(index_set, "indices", index_set)
    indices = [tuple(int(c) for c in n) for n in raw]
    if not indices:
        raise ValueError("empty index set")
    d = len(indices[0])
    for n in indices:
        if len(n) != d:
            raise ValueError(f"ragged multi-index lengths: {d} vs {len(n)}")
        if any(c < 0 for c in n):
            raise ValueError(f"negative entry in multi-index {n}")
    return indices
