# edgespace/edgeset.py

"""
GF(2) linear algebra over finite sets of edge identities.

An edge set is a vector of the edge space; addition is symmetric difference.
Bases keep the vectors they were built from and a cached reduced echelon
form keyed on the least edge identity of each row.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Optional, Sequence

import numpy as np

from .exceptions import LinearAlgebraError

logger = logging.getLogger('edgespace.edgeset')


@dataclass(frozen=True)
class EdgeSet:
    """A finite set of integer edge identities, iterated in ascending order"""

    edges: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, 'edges', frozenset(self.edges))

    @classmethod
    def of(cls, *edges):
        return cls(frozenset(edges))

    def __iter__(self):
        return iter(sorted(self.edges))

    def __len__(self):
        return len(self.edges)

    def __bool__(self):
        return bool(self.edges)

    def __contains__(self, edge):
        return edge in self.edges

    def __xor__(self, other):
        return EdgeSet(self.edges ^ other.edges)

    def __and__(self, other):
        return EdgeSet(self.edges & other.edges)

    def __or__(self, other):
        return EdgeSet(self.edges | other.edges)

    def __sub__(self, other):
        return EdgeSet(self.edges - other.edges)

    def __le__(self, other):
        return self.edges <= other.edges

    def sorted(self):
        """Edge identities as an ascending tuple"""
        return tuple(sorted(self.edges))

    def sort_key(self):
        return self.sorted()

    def least(self):
        return min(self.edges)

    def __repr__(self):
        return f"EdgeSet({list(self.sorted())})"


EMPTY = EdgeSet()


def symmetric_sum(sets: Iterable[EdgeSet]) -> EdgeSet:
    """
    GF(2) sum of a finite family of edge sets

    Args:
        sets (iterable): Edge sets to add

    Returns:
        EdgeSet: Symmetric difference of all inputs
    """
    return reduce(lambda acc, s: acc ^ s, sets, EMPTY)


def is_orthogonal(d: EdgeSet, f: EdgeSet) -> bool:
    """True iff the two edge sets meet in an even number of edges"""
    return len(d.edges & f.edges) % 2 == 0


def _reduce(rows, vector, coords):
    """Reduce (vector, coords) against rows sorted by pivot."""
    for pivot in sorted(rows):
        if pivot in vector:
            row, row_coords = rows[pivot]
            vector = vector ^ row
            coords = coords ^ row_coords
    return vector, coords


def _echelon(vectors):
    """
    Row-reduce a list of vectors

    Returns:
        tuple: (rows, kept) where rows maps pivot -> (row, coordinate set over
               the input indices) and kept lists the indices of the inputs
               that were independent of their predecessors
    """
    rows = {}
    kept = []
    for index, vector in enumerate(vectors):
        reduced, coords = _reduce(rows, vector.edges, frozenset([index]))
        if reduced:
            rows[min(reduced)] = (reduced, coords)
            kept.append(index)
    return rows, kept


@dataclass(frozen=True)
class Basis:
    """Independent edge sets spanning a subspace of the edge space over ambient"""

    vectors: tuple
    ambient: frozenset

    def __post_init__(self):
        object.__setattr__(self, 'vectors', tuple(self.vectors))
        object.__setattr__(self, 'ambient', frozenset(self.ambient))
        for vector in self.vectors:
            if not vector.edges <= self.ambient:
                stray = sorted(vector.edges - self.ambient)
                raise LinearAlgebraError(f"basis vector leaves the ambient space at edges {stray}")
        if len(self._echelon[1]) != len(self.vectors):
            raise LinearAlgebraError("basis vectors are linearly dependent")

    @cached_property
    def _echelon(self):
        return _echelon(self.vectors)

    @property
    def dimension(self):
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def gaussian_basis(vectors: Sequence[EdgeSet], ambient) -> Basis:
    """
    Select an independent subset spanning the same subspace

    Vectors are processed in input order and eliminated by their least edge
    identity, so the result depends only on the input order.

    Args:
        vectors (list): Edge sets inside ambient
        ambient (iterable): Edge identity universe

    Returns:
        Basis: The independent inputs, in input order

    Raises:
        LinearAlgebraError: If a vector leaves the ambient space
    """
    vectors = list(vectors)
    _, kept = _echelon(vectors)
    logger.debug(f"gaussian_basis kept {len(kept)} of {len(vectors)} vectors")
    return Basis(tuple(vectors[i] for i in kept), frozenset(ambient))


def in_span(basis: Basis, vector: EdgeSet) -> Optional[frozenset]:
    """
    Coordinates of a vector in a basis

    Args:
        basis (Basis): Basis to express the vector in
        vector (EdgeSet): Vector inside the ambient space

    Returns:
        frozenset or None: Indices of basis vectors summing to the vector, or
                           None if the vector is outside the span
    """
    rows, _ = basis._echelon
    reduced, coords = _reduce(rows, vector.edges, frozenset())
    if reduced:
        return None
    return coords


def _reduced_rows(basis):
    """Fully reduced rows: every pivot appears in exactly one row."""
    rows = {pivot: row for pivot, (row, _) in basis._echelon[0].items()}
    # ascending: clearing p only introduces edges above p
    for pivot in sorted(rows):
        for other in sorted(rows):
            if other != pivot and pivot in rows[other]:
                rows[other] = rows[other] ^ rows[pivot]
    return rows


def orthogonal_complement(basis: Basis) -> Basis:
    """
    Basis of all subsets of ambient orthogonal to every basis vector

    Args:
        basis (Basis): Basis of the subspace

    Returns:
        Basis: Basis of the orthogonal complement; one vector per non-pivot
               ambient edge, in ascending edge order
    """
    rows = _reduced_rows(basis)
    vectors = []
    for free in sorted(basis.ambient - set(rows)):
        members = {free}
        members.update(pivot for pivot, row in rows.items() if free in row)
        vectors.append(EdgeSet(frozenset(members)))
    return Basis(tuple(vectors), basis.ambient)


def same_span(first: Basis, second: Basis) -> bool:
    """True iff both bases span the same subspace"""
    if first.dimension != second.dimension:
        return False
    return all(in_span(first, v) is not None for v in second.vectors)


def span_elements(basis: Basis):
    """
    Every element of the span, in coordinate-bitmask order

    Yields:
        EdgeSet: 2**dim elements, starting with the empty set
    """
    for mask in range(1 << basis.dimension):
        yield symmetric_sum(v for i, v in enumerate(basis.vectors) if mask >> i & 1)


def random_span_element(basis: Basis, rng) -> EdgeSet:
    """Sum of a uniformly random subset of the basis (numpy Generator rng)"""
    if basis.dimension == 0:
        return EMPTY
    picks = rng.integers(0, 2, size=basis.dimension)
    return symmetric_sum(v for v, bit in zip(basis.vectors, picks) if bit)


def dense_rank(rows, columns) -> int:
    """
    GF(2) rank of a 0/1 matrix given as edge sets over ordered columns

    Args:
        rows (list): Edge sets, one matrix row each
        columns (list): Column order (edge identities)

    Returns:
        int: Rank over GF(2)
    """
    index = {column: i for i, column in enumerate(columns)}
    matrix = np.zeros((len(rows), len(columns)), dtype=np.uint8)
    for r, row in enumerate(rows):
        for edge in row:
            matrix[r, index[edge]] = 1

    rank = 0
    m, n = matrix.shape
    for col in range(n):
        hits = np.nonzero(matrix[rank:, col])[0]
        if hits.size == 0:
            continue
        pivot = rank + hits[0]
        if pivot != rank:
            matrix[[rank, pivot]] = matrix[[pivot, rank]]
        below = np.nonzero(matrix[rank + 1:, col])[0] + rank + 1
        matrix[below] ^= matrix[rank]
        rank += 1
        if rank == m:
            break
    return rank
