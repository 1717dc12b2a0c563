"""Bipartition enumeration, partial trace, and Schmidt spectra.

A bipartition of n qubits is identified by the subset whose marginal is
taken.  The canonical set keeps the smaller side (ties broken by
requiring qubit 0), giving exactly 2**(n-1) - 1 members, ordered by
subset size and then by bitmask.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidSubset, NotPositiveSemidefinite
from .linalg import eigvalsh_kernel
from .states import PureState

__all__ = [
    "Bipartition",
    "enumerate_bipartitions",
    "all_subsets",
    "reduced_density",
    "schmidt_spectrum",
    "subset_gather_indices",
]


@dataclass(frozen=True, order=True)
class Bipartition:
    """One of the 2**(n-1) - 1 unordered splits of an n-qubit system."""

    n: int
    subset: tuple[int, ...]

    def __post_init__(self):
        subset = tuple(sorted(set(self.subset)))
        if not subset or len(subset) >= self.n:
            raise InvalidSubset(f"subset {self.subset} not a nonempty proper subset")
        if subset[0] < 0 or subset[-1] >= self.n:
            raise InvalidSubset(f"subset {self.subset} out of range for n={self.n}")
        object.__setattr__(self, "subset", subset)

    @property
    def size(self) -> int:
        return len(self.subset)

    @property
    def bitmask(self) -> int:
        return sum(1 << q for q in self.subset)

    @property
    def complement(self) -> tuple[int, ...]:
        return tuple(q for q in range(self.n) if q not in self.subset)

    @property
    def is_canonical(self) -> bool:
        half = 2 * self.size
        return half < self.n or (half == self.n and 0 in self.subset)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.subset)) + "}"


@lru_cache(maxsize=None)
def enumerate_bipartitions(n: int) -> tuple[Bipartition, ...]:
    """All canonical bipartitions, ordered by size then bitmask."""
    if n < 2:
        raise InvalidSubset(f"need n >= 2, got {n}")
    found = []
    for m in range(1, n // 2 + 1):
        sized = []
        for subset in itertools.combinations(range(n), m):
            b = Bipartition(n, subset)
            if b.is_canonical:
                sized.append(b)
        sized.sort(key=lambda b: b.bitmask)
        found.extend(sized)
    return tuple(found)


def all_subsets(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Every size-m qubit subset (both complements included)."""
    return tuple(itertools.combinations(range(n), m))


@lru_cache(maxsize=None)
def subset_gather_indices(n: int, subset: tuple[int, ...]) -> np.ndarray:
    """Index map reshaping an amplitude vector to (2**m, 2**(n-m)).

    Row a runs over the subset qubits' bits, column e over the
    complement's, both most-significant-qubit-first.  ``psi[idx]`` is the
    coefficient matrix whose Gram matrix is the subset's marginal.
    """
    subset = tuple(sorted(subset))
    comp = tuple(q for q in range(n) if q not in subset)
    m = len(subset)
    idx = np.zeros((1 << m, 1 << (n - m)), dtype=np.intp)
    for a in range(1 << m):
        base = 0
        for pos, q in enumerate(subset):
            if a >> (m - 1 - pos) & 1:
                base |= 1 << (n - 1 - q)
        for e in range(1 << (n - m)):
            full = base
            for pos, q in enumerate(comp):
                if e >> (n - m - 1 - pos) & 1:
                    full |= 1 << (n - 1 - q)
            idx[a, e] = full
    idx.setflags(write=False)
    return idx


def _coefficient_matrix(s: PureState, subset: tuple[int, ...]) -> np.ndarray:
    subset = tuple(sorted(set(subset)))
    if not subset or len(subset) >= s.n or subset[0] < 0 or subset[-1] >= s.n:
        raise InvalidSubset(f"subset {subset} invalid for n={s.n}")
    return s.amplitudes[subset_gather_indices(s.n, subset)]


def reduced_density(s: PureState, subset) -> np.ndarray:
    """Marginal density matrix of ``subset`` after tracing out the rest."""
    a = _coefficient_matrix(s, tuple(subset))
    rho = a @ a.conj().T
    # force exact Hermiticity against rounding in the Gram product
    return (rho + rho.conj().T) / 2.0


def schmidt_spectrum(s: PureState, b: Bipartition) -> np.ndarray:
    """Eigenvalues of the bipartition's smaller-side marginal, descending.

    Clamped to [0, 1]; sums to 1 up to eigensolver round-off.
    """
    if b.n != s.n:
        raise InvalidSubset(f"bipartition is for n={b.n}, state has n={s.n}")
    side = b.subset if 2 * b.size <= s.n else b.complement
    rho = reduced_density(s, side)
    vals = eigvalsh_kernel(rho)
    if vals[0] < -1e-10:
        raise NotPositiveSemidefinite(f"marginal eigenvalue {vals[0]} below -1e-10")
    return np.clip(vals[::-1], 0.0, 1.0)
