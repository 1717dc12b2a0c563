"""Dense complex Hermitian eigensolver and partial transpose.

Everything here is sized for the small matrices this package actually
meets: qubit marginals (at most 32 x 32) and full density matrices of up
to 10 qubits (1024 x 1024) for the partial-transpose brute force.

The eigensolver is a cyclic Jacobi iteration for complex Hermitian
matrices.  Each rotation phase-aligns the pivot entry and then applies a
real Jacobi rotation, which annihilates the pivot exactly.  The kernel is
compiled with numba so that the hill-climbing search can afford thousands
of small eigenproblems per second.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .errors import DimensionMismatch, InvalidSubset, NotHermitian

MAX_DIM = 1024
HERMITIAN_TOL = 1e-10
MAX_SWEEPS = 100

__all__ = [
    "EigenResult",
    "hermitian_eigenvalues",
    "eigvalsh_kernel",
    "eigvalsh_stack",
    "partial_transpose",
    "is_hermitian",
]


@njit(cache=True)
def _offdiag_norm(a):
    n = a.shape[0]
    acc = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                v = a[i, j]
                acc += v.real * v.real + v.imag * v.imag
    return np.sqrt(acc)


@njit(cache=True)
def _jacobi_inplace(a, tol, max_sweeps):
    """Diagonalize Hermitian ``a`` in place; return (sweeps, residual)."""
    n = a.shape[0]
    sweeps = 0
    off = _offdiag_norm(a)
    skip = tol / (2.0 * n) if n > 1 else tol
    while off > tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= skip:
                    continue
                phase = apq / r
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                spc = s * np.conj(phase)
                sph = s * phase
                # column update: A <- A U
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - spc * akq
                    a[k, q] = sph * akp + c * akq
                # row update: A <- U^dagger A
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - sph * aqk
                    a[q, k] = spc * apk + c * aqk
        sweeps += 1
        off = _offdiag_norm(a)
    return sweeps, off


@njit(cache=True)
def eigvalsh_kernel(m):
    """Eigenvalues (ascending) of a Hermitian matrix; no input validation."""
    a = m.astype(np.complex128).copy()
    tol = 1e-12 * a.shape[0]
    _jacobi_inplace(a, tol, MAX_SWEEPS)
    vals = np.empty(a.shape[0], dtype=np.float64)
    for i in range(a.shape[0]):
        vals[i] = a[i, i].real
    return np.sort(vals)


@njit(cache=True)
def eigvalsh_stack(stack):
    """Eigenvalues (ascending) of each matrix in a (count, d, d) stack."""
    count, d = stack.shape[0], stack.shape[1]
    out = np.empty((count, d), dtype=np.float64)
    for i in range(count):
        out[i] = eigvalsh_kernel(stack[i])
    return out


@dataclass(frozen=True)
class EigenResult:
    """Spectrum plus convergence diagnostics of one Jacobi run."""

    eigenvalues: np.ndarray = field(repr=False)
    offdiag_residual: float
    sweeps: int

    @property
    def converged(self) -> bool:
        return self.offdiag_residual <= 1e-12 * len(self.eigenvalues)


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def hermitian_eigenvalues(m: np.ndarray) -> EigenResult:
    """All eigenvalues of a Hermitian matrix, sorted ascending.

    Raises :class:`NotHermitian` when the asymmetry exceeds 1e-10 and
    warns (returning the flagged partial result) if the Jacobi sweep cap
    is hit before the off-diagonal norm drops below 1e-12 * dim.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_DIM:
        raise DimensionMismatch(f"dim {m.shape[0]} exceeds the {MAX_DIM} limit")
    if not is_hermitian(m):
        raise NotHermitian(
            f"asymmetry {np.max(np.abs(m - m.conj().T)):.3e} above {HERMITIAN_TOL}"
        )
    a = m.copy()
    tol = 1e-12 * a.shape[0]
    sweeps, off = _jacobi_inplace(a, tol, MAX_SWEEPS)
    vals = np.sort(np.diag(a).real)
    result = EigenResult(eigenvalues=vals, offdiag_residual=float(off), sweeps=int(sweeps))
    if not result.converged:
        warnings.warn(
            f"Jacobi hit the {MAX_SWEEPS}-sweep cap with residual {off:.3e}",
            RuntimeWarning,
            stacklevel=2,
        )
    return result


def partial_transpose(rho: np.ndarray, subset, n: int) -> np.ndarray:
    """Transpose the tensor indices of ``subset``'s qubits in ``rho``.

    ``rho`` is a 2**n x 2**n matrix over the computational basis with
    qubit 0 as the most significant bit.  The result is Hermitian when
    the input is, and the trace is preserved exactly.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    dim = 1 << n
    if rho.shape != (dim, dim):
        raise DimensionMismatch(
            f"expected shape {(dim, dim)} for n={n}, got {rho.shape}"
        )
    subset = sorted(set(subset))
    if not subset or len(subset) >= n or subset[0] < 0 or subset[-1] >= n:
        raise InvalidSubset(f"subset {subset} is not a nonempty proper subset of 0..{n - 1}")
    tensor = rho.reshape((2,) * (2 * n))
    axes = list(range(2 * n))
    for q in subset:
        axes[q], axes[n + q] = axes[n + q], axes[q]
    return tensor.transpose(axes).reshape(dim, dim).copy()
