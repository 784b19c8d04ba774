"""Spectral decomposition of real symmetric matrices and the walk matrix exp(iMt).

A symmetric matrix M is resolved into distinct eigenvalues with orthogonal
projectors onto the corresponding eigenspaces, M = sum_r theta_r E_r.  The
walk matrix at time t is then synthesized as sum_r exp(i theta_r t) E_r; one
decomposition serves arbitrarily many evaluation times.  Nearby eigenvalues
are merged by an explicit grouping tolerance so that numerically-split
multiple eigenvalues yield a single projector of the right rank.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SpectralDecomposition",
    "WalkMatrix",
    "decompose",
    "walk_matrix",
    "walk_entry",
    "eigenvalue_support",
]

SYMMETRY_TOL = 1e-12
SUPPORT_TOL = 1e-9


@dataclass(frozen=True)
class SpectralDecomposition:
    """Distinct eigenvalues (strictly decreasing) with their eigenprojectors."""

    thetas: np.ndarray
    projectors: tuple[np.ndarray, ...]
    multiplicities: tuple[int, ...]
    grouping_tol: float

    @property
    def n(self) -> int:
        return self.projectors[0].shape[0]

    @property
    def spectral_radius(self) -> float:
        return float(np.max(np.abs(self.thetas)))


@dataclass(frozen=True)
class WalkMatrix:
    """exp(iMt) at a fixed time; symmetric and unitary when M is symmetric."""

    t: float
    U: np.ndarray


def decompose(M, grouping_tol: float | None = None) -> SpectralDecomposition:
    """Eigenprojector decomposition of a real symmetric matrix.

    Eigenvalues closer than ``grouping_tol`` are merged into one distinct
    eigenvalue whose projector spans the merged eigenspace.  The default
    tolerance is 1e-9 scaled by (1 + spectral radius).

    Raises ValueError for non-symmetric input; eigensolver failures propagate
    as numpy.linalg.LinAlgError.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if M.size and np.max(np.abs(M - M.T)) > SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric within 1e-12")
    evals, vecs = np.linalg.eigh(M)
    if grouping_tol is None:
        grouping_tol = 1e-9 * (1.0 + float(np.max(np.abs(evals), initial=0.0)))
    elif grouping_tol < 0:
        raise ValueError(f"grouping_tol must be nonnegative, got {grouping_tol}")

    # chain-merge ascending eigenvalues whose consecutive gap is <= tol
    groups: list[list[int]] = [[0]]
    for i in range(1, len(evals)):
        if evals[i] - evals[groups[-1][-1]] <= grouping_tol:
            groups[-1].append(i)
        else:
            groups.append([i])

    thetas = []
    projectors = []
    mults = []
    for idx in groups:
        V = vecs[:, idx]
        E = V @ V.T
        E = (E + E.T) / 2.0
        # Rayleigh-quotient polish of the merged eigenvalue
        theta = float(np.trace(V.T @ (M @ V))) / len(idx)
        thetas.append(theta)
        projectors.append(E)
        mults.append(len(idx))

    order = np.argsort(thetas)[::-1]
    return SpectralDecomposition(
        thetas=np.array([thetas[i] for i in order]),
        projectors=tuple(projectors[i] for i in order),
        multiplicities=tuple(mults[i] for i in order),
        grouping_tol=float(grouping_tol),
    )


def walk_matrix(d: SpectralDecomposition, t: float) -> WalkMatrix:
    """Walk matrix exp(iMt) synthesized from the decomposition of M."""
    U = np.zeros((d.n, d.n), dtype=complex)
    for theta, E in zip(d.thetas, d.projectors):
        U += np.exp(1j * theta * t) * E
    return WalkMatrix(t=float(t), U=U)


def walk_entry(d: SpectralDecomposition, u: int, v: int, times):
    """Entry (u, v) of exp(iMt) for one time or an array of times."""
    _check_vertex(d, u)
    _check_vertex(d, v)
    coeff = np.array([E[u, v] for E in d.projectors])
    ts = np.asarray(times, dtype=float)
    out = np.exp(1j * np.multiply.outer(ts, d.thetas)) @ coeff
    return complex(out) if ts.ndim == 0 else out


def eigenvalue_support(d: SpectralDecomposition, u: int, tol: float = SUPPORT_TOL) -> list[int]:
    """Indices r of the distinct eigenvalues with nonzero projection E_r e_u."""
    _check_vertex(d, u)
    return [r for r, E in enumerate(d.projectors) if np.linalg.norm(E[:, u]) > tol]


def _check_vertex(d: SpectralDecomposition, u: int) -> None:
    if not (0 <= u < d.n):
        raise ValueError(f"vertex {u} out of range for n={d.n}")
