"""Equitable partitions, symmetrized quotient matrices, and walk correspondence.

A partition of the vertices is equitable when every vertex of cell i has the
same number b_ij of neighbors in cell j.  The symmetrized quotient matrix
B_ij = sqrt(b_ij * b_ji) inherits the spectral structure of the full graph:
its eigenprojectors are the nonzero compressions Q^T E_r Q of the full
projectors, and walk entries between singleton cells coincide with the
corresponding entries of the full walk.  Those two facts are exposed here as
checkable operations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, adjacency_matrix, double_star, double_star_pendant_vertices
from .spectral import SpectralDecomposition, decompose, walk_entry

__all__ = [
    "EquitablePartition",
    "SymmetrizedQuotient",
    "is_equitable",
    "equitable_partition",
    "coarsest_equitable_refinement",
    "symmetrized_quotient",
    "quotient_idempotents",
    "quotient_transfer_identity_check",
    "double_star_center_partition",
    "double_star_pendant_partition",
]

IDEMPOTENT_MATCH_TOL = 1e-9


@dataclass(frozen=True)
class EquitablePartition:
    """Ordered cells plus the integer neighbor-count matrix b."""

    cells: tuple[tuple[int, ...], ...]
    b: np.ndarray  # shape (r, r), dtype int64

    @property
    def size(self) -> int:
        return len(self.cells)

    def cell_index(self) -> dict[int, int]:
        return {u: i for i, cell in enumerate(self.cells) for u in cell}


@dataclass(frozen=True)
class SymmetrizedQuotient:
    """Symmetrized quotient matrix B with the normalized characteristic matrix Q."""

    B: np.ndarray
    Q: np.ndarray
    cell_of: tuple[int, ...]


def _normalize_cells(n: int, cells) -> tuple[tuple[int, ...], ...]:
    out = []
    seen: set[int] = set()
    for cell in cells:
        cs = tuple(sorted(int(u) for u in cell))
        if not cs:
            raise ValueError("empty cell in partition")
        for u in cs:
            if not (0 <= u < n):
                raise ValueError(f"vertex {u} out of range for n={n}")
            if u in seen:
                raise ValueError(f"vertex {u} appears in two cells")
            seen.add(u)
        out.append(cs)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        raise ValueError(f"partition does not cover vertices {missing}")
    return tuple(out)


def is_equitable(g: Graph, cells) -> tuple[bool, tuple | None]:
    """Check the constant-neighbor-count condition.

    Returns (True, None), or (False, (u, u_prime, j)) where u and u_prime lie
    in the same cell but have different neighbor counts into cell j.
    """
    cells = _normalize_cells(g.n, cells)
    idx = {u: i for i, cell in enumerate(cells) for u in cell}
    nbrs = {u: g.neighbors(u) for u in range(g.n)}
    for cell in cells:
        ref = cell[0]
        ref_counts = _counts_into_cells(nbrs[ref], idx, len(cells))
        for u in cell[1:]:
            counts = _counts_into_cells(nbrs[u], idx, len(cells))
            for j in range(len(cells)):
                if counts[j] != ref_counts[j]:
                    return False, (ref, u, j)
    return True, None


def _counts_into_cells(neighbors, idx, r):
    counts = [0] * r
    for w in neighbors:
        counts[idx[w]] += 1
    return counts


def equitable_partition(g: Graph, cells) -> EquitablePartition:
    """Validate cells as an equitable partition of g and attach the b matrix."""
    cells = _normalize_cells(g.n, cells)
    ok, witness = is_equitable(g, cells)
    if not ok:
        raise ValueError(f"partition is not equitable, witness {witness}")
    idx = {u: i for i, cell in enumerate(cells) for u in cell}
    r = len(cells)
    b = np.zeros((r, r), dtype=np.int64)
    for i, cell in enumerate(cells):
        counts = _counts_into_cells(g.neighbors(cell[0]), idx, r)
        b[i, :] = counts
    return EquitablePartition(cells=cells, b=b)


def coarsest_equitable_refinement(g: Graph, seed) -> EquitablePartition:
    """Coarsest equitable partition refining the seed partition.

    Standard color refinement: vertices are repeatedly split by the vector of
    neighbor counts into the current cells until stable.  Output cells are
    ordered by (index of the seed cell they refine, minimum vertex).
    """
    seed_cells = _normalize_cells(g.n, seed)
    seed_of = {u: i for i, cell in enumerate(seed_cells) for u in cell}
    nbrs = {u: g.neighbors(u) for u in range(g.n)}

    cell_of = [seed_of[u] for u in range(g.n)]
    num_cells = len(seed_cells)
    while True:
        sigs = {}
        for u in range(g.n):
            counts = _counts_into_cells(nbrs[u], cell_of, num_cells)
            sigs.setdefault((cell_of[u], tuple(counts)), []).append(u)
        pieces = sorted(sigs.values(), key=lambda vs: (cell_of[vs[0]], min(vs)))
        if len(pieces) == num_cells:
            break
        num_cells = len(pieces)
        for i, vs in enumerate(pieces):
            for u in vs:
                cell_of[u] = i

    final = sorted(pieces, key=lambda vs: (seed_of[min(vs)], min(vs)))
    return equitable_partition(g, [sorted(vs) for vs in final])


def symmetrized_quotient(g: Graph, p: EquitablePartition) -> SymmetrizedQuotient:
    """Symmetrized quotient B_ij = sqrt(b_ij b_ji) with orthonormal Q."""
    ok, witness = is_equitable(g, p.cells)
    if not ok:
        raise ValueError(f"partition is not equitable for this graph, witness {witness}")
    r = p.size
    B = np.sqrt((p.b * p.b.T).astype(float))
    Q = np.zeros((g.n, r))
    for i, cell in enumerate(p.cells):
        Q[list(cell), i] = 1.0 / np.sqrt(len(cell))
    cell_of = [0] * g.n
    for i, cell in enumerate(p.cells):
        for u in cell:
            cell_of[u] = i
    return SymmetrizedQuotient(B=B, Q=Q, cell_of=tuple(cell_of))


def quotient_idempotents(
    d: SpectralDecomposition, q: SymmetrizedQuotient, match_tol: float = IDEMPOTENT_MATCH_TOL
) -> list[np.ndarray]:
    """Nonzero compressions Q^T E_r Q, verified against the decomposition of B.

    The returned matrices follow the order of d.thetas with zero compressions
    dropped.  Each one must coincide (entrywise, within match_tol) with the
    eigenprojector of B for the matching eigenvalue; a mismatch raises
    ArithmeticError.
    """
    if q.Q.shape[0] != d.n:
        raise ValueError(f"dimension mismatch: decomposition n={d.n}, quotient n={q.Q.shape[0]}")
    kept = []
    for theta, E in zip(d.thetas, d.projectors):
        m = q.Q.T @ E @ q.Q
        if np.linalg.norm(m) > 1e-9:
            kept.append((float(theta), m))

    db = decompose(q.B)
    if len(kept) != len(db.thetas):
        raise ArithmeticError(
            f"{len(kept)} nonzero compressions but B has {len(db.thetas)} distinct eigenvalues"
        )
    for theta, m in kept:
        r = int(np.argmin(np.abs(db.thetas - theta)))
        if abs(db.thetas[r] - theta) > 1e-8:
            raise ArithmeticError(f"no quotient eigenvalue matches theta={theta}")
        if np.max(np.abs(m - db.projectors[r])) > match_tol:
            raise ArithmeticError(f"compression at theta={theta} is not the B-projector")
    return [m for _, m in kept]


def quotient_transfer_identity_check(
    g: Graph, p: EquitablePartition, a: int, b: int, times
) -> float:
    """Max deviation between full-walk and quotient-walk entries over the times.

    Both (a, b) and the diagonal (a, a) entries are compared; a and b must be
    singleton cells of p.
    """
    idx = p.cell_index()
    for v in (a, b):
        if v not in idx:
            raise ValueError(f"vertex {v} out of range")
        if len(p.cells[idx[v]]) != 1:
            raise ValueError(f"vertex {v} is not a singleton cell")
    ca, cb = idx[a], idx[b]
    da = decompose(adjacency_matrix(g))
    q = symmetrized_quotient(g, p)
    dB = decompose(q.B)
    ts = np.atleast_1d(np.asarray(times, dtype=float))
    dev_off = np.abs(walk_entry(da, a, b, ts) - walk_entry(dB, ca, cb, ts))
    dev_diag = np.abs(walk_entry(da, a, a, ts) - walk_entry(dB, ca, ca, ts))
    return float(max(dev_off.max(initial=0.0), dev_diag.max(initial=0.0)))


def double_star_center_partition(k: int, l: int) -> EquitablePartition:
    """Four-cell partition of double_star(k, l): leaves of 0, {0}, {1}, leaves of 1."""
    g = double_star(k, l)
    cells = [
        tuple(range(2, k + 2)),
        (0,),
        (1,),
        tuple(range(k + 2, k + l + 2)),
    ]
    return equitable_partition(g, cells)


def double_star_pendant_partition(k: int, l: int) -> EquitablePartition:
    """Partition of double_star(k, l) isolating the canonical pendant pair.

    The two pendant vertices and both centers are singleton cells; the
    remaining leaves (if any) form one cell.
    """
    g = double_star(k, l)
    p1, p2 = double_star_pendant_vertices(k, l)
    if k == 2 or (k == 1 and l == 1):
        rest = tuple(range(4, k + l + 2))
        cells = [(p1,), (p2,), (0,), (1,)]
    else:  # l == 2, pendant pair on the side of center 1
        rest = tuple(range(2, k + 2))
        cells = [(p1,), (p2,), (1,), (0,)]
    if rest:
        cells.append(rest)
    return equitable_partition(g, cells)
