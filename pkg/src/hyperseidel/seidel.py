"""Co-degree adjacency and Seidel matrices of hypergraphs, Seidel spectra and energy."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import EdgeNotFound
from .hypergraph import Hypergraph, _canonical_edge, delete_hyperedge
from .linalg import DEFAULT_TOL, Spectrum, eig_symmetric

ENERGY_CMP_TOL = 1e-7


def co_degree_matrix(h: Hypergraph) -> np.ndarray:
    """C[i, j] = number of edges containing i and j; zero diagonal."""
    B = h.incidence_matrix()
    C = B @ B.T
    np.fill_diagonal(C, 0)
    return C


def adjacency_matrix(h: Hypergraph) -> np.ndarray:
    """Co-degree adjacency matrix A(H) (int64).

    A[i, j] is the co-degree when i and j share an edge and 0 otherwise,
    which is the same thing as the co-degree itself.
    """
    return co_degree_matrix(h)


@dataclass(frozen=True, eq=False)
class SeidelMatrix:
    """Exact integer Seidel matrix S = J - I - 2A with a float view."""

    entries: np.ndarray  # int64, read-only

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    @property
    def real(self) -> np.ndarray:
        return self.entries.astype(float)

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)

    def __eq__(self, other) -> bool:
        return isinstance(other, SeidelMatrix) and np.array_equal(self.entries, other.entries)

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()


def seidel_matrix(h: Hypergraph) -> SeidelMatrix:
    n = h.n
    S = np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64) - 2 * co_degree_matrix(h)
    S.setflags(write=False)
    return SeidelMatrix(S)


def seidel_spectrum(h: Hypergraph, tol: float = DEFAULT_TOL, method: str = "jacobi") -> Spectrum:
    if h.n == 0:
        return Spectrum(())
    return eig_symmetric(seidel_matrix(h).real, tol=tol, method=method)


def seidel_energy(h: Hypergraph, tol: float = DEFAULT_TOL, method: str = "jacobi") -> float:
    """Sum of absolute Seidel eigenvalues."""
    return seidel_spectrum(h, tol=tol, method=method).energy


class EnergyChange(enum.Enum):
    DECREASE = "decrease"
    EQUAL = "equal"
    INCREASE = "increase"


def classify_delta(delta: float, cmp_tol: float = ENERGY_CMP_TOL) -> EnergyChange:
    if delta > cmp_tol:
        return EnergyChange.INCREASE
    if delta < -cmp_tol:
        return EnergyChange.DECREASE
    return EnergyChange.EQUAL


def energy_delta_on_edge_deletion(h: Hypergraph, e: Iterable[int], tol: float = DEFAULT_TOL) -> float:
    """E_S(h - e) - E_S(h); negative means the deletion lowered the energy."""
    edge = _canonical_edge(e)
    if edge not in h:
        raise EdgeNotFound(f"edge {edge} not in hypergraph")
    return seidel_energy(delete_hyperedge(h, edge), tol) - seidel_energy(h, tol)


def edge_deletion_profile(h: Hypergraph, tol: float = DEFAULT_TOL,
                          cmp_tol: float = ENERGY_CMP_TOL) -> dict[tuple[int, ...], EnergyChange]:
    """Classify every edge of ``h`` by the effect its removal has on the energy."""
    base = seidel_energy(h, tol)
    return {e: classify_delta(seidel_energy(delete_hyperedge(h, e), tol) - base, cmp_tol)
            for e in h.edges}
