"""Closed forms for the complete 3-uniform bipartite hypergraph C3(m, n).

Everything here is evaluated in exact integer arithmetic at concrete (m, n):
the 2x2 and 5x5 quotient matrices, the degree-5 polynomials xi1 / xi2 whose
roots complete the spectrum after deleting one edge, the discriminant U and
its forward difference, and the energy formula.

Vertex layout follows :func:`hyperseidel.hypergraph.gen_complete_bipartite`:
V1 = 0..m-1, V2 = m..m+n-1. The canonical deleted edges are
{0, m, m+1} (one vertex in V1, "Type I") and {0, 1, m} (two in V1, "Type II").
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InvalidParams
from .hypergraph import EdgeType, Hypergraph, delete_hyperedge, gen_complete_bipartite
from .linalg import IntMatrix
from .poly import IntPolynomial, real_roots
from .seidel import seidel_matrix


@dataclass(frozen=True)
class C3Params:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise InvalidParams(f"C3 needs m, n >= 2 (got m={self.m}, n={self.n})")

    def require(self, min_m: int, min_n: int, what: str) -> None:
        if self.m < min_m or self.n < min_n:
            raise InvalidParams(f"{what} needs m >= {min_m}, n >= {min_n} "
                                f"(got m={self.m}, n={self.n})")


def _params(p) -> C3Params:
    return p if isinstance(p, C3Params) else C3Params(*p)


# --- hypergraphs ----------------------------------------------------------

def c3(p) -> Hypergraph:
    p = _params(p)
    return gen_complete_bipartite(3, p.m, p.n)[0]


def canonical_edge(p, kind: EdgeType) -> tuple[int, int, int]:
    p = _params(p)
    if kind is EdgeType.TYPE_I:
        return (0, p.m, p.m + 1)
    return (0, 1, p.m)


def c3_minus_edge(p, kind: EdgeType) -> Hypergraph:
    p = _params(p)
    return delete_hyperedge(c3(p), canonical_edge(p, kind))


# --- 2x2 quotient, U, energy ---------------------------------------------

def quotient_c3(p) -> IntMatrix:
    """Quotient of S(C3(m, n)) for the blocks {V1, V2}."""
    p = _params(p)
    m, n = p.m, p.n
    cross = 1 - 2 * (m + n - 2)
    return [[(m - 1) * (1 - 2 * n), n * cross],
            [m * cross, (n - 1) * (1 - 2 * m)]]


def trace_c3(p) -> int:
    p = _params(p)
    return 3 * p.m + 3 * p.n - 4 * p.m * p.n - 2


def det_c3(p) -> int:
    p = _params(p)
    m, n = p.m, p.n
    return (m - 1) * (n - 1) * (1 - 2 * n) * (1 - 2 * m) - m * n * (1 - 2 * (m + n - 2)) ** 2


def u_of(p) -> int:
    """Discriminant of the 2x2 quotient, as the closed polynomial in m, n."""
    p = _params(p)
    m, n = p.m, p.n
    return 16 * m**3 * n + n**2 + 2 * m * n * (8 * n**2 - 40 * n + 49) + m**2 * (32 * n**2 - 80 * n + 1)


def delta_u(p) -> int:
    """U(m, n+1) - U(m, n), as the closed polynomial in m, n."""
    p = _params(p)
    m, n = p.m, p.n
    return (16 * m**3 + 64 * m**2 * n - 48 * m**2 + 48 * m * n**2
            - 112 * m * n + 34 * m + 2 * n + 1)


def l_of(p) -> int:
    """Energy contributed by the two trivial eigenvalue families."""
    p = _params(p)
    m, n = p.m, p.n
    return (m - 1) * (2 * n - 1) + (n - 1) * (2 * m - 1)


def energy_formula_c3(p) -> float:
    p = _params(p)
    return l_of(p) + math.sqrt(u_of(p))


@dataclass(frozen=True)
class ClosedSpectrum:
    trivial: tuple[tuple[int, int], ...]   # (eigenvalue, multiplicity), zero multiplicities dropped
    quotient_roots: tuple[float, ...]
    order: int = field(default=0)

    def values(self) -> list[float]:
        out = [float(v) for v, k in self.trivial for _ in range(k)]
        out.extend(self.quotient_roots)
        return sorted(out, reverse=True)

    @property
    def total_multiplicity(self) -> int:
        return sum(k for _, k in self.trivial) + len(self.quotient_roots)


def _trivial(m_count: int, n_count: int, p: C3Params) -> tuple[tuple[int, int], ...]:
    return tuple((v, k) for v, k in ((2 * p.n - 1, m_count), (2 * p.m - 1, n_count)) if k > 0)


def spectrum_c3(p) -> ClosedSpectrum:
    """2n-1 (x m-1), 2m-1 (x n-1) and (T +- sqrt(U)) / 2."""
    p = _params(p)
    t, root = trace_c3(p), math.sqrt(u_of(p))
    return ClosedSpectrum(_trivial(p.m - 1, p.n - 1, p),
                          ((t + root) / 2, (t - root) / 2), p.m + p.n)


# --- 5x5 quotients and xi polynomials ------------------------------------

def quotient_type1(p) -> IntMatrix:
    """Quotient after deleting {u1, u_{m+1}, u_{m+2}}; blocks
    {u1}, {u_{m+1}}, {u_{m+2}}, V1 \\ {u1}, V2 \\ {u_{m+1}, u_{m+2}}."""
    p = _params(p)
    p.require(2, 3, "Type-I quotient")
    m, n = p.m, p.n
    a = 1 - 2 * (m + n - 3)
    b = 1 - 2 * (m + n - 2)
    return [
        [0, a, a, (m - 1) * (1 - 2 * n), (n - 2) * b],
        [a, 0, 1 - 2 * (m - 1), (m - 1) * b, (n - 2) * (1 - 2 * m)],
        [a, 1 - 2 * (m - 1), 0, (m - 1) * b, (n - 2) * (1 - 2 * m)],
        [1 - 2 * n, b, b, (m - 2) * (1 - 2 * n), (n - 2) * b],
        [b, 1 - 2 * m, 1 - 2 * m, (m - 1) * b, (n - 3) * (1 - 2 * m)],
    ]


def quotient_type2(p) -> IntMatrix:
    """Quotient after deleting {u1, u2, u_{m+1}}; blocks
    {u1}, {u2}, {u_{m+1}}, V1 \\ {u1, u2}, V2 \\ {u_{m+1}}."""
    p = _params(p)
    p.require(3, 2, "Type-II quotient")
    m, n = p.m, p.n
    a = 1 - 2 * (m + n - 3)
    b = 1 - 2 * (m + n - 2)
    return [
        [0, 1 - 2 * (n - 1), a, (m - 2) * (1 - 2 * n), (n - 1) * b],
        [1 - 2 * (n - 1), 0, a, (m - 2) * (1 - 2 * n), (n - 1) * b],
        [a, a, 0, (m - 2) * b, (n - 1) * (1 - 2 * m)],
        [1 - 2 * n, 1 - 2 * n, b, (m - 3) * (1 - 2 * n), (n - 1) * b],
        [b, b, 1 - 2 * m, (m - 2) * b, (n - 2) * (1 - 2 * m)],
    ]


def xi1_coefficients(m: int, n: int) -> list[int]:
    """Coefficients of xi1, highest degree first."""
    return [
        -1,
        -5 + 7*m + 5*n - 4*m*n,
        (46 + 4*m - 18*m**2 + 4*n - 22*m*n + 2*m**2*n + 4*m**3*n - 8*n**2 - 6*m*n**2
         + 4*m**2*n**2 + 4*m*n**3),
        (286 - 234*m - 46*m**2 + 36*m**3 - 206*n + 62*m*n - 10*m**2*n + 52*m**3*n
         - 16*m**4*n + 8*n**2 - 10*m*n**2 + 64*m**2*n**2 - 24*m**3*n**2 + 4*n**3
         + 40*m*n**3 - 24*m**2*n**3 - 8*m*n**4),
        (83 + 76*m - 366*m**2 + 248*m**3 - 40*m**4 - 228*n - 90*m*n + 238*m**2*n
         + 20*m**3*n - 88*m**4*n + 16*m**5*n - 40*n**2 + 246*m*n**2 + 132*m**2*n**2
         - 184*m**3*n**2 + 48*m**4*n**2 + 40*n**3 - 28*m*n**3 - 160*m**2*n**3
         + 48*m**3*n**3 - 16*m*n**4 + 32*m**2*n**4),
        (-921 + 2387*m - 2322*m**2 + 1012*m**3 - 168*m**4 + 873*n - 2250*m*n
         + 1994*m**2*n - 732*m**3*n + 72*m**4*n + 16*m**5*n - 408*n**2 + 1274*m*n**2
         - 680*m**2*n**2 - 160*m**3*n**2 + 160*m**4*n**2 - 32*m**5*n**2 + 84*n**3
         - 368*m*n**3 + 40*m**2*n**3 + 160*m**3*n**3 - 32*m**4*n**3 + 24*m*n**4
         + 32*m**2*n**4 - 32*m**3*n**4),
    ]


def xi2_coefficients(m: int, n: int) -> list[int]:
    """Coefficients of xi2, highest degree first."""
    return [
        -1,
        -5 + 5*m + 7*n - 4*m*n,
        (46 + 4*m - 8*m**2 + 4*n - 22*m*n - 6*m**2*n + 4*m**3*n - 18*n**2 + 2*m*n**2
         + 4*m**2*n**2 + 4*m*n**3),
        (286 - 206*m + 8*m**2 + 4*m**3 - 234*n + 62*m*n - 10*m**2*n + 40*m**3*n
         - 8*m**4*n - 46*n**2 - 10*m*n**2 + 64*m**2*n**2 - 24*m**3*n**2 + 36*n**3
         + 52*m*n**3 - 24*m**2*n**3 - 16*m*n**4),
        (83 - 228*m - 40*m**2 + 40*m**3 + 76*n - 90*m*n + 246*m**2*n - 28*m**3*n
         - 16*m**4*n - 366*n**2 + 238*m*n**2 + 132*m**2*n**2 - 160*m**3*n**2
         + 32*m**4*n**2 + 248*n**3 + 20*m*n**3 - 184*m**2*n**3 + 48*m**3*n**3
         - 40*n**4 - 88*m*n**4 + 48*m**2*n**4 + 16*m*n**5),
        (-921 + 873*m - 408*m**2 + 84*m**3 + 2387*n - 2250*m*n + 1274*m**2*n
         - 368*m**3*n + 24*m**4*n - 2322*n**2 + 1994*m*n**2 - 680*m**2*n**2
         + 40*m**3*n**2 + 32*m**4*n**2 + 1012*n**3 - 732*m*n**3 - 160*m**2*n**3
         + 160*m**3*n**3 - 32*m**4*n**3 - 168*n**4 + 72*m*n**4 + 160*m**2*n**4
         - 32*m**3*n**4 + 16*m*n**5 - 32*m**2*n**5),
    ]


def xi1(p) -> IntPolynomial:
    p = _params(p)
    p.require(2, 3, "xi1")
    return IntPolynomial.from_descending(xi1_coefficients(p.m, p.n))


def xi2(p) -> IntPolynomial:
    p = _params(p)
    p.require(3, 2, "xi2")
    return IntPolynomial.from_descending(xi2_coefficients(p.m, p.n))


def xi_for(p, kind: EdgeType) -> IntPolynomial:
    return xi1(p) if kind is EdgeType.TYPE_I else xi2(p)


def quotient_for(p, kind: EdgeType) -> IntMatrix:
    return quotient_type1(p) if kind is EdgeType.TYPE_I else quotient_type2(p)


def spectrum_c3_minus_edge(p, kind: EdgeType) -> ClosedSpectrum:
    """Trivial families plus the five real roots of xi1 (Type I) or xi2 (Type II)."""
    p = _params(p)
    if kind is EdgeType.TYPE_I:
        trivial = _trivial(p.m - 2, p.n - 3, p)
    else:
        trivial = _trivial(p.m - 3, p.n - 2, p)
    roots = real_roots(xi_for(p, kind))
    return ClosedSpectrum(trivial, tuple(roots), p.m + p.n)


# --- eigenvector families -------------------------------------------------

@dataclass(frozen=True)
class EigenvectorFamilies:
    ok: bool
    counts: dict[int, int]           # eigenvalue -> number of vectors verified
    expected: dict[int, int]
    failures: tuple[tuple[int, int], ...] = ()   # (plus index, minus index) of failing vectors

    def __bool__(self) -> bool:
        return self.ok


def eigenvector_families(p, which: str = "intact") -> list[tuple[int, list[tuple[int, int]]]]:
    """Difference-vector families as (eigenvalue, [(i, j), ...]) meaning e_i - e_j."""
    p = _params(p)
    m, n = p.m, p.n
    if which == "intact":
        a_pivot, a_rest = 0, range(1, m)
        b_pivot, b_rest = m, range(m + 1, m + n)
    elif which == "type1":
        p.require(2, 3, "Type-I eigenvectors")
        a_pivot, a_rest = 1, range(2, m)
        b_pivot, b_rest = m + 2, range(m + 3, m + n)
    elif which == "type2":
        p.require(3, 2, "Type-II eigenvectors")
        a_pivot, a_rest = 2, range(3, m)
        b_pivot, b_rest = m + 1, range(m + 2, m + n)
    else:
        raise InvalidParams(f"unknown case {which!r}")
    return [(2 * n - 1, [(a_pivot, j) for j in a_rest]),
            (2 * m - 1, [(b_pivot, j) for j in b_rest])]


def verify_trivial_eigenvectors(p, which: str = "intact") -> EigenvectorFamilies:
    """Check S v = lambda v exactly for every difference vector e_i - e_j."""
    p = _params(p)
    if which == "intact":
        h = c3(p)
        sizes = (p.m - 1, p.n - 1)
    elif which == "type1":
        p.require(2, 3, "Type-I eigenvectors")
        h = c3_minus_edge(p, EdgeType.TYPE_I)
        sizes = (p.m - 2, p.n - 3)
    elif which == "type2":
        p.require(3, 2, "Type-II eigenvectors")
        h = c3_minus_edge(p, EdgeType.TYPE_II)
        sizes = (p.m - 3, p.n - 2)
    else:
        raise InvalidParams(f"unknown case {which!r}")
    S = seidel_matrix(h).entries
    counts: dict[int, int] = {}
    expected: dict[int, int] = {}
    failures = []
    for (lam, pairs), size in zip(eigenvector_families(p, which), sizes):
        expected[lam] = expected.get(lam, 0) + size
        counts.setdefault(lam, 0)
        for i, j in pairs:
            v = np.zeros(S.shape[0], dtype=np.int64)
            v[i], v[j] = 1, -1
            if np.array_equal(S @ v, lam * v):
                counts[lam] += 1
            else:
                failures.append((i, j))
    ok = not failures and counts == expected
    return EigenvectorFamilies(ok, counts, expected, tuple(failures))


# --- factorization claim -------------------------------------------------

@dataclass(frozen=True)
class FactorizationReport:
    m: int
    n: int
    point: int          # 2m - 3 for xi1, 2n - 3 for xi2
    value: int          # exact xi(point)
    polynomial: str = "xi1"

    @property
    def holds(self) -> bool:
        return self.value == 0


def check_factorization_claim(p, polynomial: str = "xi1") -> FactorizationReport:
    """Evaluate xi1 at 2m - 3 (or xi2 at 2n - 3) exactly; zero means the
    linear factor (x - point) divides it. Reports, never raises on failure."""
    p = _params(p)
    p.require(3, 3, "factorization check")
    if polynomial == "xi1":
        point, poly = 2 * p.m - 3, xi1(p)
    elif polynomial == "xi2":
        point, poly = 2 * p.n - 3, xi2(p)
    else:
        raise InvalidParams(f"unknown polynomial {polynomial!r}")
    return FactorizationReport(p.m, p.n, point, poly(point), polynomial)


def cofactor_after_factor(p) -> IntPolynomial:
    """xi1 / (x - (2m - 3)) by synthetic division; raises if the division is inexact."""
    p = _params(p)
    coeffs = xi1_coefficients(p.m, p.n)
    r = 2 * p.m - 3
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(c + out[-1] * r)
    if out[-1] != 0:
        raise InvalidParams(f"x - {r} does not divide xi1 at (m, n) = ({p.m}, {p.n}); "
                            f"remainder {out[-1]}")
    return IntPolynomial.from_descending(out[:-1])


def root_sum(poly: IntPolynomial) -> Fraction:
    """Sum of all complex roots, -a_{d-1} / a_d."""
    return Fraction(-poly.coeffs[-2], poly.coeffs[-1])
