"""Dense symmetric eigensolver, exact characteristic polynomials, spectra and inertia."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .errors import InvalidParams, NoConvergence, OrderTooLarge
from .poly import IntPolynomial

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100
CHAR_POLY_MAX_ORDER = 64

IntMatrix = list[list[int]]


def as_int_matrix(m) -> IntMatrix:
    """Copy ``m`` into nested lists of Python ints."""
    rows = [[int(v) for v in row] for row in (m.tolist() if isinstance(m, np.ndarray) else m)]
    if any(len(r) != len(rows) for r in rows):
        raise InvalidParams("matrix must be square")
    return rows


def frobenius_norm(m: np.ndarray) -> float:
    return float(np.sqrt(np.sum(np.asarray(m, dtype=float) ** 2)))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in non-increasing order.

    ``cluster_tol`` controls how :meth:`clusters` groups nearly equal values.
    """

    values: tuple[float, ...]
    cluster_tol: float = 1e-8
    residual: float = field(default=0.0, compare=False)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    @property
    def energy(self) -> float:
        return float(sum(abs(v) for v in self.values))

    def clusters(self) -> list[tuple[float, int]]:
        """Group consecutive values closer than ``cluster_tol``.

        Each cluster is reported as (mean value, multiplicity).
        """
        out: list[list[float]] = []
        for v in self.values:
            if out and abs(out[-1][-1] - v) <= self.cluster_tol:
                out[-1].append(v)
            else:
                out.append([v])
        return [(sum(c) / len(c), len(c)) for c in out]


class Inertia(NamedTuple):
    n_pos: int
    n_zero: int
    n_neg: int


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_eigenvalues(m, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, int]:
    """Cyclic Jacobi on a copy of symmetric ``m``.

    Rotations run row by row over the strict upper triangle. Stops once the
    off-diagonal Frobenius norm drops below ``tol * ||m||_F``. Returns the
    unsorted diagonal and the number of sweeps used.
    """
    a = np.array(m, dtype=float)
    order = a.shape[0]
    if a.shape != (order, order):
        raise InvalidParams("matrix must be square")
    if not np.array_equal(a, a.T):
        raise InvalidParams("matrix must be exactly symmetric")
    if tol <= 0:
        raise InvalidParams("tol must be positive")
    target = tol * frobenius_norm(a)
    for sweep in range(max_sweeps + 1):
        if _off_norm(a) <= target:
            return np.diag(a).copy(), sweep
        if sweep == max_sweeps:
            break
        for p in range(order - 1):
            for q in range(p + 1, order):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                # negligible next to both diagonal entries: annihilate without rotating
                g = 100.0 * abs(apq)
                if abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq):
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
    raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps "
                        f"(off-diagonal norm {_off_norm(a):.3e}, target {target:.3e})")


def eig_symmetric(m, tol: float = DEFAULT_TOL, method: str = "jacobi",
                  max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """All eigenvalues of a real symmetric matrix, sorted descending.

    ``method="jacobi"`` (default) uses the in-house cyclic Jacobi solver;
    ``method="lapack"`` defers to ``numpy.linalg.eigvalsh`` for large orders.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise InvalidParams("need a nonempty square matrix")
    if method == "jacobi":
        vals, _ = jacobi_eigenvalues(a, tol=tol, max_sweeps=max_sweeps)
    elif method == "lapack":
        if not np.array_equal(a, a.T):
            raise InvalidParams("matrix must be exactly symmetric")
        vals = np.linalg.eigvalsh(a)
    else:
        raise InvalidParams(f"unknown method {method!r}")
    vals = np.sort(vals)[::-1]
    norm = frobenius_norm(a)
    return Spectrum(tuple(float(v) for v in vals),
                    cluster_tol=1e-8 * max(1.0, norm),
                    residual=float(abs(vals.sum() - np.trace(a))))


def char_poly_exact(m) -> IntPolynomial:
    """det(xI - M) for an integer matrix, by Faddeev-LeVerrier in exact ints.

    The division by k at step k is exact for integer input; a nonzero
    remainder means the input was not integral.
    """
    a = as_int_matrix(m)
    order = len(a)
    if order > CHAR_POLY_MAX_ORDER:
        raise OrderTooLarge(f"order {order} exceeds {CHAR_POLY_MAX_ORDER}")
    if order == 0:
        return IntPolynomial([1])
    coeffs = [0] * (order + 1)
    coeffs[order] = 1
    # mk holds M_k; start with M_1 = I
    mk = [[int(i == j) for j in range(order)] for i in range(order)]
    for k in range(1, order + 1):
        am = [[sum(a[i][t] * mk[t][j] for t in range(order)) for j in range(order)]
              for i in range(order)]
        trace = sum(am[i][i] for i in range(order))
        c, rem = divmod(-trace, k)
        if rem:
            raise InvalidParams("Faddeev-LeVerrier division was not exact; input not integral")
        coeffs[order - k] = c
        mk = am
        for i in range(order):
            mk[i][i] += c
    return IntPolynomial(coeffs)


def inertia_of(s: Spectrum | Sequence[float], zero_tol: float | None = None) -> Inertia:
    """Count eigenvalues above, within and below ``+-zero_tol``.

    The default tolerance is ``1e-8 * max(1, ||M||_F)``, with the Frobenius
    norm recovered from the eigenvalues.
    """
    vals = list(s.values if isinstance(s, Spectrum) else s)
    if zero_tol is None:
        zero_tol = 1e-8 * max(1.0, math.sqrt(sum(v * v for v in vals)))
    if zero_tol <= 0:
        raise InvalidParams("zero_tol must be positive")
    pos = sum(1 for v in vals if v > zero_tol)
    neg = sum(1 for v in vals if v < -zero_tol)
    return Inertia(pos, len(vals) - pos - neg, neg)


def match_multiset(sub: Sequence[float], full: Sequence[float], tol: float) -> bool:
    """True iff every value of ``sub`` pairs with a distinct value of ``full`` within ``tol``."""
    remaining = sorted(full)
    for v in sorted(sub):
        best, best_d = None, None
        for idx, w in enumerate(remaining):
            d = abs(w - v)
            if d <= tol and (best_d is None or d < best_d):
                best, best_d = idx, d
        if best is None:
            return False
        remaining.pop(best)
    return True


def max_multiset_distance(a: Sequence[float], b: Sequence[float]) -> float:
    """Largest gap between equal-length sorted sequences; inf on length mismatch."""
    if len(a) != len(b):
        return math.inf
    return max((abs(x - y) for x, y in zip(sorted(a), sorted(b))), default=0.0)
