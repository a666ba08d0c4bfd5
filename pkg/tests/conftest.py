"""Shared oracles and the acceptance summary hook."""

from __future__ import annotations

from fractions import Fraction

import pytest

ACCEPTANCE_LINES: list[str] = []


def cofactor_det(m: list[list]) -> Fraction:
    """Laplace expansion along the first row; exponential, fine for order <= 6."""
    size = len(m)
    if size == 0:
        return Fraction(1)
    if size == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for j in range(size):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * Fraction(m[0][j]) * cofactor_det(minor)
    return total


def char_poly_by_interpolation(m: list[list[int]]) -> list[int]:
    """det(xI - M), ascending coefficients, by evaluating at 0..n and solving
    the Vandermonde system exactly (Lagrange form)."""
    size = len(m)
    xs = list(range(size + 1))
    ys = [cofactor_det([[(x if i == j else 0) - m[i][j] for j in range(size)] for i in range(size)])
          for x in xs]
    coeffs = [Fraction(0)] * (size + 1)
    for k, xk in enumerate(xs):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == k:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xk - xj
        for t in range(size + 1):
            coeffs[t] += ys[k] * basis[t] / denom
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


@pytest.fixture
def acceptance_report():
    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"AC{number:<2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
        print(line)
        ACCEPTANCE_LINES.append(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s[2:4])):
            terminalreporter.write_line(line)
