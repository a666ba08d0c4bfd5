"""Exact integer polynomials and real-root isolation by Sturm sequences."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Number = int | Fraction


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    ``coeffs[d]`` is the coefficient of ``x**d`` (ascending order). Trailing
    zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(list(coeffs)[::-1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def descending(self) -> list[int]:
        return list(self.coeffs[::-1])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                             for i in range(size))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(d * c for d, c in enumerate(self.coeffs) if d)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "x" if d == 1 else f"x^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def negate_variable(p: IntPolynomial) -> IntPolynomial:
    """Return p(-x)."""
    return IntPolynomial(c if d % 2 == 0 else -c for d, c in enumerate(p.coeffs))


def sign_variations(p: IntPolynomial | Sequence[int]) -> int:
    """Sign changes in the nonzero coefficients, read by descending degree."""
    coeffs = p.coeffs if isinstance(p, IntPolynomial) else tuple(p)
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


# --- rational polynomial helpers (ascending Fraction lists) ---------------

def _trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        coef = a[shift + len(b) - 1] / lead
        q[shift] = coef
        if coef:
            for i, c in enumerate(b):
                a[shift + i] -= coef * c
    return _trim(q), _trim(a[: len(b) - 1])


def _qgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _qdivmod(a, b)[1]
    return [c / a[-1] for c in a]


def _qderiv(a: list[Fraction]) -> list[Fraction]:
    return [d * c for d, c in enumerate(a) if d]


def _qeval(a: Sequence[Fraction], x: Number) -> Number:
    acc: Number = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _qsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    width = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                  for i in range(width)])


def _square_free_parts(p: IntPolynomial) -> list[tuple[list[Fraction], int]]:
    """Yun's algorithm: p = lc * prod(f_i ** i) with each f_i square-free."""
    f = [Fraction(c) for c in p.coeffs]
    fp = _qderiv(f)
    if not fp:
        return []
    g = _qgcd(f, fp)
    c = _qdivmod(f, g)[0]
    d = _qsub(_qdivmod(fp, g)[0], _qderiv(c))
    parts = []
    mult = 1
    while len(c) > 1:
        a = _qgcd(c, d) if d else [c[i] / c[-1] for i in range(len(c))]
        if len(a) > 1:
            parts.append((a, mult))
        c = _qdivmod(c, a)[0]
        d = _qsub(_qdivmod(d, a)[0], _qderiv(c)) if d else []
        mult += 1
    return parts


def sturm_sequence(f: Sequence[Fraction]) -> list[list[Fraction]]:
    seq = [list(f), _qderiv(list(f))]
    while seq[-1]:
        rem = _qdivmod(seq[-2], seq[-1])[1]
        if not rem:
            break
        seq.append([-c for c in rem])
    return [s for s in seq if s]


def _variations_at(seq: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for s in seq:
        v = _qeval(s, x)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _cauchy_bound(f: Sequence[Fraction]) -> Fraction:
    lead = abs(f[-1])
    return 1 + max(abs(c) for c in f[:-1]) / lead if len(f) > 1 else Fraction(1)


def _isolate(f: list[Fraction], seq: list[list[Fraction]]) -> list[tuple[Fraction, Fraction]]:
    """Intervals (a, b] each holding exactly one root of square-free f."""
    bound = _cauchy_bound(f)
    out = []
    stack = [(-bound, bound, _variations_at(seq, -bound), _variations_at(seq, bound))]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count == 0:
            continue
        if count == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        vm = _variations_at(seq, mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    return out


def _refine(f: list[Fraction], seq, a: Fraction, b: Fraction, rel_width: float) -> float:
    if _qeval(f, b) == 0:
        return float(b)
    va, vb = _variations_at(seq, a), _variations_at(seq, b)
    while True:
        mid = (a + b) / 2
        if _qeval(f, mid) == 0:
            return float(mid)
        vm = _variations_at(seq, mid)
        if va - vm == 1:
            b, vb = mid, vm
        else:
            a, va = mid, vm
        scale = 1.0 + max(abs(float(a)), abs(float(b)))
        if float(b - a) < rel_width * scale:
            break
    x = float((a + b) / 2)
    fl = [float(c) for c in f]
    dfl = [float(c) for c in _qderiv(f)]
    lo, hi = float(a), float(b)
    for _ in range(2):
        dv = _qeval(dfl, x)
        if dv == 0:
            break
        step = _qeval(fl, x) / dv
        cand = x - step
        if not (lo <= cand <= hi) or not math.isfinite(cand):
            break
        x = cand
    return x


def real_roots(p: IntPolynomial, tol: float = 1e-13) -> list[float]:
    """All real roots of ``p`` with multiplicity, sorted descending.

    Roots are isolated exactly with Sturm sequences over the rationals on
    each square-free factor, then bisected until the bracketing interval is
    narrower than ``tol * (1 + |root|)`` and polished by two Newton steps
    that are only accepted inside the bracket.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    if tol <= 0:
        raise ValueError("tol must be positive")
    roots: list[float] = []
    for factor, mult in _square_free_parts(p):
        seq = sturm_sequence(factor)
        for a, b in _isolate(factor, seq):
            r = _refine(factor, seq, a, b, tol)
            roots.extend([r] * mult)
    roots.sort(reverse=True)
    return roots


def count_real_roots(p: IntPolynomial) -> int:
    """Number of distinct real roots, computed exactly."""
    return sum(len(_isolate(f, sturm_sequence(f))) for f, _ in _square_free_parts(p))
