"""Equitable vertex partitions and exact quotient matrices."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidPartition, NotEquitable
from .linalg import char_poly_exact, eig_symmetric, match_multiset
from .poly import IntPolynomial, real_roots


@dataclass(frozen=True)
class VertexPartition:
    """Ordered blocks of 0-based vertex indices."""

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        object.__setattr__(self, "blocks", tuple(tuple(int(v) for v in b) for b in blocks))

    @property
    def size(self) -> int:
        return len(self.blocks)

    def validate(self, order: int) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise InvalidPartition("partition has an empty block")
            for v in b:
                if not 0 <= v < order:
                    raise InvalidPartition(f"vertex {v} outside [0, {order})")
                if v in seen:
                    raise InvalidPartition(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != order:
            missing = sorted(set(range(order)) - seen)
            raise InvalidPartition(f"partition misses vertices {missing}")

    @classmethod
    def singletons(cls, order: int) -> "VertexPartition":
        return cls([v] for v in range(order))


@dataclass(frozen=True)
class EquitableCheck:
    equitable: bool
    witness: tuple[int, int, int, int] | None = None  # (r, s, i, i2)

    def __bool__(self) -> bool:
        return self.equitable


def _as_exact(s) -> np.ndarray:
    S = np.asarray(s)
    if S.dtype.kind == "f" and np.array_equal(S, np.round(S)):
        S = S.astype(np.int64)
    return S


def _block_sums(S: np.ndarray, p: VertexPartition) -> np.ndarray:
    """rows x blocks matrix of sums of S over each block's columns (exact ints)."""
    return np.stack([S[:, list(b)].sum(axis=1) for b in p.blocks], axis=1)


def check_equitable(s, p: VertexPartition) -> EquitableCheck:
    """Exact check that every block-pair row sum is constant within the row block."""
    S = _as_exact(s)
    p.validate(S.shape[0])
    sums = _block_sums(S, p)
    for r, block in enumerate(p.blocks):
        first = block[0]
        for i in block[1:]:
            diff = np.nonzero(sums[i] != sums[first])[0]
            if diff.size:
                return EquitableCheck(False, (r, int(diff[0]), first, i))
    return EquitableCheck(True)


def quotient_matrix(s, p: VertexPartition) -> list[list[int]]:
    """Exact t x t quotient: entry (r, s) is the row sum over block s of any row in block r."""
    S = _as_exact(s)
    check = check_equitable(S, p)
    if not check:
        r, c, i, i2 = check.witness
        raise NotEquitable(f"rows {i} and {i2} of block {r} differ in their sum over block {c}",
                           witness=check.witness)
    sums = _block_sums(S, p)
    return [[v.item() for v in sums[b[0]]] for b in p.blocks]


def quotient_char_poly(s, p: VertexPartition) -> IntPolynomial:
    return char_poly_exact(quotient_matrix(s, p))


def quotient_spectrum_subset(s, p: VertexPartition, tol: float = 1e-7) -> bool:
    """True iff the quotient's eigenvalues (roots of its exact char poly)
    sit inside the spectrum of ``s`` as a multiset, within ``tol``."""
    roots = real_roots(quotient_char_poly(s, p))
    S = np.asarray(s, dtype=float)
    full = eig_symmetric(S).values
    return len(roots) == p.size and match_multiset(roots, full, tol)


_RANGE = re.compile(r"^\s*(\d+)\s*(?:-\s*(\d+)\s*)?$")


def parse_partition(text: str) -> VertexPartition:
    """Parse ``"1|2,3|4-9"``: 1-based labels, ``|`` between blocks, ``a-b`` ranges."""
    blocks = []
    for chunk in text.split("|"):
        block: list[int] = []
        for item in chunk.split(","):
            match = _RANGE.match(item)
            if not match:
                raise InvalidPartition(f"cannot parse {item!r} in partition {text!r}")
            lo = int(match.group(1))
            hi = int(match.group(2) or lo)
            if lo < 1 or hi < lo:
                raise InvalidPartition(f"bad range {item!r}")
            block.extend(range(lo - 1, hi))
        blocks.append(block)
    return VertexPartition(blocks)


def format_partition(p: VertexPartition) -> str:
    out = []
    for b in p.blocks:
        parts, run = [], []
        for v in sorted(b):
            if run and v == run[-1] + 1:
                run.append(v)
            else:
                if run:
                    parts.append(run)
                run = [v]
        if run:
            parts.append(run)
        out.append(",".join(f"{r[0] + 1}" if len(r) == 1 else f"{r[0] + 1}-{r[-1] + 1}" for r in parts))
    return "|".join(out)


def bipartition_blocks(m: int, n: int) -> VertexPartition:
    """{V1, V2} for the complete bipartite layout (V1 = 0..m-1)."""
    return VertexPartition([range(m), range(m, m + n)])


def type1_blocks(m: int, n: int) -> VertexPartition:
    """Blocks {u1}, {u_{m+1}}, {u_{m+2}}, V1 rest, V2 rest after removing {u1, u_{m+1}, u_{m+2}}."""
    return VertexPartition([[0], [m], [m + 1], range(1, m), range(m + 2, m + n)])


def type2_blocks(m: int, n: int) -> VertexPartition:
    """Blocks {u1}, {u2}, {u_{m+1}}, V1 rest, V2 rest after removing {u1, u2, u_{m+1}}."""
    return VertexPartition([[0], [1], [m], range(2, m), range(m + 1, m + n)])


def partition_from_sequence(labels: Sequence[int]) -> VertexPartition:
    """Group vertices by a per-vertex block label, blocks ordered by first appearance."""
    order: dict[int, list[int]] = {}
    for v, lab in enumerate(labels):
        order.setdefault(lab, []).append(v)
    return VertexPartition(order.values())
