"""Hypergraphs, generators for the complete bipartite and Turán families,
deletion operators and JSON I/O.

Vertices are ``0..n-1`` internally. The JSON format uses 1-based labels; the
conversion happens only in :func:`to_json` / :func:`from_json`.
"""

from __future__ import annotations

import enum
import itertools
import json
from collections import deque
from dataclasses import dataclass
from importlib import resources
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EdgeNotFound,
    IndexOutOfRange,
    InvalidHypergraph,
    InvalidPair,
    InvalidParams,
    NotClassifiable,
)

Edge = tuple[int, ...]


def _canonical_edge(e: Iterable[int]) -> Edge:
    edge = tuple(sorted(int(v) for v in e))
    if len(set(edge)) != len(edge):
        raise InvalidHypergraph(f"edge {edge} repeats a vertex")
    return edge


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph on vertices ``0..n-1``.

    Construct through :meth:`from_edges`, which sorts each edge and the edge
    list. The constructor itself only validates.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidHypergraph("vertex count must be non-negative")
        prev = None
        for e in self.edges:
            if len(e) < 2:
                raise InvalidHypergraph(f"edge {e} has fewer than 2 vertices")
            if any(b <= a for a, b in zip(e, e[1:])):
                raise InvalidHypergraph(f"edge {e} is not strictly ascending")
            if e[0] < 0 or e[-1] >= self.n:
                raise InvalidHypergraph(f"edge {e} has a vertex outside [0, {self.n})")
            if prev is not None and e <= prev:
                raise InvalidHypergraph("edges must be unique and in canonical order")
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        canon = sorted(_canonical_edge(e) for e in edges)
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise InvalidHypergraph(f"duplicate edge {a}")
        return cls(int(n), tuple(canon))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __contains__(self, e) -> bool:
        return _canonical_edge(e) in self._edge_set

    @property
    def _edge_set(self) -> frozenset[Edge]:
        # cached lazily; the dataclass is frozen so bypass __setattr__
        try:
            return self.__dict__["_edges_fs"]
        except KeyError:
            fs = frozenset(self.edges)
            object.__setattr__(self, "_edges_fs", fs)
            return fs

    def incidence_matrix(self) -> np.ndarray:
        """Vertex-by-edge 0/1 matrix (int64)."""
        B = np.zeros((self.n, len(self.edges)), dtype=np.int64)
        for k, e in enumerate(self.edges):
            B[list(e), k] = 1
        return B

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Map vertex ``v`` to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidParams("perm must be a permutation of range(n)")
        return Hypergraph.from_edges(self.n, ([perm[v] for v in e] for e in self.edges))


@dataclass(frozen=True)
class BipartitionLabels:
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    def __post_init__(self):
        if not self.side_a or not self.side_b:
            raise InvalidParams("both sides of a bipartition must be nonempty")
        if set(self.side_a) & set(self.side_b):
            raise InvalidParams("bipartition sides overlap")

    @property
    def m(self) -> int:
        return len(self.side_a)

    @property
    def n(self) -> int:
        return len(self.side_b)


class EdgeType(enum.Enum):
    TYPE_I = "I"    # one vertex in V1, two in V2
    TYPE_II = "II"  # two vertices in V1, one in V2


@dataclass(frozen=True)
class DeletionSummary:
    """What a vertex deletion did to the edge list."""

    removed: int = 0   # edges dropped because they contained v (strong) or shrank below size 2 (weak)
    shrunk: int = 0    # edges that lost v and survived
    merged: int = 0    # shrunken edges that coincided with another edge
    containments: int = 0  # ordered pairs (e, f), e a proper subset of f, after weak deletion


# --- predicates -----------------------------------------------------------

def is_simple(h: Hypergraph) -> bool:
    """True iff no edge is a proper subset of another edge."""
    sets = [frozenset(e) for e in h.edges]
    by_size = sorted(range(len(sets)), key=lambda i: len(sets[i]))
    for a_pos, i in enumerate(by_size):
        for j in by_size[a_pos + 1:]:
            if len(sets[i]) < len(sets[j]) and sets[i] < sets[j]:
                return False
    return True


def is_k_uniform(h: Hypergraph, k: int) -> bool:
    return all(len(e) == k for e in h.edges)


def is_connected(h: Hypergraph) -> bool:
    """Connectivity of the vertex-edge incidence graph.

    Any vertex that lies in no edge makes the hypergraph disconnected, except
    for the single-vertex hypergraph.
    """
    if h.n <= 1:
        return True
    incident: list[list[int]] = [[] for _ in range(h.n)]
    for k, e in enumerate(h.edges):
        for v in e:
            incident[v].append(k)
    seen_v = [False] * h.n
    seen_e = [False] * len(h.edges)
    seen_v[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for k in incident[v]:
            if seen_e[k]:
                continue
            seen_e[k] = True
            for w in h.edges[k]:
                if not seen_v[w]:
                    seen_v[w] = True
                    queue.append(w)
    return all(seen_v)


def _check_vertex(h: Hypergraph, v: int) -> None:
    if not 0 <= v < h.n:
        raise IndexOutOfRange(f"vertex {v} not in [0, {h.n})")


def co_degree(h: Hypergraph, i: int, j: int) -> int:
    """Number of edges containing both ``i`` and ``j``."""
    _check_vertex(h, i)
    _check_vertex(h, j)
    if i == j:
        raise InvalidPair("co-degree needs two distinct vertices")
    return sum(1 for e in h.edges if i in e and j in e)


# --- generators -----------------------------------------------------------

def gen_complete_bipartite(k: int, m: int, n: int) -> tuple[Hypergraph, BipartitionLabels]:
    """Complete k-uniform bipartite hypergraph on V1 = 0..m-1, V2 = m..m+n-1.

    Returns an edgeless hypergraph when no k-subset can meet both sides.
    """
    if k < 2 or m < 1 or n < 1:
        raise InvalidParams(f"need k >= 2, m >= 1, n >= 1 (got k={k}, m={m}, n={n})")
    edges = [e for e in itertools.combinations(range(m + n), k) if e[0] < m <= e[-1]]
    labels = BipartitionLabels(tuple(range(m)), tuple(range(m, m + n)))
    return Hypergraph(m + n, tuple(edges)), labels


def complete_bipartite_edge_count(k: int, m: int, n: int) -> int:
    return sum(comb(m, a) * comb(n, k - a) for a in range(1, k))


def turan_parts(n: int, r: int) -> list[tuple[int, ...]]:
    """Contiguous near-equal parts, larger parts first."""
    q, extra = divmod(n, r)
    parts, start = [], 0
    for i in range(r):
        size = q + (1 if i < extra else 0)
        parts.append(tuple(range(start, start + size)))
        start += size
    return parts


def gen_turan(n: int, k: int, r: int, strict: bool = False) -> tuple[Hypergraph, list[tuple[int, ...]]]:
    """Turán hypergraph T(n, k, r).

    By default an edge is any k-subset not contained in a single part; this is
    the reading under which T(n, 3, 2) coincides with the complete 3-uniform
    bipartite hypergraph. With ``strict=True`` the k vertices must lie in
    pairwise distinct parts.
    """
    if r < 2 or k < 2 or n < r:
        raise InvalidParams(f"need r >= 2, k >= 2, n >= r (got n={n}, k={k}, r={r})")
    parts = turan_parts(n, r)
    part_of = [0] * n
    for idx, p in enumerate(parts):
        for v in p:
            part_of[v] = idx
    edges = []
    for e in itertools.combinations(range(n), k):
        owners = [part_of[v] for v in e]
        if strict:
            ok = len(set(owners)) == k
        else:
            ok = len(set(owners)) > 1
        if ok:
            edges.append(e)
    return Hypergraph(n, tuple(edges)), parts


def gen_random(n: int, num_edges: int, sizes: Sequence[int] = (2, 3, 4),
               rng: np.random.Generator | int | None = None) -> Hypergraph:
    """Random hypergraph with up to ``num_edges`` distinct edges.

    Edge sizes are drawn uniformly from ``sizes`` (values above ``n`` are
    ignored); duplicates are discarded, so fewer edges may come back.
    """
    rng = np.random.default_rng(rng)
    sizes = [s for s in sizes if 2 <= s <= n]
    if not sizes:
        return Hypergraph(n, ())
    edges = set()
    for _ in range(num_edges):
        s = int(rng.choice(sizes))
        edges.add(tuple(sorted(int(v) for v in rng.choice(n, size=s, replace=False))))
    return Hypergraph.from_edges(n, edges)


# --- deletion -------------------------------------------------------------

def delete_hyperedge(h: Hypergraph, e: Iterable[int]) -> Hypergraph:
    edge = _canonical_edge(e)
    if edge not in h._edge_set:
        raise EdgeNotFound(f"edge {edge} not in hypergraph")
    return Hypergraph(h.n, tuple(f for f in h.edges if f != edge))


def add_hyperedge(h: Hypergraph, e: Iterable[int]) -> Hypergraph:
    return Hypergraph.from_edges(h.n, list(h.edges) + [tuple(e)])


def _shift(e: Iterable[int], v: int) -> Edge:
    return tuple(w - 1 if w > v else w for w in e if w != v)


def strong_delete_vertex(h: Hypergraph, v: int, keep_vertex: bool = False,
                         return_summary: bool = False):
    """Remove ``v`` and every edge incident to it.

    Vertices above ``v`` shift down by one. With ``keep_vertex=True`` the
    incident edges are removed but ``v`` stays as an isolated vertex, so the
    vertex count and labels are unchanged.
    """
    _check_vertex(h, v)
    kept = [e for e in h.edges if v not in e]
    summary = DeletionSummary(removed=len(h.edges) - len(kept))
    if keep_vertex:
        out = Hypergraph(h.n, tuple(kept))
    else:
        out = Hypergraph(h.n - 1, tuple(_shift(e, v) for e in kept))
    return (out, summary) if return_summary else out


def weak_delete_vertex(h: Hypergraph, v: int, return_summary: bool = False):
    """Remove ``v`` from the vertex set and from every edge.

    Edges that drop below two vertices are discarded and coinciding edges are
    merged. Containments created by the shrinking are kept (the result need
    not be simple) and counted in the summary.
    """
    _check_vertex(h, v)
    removed = shrunk = 0
    raw = []
    for e in h.edges:
        if v in e:
            if len(e) - 1 < 2:
                removed += 1
                continue
            shrunk += 1
        raw.append(_shift(e, v))
    unique = sorted(set(raw))
    out = Hypergraph(h.n - 1, tuple(unique))
    if not return_summary:
        return out
    sets = [frozenset(e) for e in unique]
    containments = sum(1 for a in sets for b in sets if a < b)
    summary = DeletionSummary(removed=removed, shrunk=shrunk,
                              merged=len(raw) - len(unique), containments=containments)
    return out, summary


def classify_edge(e: Iterable[int], labels: BipartitionLabels) -> EdgeType:
    edge = _canonical_edge(e)
    side_a = set(labels.side_a)
    side_b = set(labels.side_b)
    in_a = sum(1 for v in edge if v in side_a)
    in_b = sum(1 for v in edge if v in side_b)
    if len(edge) != 3 or in_a + in_b != 3 or in_a == 0 or in_b == 0:
        raise NotClassifiable(f"edge {edge} is not a 3-edge meeting both sides")
    return EdgeType.TYPE_I if in_a == 1 else EdgeType.TYPE_II


# --- JSON I/O -------------------------------------------------------------

def to_dict(h: Hypergraph) -> dict:
    return {"n": h.n, "edges": [[v + 1 for v in e] for e in h.edges]}


def from_dict(data: dict) -> Hypergraph:
    try:
        n = int(data["n"])
        edges = [[int(v) - 1 for v in e] for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidHypergraph(f"malformed hypergraph document: {exc}") from exc
    return Hypergraph.from_edges(n, edges)


def to_json(h: Hypergraph) -> str:
    """Canonical JSON text: one edge per line, trailing newline."""
    lines = ",\n".join("    " + json.dumps([v + 1 for v in e]) for e in h.edges)
    body = f"[\n{lines}\n  ]" if h.edges else "[]"
    return f'{{\n  "n": {h.n},\n  "edges": {body}\n}}\n'


def from_json(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidHypergraph(f"invalid JSON: {exc}") from exc
    return from_dict(data)


def read_hypergraph(path: str | Path) -> Hypergraph:
    return from_json(Path(path).read_text(encoding="utf-8"))


def write_hypergraph(h: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(to_json(h), encoding="utf-8")


# --- bundled fixtures -----------------------------------------------------

FIXTURES = (
    "h1_increase",
    "h2_decrease",
    "single_edge_5",
    "hstar",
    "c3_3_6",
    "c3_3_6_minus_type1",
    "c3_3_6_minus_type2",
)


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise InvalidParams(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return resources.files("hyperseidel").joinpath("fixtures", f"{name}.json").read_text(encoding="utf-8")


def load_fixture(name: str) -> Hypergraph:
    return from_json(fixture_text(name))
