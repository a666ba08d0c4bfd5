from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperseidel.errors import EdgeNotFound
from hyperseidel.hypergraph import Hypergraph, gen_random, load_fixture
from hyperseidel.seidel import (
    EnergyChange,
    adjacency_matrix,
    classify_delta,
    co_degree_matrix,
    edge_deletion_profile,
    energy_delta_on_edge_deletion,
    seidel_energy,
    seidel_matrix,
    seidel_spectrum,
)


def _seidel_oracle(h: Hypergraph) -> list[list[int]]:
    """Entry-by-entry definition: 0 on the diagonal, 1 - 2 * codegree elsewhere."""
    out = []
    for i in range(h.n):
        row = []
        for j in range(h.n):
            if i == j:
                row.append(0)
            else:
                row.append(1 - 2 * sum(1 for e in h.edges if i in e and j in e))
        out.append(row)
    return out


hypergraphs = st.integers(2, 9).flatmap(lambda n: st.builds(
    lambda es: Hypergraph.from_edges(n, {tuple(sorted(e)) for e in es}),
    st.lists(st.sets(st.integers(0, n - 1), min_size=2, max_size=min(n, 4)), max_size=10)))


@settings(max_examples=80, deadline=None)
@given(hypergraphs)
def test_seidel_matrix_matches_definition(h):
    s = seidel_matrix(h)
    assert s.tolist() == _seidel_oracle(h)
    assert np.array_equal(s.entries, s.entries.T)
    assert int(np.trace(s.entries)) == 0


@settings(max_examples=40, deadline=None)
@given(hypergraphs, st.randoms(use_true_random=False))
def test_spectrum_relabel_invariant(h, rnd):
    perm = list(range(h.n))
    rnd.shuffle(perm)
    a = seidel_spectrum(h).values
    b = seidel_spectrum(h.relabel(perm)).values
    assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-9


def test_matrix_is_read_only():
    s = seidel_matrix(load_fixture("h1_increase"))
    with pytest.raises(ValueError):
        s.entries[0, 1] = 5


def test_adjacency_is_codegree():
    h = Hypergraph.from_edges(4, [(0, 1, 2), (0, 1, 3)])
    c = co_degree_matrix(h)
    assert c[0, 1] == 2 and c[2, 3] == 0 and c[0, 0] == 0
    assert np.array_equal(adjacency_matrix(h), c)


def test_edgeless_spectrum():
    # J - I: n - 1 once, -1 with multiplicity n - 1
    assert np.allclose(seidel_spectrum(Hypergraph(3, ())).values, [2, -1, -1])
    assert seidel_spectrum(Hypergraph(0, ())).values == ()


def test_example_energy_increase():
    h = load_fixture("h1_increase")
    assert seidel_energy(h) == pytest.approx(12, abs=1e-9)
    profile = edge_deletion_profile(h)
    assert set(profile.values()) == {EnergyChange.INCREASE}
    delta = energy_delta_on_edge_deletion(h, (0, 1, 2))
    assert delta == pytest.approx(6 * math.sqrt(5) - 12, abs=1e-9)


def test_example_energy_decrease():
    h = load_fixture("h2_decrease")
    assert set(edge_deletion_profile(h).values()) == {EnergyChange.DECREASE}


def test_single_edge_equal():
    h = load_fixture("single_edge_5")
    assert edge_deletion_profile(h) == {(0, 1, 2, 3, 4): EnergyChange.EQUAL}


def test_delta_needs_existing_edge():
    with pytest.raises(EdgeNotFound):
        energy_delta_on_edge_deletion(load_fixture("h1_increase"), (0, 1, 5))


def test_classify_delta():
    assert classify_delta(1e-3) is EnergyChange.INCREASE
    assert classify_delta(-1e-3) is EnergyChange.DECREASE
    assert classify_delta(1e-9) is EnergyChange.EQUAL


@pytest.mark.parametrize("seed", range(5))
def test_energy_methods_agree(seed):
    h = gen_random(12, 20, rng=seed)
    assert seidel_energy(h) == pytest.approx(seidel_energy(h, method="lapack"), abs=1e-9)
