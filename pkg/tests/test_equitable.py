from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import char_poly_by_interpolation
from hyperseidel.errors import InvalidPartition, NotEquitable
from hyperseidel.equitable import (
    VertexPartition,
    bipartition_blocks,
    check_equitable,
    format_partition,
    parse_partition,
    partition_from_sequence,
    quotient_char_poly,
    quotient_matrix,
    quotient_spectrum_subset,
    type1_blocks,
    type2_blocks,
)
from hyperseidel.closedform import c3_minus_edge
from hyperseidel.hypergraph import EdgeType, Hypergraph, gen_complete_bipartite, gen_turan, load_fixture
from hyperseidel.seidel import seidel_matrix


def _quotient_oracle(s, blocks):
    """Average of block row sums; equals the common value when equitable."""
    s = np.asarray(s)
    return [[sum(int(s[i, j]) for i in br for j in bc) // len(br) for bc in blocks] for br in blocks]


def test_parse_and_format():
    p = parse_partition("1|2,3|4-9")
    assert p.blocks == ((0,), (1, 2), (3, 4, 5, 6, 7, 8))
    assert format_partition(p) == "1|2-3|4-9"
    assert parse_partition(format_partition(p)) == p


@pytest.mark.parametrize("text", ["", "1||2", "a-b", "3-1", "0|1"])
def test_parse_rejects(text):
    with pytest.raises(InvalidPartition):
        parse_partition(text)


def test_validate():
    with pytest.raises(InvalidPartition):
        VertexPartition([[0, 1], [1, 2]]).validate(3)
    with pytest.raises(InvalidPartition):
        VertexPartition([[0], [1]]).validate(3)
    with pytest.raises(InvalidPartition):
        VertexPartition([[0], [5]]).validate(2)
    VertexPartition.singletons(4).validate(4)


def test_c3_3_6_bipartition_quotient():
    s = seidel_matrix(load_fixture("c3_3_6"))
    q = quotient_matrix(s, parse_partition("1-3|4-9"))
    assert q == [[-22, -78], [-39, -25]]
    assert quotient_spectrum_subset(s, bipartition_blocks(3, 6))


def test_not_equitable_witness():
    s = seidel_matrix(load_fixture("c3_3_6"))
    check = check_equitable(s, parse_partition("1-2|3-9"))
    assert not check
    r, c, i, i2 = check.witness
    assert r == 1 and {i, i2} == {2, 3}
    with pytest.raises(NotEquitable) as err:
        quotient_matrix(s, parse_partition("1-2|3-9"))
    assert err.value.witness == check.witness


def test_singletons_give_the_matrix_itself():
    s = seidel_matrix(load_fixture("hstar"))
    assert quotient_matrix(s, VertexPartition.singletons(6)) == s.tolist()


def test_float_input_accepted_when_integral():
    s = seidel_matrix(load_fixture("c3_3_6")).real
    assert quotient_matrix(s, bipartition_blocks(3, 6)) == [[-22, -78], [-39, -25]]


@pytest.mark.parametrize("m, n", [(3, 3), (3, 6), (4, 5), (5, 3)])
def test_deleted_edge_blocks_are_equitable(m, n):
    for kind, blocks in ((EdgeType.TYPE_I, type1_blocks(m, n)), (EdgeType.TYPE_II, type2_blocks(m, n))):
        s = seidel_matrix(c3_minus_edge((m, n), kind))
        assert check_equitable(s, blocks)
        q = quotient_matrix(s, blocks)
        assert q == _quotient_oracle(s, blocks.blocks)
        assert list(quotient_char_poly(s, blocks).coeffs) == char_poly_by_interpolation(q)
        assert quotient_spectrum_subset(s, blocks)


def _orbit_partitions():
    """Partitions known to be equitable by symmetry: the parts of Turán and
    complete bipartite hypergraphs, and their refinements into singletons."""
    cases = []
    for n, k, r in [(6, 3, 2), (7, 3, 3), (8, 4, 2), (9, 3, 3)]:
        h, parts = gen_turan(n, k, r)
        cases.append((h, VertexPartition(parts)))
    for k, m, n in [(3, 2, 4), (4, 3, 3), (3, 4, 4)]:
        h, labels = gen_complete_bipartite(k, m, n)
        cases.append((h, VertexPartition([labels.side_a, labels.side_b])))
        cases.append((h, VertexPartition([[0], labels.side_a[1:], labels.side_b])))
    return cases


@pytest.mark.parametrize("h, p", _orbit_partitions())
def test_quotient_spectrum_containment(h, p):
    s = seidel_matrix(h)
    assert check_equitable(s, p)
    assert quotient_spectrum_subset(s, p)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.sets(st.integers(0, n - 1), min_size=2, max_size=3), max_size=8),
    st.lists(st.integers(0, 2), min_size=n, max_size=n))))
def test_containment_whenever_equitable(data):
    n, edge_sets, labels = data
    h = Hypergraph.from_edges(n, {tuple(sorted(e)) for e in edge_sets})
    p = partition_from_sequence(labels)
    s = seidel_matrix(h)
    if check_equitable(s, p):
        assert quotient_spectrum_subset(s, p)
    else:
        with pytest.raises(NotEquitable):
            quotient_matrix(s, p)


def test_partition_from_sequence_order():
    assert partition_from_sequence([2, 0, 2, 1]).blocks == ((0, 2), (1,), (3,))
