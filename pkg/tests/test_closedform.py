from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import char_poly_by_interpolation
from hyperseidel import closedform as cf
from hyperseidel.equitable import bipartition_blocks, quotient_matrix, type1_blocks, type2_blocks
from hyperseidel.errors import InvalidParams
from hyperseidel.hypergraph import EdgeType
from hyperseidel.linalg import inertia_of
from hyperseidel.poly import IntPolynomial, negate_variable, sign_variations
from hyperseidel.seidel import seidel_energy, seidel_matrix, seidel_spectrum

small = st.tuples(st.integers(2, 7), st.integers(2, 7))
small3 = st.tuples(st.integers(3, 7), st.integers(3, 7))


def _printed_u(m: int, n: int) -> int:
    """The discriminant written out as a polynomial in m and n."""
    return 16 * m**3 * n + n**2 + 2 * m * n * (8 * n**2 - 40 * n + 49) + m**2 * (32 * n**2 - 80 * n + 1)


def test_params_validation():
    with pytest.raises(InvalidParams):
        cf.C3Params(1, 4)
    with pytest.raises(InvalidParams):
        cf.quotient_type1((3, 2))
    with pytest.raises(InvalidParams):
        cf.quotient_type2((2, 3))


def test_frozen_small_values():
    # derived by hand from the 2x2 quotient and cross-checked by eigensolve
    assert cf.quotient_c3((3, 3)) == [[-10, -21], [-21, -10]]
    assert cf.u_of((2, 2)) == 144
    assert cf.trace_c3((2, 2)) == -6 and cf.det_c3((2, 2)) == -27
    assert cf.u_of((3, 3)) == 1764
    assert cf.delta_u((2, 2)) == 457
    assert cf.energy_formula_c3((2, 2)) == pytest.approx(18.0, abs=1e-12)
    assert cf.energy_formula_c3((3, 3)) == pytest.approx(62.0, abs=1e-12)


def test_frozen_xi_values():
    assert cf.xi1((3, 6)).descending() == [-1, -26, 3232, -54230, 293585, -477600]
    assert cf.xi1((3, 3)).descending() == [-1, -5, 502, -5138, 18923, -23433]
    assert cf.xi2((6, 3)) == cf.xi1((3, 6))


@settings(max_examples=40, deadline=None)
@given(small)
def test_u_matches_printed_discriminant(mn):
    m, n = mn
    assert cf.u_of(mn) == _printed_u(m, n)
    assert cf.trace_c3(mn) ** 2 - 4 * cf.det_c3(mn) == cf.u_of(mn)
    assert cf.trace_c3(mn) == 3 * m + 3 * n - 4 * m * n - 2


@settings(max_examples=40, deadline=None)
@given(small)
def test_quotient_matches_built_matrix(mn):
    m, n = mn
    assert cf.quotient_c3(mn) == quotient_matrix(seidel_matrix(cf.c3(mn)), bipartition_blocks(m, n))


@settings(max_examples=30, deadline=None)
@given(small)
def test_intact_spectrum(mn):
    closed = cf.spectrum_c3(mn).values()
    brute = seidel_spectrum(cf.c3(mn)).values
    assert np.allclose(closed, brute, atol=1e-7)
    assert cf.energy_formula_c3(mn) == pytest.approx(seidel_energy(cf.c3(mn)), abs=1e-7)


@settings(max_examples=30, deadline=None)
@given(small3, st.sampled_from(list(EdgeType)))
def test_deleted_spectrum_and_xi(mn, kind):
    m, n = mn
    h = cf.c3_minus_edge(mn, kind)
    blocks = type1_blocks(m, n) if kind is EdgeType.TYPE_I else type2_blocks(m, n)
    q = quotient_matrix(seidel_matrix(h), blocks)
    assert q == cf.quotient_for(mn, kind)
    assert [-c for c in char_poly_by_interpolation(q)] == list(cf.xi_for(mn, kind).coeffs)
    closed = cf.spectrum_c3_minus_edge(mn, kind)
    assert closed.total_multiplicity == m + n
    assert np.allclose(closed.values(), seidel_spectrum(h).values, atol=1e-7)


def test_type1_needs_only_m_at_least_2():
    closed = cf.spectrum_c3_minus_edge((2, 4), EdgeType.TYPE_I)
    brute = seidel_spectrum(cf.c3_minus_edge((2, 4), EdgeType.TYPE_I)).values
    assert np.allclose(closed.values(), brute, atol=1e-7)


@settings(max_examples=30, deadline=None)
@given(small3, st.sampled_from(list(EdgeType)))
def test_one_negative_eigenvalue(mn, kind):
    m, n = mn
    spec = seidel_spectrum(cf.c3_minus_edge(mn, kind))
    assert tuple(inertia_of(spec)) == (m + n - 1, 0, 1)
    assert sign_variations(negate_variable(cf.xi_for(mn, kind))) == 1


@settings(max_examples=30, deadline=None)
@given(small3)
def test_symmetry_between_types(mn):
    m, n = mn
    assert cf.xi2((n, m)) == cf.xi1((m, n))


@pytest.mark.parametrize("which", ["intact", "type1", "type2"])
@pytest.mark.parametrize("mn", [(3, 3), (3, 5), (5, 3), (4, 4), (2, 6)])
def test_eigenvector_families(which, mn):
    if which == "type2" and mn[0] < 3:
        with pytest.raises(InvalidParams):
            cf.verify_trivial_eigenvectors(mn, which)
        return
    res = cf.verify_trivial_eigenvectors(mn, which)
    assert res.ok, res.failures


def test_eigenvector_expected_counts_merge_when_square():
    res = cf.verify_trivial_eigenvectors((4, 4), "intact")
    assert res.expected == {7: 6}


@settings(max_examples=30, deadline=None)
@given(small3)
def test_factorization(mn):
    m, _ = mn
    rep = cf.check_factorization_claim(mn)
    assert rep.holds and rep.point == 2 * m - 3
    quartic = cf.cofactor_after_factor(mn)
    assert quartic * IntPolynomial([-(2 * m - 3), 1]) == cf.xi1(mn)


def test_root_sum_is_trace():
    q = cf.quotient_type1((3, 6))
    assert cf.root_sum(cf.xi1((3, 6))) == sum(q[i][i] for i in range(5))


@settings(max_examples=40, deadline=None)
@given(st.tuples(st.integers(2, 12), st.integers(2, 12)))
def test_monotone_and_delta_u(mn):
    m, n = mn
    assert cf.delta_u(mn) == cf.u_of((m, n + 1)) - cf.u_of(mn) > 0
    assert cf.energy_formula_c3((m, n + 1)) > cf.energy_formula_c3(mn)
    assert cf.energy_formula_c3((m + 1, n)) > cf.energy_formula_c3(mn)
    assert cf.l_of(mn) == (m - 1) * (2 * n - 1) + (n - 1) * (2 * m - 1)


def test_vertex_deletion_lowers_energy():
    for m in range(3, 7):
        for n in range(3, 7):
            assert cf.energy_formula_c3((m, n - 1)) < cf.energy_formula_c3((m, n))
