"""Closed-form spectra and conditional entropies of the mixing family."""

import math

import numpy as np
import numpy.testing as npt
import pytest

from qtsallis import (CapacityError, ValidationError, WernerParams,
                      conditional_entropy_block, conditional_entropy_closed,
                      ghz_vector, joint_spectrum, marginal_spectrum,
                      quantum_conditional, spectrum_of, tsallis_entropy,
                      werner_density)

X_GRID = tuple(t / 10 for t in range(11))
Q_GRID = (0.5, 1.0, 2.0, 5.0, 20.0)


def tripartite_qubit_conditional(x, q, conditioned):
    """Literal two-level three-party closed form, for cross-checking."""
    num = 7 * ((1 - x) / 8) ** q + ((1 + 7 * x) / 8) ** q
    if conditioned == 1:
        den = 2 * 0.5 ** q
    else:
        den = 2 * ((1 - x) / 4) ** q + 2 * ((1 + x) / 4) ** q
    return (num / den - 1.0) / (1.0 - q)


def general_conditional(levels, parties, x, q):
    """Plain-power evaluation of the conditional entropy (q moderate)."""
    dim = levels ** parties
    reduced = levels ** (parties - 1)
    num = (dim - 1) * ((1 - x) / dim) ** q + ((1 + (dim - 1) * x) / dim) ** q
    den = (reduced - levels) * ((1 - x) / reduced) ** q \
        + levels * ((1 + (levels ** (parties - 2) - 1) * x) / reduced) ** q
    return (num / den - 1.0) / (1.0 - q)


# -- params --------------------------------------------------------------

@pytest.mark.parametrize("levels,parties,mixing", [
    (1, 2, 0.5), (2, 1, 0.5), (2, 2, -0.1), (2, 2, 1.1),
])
def test_params_validation(levels, parties, mixing):
    with pytest.raises(ValidationError):
        WernerParams(levels, parties, mixing)


def test_params_multiplicity_cap():
    with pytest.raises(CapacityError):
        WernerParams(2, 64, 0.5)


# -- ghz_vector ----------------------------------------------------------

def test_ghz_two_level_three_party():
    vec = ghz_vector(2, 3)
    expected = np.zeros(8)
    expected[[0, 7]] = 1 / math.sqrt(2)
    npt.assert_allclose(vec, expected, atol=1e-15)


def test_ghz_three_level_two_party():
    vec = ghz_vector(3, 2)
    expected = np.zeros(9)
    expected[[0, 4, 8]] = 1 / math.sqrt(3)
    npt.assert_allclose(vec, expected, atol=1e-15)


def test_ghz_single_party_uniform():
    vec = ghz_vector(5, 1)
    npt.assert_allclose(vec, np.full(5, 1 / math.sqrt(5)), atol=1e-15)
    assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-15)


def test_ghz_capacity():
    with pytest.raises(CapacityError):
        ghz_vector(2, 13)


# -- werner_density ------------------------------------------------------

def test_density_maximally_mixed_at_zero():
    rho = werner_density(WernerParams(2, 3, 0.0))
    npt.assert_allclose(rho.entries, np.eye(8) / 8, atol=1e-15)


def test_density_projector_at_one():
    rho = werner_density(WernerParams(2, 3, 1.0))
    psi = ghz_vector(2, 3)
    npt.assert_allclose(rho.entries, np.outer(psi, psi), atol=1e-15)


def test_density_spectrum_paper_point():
    spec = spectrum_of(werner_density(WernerParams(2, 3, 0.4)))
    assert spec.levels[0] == (pytest.approx(0.475, abs=1e-12), 1)
    assert spec.levels[1] == (pytest.approx(0.075, abs=1e-12), 7)


# -- joint_spectrum ------------------------------------------------------

def test_joint_spectrum_tripartite_qubits():
    for x in X_GRID[1:]:
        spec = joint_spectrum(WernerParams(2, 3, x))
        assert spec.levels == (
            (pytest.approx((1 + 7 * x) / 8, abs=1e-15), 1),
            (pytest.approx((1 - x) / 8, abs=1e-15), 7))


def test_joint_spectrum_merges_at_zero():
    for levels, parties in ((2, 3), (3, 2), (5, 4)):
        spec = joint_spectrum(WernerParams(levels, parties, 0.0))
        dim = levels ** parties
        assert spec.levels == ((pytest.approx(1 / dim), dim),)


def test_joint_spectrum_keeps_zero_level_at_one():
    spec = joint_spectrum(WernerParams(3, 2, 1.0))
    assert spec.levels == ((1.0, 1), (0.0, 8))


def test_joint_spectrum_matches_oracle():
    params = WernerParams(3, 2, 0.5)
    closed = joint_spectrum(params)
    oracle = spectrum_of(werner_density(params))
    assert closed.levels[0][0] == pytest.approx(5 / 9, abs=1e-12)
    assert closed.levels[1][0] == pytest.approx(0.5 / 9, abs=1e-12)
    for (cv, cm), (ov, om) in zip(closed.levels, oracle.levels):
        assert cm == om
        assert cv == pytest.approx(ov, abs=1e-10)


def test_joint_spectrum_normalized_beyond_dense_scale():
    spec = joint_spectrum(WernerParams(2, 40, 0.3))  # dim ~ 1e12
    weight = sum(v * m for v, m in spec.levels)
    assert weight == pytest.approx(1.0, abs=1e-12)


# -- marginal_spectrum ---------------------------------------------------

def test_marginal_pair_of_qubits():
    for x in X_GRID[1:]:
        spec = marginal_spectrum(WernerParams(2, 3, x), 2)
        assert spec.levels == (
            (pytest.approx((1 + x) / 4, abs=1e-15), 2),
            (pytest.approx((1 - x) / 4, abs=1e-15), 2))


def test_marginal_single_party_maximally_mixed():
    for x in X_GRID:
        spec = marginal_spectrum(WernerParams(2, 3, x), 1)
        assert spec.levels == ((0.5, 2),)


def test_marginal_against_dense_oracle():
    from qtsallis import oracle_marginal
    params = WernerParams(3, 3, 0.3)
    closed = marginal_spectrum(params, 2)
    assert closed.levels == (
        (pytest.approx(1.6 / 9, abs=1e-15), 3),
        (pytest.approx(0.7 / 9, abs=1e-15), 6))
    oracle = spectrum_of(oracle_marginal(params, 2))
    for (cv, cm), (ov, om) in zip(closed.levels, oracle.levels):
        assert cm == om
        assert cv == pytest.approx(ov, abs=1e-10)


def test_marginal_range_validation():
    params = WernerParams(2, 3, 0.5)
    for bad in (0, 3, -1):
        with pytest.raises(ValidationError):
            marginal_spectrum(params, bad)


def test_marginal_is_not_a_smaller_family_member():
    # at x = 0 the marginal is the smaller maximally mixed family member,
    # but at x = 1 it is not a family state of fewer parties
    assert marginal_spectrum(WernerParams(2, 3, 0.0), 2).levels \
        == joint_spectrum(WernerParams(2, 2, 0.0)).levels
    assert marginal_spectrum(WernerParams(2, 3, 1.0), 2).levels \
        != joint_spectrum(WernerParams(2, 2, 1.0)).levels


def test_spectra_normalization_grid():
    for levels in (2, 3):
        for parties in (2, 3, 4):
            for x in X_GRID:
                params = WernerParams(levels, parties, x)
                for spec in [joint_spectrum(params)] + [
                        marginal_spectrum(params, m) for m in range(1, parties)]:
                    weight = sum(v * m for v, m in spec.levels)
                    assert weight == pytest.approx(1.0, abs=1e-12)


# -- conditional entropies -----------------------------------------------

def test_conditional_maximally_mixed_slice():
    for levels, parties in ((2, 3), (3, 2), (4, 3)):
        for q in Q_GRID:
            value = conditional_entropy_closed(WernerParams(levels, parties, 0.0), q)
            if q == 1.0:
                expected = math.log(levels)
            else:
                expected = (levels ** (1 - q) - 1) / (1 - q)
            assert value == pytest.approx(expected, abs=1e-12)


def test_conditional_matches_literal_tripartite_form():
    for x in X_GRID:
        for q in (0.5, 2.0, 5.0, 20.0):
            params = WernerParams(2, 3, x)
            assert conditional_entropy_closed(params, q) == pytest.approx(
                tripartite_qubit_conditional(x, q, conditioned=2), rel=1e-11, abs=1e-11)
            assert conditional_entropy_block(params, 1, q) == pytest.approx(
                tripartite_qubit_conditional(x, q, conditioned=1), rel=1e-11, abs=1e-11)


def test_conditional_matches_general_literal_form():
    for levels, parties in ((2, 2), (3, 2), (2, 4), (3, 3)):
        for x in (0.1, 0.5, 0.9):
            for q in (0.5, 2.0, 5.0):
                params = WernerParams(levels, parties, x)
                assert conditional_entropy_closed(params, q) == pytest.approx(
                    general_conditional(levels, parties, x, q), rel=1e-11, abs=1e-11)


def test_conditional_block_equals_closed_at_full_conditioning():
    params = WernerParams(2, 3, 0.7)
    for q in Q_GRID:
        assert conditional_entropy_block(params, 2, q) \
            == conditional_entropy_closed(params, q)


def test_conditional_block_against_dense_oracle():
    from qtsallis import oracle_marginal
    params = WernerParams(2, 3, 0.3)
    dense_joint = spectrum_of(werner_density(params))
    dense_marginal = spectrum_of(oracle_marginal(params, 1))
    value = conditional_entropy_block(params, 1, 2.0)
    assert value == pytest.approx(
        quantum_conditional(dense_joint, dense_marginal, 2.0), abs=1e-10)


def test_conditional_block_range_validation():
    params = WernerParams(2, 3, 0.5)
    with pytest.raises(ValidationError):
        conditional_entropy_block(params, 0, 2.0)
    with pytest.raises(ValidationError):
        conditional_entropy_block(params, 3, 2.0)


def test_conditional_near_zero_at_asymptotic_boundary():
    # at the large-q boundary point the log trace ratio nearly vanishes
    value = conditional_entropy_closed(WernerParams(2, 2, 1 / 3), 1e4)
    assert abs(value) < 1e-3


def test_conditional_continuous_through_limit_point():
    for x in (0.0, 0.3, 0.8, 1.0):
        params = WernerParams(3, 3, x)
        at_one = conditional_entropy_closed(params, 1.0)
        nearby = 0.5 * (conditional_entropy_closed(params, 1 - 1e-6)
                        + conditional_entropy_closed(params, 1 + 1e-6))
        assert at_one == pytest.approx(nearby, abs=1e-5)


def test_x_zero_slice_equals_uniform_entropy():
    for q in Q_GRID:
        for levels, parties in ((2, 3), (3, 2)):
            assert conditional_entropy_closed(WernerParams(levels, parties, 0.0), q) \
                == pytest.approx(tsallis_entropy([1 / levels] * levels, q), abs=1e-12)
