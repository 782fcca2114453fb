"""Dense-matrix brute-force verification.

Builds the mixing-family states and their marginals explicitly, computes
spectra and entropies numerically, and certifies every closed form at
small scale.  Verification results are data, not exceptions: each
comparison becomes a row in a report that serializes to JSON.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .quantum import (DensityMatrix, SeparableDecomposition, Spectrum,
                      partial_trace, quantum_conditional,
                      separable_conditional_direct, separable_state,
                      spectrum_of)
from .werner import (WernerParams, conditional_entropy_block,
                     conditional_entropy_closed, joint_spectrum,
                     marginal_spectrum, werner_density)

#: Per-level eigenvalue and per-entropy agreement bound for closed forms.
AGREEMENT_TOL = 1e-10
#: Identity bound for the structural check of the explicit marginal form.
STRUCTURE_TOL = 1e-12
#: Witness values below this count as a nonnegativity violation.
NONNEG_FLOOR = -1e-12

#: Entropy orders exercised by the random separable witness.
WITNESS_ORDERS = (0.5, 2.0, 10.0, 100.0)


def _deviation(a: float, b: float) -> float:
    """Disagreement scaled to value magnitude.

    Equals the absolute deviation whenever both values have magnitude at
    most 1 (all eigenvalues, most entropies); beyond that it is relative,
    since double precision cannot hold an absolute 1e-10 on quantities of
    magnitude 1e5 whose own spacing is coarser than that.
    """
    return abs(a - b) / max(1.0, abs(a), abs(b))


@dataclass(frozen=True)
class Comparison:
    """One closed-form-versus-oracle comparison.

    ``abs_dev`` holds the magnitude-scaled deviation of :func:`_deviation`.
    """

    case: str
    quantity: str
    closed_form: float
    oracle: float
    abs_dev: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "quantity": self.quantity,
            "closed_form": self.closed_form,
            "oracle": self.oracle,
            "abs_dev": self.abs_dev,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Sorted collection of comparisons; failing rows make it failing."""

    comparisons: tuple[Comparison, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.comparisons, key=lambda c: (c.case, c.quantity)))
        object.__setattr__(self, "comparisons", ordered)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.comparisons)

    @property
    def max_abs_dev(self) -> float:
        return max((c.abs_dev for c in self.comparisons), default=0.0)

    def to_json_obj(self) -> list[dict]:
        return [c.to_dict() for c in self.comparisons]


def _ghz_projector_sum(levels: int, parties: int) -> np.ndarray:
    """sum_k |k...k><k...k| on ``parties`` subsystems, as a dense matrix."""
    dim = levels ** parties
    step = (dim - 1) // (levels - 1)
    out = np.zeros((dim, dim), dtype=complex)
    for k in range(levels):
        out[k * step, k * step] = 1.0
    return out


def _marginal_of(dense: DensityMatrix, params: WernerParams, kept: int) -> DensityMatrix:
    """Partial trace over the leading parties, cross-checked against the
    explicit decohered form of the marginal."""
    n = params.parties
    marginal = partial_trace(dense, range(n - kept, n))
    reduced_dim = params.levels ** kept
    direct = ((1.0 - params.mixing) / reduced_dim) * np.eye(reduced_dim, dtype=complex)
    direct += (params.mixing / params.levels) * _ghz_projector_sum(params.levels, kept)
    drift = float(np.max(np.abs(marginal.entries - direct)))
    if drift > STRUCTURE_TOL:
        raise ValidationError(
            f"partial trace deviates from the explicit marginal form by {drift}")
    return marginal


def oracle_marginal(params: WernerParams, kept_parties: int) -> DensityMatrix:
    """Dense marginal over the last ``kept_parties`` parties.

    Computed by partial trace of the dense state and checked entrywise
    against the explicit form (uniform background plus N diagonal spikes
    of weight x/N); a mismatch beyond ``STRUCTURE_TOL`` raises.
    """
    m = int(kept_parties)
    if not 1 <= m <= params.parties - 1:
        raise ValidationError(
            f"kept party count must lie in [1, {params.parties - 1}], got {m}")
    return _marginal_of(werner_density(params), params, m)


def _spectrum_rows(case: str, label: str, closed: Spectrum, oracle: Spectrum,
                   tol: float = AGREEMENT_TOL) -> list[Comparison]:
    rows = []
    if len(closed.levels) != len(oracle.levels):
        rows.append(Comparison(
            case, f"{label}.level_count",
            float(len(closed.levels)), float(len(oracle.levels)),
            float(abs(len(closed.levels) - len(oracle.levels))), False))
        return rows
    for idx, ((cv, cm), (ov, om)) in enumerate(zip(closed.levels, oracle.levels)):
        dev = _deviation(cv, ov)
        rows.append(Comparison(
            case, f"{label}[level={idx}].eigenvalue", cv, ov, dev, dev <= tol))
        rows.append(Comparison(
            case, f"{label}[level={idx}].multiplicity",
            float(cm), float(om), float(abs(cm - om)), cm == om))
    return rows


def verify_family(params_grid, q_grid) -> VerificationReport:
    """Certify the closed-form spectra and conditional entropies against
    dense eigendecompositions over a grid of family members and orders.

    For every family member: the joint spectrum and each marginal spectrum
    (all block sizes) are compared level by level; for every order q, each
    block conditional entropy is compared against the ratio form evaluated
    on the oracle spectra.  All comparisons use ``AGREEMENT_TOL`` on the
    magnitude-scaled deviation of :func:`_deviation`.
    """
    rows: list[Comparison] = []
    for params in params_grid:
        case = f"N={params.levels},n={params.parties},x={params.mixing:g}"
        dense = werner_density(params)
        oracle_joint = spectrum_of(dense)
        rows.extend(_spectrum_rows(case, "joint_spectrum",
                                   joint_spectrum(params), oracle_joint))
        oracle_marginals = {}
        for m in range(1, params.parties):
            oracle_marginals[m] = spectrum_of(_marginal_of(dense, params, m))
            rows.extend(_spectrum_rows(case, f"marginal_spectrum[m={m}]",
                                       marginal_spectrum(params, m),
                                       oracle_marginals[m]))
        for q in q_grid:
            for k in range(1, params.parties):
                closed = conditional_entropy_block(params, k, q)
                oracle_value = quantum_conditional(oracle_joint, oracle_marginals[k], q)
                dev = _deviation(closed, oracle_value)
                rows.append(Comparison(
                    case, f"conditional_entropy_block[k={k},q={q:g}]",
                    closed, oracle_value, dev, dev <= AGREEMENT_TOL))
            closed = conditional_entropy_closed(params, q)
            oracle_value = quantum_conditional(
                oracle_joint, oracle_marginals[params.parties - 1], q)
            dev = _deviation(closed, oracle_value)
            rows.append(Comparison(
                case, f"conditional_entropy_closed[q={q:g}]",
                closed, oracle_value, dev, dev <= AGREEMENT_TOL))
    return VerificationReport(tuple(rows))


def verify_separable_witness(trials: int, seed: int) -> VerificationReport:
    """Random-mixture witness suite, deterministic for a given seed.

    Draws ``trials`` pseudo-random separable decompositions (local
    dimensions up to 4, up to 6 mixture terms; probability vectors are
    independent uniform variates normalized to sum 1) and, for each order
    in ``WITNESS_ORDERS``, checks that the directly evaluated conditional
    entropy is nonnegative (floor ``NONNEG_FLOOR``) and agrees with the
    ratio form on the constructed state's spectra within ``AGREEMENT_TOL``.
    """
    trials = int(trials)
    if trials < 1:
        raise ValidationError("need at least one trial")
    rng = np.random.default_rng(int(seed))
    rows: list[Comparison] = []
    for trial in range(trials):
        dim_a = int(rng.integers(2, 5))
        dim_b = int(rng.integers(2, 5))
        terms = int(rng.integers(1, 7))
        weights = rng.uniform(size=terms)
        weights /= weights.sum()
        local_a = []
        local_b = []
        for _ in range(terms):
            r = rng.uniform(size=dim_a)
            local_a.append(r / r.sum())
            s = rng.uniform(size=dim_b)
            local_b.append(s / s.sum())
        decomposition = SeparableDecomposition(weights, tuple(local_a), tuple(local_b))
        state = separable_state(decomposition)
        joint_spec = spectrum_of(state)
        marginal_spec = spectrum_of(partial_trace(state, {0}))
        case = f"trial={trial},dims={dim_a}x{dim_b},terms={terms}"
        for q in WITNESS_ORDERS:
            direct = separable_conditional_direct(decomposition, q)
            ratio = quantum_conditional(joint_spec, marginal_spec, q)
            dev = _deviation(direct, ratio)
            rows.append(Comparison(
                case, f"separable_conditional[q={q:g}]",
                direct, ratio, dev, dev <= AGREEMENT_TOL))
            rows.append(Comparison(
                case, f"nonnegative[q={q:g}]",
                direct, 0.0, max(0.0, -direct), direct >= NONNEG_FLOOR))
    return VerificationReport(tuple(rows))


def default_family_grid(max_dim: int = 4096) -> list[WernerParams]:
    """Standard verification grid: N in {2, 3}, n in {2, 3, 4}, x from 0 to
    1 in steps of 0.1, filtered to total dimension at most ``max_dim``."""
    grid = []
    for levels in (2, 3):
        for parties in (2, 3, 4):
            if levels ** parties > max_dim:
                continue
            for tenths in range(11):
                grid.append(WernerParams(levels, parties, tenths / 10.0))
    return grid


def default_order_grid() -> tuple[float, ...]:
    """Standard verification orders, straddling the q = 1 limit point."""
    return (0.5, 1.0, 2.0, 5.0, 20.0)
