"""Density-matrix algebra and quantum nonadditive entropies.

Dense matrices are the small-scale, brute-force representation used for
cross-checking.  Production entropy queries go through degeneracy-aware
spectra whose q-traces are evaluated in the log domain, so extreme orders
(q up to about 1e6) neither underflow nor overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classical import ProbDist, _as_index, _as_prob, tsallis_entropy
from .errors import (CapacityError, NumericalError, SingularityError,
                     ValidationError)

#: Dense objects larger than this total dimension are refused.
DENSE_DIM_CAP = 4096
#: Eigenvalues closer than this are folded into one degenerate level.
SPECTRUM_MERGE_TOL = 1e-9
#: Most negative eigenvalue tolerated before positivity is rejected.
PSD_FLOOR = -1e-10
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12


def _eigenvalues(matrix: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.eigvalsh(matrix)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Dense Hermitian, unit-trace, positive-semidefinite matrix carrying a
    subsystem-dimension signature.

    Entries are stored complex even when real, so arbitrary test states
    are representable.  Construction validates every invariant, including
    positivity via a full eigendecomposition; this type is meant for
    cross-check scale (side up to ``DENSE_DIM_CAP``), not production
    entropy queries.
    """

    dims: tuple[int, ...]
    entries: np.ndarray

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 1 for d in dims):
            raise ValidationError("subsystem dimensions must be positive integers")
        side = math.prod(dims)
        if side > DENSE_DIM_CAP:
            raise CapacityError(
                f"dense dimension {side} exceeds the cap of {DENSE_DIM_CAP}")
        entries = np.array(self.entries, dtype=complex)
        if entries.shape != (side, side):
            raise ValidationError(
                f"expected a {side}x{side} matrix, got shape {entries.shape}")
        if np.max(np.abs(entries - entries.conj().T)) > HERMITIAN_TOL:
            raise ValidationError("matrix is not Hermitian within tolerance")
        trace = complex(np.trace(entries))
        if abs(trace - 1.0) > TRACE_TOL:
            raise ValidationError(f"trace is {trace!r}, expected 1")
        smallest = float(_eigenvalues(entries)[0])
        if smallest < PSD_FLOOR:
            raise ValidationError(
                f"smallest eigenvalue {smallest} violates positive semidefiniteness")
        entries.flags.writeable = False
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "entries", entries)

    @property
    def side(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class Spectrum:
    """Multiset of (eigenvalue, multiplicity) levels, eigenvalues descending.

    Tiny negative eigenvalues (down to ``PSD_FLOOR``) are clamped to zero.
    Zero levels are kept so multiplicity bookkeeping stays exact.
    """

    levels: tuple[tuple[float, int], ...]

    def __post_init__(self) -> None:
        cleaned = []
        for eigenvalue, multiplicity in self.levels:
            mult = int(multiplicity)
            value = float(eigenvalue)
            if mult < 1:
                raise ValidationError("multiplicities must be positive integers")
            if value < PSD_FLOOR:
                raise ValidationError(f"eigenvalue {value} is negative beyond tolerance")
            if value > 1.0 + 1e-10:
                raise ValidationError(f"eigenvalue {value} exceeds 1")
            cleaned.append((min(max(value, 0.0), 1.0), mult))
        if not cleaned:
            raise ValidationError("spectrum must carry at least one level")
        cleaned.sort(key=lambda level: -level[0])
        weight = math.fsum(value * mult for value, mult in cleaned)
        if abs(weight - 1.0) > TRACE_TOL:
            raise ValidationError(
                f"eigenvalues weighted by multiplicity sum to {weight!r}, expected 1")
        object.__setattr__(self, "levels", tuple(cleaned))

    @property
    def total_multiplicity(self) -> int:
        return sum(mult for _, mult in self.levels)


def merge_levels(pairs, tol: float = SPECTRUM_MERGE_TOL) -> list[tuple[float, int]]:
    """Fold levels whose eigenvalues lie within ``tol`` of each other into a
    single level at their multiplicity-weighted mean.

    Zero-multiplicity entries are dropped.  The weighted mean keeps the
    trace exact and the folding error second order, so q-traces built from
    merged levels stay accurate even at large q.
    """
    live = sorted(((float(v), int(m)) for v, m in pairs if int(m) > 0),
                  key=lambda vm: -vm[0])
    merged: list[tuple[float, int]] = []
    for value, mult in live:
        if merged and merged[-1][0] - value <= tol:
            prev_value, prev_mult = merged[-1]
            total = prev_mult + mult
            merged[-1] = ((prev_value * prev_mult + value * mult) / total, total)
        else:
            merged.append((value, mult))
    return merged


def spectrum_of(rho: DensityMatrix) -> Spectrum:
    """Degeneracy-aware spectrum via self-adjoint eigendecomposition.

    Eigenvalues within ``SPECTRUM_MERGE_TOL`` of each other are merged into
    one level with summed multiplicity, so numerically split degeneracies
    match analytic multiplicities.
    """
    values = _eigenvalues(rho.entries)
    return Spectrum(tuple(merge_levels((float(v), 1) for v in values)))


def q_trace(spectrum: Spectrum, q) -> float:
    """ln of the q-trace: the log of sum(mult * eigenvalue**q).

    Computed as a max-shifted exponential sum over ln(mult) + q ln(value),
    skipping zero eigenvalues, so it is exact to double precision for q up
    to at least 1e6 without underflow.
    """
    qi = _as_index(q)
    terms = [math.log(mult) + qi.q * math.log(value)
             for value, mult in spectrum.levels if value > 0.0]
    if not terms:
        raise ValidationError("spectrum carries no positive eigenvalue")
    peak = max(terms)
    return peak + math.log(math.fsum(math.exp(t - peak) for t in terms))


def von_neumann(spectrum: Spectrum) -> float:
    """Entropy -sum(mult * v ln v) over positive levels (natural log)."""
    return -math.fsum(mult * value * math.log(value)
                      for value, mult in spectrum.levels if value > 0.0)


def quantum_tsallis(spectrum: Spectrum, q) -> float:
    """Order-q entropy of a state given by its spectrum.

    (exp(ln q-trace) - 1) / (1 - q); the q -> 1 limit point routes to the
    von Neumann entropy.
    """
    qi = _as_index(q)
    if qi.is_limit_point:
        return von_neumann(spectrum)
    return math.expm1(q_trace(spectrum, qi)) / (1.0 - qi.q)


def quantum_conditional(joint: Spectrum, marginal: Spectrum, q) -> float:
    """Conditional entropy from joint and marginal spectra, in ratio form:

        (1 / (1 - q)) * [q-trace(joint) / q-trace(marginal) - 1]

    evaluated through log q-traces.  Negative values signal nonclassical
    correlation.  At the q -> 1 limit point this is the von Neumann
    difference.  May return +/-inf if the trace ratio overflows the
    exponential range (extreme q far from the entropy zero); sign queries
    should compare log q-traces directly instead.
    """
    qi = _as_index(q)
    if qi.is_limit_point:
        return von_neumann(joint) - von_neumann(marginal)
    delta = q_trace(joint, qi) - q_trace(marginal, qi)
    try:
        grown = math.expm1(delta)
    except OverflowError:
        grown = math.inf
    return grown / (1.0 - qi.q)


def tensor_product(a: DensityMatrix, b: DensityMatrix) -> DensityMatrix:
    """Kronecker product state with concatenated subsystem signature."""
    side = a.side * b.side
    if side > DENSE_DIM_CAP:
        raise CapacityError(
            f"dense dimension {side} exceeds the cap of {DENSE_DIM_CAP}")
    return DensityMatrix(a.dims + b.dims, np.kron(a.entries, b.entries))


def partial_trace(rho: DensityMatrix, keep) -> DensityMatrix:
    """Marginal density matrix over the subsystems listed in ``keep``.

    Kept subsystems appear in their original order regardless of the order
    given in ``keep``.
    """
    kept = sorted({int(i) for i in keep})
    n = len(rho.dims)
    if not kept:
        raise ValidationError("must keep at least one subsystem")
    if kept[0] < 0 or kept[-1] >= n:
        raise ValidationError(f"subsystem indices must lie in [0, {n - 1}]")
    traced = [i for i in range(n) if i not in kept]
    arr = rho.entries.reshape(*rho.dims, *rho.dims)
    removed = 0
    for axis in traced:
        a = axis - removed
        arr = np.trace(arr, axis1=a, axis2=a + n - removed)
        removed += 1
    dims = tuple(rho.dims[i] for i in kept)
    side = math.prod(dims)
    return DensityMatrix(dims, arr.reshape(side, side))


@dataclass(frozen=True, eq=False)
class SeparableDecomposition:
    """Mixture of product states whose local factors are diagonal in the
    computational basis.

    One local distribution pair (first subsystem, second subsystem) per
    mixture term, weighted by a probability vector over terms.
    """

    weights: ProbDist
    local_a: tuple[ProbDist, ...]
    local_b: tuple[ProbDist, ...]

    def __post_init__(self) -> None:
        weights = _as_prob(self.weights)
        local_a = tuple(_as_prob(r) for r in self.local_a)
        local_b = tuple(_as_prob(s) for s in self.local_b)
        if len(local_a) != len(weights) or len(local_b) != len(weights):
            raise ValidationError("need one local distribution pair per mixture term")
        if len({len(r) for r in local_a}) != 1 or len({len(s) for s in local_b}) != 1:
            raise ValidationError("local distributions must share a common length per side")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "local_a", local_a)
        object.__setattr__(self, "local_b", local_b)

    @property
    def dim_a(self) -> int:
        return len(self.local_a[0])

    @property
    def dim_b(self) -> int:
        return len(self.local_b[0])


def separable_state(decomposition: SeparableDecomposition) -> DensityMatrix:
    """Dense density matrix of the mixture (diagonal by construction)."""
    w = decomposition.weights.p
    first = np.array([r.p for r in decomposition.local_a])
    second = np.array([s.p for s in decomposition.local_b])
    joint = np.einsum("l,la,lb->ab", w, first, second)
    dims = (decomposition.dim_a, decomposition.dim_b)
    return DensityMatrix(dims, np.diag(joint.reshape(-1)).astype(complex))


def separable_conditional_direct(decomposition: SeparableDecomposition, q) -> float:
    """Conditional entropy of the second subsystem given the first,
    evaluated directly on the mixture weights.

    The first-subsystem mass m(a) = sum_l w_l r_l(a) builds the escort
    weights; each slice pi(b|a) = sum_l w_l r_l(a) s_l(b) / m(a)
    contributes its order-q entropy.  Rows with zero mass are skipped.
    Nonnegative for every valid decomposition, matching the classical
    conditional entropy's behavior.
    """
    qi = _as_index(q)
    w = decomposition.weights.p
    first = np.array([r.p for r in decomposition.local_a])
    second = np.array([s.p for s in decomposition.local_b])
    mass = w @ first
    support = np.nonzero(mass > 0.0)[0]
    if qi.is_limit_point:
        weights = mass[support]
    else:
        powers = mass[support] ** qi.q
        total = powers.sum()
        if not total > 0.0:
            raise SingularityError("escort weights underflowed to zero")
        weights = powers / total
    acc = 0.0
    for weight, a in zip(weights, support):
        slice_b = (w * first[:, a]) @ second / mass[a]
        acc += weight * tsallis_entropy(slice_b, qi)
    return float(acc)
