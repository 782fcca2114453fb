"""Shared random-object generators for the test suite."""

import numpy as np

from qtsallis import DensityMatrix, JointDist, ProbDist, SeparableDecomposition


def random_prob(rng, size):
    v = rng.uniform(0.1, 1.0, size=size)
    return ProbDist(v / v.sum())


def random_joint(rng, dims):
    flat = rng.uniform(0.05, 1.0, size=int(np.prod(dims)))
    return JointDist(tuple(dims), flat / flat.sum())


def random_density(rng, dims):
    """Full-rank random state: normalized A A* for complex Gaussian A."""
    side = int(np.prod(dims))
    a = rng.normal(size=(side, side)) + 1j * rng.normal(size=(side, side))
    m = a @ a.conj().T
    return DensityMatrix(tuple(dims), m / np.trace(m))


def random_decomposition(rng, dim_a, dim_b, terms):
    weights = rng.uniform(size=terms)
    local_a = tuple(random_prob(rng, dim_a) for _ in range(terms))
    local_b = tuple(random_prob(rng, dim_b) for _ in range(terms))
    return SeparableDecomposition(ProbDist(weights / weights.sum()), local_a, local_b)


def shannon(p):
    p = np.asarray(p, dtype=float)
    live = p[p > 0]
    return float(-(live * np.log(live)).sum())
