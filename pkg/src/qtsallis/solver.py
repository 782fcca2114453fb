"""Boundary location for the mixing family.

Finds where the conditional entropy of one party given the rest changes
sign as a function of the mixing weight, tracks that boundary across the
entropy order q, and evaluates its exact large-q limit.  A vanishing
conditional entropy marks the edge of the classically correlated regime;
below the large-q limit the state is separable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classical import _as_index
from .errors import MonotonicityError, ValidationError
from .quantum import q_trace, von_neumann
from .werner import WernerParams, joint_spectrum, marginal_spectrum

#: Uniform scan grid over the mixing interval [0, 1].
GRID_POINTS = 1024
#: Bisection stops once the bracket is this narrow.
BRACKET_WIDTH = 1e-12
#: Log q-trace gaps smaller than this count as an exact zero.
SIGN_TIE = 1e-14
#: Allowed slack when checking that the boundary never rises with q.
MONOTONE_TOL = 1e-9


@dataclass(frozen=True)
class ThresholdPoint:
    """Sign-change location of the conditional entropy at one order q.

    ``x_star`` is None when the entropy keeps one sign across the whole
    mixing interval.  ``sign_changes`` counts the sign-change events seen
    on the scan grid, so callers can tell whether the reported root (the
    first one) is also the only one.
    """

    q: float
    x_star: float | None
    bracket_width: float
    sign_changes: int


@dataclass(frozen=True)
class ThresholdCurve:
    """Boundary points for one family, ordered by increasing q."""

    levels: int
    parties: int
    points: tuple[ThresholdPoint, ...]


def entropy_sign(params: WernerParams, q, conditioned_parties: int | None = None) -> int:
    """Sign (-1, 0, +1) of the conditional entropy, computed in the log
    domain so it is immune to overflow and underflow at any q.

    For q > 1 the entropy is positive exactly when the marginal log
    q-trace exceeds the joint one; for q < 1 the comparison flips.  The
    q -> 1 limit point compares von Neumann entropies.  Gaps below
    ``SIGN_TIE`` report 0.
    """
    qi = _as_index(q)
    k = params.parties - 1 if conditioned_parties is None else int(conditioned_parties)
    joint = joint_spectrum(params)
    marginal = marginal_spectrum(params, k)
    if qi.is_limit_point:
        diff = von_neumann(joint) - von_neumann(marginal)
    else:
        gap = q_trace(marginal, qi) - q_trace(joint, qi)
        diff = gap if qi.q > 1.0 else -gap
    if abs(diff) < SIGN_TIE:
        return 0
    return 1 if diff > 0.0 else -1


def threshold_for_q(levels: int, parties: int, q,
                    conditioned_parties: int | None = None) -> ThresholdPoint:
    """Locate the first sign change of the conditional entropy in x.

    Scans ``GRID_POINTS`` uniform points over [0, 1]; the first sign-change
    interval is bisected down to ``BRACKET_WIDTH``.  An exact zero (grid
    point or bisection midpoint) terminates immediately with a zero-width
    bracket.  Returns x_star = None when the grid shows no sign change.
    """
    qi = _as_index(q)

    def sign_at(x: float) -> int:
        return entropy_sign(WernerParams(levels, parties, x), qi, conditioned_parties)

    xs = np.linspace(0.0, 1.0, GRID_POINTS)
    signs = [sign_at(float(x)) for x in xs]

    events = []  # (kind, left grid index, right grid index)
    previous = None  # index of the last nonzero sign
    for i, sign in enumerate(signs):
        if sign == 0:
            events.append(("touch", i, i))
        else:
            if previous is not None and sign != signs[previous]:
                events.append(("flip", previous, i))
            previous = i

    if not events:
        return ThresholdPoint(qi.q, None, math.nan, 0)

    kind, left, right = events[0]
    if kind == "touch":
        return ThresholdPoint(qi.q, float(xs[left]), 0.0, len(events))

    lo, hi = float(xs[left]), float(xs[right])
    sign_lo = signs[left]
    while hi - lo > BRACKET_WIDTH:
        mid = 0.5 * (lo + hi)
        sign_mid = sign_at(mid)
        if sign_mid == 0:
            return ThresholdPoint(qi.q, mid, 0.0, len(events))
        if sign_mid == sign_lo:
            lo = mid
        else:
            hi = mid
    return ThresholdPoint(qi.q, 0.5 * (lo + hi), hi - lo, len(events))


def threshold_curve(levels: int, parties: int, q_grid) -> ThresholdCurve:
    """Boundary points across a strictly increasing grid of orders.

    The located boundary must be non-increasing in q within
    ``MONOTONE_TOL``; a violation raises MonotonicityError carrying the
    offending pair of points.  The check is performed, never silently
    enforced.
    """
    orders = [_as_index(q).q for q in q_grid]
    if not orders:
        raise ValidationError("q grid must be nonempty")
    if any(b <= a for a, b in zip(orders, orders[1:])):
        raise ValidationError("q grid must be strictly increasing")
    points = tuple(threshold_for_q(levels, parties, q) for q in orders)
    previous = None
    for point in points:
        if point.x_star is None:
            continue
        if previous is not None and point.x_star > previous.x_star + MONOTONE_TOL:
            raise MonotonicityError(
                f"boundary rose from x*={previous.x_star} at q={previous.q} "
                f"to x*={point.x_star} at q={point.q}",
                first=previous, second=point)
        previous = point
    return ThresholdCurve(int(levels), int(parties), points)


def _check_family(levels: int, parties: int) -> tuple[int, int]:
    levels = int(levels)
    parties = int(parties)
    if levels < 2 or parties < 2:
        raise ValidationError("need at least two levels and two parties")
    return levels, parties


def asymptotic_threshold(levels: int, parties: int) -> float:
    """Exact large-q limit of the boundary.

    For q -> infinity each log q-trace is dominated by its largest
    eigenvalue, so the conditional entropy (conditioning on n - 1 parties)
    vanishes where the dominant joint and marginal eigenvalues coincide:

        (1 + (N**n - 1) x) / N**n  =  (1 + (N**(n-2) - 1) x) / N**(n-1)

    Cross-multiplying gives a linear equation in x,

        x * [N**(n-1) (N**n - 1) - N**n (N**(n-2) - 1)] = N**n - N**(n-1),

    whose solution simplifies to 1 / (1 + N**(n-1)): the denominator
    factors as N**(n-1) (N - 1) (N**(n-1) + 1) against the numerator
    N**(n-1) (N - 1).  Below this value the state is separable.  The
    linear form is evaluated in exact integer arithmetic up to the final
    division.
    """
    N, n = _check_family(levels, parties)
    numerator = N**n - N**(n - 1)
    denominator = N**(n - 1) * (N**n - 1) - N**n * (N**(n - 2) - 1)
    return numerator / denominator


def asymptotic_threshold_block(levels: int, parties: int, conditioned_parties: int) -> float:
    """Large-q boundary when conditioning on only ``conditioned_parties``.

    Same dominant-eigenvalue equality as :func:`asymptotic_threshold`, with
    the marginal over k = conditioned_parties parties:

        (1 + (N**n - 1) x) / N**n  =  (1 + (N**(k-1) - 1) x) / N**k

    Conditioning on fewer parties yields a weaker (larger) bound; the
    value coincides with :func:`asymptotic_threshold` at k = n - 1, which
    is the strongest choice.
    """
    N, n = _check_family(levels, parties)
    k = int(conditioned_parties)
    if not 1 <= k <= n - 1:
        raise ValidationError(f"conditioned party count must lie in [1, {n - 1}], got {k}")
    numerator = N**n - N**k
    denominator = N**k * (N**n - 1) - N**n * (N**(k - 1) - 1)
    return numerator / denominator
