"""Gauss-Legendre quadrature and floating-point checks of the representations.

The integrands are polynomials, so a rule with enough nodes integrates them
exactly up to rounding; any disagreement beyond rounding points at the
implementation, not at truncation error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from kpell.report import Mode, Status, VerificationReport
from kpell.sequences import kpell, kpell_lucas
from kpell.symbolic import Theorem, TheoremParams, lhs_value

MAX_NODES = 256
MAX_ITER = 100
STEP_TOL = 1e-15
FLOAT_EXACT_LIMIT = 2**53


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def m(self) -> int:
        return len(self.nodes)

    def integrate(self, f) -> float:
        """Apply the rule to a vectorised callable on [-1, 1]."""
        return float(np.dot(self.weights, f(self.nodes)))


def _legendre_and_derivative(m: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p_prev = np.ones_like(x)
    p = x.copy()
    for j in range(2, m + 1):
        p_prev, p = p, ((2 * j - 1) * x * p - (j - 1) * p_prev) / j
    dp = m * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


@lru_cache(maxsize=None)
def legendre_rule(m: int) -> QuadratureRule:
    """m-point Gauss-Legendre rule on [-1, 1].

    Nodes are roots of the Legendre polynomial P_m, found by Newton's method
    from the guesses ``cos(pi (i - 1/4) / (m + 1/2))``; weights are
    ``2 / ((1 - x^2) P_m'(x)^2)``.  Only the non-negative half is solved for
    and then mirrored, so the rule is exactly symmetric.
    """
    if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= MAX_NODES:
        raise ValueError(f"node count must be in [1, {MAX_NODES}], got {m!r}")
    if m == 1:
        return _frozen(np.array([0.0]), np.array([2.0]))

    half = (m + 1) // 2
    i = np.arange(1, half + 1)
    x = np.cos(np.pi * (i - 0.25) / (m + 0.5))
    for _ in range(MAX_ITER):
        p, dp = _legendre_and_derivative(m, x)
        step = p / dp
        x = x - step
        if np.max(np.abs(step)) <= STEP_TOL:
            break
    else:
        raise RuntimeError(f"Newton iteration for m={m} did not converge")
    if m % 2:
        x[-1] = 0.0
    _, dp = _legendre_and_derivative(m, x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)

    # x is decreasing and positive; mirror into ascending order
    if m % 2:
        nodes = np.concatenate([-x, x[-2::-1]])
        weights = np.concatenate([w, w[-2::-1]])
    else:
        nodes = np.concatenate([-x, x[::-1]])
        weights = np.concatenate([w, w[::-1]])
    # clears the sign bit of a negated zero node
    return _frozen(nodes + 0.0, weights)


def _frozen(nodes, weights) -> QuadratureRule:
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes, weights)


def _float_integrand(p: TheoremParams):
    """Prefactor, integrand callable and polynomial degree, all in floats.

    Written out independently of :mod:`kpell.symbolic` so that the two
    evaluation routes share nothing but the sequence values.
    """
    t, k, n = p.theorem, p.k, p.n
    delta = 2.0 * math.sqrt(1 + k)
    if t in (Theorem.P_EVEN, Theorem.P_ODD):
        c0, c1 = float(k + 2), delta
    else:
        pl, ql = float(kpell(k, p.l)), float(kpell_lucas(k, p.l))
        c0, c1 = ql, delta * pl

    if n == 0:
        # the cofactor is a constant multiple of the base; integrate the quotient
        const = {
            Theorem.P_LN: 0.0,
            Theorem.P_EVEN: 0.0,
            Theorem.Q_LN: 1.0,
            Theorem.P_ODD: 1.0,
        }
        if t is Theorem.P_LNR:
            value = float(kpell(k, p.r))
        elif t is Theorem.Q_LNR:
            value = float(kpell_lucas(k, p.r))
        else:
            value = const[t]
        pref = 0.5 if t in (Theorem.P_LNR, Theorem.Q_LNR, Theorem.P_ODD) else 1.0
        return pref, (lambda x: np.full_like(x, value)), 0

    def base(x):
        return (c0 + c1 * x) ** (n - 1)

    if t is Theorem.P_LN:
        return n * pl / 2.0**n, base, n - 1
    if t is Theorem.P_EVEN:
        return float(n), base, n - 1
    if t is Theorem.P_ODD:
        u0, u1 = float(2 * n + k + 2), (n + 1) * delta
        pref = 0.5
    elif t is Theorem.Q_LN:
        u0, u1 = ql, (n + 1) * delta * pl
        pref = 1.0 / 2.0**n
    else:
        pr, qr = float(kpell(k, p.r)), float(kpell_lucas(k, p.r))
        if t is Theorem.P_LNR:
            u0, u1 = n * pl * qr + pr * ql, (n + 1) * delta * pl * pr
        else:
            u0, u1 = n * delta * delta * pl * pr + ql * qr, (n + 1) * delta * pl * qr
        pref = 1.0 / 2.0 ** (n + 1)
    return pref, (lambda x: (u0 + u1 * x) * base(x)), n


def node_count(degree: int) -> int:
    return math.ceil((degree + 1) / 2) + 2


def rhs_numeric(p: TheoremParams) -> float:
    pref, f, degree = _float_integrand(p)
    return pref * legendre_rule(node_count(degree)).integrate(f)


def verify_numeric(p: TheoremParams, tol: float = 1e-12) -> VerificationReport:
    """Check one representation by quadrature.

    Skips (status ``skipped-overflow``) when the exact left-hand side
    exceeds 2**53, where doubles no longer represent integers faithfully.
    """
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    lhs = lhs_value(p)
    params = p.as_dict()
    if abs(lhs) > FLOAT_EXACT_LIMIT:
        return VerificationReport(
            id=p.theorem.value,
            params=params,
            mode=Mode.NUMERIC,
            lhs=str(lhs),
            rhs="",
            status=Status.SKIPPED_OVERFLOW,
            detail="|lhs| > 2**53",
        )
    _, _, degree = _float_integrand(p)
    rhs = rhs_numeric(p)
    err = abs(rhs - lhs) / max(1.0, abs(lhs))
    return VerificationReport(
        id=p.theorem.value,
        params=params,
        mode=Mode.NUMERIC,
        lhs=str(lhs),
        rhs=repr(rhs),
        status=Status.PASS if err <= tol else Status.FAIL,
        detail=f"nodes={node_count(degree)} rel_err={err:.3e}",
    )
