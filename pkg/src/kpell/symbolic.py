"""Exact evaluation of the integral representations over [-1, 1].

Every integrand is a product of linear factors in ``x`` whose coefficients
live in Q[t]/(t^2 - d), d = 1 + k.  Expanding it binomially and integrating
monomials term by term (``x^j`` integrates to 0 for odd j and ``2/(j+1)`` for
even j) gives the right-hand side as an exact ring element.  A correct
representation yields a rational number, i.e. a zero ``t`` component, equal
to the sequence value on the left.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from kpell.report import Mode, Status, VerificationReport
from kpell.ring import QuadraticElement
from kpell.sequences import kpell, kpell_lucas


class RingPoly:
    """Polynomial in ``x`` with :class:`QuadraticElement` coefficients.

    ``coeffs[j]`` multiplies ``x**j``.  Trailing zero coefficients are
    dropped, so the zero polynomial has no coefficients at all.
    """

    __slots__ = ("coeffs", "d")

    def __init__(self, coeffs, d: int) -> None:
        cs = [c if isinstance(c, QuadraticElement) else QuadraticElement(c, 0, d) for c in coeffs]
        for c in cs:
            if c.d != d:
                raise ValueError(f"coefficient {c!r} does not live in d={d}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.d = d

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingPoly):
            return NotImplemented
        return self.d == other.d and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"RingPoly([{', '.join(str(c) for c in self.coeffs)}], d={self.d})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)

    def __mul__(self, other) -> RingPoly:
        if isinstance(other, RingPoly):
            return poly_mul(self, other)
        c = other if isinstance(other, QuadraticElement) else QuadraticElement(other, 0, self.d)
        return RingPoly([x * c for x in self.coeffs], self.d)

    __rmul__ = __mul__


def expand_linear_power(c0, c1, e: int, d: int) -> RingPoly:
    """``(c0 + c1*x)**e`` expanded with exact binomial coefficients."""
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    c0 = c0 if isinstance(c0, QuadraticElement) else QuadraticElement(c0, 0, d)
    c1 = c1 if isinstance(c1, QuadraticElement) else QuadraticElement(c1, 0, d)
    # powers of each coefficient, built incrementally
    p0 = [QuadraticElement.one(d)]
    p1 = [QuadraticElement.one(d)]
    for _ in range(e):
        p0.append(p0[-1] * c0)
        p1.append(p1[-1] * c1)
    return RingPoly([comb(e, j) * p0[e - j] * p1[j] for j in range(e + 1)], d)


def poly_mul(p: RingPoly, q: RingPoly) -> RingPoly:
    if p.d != q.d:
        raise ValueError(f"ring mismatch: d={p.d} vs d={q.d}")
    if not p.coeffs or not q.coeffs:
        return RingPoly([], p.d)
    out = [QuadraticElement.zero(p.d)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            out[i + j] = out[i + j] + a * b
    return RingPoly(out, p.d)


def monomial_integral(j: int) -> Fraction:
    """Integral of ``x**j`` over [-1, 1]."""
    return Fraction(0) if j % 2 else Fraction(2, j + 1)


def integrate_sym(p: RingPoly) -> QuadraticElement:
    total = QuadraticElement.zero(p.d)
    for j, c in enumerate(p.coeffs):
        if j % 2 == 0:
            total = total + c * monomial_integral(j)
    return total


class Theorem(str, enum.Enum):
    """The six integral representations.

    P_LN   P(k, l n)    = n P(l)/2^n  Int (Q(l) + D P(l) x)^(n-1)
    Q_LN   Q(k, l n)    = 1/2^n       Int (Q(l) + (n+1) D P(l) x)(Q(l) + D P(l) x)^(n-1)
    P_LNR  P(k, l n + r) = 1/2^(n+1)  Int (n P(l)Q(r) + P(r)Q(l) + (n+1) D P(l)P(r) x)(...)^(n-1)
    Q_LNR  Q(k, l n + r) = 1/2^(n+1)  Int (n D^2 P(l)P(r) + Q(l)Q(r) + (n+1) D P(l)Q(r) x)(...)^(n-1)
    P_EVEN P(k, 2n)     = n           Int (k + 2 + D x)^(n-1)
    P_ODD  P(k, 2n + 1) = 1/2         Int (2n + k + 2 + (n+1) D x)(k + 2 + D x)^(n-1)

    with ``D = 2 sqrt(1 + k)`` and every integral over [-1, 1] in ``x``.
    """

    P_LN = "p-ln"
    Q_LN = "q-ln"
    P_LNR = "p-lnr"
    Q_LNR = "q-lnr"
    P_EVEN = "p-even"
    P_ODD = "p-odd"

    @property
    def uses_l(self) -> bool:
        return self not in (Theorem.P_EVEN, Theorem.P_ODD)

    @property
    def uses_r(self) -> bool:
        return self in (Theorem.P_LNR, Theorem.Q_LNR)


@dataclass(frozen=True)
class TheoremParams:
    """Parameters of one representation: ``k >= 1`` and ``n, l, r >= 0``.

    ``l`` is required exactly when the theorem uses it, likewise ``r``.
    """

    theorem: Theorem
    k: int
    n: int
    l: int | None = None  # noqa: E741
    r: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "theorem", Theorem(self.theorem))
        t = self.theorem
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if t.uses_l != (self.l is not None):
            raise ValueError(f"{t.value}: l is {'required' if t.uses_l else 'not used'}")
        if t.uses_r != (self.r is not None):
            raise ValueError(f"{t.value}: r is {'required' if t.uses_r else 'not used'}")
        for name in ("l", "r"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name} must be non-negative, got {v}")

    @property
    def d(self) -> int:
        return 1 + self.k

    def as_dict(self) -> dict:
        out = {"k": self.k}
        if self.l is not None:
            out["l"] = self.l
        out["n"] = self.n
        if self.r is not None:
            out["r"] = self.r
        return out

    def sort_key(self) -> tuple:
        return (self.k, self.l or 0, self.n, self.r or 0)


def lhs_value(p: TheoremParams) -> int:
    """The sequence value each representation claims to equal."""
    t, k, n = p.theorem, p.k, p.n
    if t is Theorem.P_LN:
        return kpell(k, p.l * n)
    if t is Theorem.Q_LN:
        return kpell_lucas(k, p.l * n)
    if t is Theorem.P_LNR:
        return kpell(k, p.l * n + p.r)
    if t is Theorem.Q_LNR:
        return kpell_lucas(k, p.l * n + p.r)
    if t is Theorem.P_EVEN:
        return kpell(k, 2 * n)
    return kpell(k, 2 * n + 1)


def integrand_factors(p: TheoremParams) -> tuple[Fraction, tuple, tuple | None]:
    """Prefactor, base ``(c0, c1)`` raised to ``n - 1`` and optional linear
    cofactor ``(u0, u1)`` of a representation.

    Coefficients are ring elements in d = 1 + k; ``D = 2 sqrt(1+k)`` is the
    element ``0 + 2t``.
    """
    t, k, n, d = p.theorem, p.k, p.n, p.d
    delta = QuadraticElement(0, 2, d)
    if t in (Theorem.P_EVEN, Theorem.P_ODD):
        base = (QuadraticElement(k + 2, 0, d), delta)
        if t is Theorem.P_EVEN:
            return Fraction(n), base, None
        cof = (QuadraticElement(2 * n + k + 2, 0, d), (n + 1) * delta)
        return Fraction(1, 2), base, cof

    pl, ql = kpell(k, p.l), kpell_lucas(k, p.l)
    base = (QuadraticElement(ql, 0, d), pl * delta)
    if t is Theorem.P_LN:
        return Fraction(n * pl, 2**n), base, None
    if t is Theorem.Q_LN:
        return Fraction(1, 2**n), base, (QuadraticElement(ql, 0, d), (n + 1) * pl * delta)

    pr, qr = kpell(k, p.r), kpell_lucas(k, p.r)
    if t is Theorem.P_LNR:
        cof = (QuadraticElement(n * pl * qr + pr * ql, 0, d), (n + 1) * pl * pr * delta)
    else:
        cof = (n * pl * pr * (delta * delta) + ql * qr, (n + 1) * pl * qr * delta)
    return Fraction(1, 2 ** (n + 1)), base, cof


def integrand_poly(p: TheoremParams) -> RingPoly:
    """Fully expanded integrand (without prefactor); requires ``n >= 1``."""
    if p.n < 1:
        raise ValueError("the integrand has a negative exponent at n = 0")
    _, (c0, c1), cof = integrand_factors(p)
    poly = expand_linear_power(c0, c1, p.n - 1, p.d)
    if cof is not None:
        poly = poly_mul(RingPoly(cof, p.d), poly)
    return poly


def _closed_form_n0(p: TheoremParams) -> int:
    # At n = 0 the base appears to the power -1; each case cancels by hand.
    #   P_LN, P_EVEN: prefactor carries the factor n = 0.
    #   Q_LN:   cofactor == base, prefactor 1:       Int 1 dx = 2.
    #   P_LNR:  cofactor == P(r) * base, prefactor 1/2:  P(r).
    #   Q_LNR:  cofactor == Q(r) * base, prefactor 1/2:  Q(r).
    #   P_ODD:  cofactor == base, prefactor 1/2:        1.
    t = p.theorem
    if t in (Theorem.P_LN, Theorem.P_EVEN):
        return 0
    if t is Theorem.Q_LN:
        return 2
    if t is Theorem.P_LNR:
        return kpell(p.k, p.r)
    if t is Theorem.Q_LNR:
        return kpell_lucas(p.k, p.r)
    return 1


def rhs_exact(p: TheoremParams) -> QuadraticElement:
    """Exact value of the right-hand side as a ring element."""
    if p.n == 0:
        return QuadraticElement(_closed_form_n0(p), 0, p.d)
    prefactor, _, _ = integrand_factors(p)
    return integrate_sym(integrand_poly(p)) * prefactor


def rhs_antiderivative(p: TheoremParams) -> QuadraticElement:
    """P_LN right-hand side through the antiderivative of the base power.

    ``Int (c0 + c1 x)^(n-1) dx = ((c0 + c1)^n - (c0 - c1)^n) / (n c1)``.
    Used only as an independent cross-check of :func:`rhs_exact`; needs
    ``l >= 1`` so that ``c1 = 2 P(l) t`` is invertible.
    """
    if p.theorem is not Theorem.P_LN:
        raise ValueError("antiderivative route is only implemented for p-ln")
    if p.n == 0 or p.l == 0:
        return rhs_exact(p)
    prefactor, (c0, c1), _ = integrand_factors(p)
    integral = ((c0 + c1) ** p.n - (c0 - c1) ** p.n) / (c1 * p.n)
    return integral * prefactor


def verify(p: TheoremParams) -> VerificationReport:
    """Check one representation exactly.

    Passes iff the right-hand side has zero ``t`` component and its rational
    part equals the sequence value.  On failure the detail field carries the
    expanded integrand for manual inspection.
    """
    lhs = lhs_value(p)
    rhs = rhs_exact(p)
    ok = rhs.b == 0 and rhs.a == lhs
    detail = ""
    if not ok:
        poly = integrand_poly(p) if p.n >= 1 else "closed form (n = 0)"
        detail = f"prefactor={integrand_factors(p)[0]} integrand={poly}"
    return VerificationReport(
        id=p.theorem.value,
        params=p.as_dict(),
        mode=Mode.EXACT,
        lhs=str(lhs),
        rhs=str(rhs),
        status=Status.PASS if ok else Status.FAIL,
        detail=detail,
    )
