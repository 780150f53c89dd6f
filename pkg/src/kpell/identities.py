"""Exact checks of the two preparatory lemmas.

Sequence values come from the recurrence in :mod:`kpell.sequences`, never
from :func:`kpell.ring.binet_pair`; otherwise the checks would hold by
construction and could not catch a disagreement between the two.
"""

from __future__ import annotations

from kpell.report import Mode, Status, VerificationReport
from kpell.ring import QuadraticElement, ring_pow
from kpell.sequences import kpell, kpell_lucas


def _status(ok: bool) -> Status:
    return Status.PASS if ok else Status.FAIL


def _report(id_, params, parts, lhs, rhs) -> VerificationReport:
    ok = all(v is Status.PASS for v in parts.values())
    detail = " ".join(f"({name}) {st.value}" for name, st in parts.items())
    return VerificationReport(
        id=id_,
        params=params,
        mode=Mode.EXACT,
        lhs=lhs,
        rhs=rhs,
        status=_status(ok),
        detail=detail,
        parts={name: st.value for name, st in parts.items()},
    )


def lemma21_sides(k: int, n: int) -> dict[str, tuple]:
    """Left and right sides of the three parts, keyed ``i``, ``ii``, ``iii``.

    Parts (i) and (ii) are ring elements of Z[t] with ``t^2 = 1 + k``:
    ``Q + 2tP = 2 phi^n`` and ``Q - 2tP = 2 conj(phi)^n``.
    Part (iii) is the integer identity ``Q^2 - 4(1+k) P^2 = 4 (-k)^n``.
    """
    d = 1 + k
    p, q = kpell(k, n), kpell_lucas(k, n)
    phi = QuadraticElement.golden(k)
    two_t_p = QuadraticElement(0, 2 * p, d)
    q_el = QuadraticElement(q, 0, d)
    return {
        "i": (q_el + two_t_p, 2 * ring_pow(phi, n)),
        "ii": (q_el - two_t_p, 2 * ring_pow(phi.conj(), n)),
        "iii": (q * q - 4 * d * p * p, 4 * (-k) ** n),
    }


def check_lemma21(k: int, n: int) -> VerificationReport:
    sides = lemma21_sides(k, n)
    parts = {name: _status(lhs == rhs) for name, (lhs, rhs) in sides.items()}
    lhs3, rhs3 = sides["iii"]
    return _report("lemma2.1", {"k": k, "n": n}, parts, str(lhs3), str(rhs3))


def check_lemma22(k: int, m: int, n: int) -> VerificationReport:
    """Addition formulas

    (i)  ``2 P(m+n) = P(m) Q(n) + P(n) Q(m)``
    (ii) ``2 Q(m+n) = Q(m) Q(n) + 4(1+k) P(m) P(n)``
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    pm, pn, pmn = kpell(k, m), kpell(k, n), kpell(k, m + n)
    qm, qn, qmn = kpell_lucas(k, m), kpell_lucas(k, n), kpell_lucas(k, m + n)
    lhs1, rhs1 = 2 * pmn, pm * qn + pn * qm
    lhs2, rhs2 = 2 * qmn, qm * qn + 4 * (1 + k) * pm * pn
    parts = {"i": _status(lhs1 == rhs1), "ii": _status(lhs2 == rhs2)}
    return _report(
        "lemma2.2",
        {"k": k, "m": m, "n": n},
        parts,
        f"{lhs1},{lhs2}",
        f"{rhs1},{rhs2}",
    )
