"""k-Pell and k-Pell-Lucas numbers by recurrence, plus the classical
sequences obtained from them.

Both families satisfy ``x(n) = 2 x(n-1) + k x(n-2)``; they differ only in
their initial values (0, 1) and (2, 2).  Python ints are arbitrary precision,
so nothing here can overflow.
"""

from __future__ import annotations

import enum


class Family(enum.Enum):
    KPELL = "pell"
    KPELL_LUCAS = "pell-lucas"

    @property
    def initial(self) -> tuple[int, int]:
        return (0, 1) if self is Family.KPELL else (2, 2)

    @property
    def symbol(self) -> str:
        return "P" if self is Family.KPELL else "Q"


class Classical(enum.Enum):
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    PELL = "pell"
    PELL_LUCAS = "pell-lucas"


def _check(k: int, n: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError(f"k must be an int, got {type(k).__name__}")
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")


def _nth(family: Family, k: int, n: int) -> int:
    _check(k, n)
    a, b = family.initial
    for _ in range(n):
        a, b = b, 2 * b + k * a
    return a


def kpell(k: int, n: int) -> int:
    """Return the k-Pell number P(k, n).

    >>> [kpell(1, n) for n in range(8)]
    [0, 1, 2, 5, 12, 29, 70, 169]
    """
    return _nth(Family.KPELL, k, n)


def kpell_lucas(k: int, n: int) -> int:
    """Return the k-Pell-Lucas number Q(k, n).

    >>> [kpell_lucas(3, n) for n in range(5)]
    [2, 2, 10, 26, 82]
    """
    return _nth(Family.KPELL_LUCAS, k, n)


def value(family: Family, k: int, n: int) -> int:
    return _nth(family, k, n)


def sequence_range(family: Family, k: int, n_from: int, n_to: int) -> list[int]:
    """Terms ``n_from..n_to`` (inclusive) of a family, in one linear pass.

    An empty range (``n_to < n_from``) gives an empty list.
    """
    _check(k, n_from)
    if n_to < n_from:
        return []
    a, b = family.initial
    out = []
    for n in range(n_to + 1):
        if n >= n_from:
            out.append(a)
        a, b = b, 2 * b + k * a
    return out


def classical(name: Classical | str, n: int) -> int:
    """Fibonacci, Lucas, Pell or Pell-Lucas number of index ``n``.

    Fibonacci and Lucas come from the k = 4 sequences through
    ``F(n) = P(4, n) / 2**(n-1)`` and ``L(n) = Q(4, n) / 2**n``.  The
    divisions are checked to be exact.
    """
    name = Classical(name)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if name is Classical.PELL:
        return kpell(1, n)
    if name is Classical.PELL_LUCAS:
        return kpell_lucas(1, n)
    if name is Classical.FIBONACCI:
        if n == 0:
            # 2**(n-1) is not an integer at n = 0
            return 0
        num, shift = kpell(4, n), n - 1
    else:
        num, shift = kpell_lucas(4, n), n
    q, rem = divmod(num, 1 << shift)
    if rem:
        raise ArithmeticError(
            f"{name.value}({n}): {num} is not divisible by 2**{shift}"
        )
    return q
