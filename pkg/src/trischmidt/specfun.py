"""Scalar special functions backing the closed-form Schmidt machinery.

Everything here is evaluated by plain recurrences or finite sums.  All
combinatorial quantities (factorials, binomials, Pochhammer chains at
integer arguments) are formed in exact integer arithmetic and converted
to floating point once per term; forming factorial ratios in floats
loses the cancellation structure the big coefficient sums rely on.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

__all__ = [
    "DEGREE_LIMIT",
    "DegreeLimitError",
    "K16Arguments",
    "K16PoleError",
    "exton_k16",
    "hermite_function",
    "hermite_phys",
    "jacobi",
    "legendre",
    "pochhammer",
]

# Upper bound on polynomial degrees / total excitation: 40! is still exact
# as a Python int and comfortably representable as a float.
DEGREE_LIMIT = 40


class DegreeLimitError(ValueError):
    """A polynomial degree or total excitation exceeds DEGREE_LIMIT."""


class K16PoleError(ArithmeticError):
    """A surviving series term divides by a vanishing Pochhammer (beta)_j."""

    def __init__(self, beta: float, j: int):
        self.beta = beta
        self.j = j
        super().__init__(
            f"pochhammer denominator (beta)_j vanishes for beta={beta}, j={j}"
        )


def _check_degree(n: int, what: str = "degree") -> None:
    if not isinstance(n, (int, np.integer)):
        raise TypeError(f"{what} must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"{what} must be non-negative, got {n}")
    if n > DEGREE_LIMIT:
        raise DegreeLimitError(f"{what} {n} exceeds the supported bound {DEGREE_LIMIT}")


def hermite_phys(n: int, x):
    """Physicists' Hermite polynomial H_n(x), H_0 = 1, H_1 = 2x.

    Three-term recurrence H_{n+1} = 2x H_n - 2n H_{n-1}; accepts a float
    or an ndarray for ``x``.
    """
    _check_degree(n)
    one = np.ones_like(x, dtype=float) if isinstance(x, np.ndarray) else 1.0
    if n == 0:
        return one
    h_prev, h_curr = one, 2.0 * x
    for k in range(1, n):
        h_prev, h_curr = h_curr, 2.0 * x * h_curr - 2.0 * k * h_prev
    return h_curr


def legendre(n: int, z):
    """Legendre polynomial P_n(z) by the Bonnet recurrence.

    The argument may lie outside [-1, 1]; the purity closed forms
    evaluate P_n at ratios >= 1.
    """
    _check_degree(n)
    one = np.ones_like(z, dtype=float) if isinstance(z, np.ndarray) else 1.0
    if n == 0:
        return one
    p_prev, p_curr = one, 1.0 * z
    for k in range(1, n):
        p_prev, p_curr = p_curr, ((2 * k + 1) * z * p_curr - k * p_prev) / (k + 1)
    return p_curr


def hermite_function(n: int, x):
    """Orthonormal oscillator eigenfunction pi^(-1/4) (2^n n!)^(-1/2) e^(-x^2/2) H_n(x)."""
    _check_degree(n)
    norm = math.pi ** -0.25 / math.sqrt(float(2**n * math.factorial(n)))
    return norm * np.exp(-np.asarray(x, dtype=float) ** 2 / 2.0) * hermite_phys(n, x)


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.

    Exact integer arithmetic when ``a`` is integer-valued.
    """
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError(f"pochhammer order must be a non-negative integer, got {k!r}")
    if float(a).is_integer():
        ai = int(a)
        r = 1
        for i in range(k):
            r *= ai + i
        return float(r)
    r = 1.0
    for i in range(k):
        r *= a + i
    return r


def _binomial(a: float, k: int):
    """Generalized binomial coefficient C(a, k) via the falling factorial.

    For integer ``a`` (of either sign) the result is an exact integer,
    which is what extends the Jacobi series to negative integer
    parameters as the standard limiting polynomial.
    """
    if float(a).is_integer():
        ai = int(a)
        num = 1
        for i in range(k):
            num *= ai - i
        return num // math.factorial(k)
    num = 1.0
    for i in range(k):
        num *= a - i
    return num / math.factorial(k)


def jacobi(n: int, alpha: float, beta: float, z: float) -> float:
    """Jacobi polynomial P_n^(alpha,beta)(z) via the finite hypergeometric sum.

    sum_s C(n+alpha, n-s) C(n+beta, s) ((z-1)/2)^s ((z+1)/2)^(n-s),

    where the binomials follow the falling-factorial convention, so
    negative integer parameters evaluate to the limiting polynomial.
    """
    _check_degree(n)
    zm = (z - 1.0) / 2.0
    zp = (z + 1.0) / 2.0
    total = 0.0
    for s in range(n + 1):
        c = _binomial(n + alpha, n - s) * _binomial(n + beta, s)
        if c:
            total += float(c) * zm**s * zp ** (n - s)
    return total


class K16Arguments(NamedTuple):
    """Arguments of the truncated four-variable hypergeometric series.

    Upper parameters must be non-positive integers, which cuts the
    quadruple series down to a finite polynomial.
    """

    alpha1: int
    alpha2: int
    alpha3: int
    alpha4: int
    beta: float
    x: float
    y: float
    z: float
    t: float


def _poch_int(a: int, k: int) -> int:
    r = 1
    for i in range(k):
        r *= a + i
    return r


def exton_k16(args: K16Arguments) -> float:
    """Finite quadruple hypergeometric sum with paired-index Pochhammer numerators.

    sum over m1..m4 of
        (a1)_{m1+m2} (a2)_{m2+m3} (a3)_{m3+m4} (a4)_{m4+m1}
        / (beta)_{m1+m2+m3+m4} * x^m1 y^m2 z^m3 t^m4 / (m1! m2! m3! m4!).

    Terms with a vanishing numerator chain are skipped before the
    denominator is formed; a surviving term that requires (beta)_j = 0
    raises :class:`K16PoleError` so callers can fall back to the direct
    summation route.
    """
    a1, a2, a3, a4, beta, x, y, z, t = args
    bounds = []
    for a in (a1, a2, a3, a4):
        if not float(a).is_integer() or a > 0:
            raise ValueError(f"upper parameters must be non-positive integers, got {a!r}")
        bounds.append(-int(a))
        _check_degree(-int(a), "series truncation order")
    b1, b2, b3, b4 = bounds
    a1, a2, a3, a4 = int(a1), int(a2), int(a3), int(a4)

    beta_is_int = float(beta).is_integer()
    total = 0.0
    for m1 in range(min(b1, b4) + 1):
        for m2 in range(min(b1 - m1, b2) + 1):
            p12 = _poch_int(a1, m1 + m2)
            if p12 == 0:
                continue
            for m3 in range(min(b2 - m2, b3) + 1):
                p23 = _poch_int(a2, m2 + m3)
                if p23 == 0:
                    continue
                for m4 in range(min(b3 - m3, b4 - m1) + 1):
                    num = p12 * p23 * _poch_int(a3, m3 + m4) * _poch_int(a4, m4 + m1)
                    if num == 0:
                        continue
                    j = m1 + m2 + m3 + m4
                    mfact = (
                        math.factorial(m1)
                        * math.factorial(m2)
                        * math.factorial(m3)
                        * math.factorial(m4)
                    )
                    if beta_is_int:
                        den = _poch_int(int(beta), j)
                        if den == 0:
                            raise K16PoleError(beta, j)
                        term = num / float(den * mfact)
                    else:
                        den = pochhammer(beta, j)
                        if den == 0.0:
                            raise K16PoleError(beta, j)
                        term = num / (den * mfact)
                    total += term * x**m1 * y**m2 * z**m3 * t**m4
    return total
