"""Schmidt amplitudes of tripartite oscillator eigenstates.

An eigenstate with quantum numbers (n1, n2, n3) expands over products
of single-oscillator eigenfunctions with amplitudes A[k, l] (the third
index is fixed by the selection rule m = n1 + n2 + n3 - k - l).  Two
independent closed-form routes are provided:

* :func:`coefficients_sum` - the canonical contingency-table sum,
  defined for every angle triple;
* :func:`coefficients_k16` - the hypergeometric closed form, which
  contains removable singularities (ratio arguments with vanishing
  denominators) and transparently falls back to the sum route where it
  does not apply.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .oscillator import Angles, Excitation, MixingMatrix, as_excitation
from .specfun import K16Arguments, exton_k16, hermite_phys

__all__ = [
    "SchmidtMatrix",
    "coefficients_k16",
    "coefficients_sum",
    "selection_rule",
    "to_document",
    "wavefunction_eval",
]

# Below this magnitude the hypergeometric ratio arguments lose all
# significant digits, so the sum route takes over.
_RATIO_DENOMINATOR_FLOOR = 1e-10


@dataclass
class SchmidtMatrix:
    """Amplitudes A[k, l] of one eigenstate, k + l <= n1 + n2 + n3.

    ``amplitudes`` is a dense (N+1, N+1) array, identically zero above
    the anti-diagonal k + l = N.  ``fallback_mask`` is set only by the
    hypergeometric route and flags entries delegated to the sum route.
    """

    excitation: Excitation
    angles: Angles
    amplitudes: np.ndarray = field(repr=False)
    fallback_mask: np.ndarray | None = field(default=None, repr=False)

    @property
    def total(self) -> int:
        return self.excitation.total

    @property
    def fallback_count(self) -> int:
        return 0 if self.fallback_mask is None else int(self.fallback_mask.sum())

    def entry(self, k: int, l: int) -> float:
        return float(self.amplitudes[k, l])

    def items(self) -> Iterator[tuple[int, int, int, float]]:
        """Yield (k, l, m, value) in deterministic (k, l) order."""
        n = self.total
        for k in range(n + 1):
            for l in range(n - k + 1):
                yield k, l, n - k - l, float(self.amplitudes[k, l])


def selection_rule(n, k: int, l: int, m: int) -> bool:
    """True iff k + l + m matches the total excitation n1 + n2 + n3."""
    return k + l + m == as_excitation(n).total


@lru_cache(maxsize=20000)
def _tables(n1: int, n2: int, n3: int, k: int, l: int) -> tuple[np.ndarray, np.ndarray]:
    """Enumerate all 3x3 contingency tables with row sums (k, l, m) and
    column sums (n1, n2, n3); m = n1 + n2 + n3 - k - l.

    Returns the (T, 9) exponent table (cells ordered a1 b1 c1 a2 b2 c2
    a3 b3 c3) and the T per-table weights 1 / prod(cell!), each weight
    converted from an exact integer denominator.
    """
    m = n1 + n2 + n3 - k - l
    exps: list[list[int]] = []
    weights: list[float] = []
    for i1 in range(min(k, n1) + 1):
        for i2 in range(min(k - i1, n2) + 1):
            i3 = k - i1 - i2
            if i3 > n3:
                continue
            for i4 in range(min(l, n1 - i1) + 1):
                for i5 in range(min(l - i4, n2 - i2) + 1):
                    i6 = l - i4 - i5
                    i7 = n1 - i1 - i4
                    i8 = n2 - i2 - i5
                    i9 = n3 - i3 - i6
                    if i9 < 0 or i9 != m - i7 - i8:
                        continue
                    cells = (i1, i2, i3, i4, i5, i6, i7, i8, i9)
                    den = 1
                    for c in cells:
                        den *= math.factorial(c)
                    exps.append(list(cells))
                    weights.append(1.0 / den)
    exp_arr = np.array(exps, dtype=np.int64).reshape(len(exps), 9)
    w_arr = np.array(weights)
    exp_arr.setflags(write=False)
    w_arr.setflags(write=False)
    return exp_arr, w_arr


def _sqrt_prefactor(n1: int, n2: int, n3: int, k: int, l: int, m: int) -> float:
    prod = (
        math.factorial(n1)
        * math.factorial(n2)
        * math.factorial(n3)
        * math.factorial(k)
        * math.factorial(l)
        * math.factorial(m)
    )
    return math.sqrt(float(prod))


def _entry_sum(n: Excitation, coef: np.ndarray, k: int, l: int) -> float:
    """One amplitude by the table sum; ``coef`` is the mixing-coefficient
    vector (a1, b1, c1, a2, b2, c2, a3, b3, c3)."""
    m = n.total - k - l
    exps, weights = _tables(n.n1, n.n2, n.n3, k, l)
    if exps.shape[0] == 0:
        return 0.0
    terms = np.prod(coef[np.newaxis, :] ** exps, axis=1)
    return _sqrt_prefactor(n.n1, n.n2, n.n3, k, l, m) * float(terms @ weights)


def coefficients_sum(n, mix: MixingMatrix) -> SchmidtMatrix:
    """All amplitudes by the contingency-table sum (the canonical route).

    A[k, l] = sqrt(n1! n2! n3! k! l! m!) * sum over tables {i} of
    a1^i1 b1^i2 c1^i3 a2^i4 b2^i5 c2^i6 a3^i7 b3^i8 c3^i9 / (i1! ... i9!),
    the coefficient-extraction form of the nine-fold generating
    function; powers of two cancel against the exponential prefactor.
    """
    exc = as_excitation(n)
    total = exc.total
    coef = mix.coefficient_vector()
    amps = np.zeros((total + 1, total + 1))
    for k in range(total + 1):
        for l in range(total - k + 1):
            amps[k, l] = _entry_sum(exc, coef, k, l)
    return SchmidtMatrix(exc, mix.angles, amps)


def coefficients_k16(n, mix: MixingMatrix) -> SchmidtMatrix:
    """All amplitudes by the hypergeometric closed form.

    A[k, l] = sqrt(n1! n2! n3! k! l! m!) a3^n1 b3^n2 c1^k c2^l c3^(n3-k-l)
              / ((n3-k-l)! n1! k! n2! l!)
              * K16(-n1, -k, -n2, -l; n3-k-l+1;
                    a2 c3/(c2 a3), a1 c3/(c1 a3), b1 c3/(c1 b3), b2 c3/(c2 b3)).

    Entries with k + l > n3 (negative c3 exponent) and matrices whose
    ratio denominators fall below 1e-10 delegate to the sum route; the
    returned ``fallback_mask`` flags those entries.
    """
    exc = as_excitation(n)
    total = exc.total
    coef = mix.coefficient_vector()
    a1, b1, c1, a2, b2, c2, a3, b3, c3 = coef
    amps = np.zeros((total + 1, total + 1))
    fallback = np.zeros((total + 1, total + 1), dtype=bool)

    denominators = (c2 * a3, c1 * a3, c1 * b3, c2 * b3)
    usable = all(abs(d) > _RATIO_DENOMINATOR_FLOOR for d in denominators)
    if usable:
        ratios = (
            a2 * c3 / denominators[0],
            a1 * c3 / denominators[1],
            b1 * c3 / denominators[2],
            b2 * c3 / denominators[3],
        )

    for k in range(total + 1):
        for l in range(total - k + 1):
            if not usable or k + l > exc.n3:
                amps[k, l] = _entry_sum(exc, coef, k, l)
                fallback[k, l] = True
                continue
            m = total - k - l
            pref = _sqrt_prefactor(exc.n1, exc.n2, exc.n3, k, l, m)
            pref *= a3**exc.n1 * b3**exc.n2 * c1**k * c2**l * c3 ** (exc.n3 - k - l)
            pref /= float(
                math.factorial(exc.n3 - k - l)
                * math.factorial(exc.n1)
                * math.factorial(k)
                * math.factorial(exc.n2)
                * math.factorial(l)
            )
            series = exton_k16(
                K16Arguments(-exc.n1, -k, -exc.n2, -l, exc.n3 - k - l + 1, *ratios)
            )
            amps[k, l] = pref * series
    return SchmidtMatrix(exc, mix.angles, amps, fallback_mask=fallback)


def wavefunction_eval(n, mix: MixingMatrix, point: Sequence[float]) -> float:
    """Eigenstate value at a dimensionless position triple.

    pi^(-3/4) (2^N n1! n2! n3!)^(-1/2) e^(-|q|^2 / 2)
        H_n1(q1) H_n2(q2) H_n3(q3),   q = M x.
    """
    exc = as_excitation(n)
    x = np.asarray(point, dtype=float)
    if x.shape != (3,):
        raise ValueError(f"expected a position triple, got shape {x.shape}")
    q = mix.matrix @ x
    norm = math.pi ** -0.75 / math.sqrt(
        float(2**exc.total * math.factorial(exc.n1) * math.factorial(exc.n2) * math.factorial(exc.n3))
    )
    value = norm * math.exp(-float(q @ q) / 2.0)
    for nn, qq in zip(exc, q):
        value *= hermite_phys(nn, float(qq))
    return value


def to_document(matrix: SchmidtMatrix) -> dict:
    """Data-interchange form of a coefficient table.

    {"n": [n1, n2, n3], "angles": [theta, vphi, phi],
     "entries": [{"k": ..., "l": ..., "m": ..., "value": ...}, ...]}
    """
    return {
        "n": list(matrix.excitation),
        "angles": list(matrix.angles),
        "entries": [
            {"k": k, "l": l, "m": m, "value": value}
            for k, l, m, value in matrix.items()
        ],
    }
