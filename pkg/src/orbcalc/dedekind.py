"""Higher Dedekind sums over the r-th roots of unity, evaluated exactly.

The i-th Dedekind sum of weight data (b_1, ..., b_m) at order r is

    sigma_i(1/r(b_1,...,b_m))
        = (1/r) * sum_{eps} eps^i / ((1 - eps^{b_1}) ... (1 - eps^{b_m})),

the sum running over the r-th roots of unity eps for which every factor in
the denominator is nonzero, i.e. eps^{b_t} != 1 for all t.  Writing
eps = zeta^j, root j is admissible iff j*b_t is not divisible by r for any
t; j = 0 is never admissible.  Each term lives in Q(zeta_r) and the total
is a rational number (the summand set is Galois-stable), extracted through
:meth:`CyclotomicElement.to_rational`.

A weight divisible by r kills every root, so the sum is empty and the
value is 0 by convention; callers that need the geometric coprimality
conditions enforce them at their own layer.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicElement, _field

FLOAT_ORACLE_MAX_ORDER = 10**4


@dataclass(frozen=True)
class DedekindInput:
    """Order r, weights reduced into [0, r), and the index i reduced mod r."""

    r: int
    weights: tuple[int, ...]
    index: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("Dedekind sum order r must be >= 1")
        if len(self.weights) < 1:
            raise ValueError("Dedekind sum needs at least one weight")
        object.__setattr__(self, "weights", tuple(b % self.r for b in self.weights))
        object.__setattr__(self, "index", self.index % self.r)


def _admissible_roots(inp: DedekindInput) -> list[int]:
    return [
        j
        for j in range(inp.r)
        if all((j * b) % inp.r for b in inp.weights)
    ]


def dedekind_sum(inp: DedekindInput) -> Fraction:
    """Exact value of sigma_index(1/r(weights)); 0 when no root is admissible.

    The inner loop stays on the field's integer coefficient tables: each
    term is the power vector of zeta^(index*j) multiplied by the scaled
    numerators r/(1 - zeta^(j*b_t)), so every factor carries denominator r
    and the whole sum shares the denominator r^(len(weights) + 1), divided
    out once at the end.
    """
    r = inp.r
    roots = _admissible_roots(inp)
    if not roots:
        return Fraction(0)
    field = _field(r)
    inverses = field.one_minus_root_inverses()
    acc = [0] * field.phi
    for j in roots:
        vec = list(field.powers[(inp.index * j) % r])
        for b in inp.weights:
            vec = field.mul_ints(vec, list(inverses[(j * b) % r - 1]))
        for t, c in enumerate(vec):
            acc[t] += c
    total = CyclotomicElement(r, tuple(Fraction(c) for c in acc))
    return total.to_rational() / r ** (len(inp.weights) + 1)


def sigma(r: int, weights: tuple[int, ...] | list[int], index: int) -> Fraction:
    """Convenience wrapper: sigma_index(1/r(weights))."""
    return dedekind_sum(DedekindInput(r, tuple(weights), index))


def dedekind_sum_float_oracle(inp: DedekindInput) -> float:
    """The same sum in complex double precision at zeta = exp(2*pi*i/r).

    Independent verification path for the exact evaluator; refuses orders
    past 10^4 where float drift would make the 1e-9 imaginary-part budget
    meaningless.
    """
    if inp.r > FLOAT_ORACLE_MAX_ORDER:
        raise ValueError(
            f"float oracle limited to r <= {FLOAT_ORACLE_MAX_ORDER} (got r={inp.r})"
        )
    r = inp.r
    roots = _admissible_roots(inp)
    if not roots:
        return 0.0
    total = 0j
    for j in roots:
        eps = cmath.exp(2j * cmath.pi * j / r)
        denom = 1 + 0j
        for b in inp.weights:
            denom *= 1 - cmath.exp(2j * cmath.pi * ((j * b) % r) / r)
        total += eps ** inp.index / denom
    total /= r
    if abs(total.imag) >= 1e-9:
        raise ArithmeticError(
            f"float Dedekind sum has non-negligible imaginary part {total.imag:g}"
        )
    return total.real
