"""Exhaustive search for admissible singularity configurations.

A non-collapsed limit of smooth Kähler-Einstein Del Pezzo surfaces of
degree d can only carry singularities from a short per-degree list, and
its total bubble energy is pinned between 0 and 12 - d:

    0  <  12 * sum_p mu_p(K^-1)  <  12 - d    (both bounds strict).

Since every type's energy is positive, the multisets satisfying the
inequality form a finite set which depth-first search enumerates exactly:
types in catalog order, multiplicity descending, pruning a branch the
moment its partial energy reaches the budget.  Every surviving
configuration gets the full identity report (Milnor ledger, derived
Picard rank, bubble-count window).

Two modes.  ``inequality-only`` is precisely the energy inequality.
``with-exclusions`` additionally applies named exclusion rules that
encode the known classification of limits with only du Val singularities;
the sharper published multiplicity bounds (for instance, at most one
A4 point in degree 2) need those classifications, not just the budget.
Rules are data, not control flow: each has a name, a docstring, and can
be dropped or added by passing a custom rule list.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from . import catalog, invariants
from .catalog import ADE, CyclicQuotient, NotTabulatedError, SingularityType
from .invariants import ConstraintReport, OrbifoldConfig
from .rationals import format_rational, rational_to_json

INEQUALITY_ONLY = "inequality-only"
WITH_EXCLUSIONS = "with-exclusions"
MODES = (INEQUALITY_ONLY, WITH_EXCLUSIONS)

_ALLOWED_TYPES: dict[int, tuple[SingularityType, ...]] = {
    4: (ADE("A", 1),),
    3: (ADE("A", 1), ADE("A", 2)),
    2: tuple(ADE("A", k) for k in range(1, 5)) + (CyclicQuotient(4, 1, 1),),
    1: tuple(ADE("A", k) for k in range(1, 9))
    + (
        ADE("D", 4),
        CyclicQuotient(4, 1, 1),
        CyclicQuotient(8, 1, 3),
        CyclicQuotient(9, 1, 2),
    ),
}


def _du_val_only(sings: Sequence[SingularityType]) -> bool:
    return all(isinstance(s, ADE) for s in sings)


@dataclass(frozen=True)
class ExclusionRule:
    """A named, documented predicate; True means the configuration survives."""

    name: str
    degree: int
    description: str
    predicate: Callable[[tuple[SingularityType, ...]], bool]

    def passes(self, sings: Iterable[SingularityType]) -> bool:
        return self.predicate(tuple(sings))


def _rule_du_val_degree_4(sings: tuple[SingularityType, ...]) -> bool:
    if not sings or not _du_val_only(sings):
        return True
    counts = Counter(sings)
    return set(counts) == {ADE("A", 1)} and sum(counts.values()) in (2, 4)


def _rule_du_val_degree_3(sings: tuple[SingularityType, ...]) -> bool:
    if not sings or not _du_val_only(sings):
        return True
    counts = Counter(sings)
    if set(counts) == {ADE("A", 1)}:
        return True
    return counts == Counter({ADE("A", 2): 3})


def _rule_du_val_degree_2(sings: tuple[SingularityType, ...]) -> bool:
    if not sings or not _du_val_only(sings):
        return True
    counts = Counter(sings)
    if set(counts) <= {ADE("A", 1), ADE("A", 2)}:
        return True
    return counts == Counter({ADE("A", 3): 2})


def _rule_du_val_degree_1(sings: tuple[SingularityType, ...]) -> bool:
    if not sings or not _du_val_only(sings):
        return True
    counts = Counter(sings)
    if all(s.family == "A" and s.index <= 7 for s in counts):
        return True
    return counts == Counter({ADE("D", 4): 2})


EXCLUSION_RULES: tuple[ExclusionRule, ...] = (
    ExclusionRule(
        "du-val-classification-d4",
        4,
        "A degree-4 limit with only du Val points is known to have exactly "
        "two or exactly four A1 singularities.",
        _rule_du_val_degree_4,
    ),
    ExclusionRule(
        "du-val-classification-d3",
        3,
        "A degree-3 limit with only du Val points is a cubic surface whose "
        "singularities are all A1, or exactly three A2.",
        _rule_du_val_degree_3,
    ),
    ExclusionRule(
        "du-val-classification-d2",
        2,
        "A degree-2 limit with only du Val points has singularities drawn "
        "from {A1, A2} only, or exactly two A3; in particular A4 points "
        "require a non-du-Val companion.",
        _rule_du_val_degree_2,
    ),
    ExclusionRule(
        "du-val-classification-d1",
        1,
        "A degree-1 limit with only du Val points has only A_k points with "
        "k <= 7, or exactly two D4.",
        _rule_du_val_degree_1,
    ),
)


@dataclass(frozen=True)
class DegreeRules:
    """Search space for one degree: allowed types, budget, exclusion rules."""

    degree: int
    allowed_types: tuple[SingularityType, ...]
    budget: Fraction
    exclusion_rules: tuple[ExclusionRule, ...]


def rules_for_degree(
    degree: int, exclusion_rules: Optional[Sequence[ExclusionRule]] = None
) -> DegreeRules:
    if degree not in _ALLOWED_TYPES:
        raise ValueError("Del Pezzo degeneration degree must be in 1..4")
    if exclusion_rules is None:
        rules = tuple(r for r in EXCLUSION_RULES if r.degree == degree)
    else:
        rules = tuple(exclusion_rules)
    allowed = tuple(sorted(_ALLOWED_TYPES[degree], key=catalog.sort_key))
    return DegreeRules(degree, allowed, Fraction(12 - degree), rules)


def check_pair_rule(degree: int, k: int, l: int) -> bool:
    """Whether {A_k, A_l} alone fits the degree-1 energy budget.

    Works out to k + l <= 9: the pair's energy is
    k + l + 2 - 1/(k+1) - 1/(l+1), which is < 11 exactly in that range.
    """
    if degree != 1:
        raise ValueError("the A_k/A_l pair rule is a degree-1 statement")
    energy = 12 * (
        catalog.mu_anticanonical(ADE("A", k)) + catalog.mu_anticanonical(ADE("A", l))
    )
    return energy < Fraction(11)


def _validated_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    return mode


def check_config(
    config: OrbifoldConfig,
    mode: str = WITH_EXCLUSIONS,
    exclusion_rules: Optional[Sequence[ExclusionRule]] = None,
) -> ConstraintReport:
    """Full admissibility report for one configuration at its degree."""
    _validated_mode(mode)
    if config.degree is None:
        raise ValueError("check_config needs the degeneration degree")
    rules = rules_for_degree(config.degree, exclusion_rules)
    sings = config.singularities
    try:
        twelve_mu = invariants.bubble_energy_from_mu(sings)
        hrr = invariants.hrr_milnor_check(config)
    except NotTabulatedError as exc:
        raise NotTabulatedError(
            f"type not admissible for this analysis: {exc}"
        ) from None
    sum_one_minus = sum(
        (1 - Fraction(1, catalog.group_order(s)) for s in sings), Fraction(0)
    )
    bubbles = invariants.bubble_count_bounds(twelve_mu)
    chi_orb = None
    chi_limit_value = None
    chi_limit_check = None
    if config.euler_topological is not None:
        chi_orb = invariants.chi_orb_from_chi(config.euler_topological, sings)
        chi_limit_value = chi_orb + twelve_mu
        chi_limit_check = invariants.IdentityCheck(
            "chi_limit_equals_12_minus_d",
            chi_limit_value,
            Fraction(12 - config.degree),
        )
    exclusions = {}
    if mode == WITH_EXCLUSIONS:
        exclusions = {r.name: r.passes(sings) for r in rules.exclusion_rules}
    allowed = set(rules.allowed_types)
    return ConstraintReport(
        config=config,
        twelve_sum_mu=twelve_mu,
        budget=rules.budget,
        sum_one_minus=sum_one_minus,
        hrr=hrr,
        bubbles=bubbles,
        chi_orb=chi_orb,
        chi_limit_value=chi_limit_value,
        chi_limit_check=chi_limit_check,
        exclusions=exclusions,
        allowed_types_ok=all(s in allowed for s in sings),
    )


def _descending_counts(
    energies: Sequence[Fraction], budget: Fraction, first_count: Optional[int] = None
) -> list[tuple[int, ...]]:
    """All count vectors with 0 < sum(c*e) < budget, in descending lex order.

    ``first_count`` pins the first type's multiplicity, which is how the
    search is partitioned for concurrent runs.
    """
    n = len(energies)
    counts = [0] * n
    out: list[tuple[int, ...]] = []

    def max_count(i: int, remaining: Fraction) -> int:
        # largest c with c * energies[i] strictly below remaining
        q = remaining / energies[i]
        c = int(q)
        return c - 1 if c == q else c

    def rec(i: int, total: Fraction) -> None:
        if i == n:
            if total > 0:
                out.append(tuple(counts))
            return
        top = max_count(i, budget - total)
        if i == 0 and first_count is not None:
            if first_count > top:
                return
            span = (first_count,)
        else:
            span = range(top, -1, -1)
        for c in span:
            counts[i] = c
            rec(i + 1, total + c * energies[i])
        counts[i] = 0

    rec(0, Fraction(0))
    return out


def _counts_to_sings(
    counts: Sequence[int], types: Sequence[SingularityType]
) -> tuple[SingularityType, ...]:
    out: list[SingularityType] = []
    for c, t in zip(counts, types):
        out.extend([t] * c)
    return tuple(out)


@dataclass
class EnumerationResult:
    """Everything the search found for one degree and mode."""

    degree: int
    mode: str
    reports: list[ConstraintReport]
    smooth: ConstraintReport

    @property
    def rules(self) -> DegreeRules:
        return rules_for_degree(self.degree)

    def max_multiplicity(self) -> dict[str, int]:
        """Per-type maximum multiplicity over the surviving configurations."""
        best = {t: 0 for t in self.rules.allowed_types}
        for report in self.reports:
            for t, c in Counter(report.config.singularities).items():
                if c > best.get(t, 0):
                    best[t] = c
        return {catalog.format_singularity(t): c for t, c in best.items()}

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "mode": self.mode,
            "configurations": [
                {
                    "singularities": [
                        catalog.format_singularity(s)
                        for s in r.config.singularities
                    ],
                    "twelve_sum_mu": rational_to_json(r.twelve_sum_mu),
                    "chi_orb_if_chi_known": (
                        rational_to_json(r.chi_orb) if r.chi_orb is not None else None
                    ),
                    "derived_picard_rank": rational_to_json(r.hrr.picard_rank),
                    "bubble_bounds": {
                        "min": r.bubbles.min_count,
                        "max": r.bubbles.max_count,
                        "exact_fit": r.bubbles.exact_fit,
                    },
                    "verdicts": r.verdicts(),
                }
                for r in self.reports
            ],
            "max_multiplicity": self.max_multiplicity(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"degree {self.degree}, mode {self.mode}: "
            f"{len(self.reports)} configurations "
            f"(energy budget 12*sum(mu) < {format_rational(self.rules.budget)})",
            "",
            "max multiplicity per type:",
        ]
        for name, count in self.max_multiplicity().items():
            lines.append(f"  {name}: {count}")
        lines.append("")
        lines.append("smooth case: 12*sum(mu) = 0, non-degenerating, "
                      f"picard rank {format_rational(self.smooth.hrr.picard_rank)}")
        lines.append("")
        width = max((len(r.config.notation()) for r in self.reports), default=0)
        for r in self.reports:
            rho = format_rational(r.hrr.picard_rank)
            flag = "" if r.hrr.picard_ok else "  [picard rank not positive integral]"
            lines.append(
                f"  {r.config.notation():<{width}}  12*sum(mu) = "
                f"{format_rational(r.twelve_sum_mu):>6}  rho = {rho}{flag}"
            )
        return "\n".join(lines)


def _survives(
    sings: tuple[SingularityType, ...], mode: str, rules: DegreeRules
) -> bool:
    if mode != WITH_EXCLUSIONS:
        return True
    return all(r.passes(sings) for r in rules.exclusion_rules)


def enumerate_configurations(
    degree: int,
    mode: str = WITH_EXCLUSIONS,
    exclusion_rules: Optional[Sequence[ExclusionRule]] = None,
    max_workers: Optional[int] = None,
) -> EnumerationResult:
    """Enumerate every configuration satisfying the degree's constraints.

    ``max_workers`` switches to a partitioned concurrent search (split on
    the first type's multiplicity); the merged output is canonically
    sorted and byte-identical to the serial run.
    """
    _validated_mode(mode)
    rules = rules_for_degree(degree, exclusion_rules)
    types = rules.allowed_types
    energies = [12 * catalog.mu_anticanonical(t) for t in types]

    if max_workers is None:
        vectors = _descending_counts(energies, rules.budget)
    else:
        first_counts = range(int(rules.budget / energies[0]), -1, -1)
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            chunks = pool.map(
                lambda c: _descending_counts(energies, rules.budget, first_count=c),
                first_counts,
            )
            vectors = [v for chunk in chunks for v in chunk]
        # canonical order: descending lexicographic count vectors, which is
        # exactly the serial DFS emission order
        vectors.sort(reverse=True)

    reports = []
    for vec in vectors:
        sings = _counts_to_sings(vec, types)
        if not _survives(sings, mode, rules):
            continue
        config = OrbifoldConfig(degree=degree, singularities=sings)
        reports.append(check_config(config, mode, rules.exclusion_rules))
    smooth = check_config(
        OrbifoldConfig(degree=degree, singularities=()), mode, rules.exclusion_rules
    )
    return EnumerationResult(degree, mode, reports, smooth)
