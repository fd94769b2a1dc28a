"""Machine verification of the equivalence and characterization theorems.

Each report evaluates the listed conditions of one named theorem by
independent routes and records whether all condition flags agree.  A
disagreement is either a build error or a genuine counterexample, so reports
carry the refuting data.

Theorems quantifying over *all* fuzzy bi-ideals (thm4.28, thm4.29) cannot be
checked universally; their reports check the forward direction on caller
supplied samples and recover the converse through the characteristic
functions of all crisp bi-ideals, which is all their proofs consume.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SampleNotBiIdeal, StructureMismatch
from .fuzzy import (
    HALF,
    IN,
    IN_OR_Q,
    ZERO,
    FuzzySubset,
    cap05,
    characteristic,
    constant,
    critical_thresholds,
    level_sets,
    o05_product,
    o_product,
    pointwise_leq,
)
from .predicates import (
    AlphaBetaPair,
    is_alpha_beta_bi_ideal,
    is_alpha_beta_subsemigroup,
    is_eq_bi_ideal,
    is_eq_subsemigroup,
    subset_or_q,
)
from .structure import (
    GammaSemigroup,
    Homomorphism,
    classify_structure,
    classify_subset,
)

EQ = AlphaBetaPair(IN, IN_OR_Q)


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    condition_flags: tuple[bool, ...]
    agree: bool
    discrepancy: tuple[tuple[int, ...], str] | None = None

    def __post_init__(self):
        consistent = all(self.condition_flags) or not any(self.condition_flags)
        if self.agree != consistent:
            raise ValueError("agree must match the condition flags")
        if self.agree != (self.discrepancy is None):
            raise ValueError("discrepancy must be present exactly when flags disagree")


def _report(theorem_id: str, flags: Sequence[bool], detail: str) -> TheoremReport:
    flags = tuple(flags)
    if all(flags) or not any(flags):
        return TheoremReport(theorem_id, flags, True)
    minority = False if sum(flags) * 2 > len(flags) else True
    indices = tuple(i for i, f in enumerate(flags) if f is minority)
    return TheoremReport(theorem_id, flags, False, (indices, detail))


def _grades_detail(mu: FuzzySubset) -> str:
    return " ".join(str(g) for g in mu.grades)


def _cap_half(mu: FuzzySubset) -> FuzzySubset:
    """Pointwise min with the constant 1/2 (the 0.5_S cap).

    Capping with 1/2 only on the support of mu would be strictly weaker: a
    pair or triple product can land outside the support, where a support cap
    zeroes the condition out (take the characteristic function of the
    identity in the 2-element group), and the five-way equivalences below
    would not survive.  The constant cap keeps them exact.
    """
    return FuzzySubset(mu.structure, tuple(min(g, HALF) for g in mu.grades))


def _level_is(mu: FuzzySubset, check, upper=HALF) -> bool:
    """check holds on every non-empty level set mu_r with r critical in (0, upper]."""
    s = mu.structure
    for r in critical_thresholds(mu):
        if r > upper:
            continue
        level = frozenset(i for i, g in enumerate(mu.grades) if g >= r)
        if level and not check(s, level):
            return False
    return True


def report_subsemigroup_equivalences(mu: FuzzySubset) -> TheoremReport:
    """thm3.2: five equivalent forms of the (in, in-or-q) subsemigroup predicate.

    (1) the point-implication form, decided by cell sampling;
    (2) the 1/2-capped inequality;
    (3) mu o mu is contained in-or-q in mu;
    (4) mu o mu capped at 1/2 <= mu pointwise;
    (5) every non-empty level set at critical r <= 1/2 is a subsemigroup.
    """
    square = o_product(mu, mu)
    flags = (
        is_alpha_beta_subsemigroup(mu, EQ).holds,
        is_eq_subsemigroup(mu).holds,
        subset_or_q(square, mu),
        pointwise_leq(_cap_half(square), mu),
        _level_is(mu, lambda s, a: classify_subset(s, a).subsemigroup),
    )
    return _report("thm3.2", flags, _grades_detail(mu))


def report_bi_ideal_equivalences(mu: FuzzySubset) -> TheoremReport:
    """thm3.5: the bi-ideal analogue, middle factor the characteristic of S.

    The theorem is scoped to (in, in-or-q) subsemigroups, so the product
    conditions (3) and (4) are taken in conjunction with that hypothesis;
    (1), (2) and (5) carry it already.
    """
    s = mu.structure
    hypothesis = is_eq_subsemigroup(mu).holds
    triple = o_product(o_product(mu, characteristic(s, range(s.n))), mu)
    flags = (
        is_alpha_beta_bi_ideal(mu, EQ).holds,
        is_eq_bi_ideal(mu).holds,
        hypothesis and subset_or_q(triple, mu),
        hypothesis and pointwise_leq(_cap_half(triple), mu),
        _level_is(mu, lambda st, a: classify_subset(st, a).bi_ideal),
    )
    return _report("thm3.5", flags, _grades_detail(mu))


def report_level_characterization(mu: FuzzySubset, kind: str = "subsemigroup") -> TheoremReport:
    """thm4.23 / thm4.24: the predicate holds iff every non-empty [mu]_t does.

    [mu]_t = U(mu;t) union Q(mu;t); t ranges over (0,1], decided on the
    critical thresholds of mu.
    """
    if kind == "subsemigroup":
        theorem_id, pred = "thm4.23", is_eq_subsemigroup
        crisp = lambda s, a: classify_subset(s, a).subsemigroup
    elif kind == "bi_ideal":
        theorem_id, pred = "thm4.24", is_eq_bi_ideal
        crisp = lambda s, a: classify_subset(s, a).bi_ideal
    else:
        raise ValueError("kind must be 'subsemigroup' or 'bi_ideal'")
    s = mu.structure
    brackets_ok = True
    for t in critical_thresholds(mu):
        bracket = level_sets(mu, t).bracket
        if bracket and not crisp(s, bracket):
            brackets_ok = False
            break
    flags = (pred(mu).holds, brackets_ok)
    return _report(theorem_id, flags, _grades_detail(mu))


def report_product_characterization(mu: FuzzySubset, kind: str = "subsemigroup") -> TheoremReport:
    """thm4.25: eq-subsemigroup iff mu o05 mu <= mu.

    thm4.26: eq-bi-ideal iff mu o05 mu <= mu and mu o05 1 o05 mu <= mu.
    """
    s = mu.structure
    one = characteristic(s, range(s.n))
    square_ok = pointwise_leq(o05_product(mu, mu), mu)
    if kind == "subsemigroup":
        flags = (is_eq_subsemigroup(mu).holds, square_ok)
        return _report("thm4.25", flags, _grades_detail(mu))
    if kind == "bi_ideal":
        sandwich_ok = pointwise_leq(o05_product(o05_product(mu, one), mu), mu)
        flags = (is_eq_bi_ideal(mu).holds, square_ok and sandwich_ok)
        return _report("thm4.26", flags, _grades_detail(mu))
    raise ValueError("kind must be 'subsemigroup' or 'bi_ideal'")


def image(f: Homomorphism, mu: FuzzySubset) -> FuzzySubset:
    """f(mu)(x') = max of mu over the fiber of x'; empty fibers get 0."""
    if mu.structure != f.source:
        raise StructureMismatch("fuzzy subset does not live over the source")
    grades = [ZERO] * f.target.n
    for x, g in enumerate(mu.grades):
        xi = f.mapping[x]
        if g > grades[xi]:
            grades[xi] = g
    return FuzzySubset(f.target, tuple(grades))


def preimage(f: Homomorphism, mu_prime: FuzzySubset) -> FuzzySubset:
    """f^{-1}(mu')(x) = mu'(f(x))."""
    if mu_prime.structure != f.target:
        raise StructureMismatch("fuzzy subset does not live over the target")
    return FuzzySubset(f.source, tuple(mu_prime.grades[f.mapping[x]] for x in range(f.source.n)))


def is_f_invariant(mu: FuzzySubset, f: Homomorphism) -> bool:
    """mu is constant on every fiber of f."""
    if mu.structure != f.source:
        raise StructureMismatch("fuzzy subset does not live over the source")
    seen: dict = {}
    for x, g in enumerate(mu.grades):
        prev = seen.setdefault(f.mapping[x], g)
        if prev != g:
            return False
    return True


def _characteristic_bi_ideals(s: GammaSemigroup) -> list[FuzzySubset]:
    from .search import enumerate_crisp

    return [characteristic(s, b) for b in enumerate_crisp(s, "bi_ideal")]


def _vet_samples(samples: Iterable[FuzzySubset]) -> list[FuzzySubset]:
    vetted = []
    for mu in samples:
        if not is_eq_bi_ideal(mu).holds:
            raise SampleNotBiIdeal(f"sample with grades {_grades_detail(mu)}")
        vetted.append(mu)
    return vetted


def report_regularity_characterization(
    s: GammaSemigroup, fuzzy_samples: Iterable[FuzzySubset] = ()
) -> TheoremReport:
    """thm4.28: regular iff mu o05 1 o05 mu = mu meet 0.5_S for bi-ideals mu.

    Checked over the supplied (in, in-or-q) bi-ideal samples plus the
    characteristic functions of all crisp bi-ideals; the latter make the
    converse direction exact.
    """
    samples = _vet_samples(fuzzy_samples) + _characteristic_bi_ideals(s)
    one = characteristic(s, range(s.n))
    half = constant(s, HALF)
    equal = all(
        o05_product(o05_product(mu, one), mu) == cap05(mu, half) for mu in samples
    )
    flags = (classify_structure(s).regular, equal)
    return _report("thm4.28", flags, f"n={s.n} k={s.k}")


def report_regular_intra_characterization(
    s: GammaSemigroup,
    fuzzy_samples: Sequence[FuzzySubset] = (),
    pairs: Iterable[tuple[FuzzySubset, FuzzySubset]] | None = None,
) -> TheoremReport:
    """thm4.29: regular and intra-regular iff (2) iff (3).

    (2) mu o05 mu = mu meet 0.5_S for every sampled bi-ideal mu;
    (3) mu cap05 nu = (mu o05 nu) cap05 (nu o05 mu) for the sampled pairs.
    Characteristic bi-ideals are always included (all pairs of them), which
    carries the converse; supplied samples are paired consecutively unless
    explicit pairs are given.
    """
    samples = _vet_samples(fuzzy_samples)
    chars = _characteristic_bi_ideals(s)
    half = constant(s, HALF)

    everything = samples + chars
    squares_ok = all(o05_product(mu, mu) == cap05(mu, half) for mu in everything)

    if pairs is None:
        pair_list = [(p, q) for p in chars for q in chars]
        pair_list += list(zip(samples, samples[1:]))
    else:
        pair_list = list(pairs)
    pairs_ok = all(
        cap05(mu, nu) == cap05(o05_product(mu, nu), o05_product(nu, mu))
        for mu, nu in pair_list
    )

    crisp = classify_structure(s)
    flags = (crisp.regular and crisp.intra_regular, squares_ok, pairs_ok)
    return _report("thm4.29", flags, f"n={s.n} k={s.k}")
