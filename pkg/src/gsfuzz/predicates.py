"""Decision procedures for the fuzzy subsemigroup/ideal predicates.

Two kinds of decider live here.  The closed-form ones check a pointwise
inequality (optionally capped at 1/2) by scanning all products.  The generic
(alpha, beta) decider quantifies over all point values t, r in (0,1]; that
quantification is reduced exactly to a finite cell sample, see
is_alpha_beta_subsemigroup.

All verdicts carry a witness when they are negative, chosen as the
lexicographically first failure in element / gamma / candidate-value order so
golden tests are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import EmptyFuzzySubset, InvalidAlpha, StructureMismatch
from .fuzzy import (
    HALF,
    IN,
    ONE,
    ZERO,
    FuzzySubset,
    PointRelation,
    RelKind,
)

__all__ = [
    "AlphaBetaPair",
    "PredicateVerdict",
    "Witness",
    "is_fuzzy_subsemigroup",
    "is_fuzzy_bi_ideal",
    "is_eq_subsemigroup",
    "is_eq_bi_ideal",
    "is_eq_one_sided_ideal",
    "is_eq_ideal",
    "subset_or_q",
    "is_alpha_beta_subsemigroup",
    "is_alpha_beta_bi_ideal",
    "consistency_eq_definitions",
    "check_by_name",
]


@dataclass(frozen=True)
class AlphaBetaPair:
    """(alpha, beta) with alpha in {in, q, invq}; beta may be any relation.

    The conjunction in-and-q is excluded as a premise (and negated premises
    are not part of the theory); negated beta is accepted by the decider.
    """

    alpha: PointRelation
    beta: PointRelation

    def __post_init__(self):
        if self.alpha.kind is RelKind.IN_AND_Q or self.alpha.negated:
            raise InvalidAlpha(f"alpha {self.alpha.token!r} not allowed")

    @classmethod
    def parse(cls, text: str) -> "AlphaBetaPair":
        alpha, _, beta = text.partition(",")
        if not beta:
            raise InvalidAlpha(f"expected 'ALPHA,BETA', got {text!r}")
        return cls(PointRelation.parse(alpha), PointRelation.parse(beta))


@dataclass(frozen=True)
class Witness:
    """Refuting data: elements x, y (and z), the operation(s), optional t, r."""

    x: int
    y: int
    gamma: int
    z: int | None = None
    delta: int | None = None
    t: Fraction | None = None
    r: Fraction | None = None


@dataclass(frozen=True)
class PredicateVerdict:
    holds: bool
    witness: Witness | None = None

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("witness must be present exactly when holds is false")


_TRUE = PredicateVerdict(True)


def _require_nonempty(mu: FuzzySubset) -> None:
    if mu.is_zero:
        raise EmptyFuzzySubset("the zero fuzzy subset is excluded")


def is_fuzzy_subsemigroup(mu: FuzzySubset) -> PredicateVerdict:
    """mu(x g y) >= min(mu(x), mu(y)) for all x, y, g."""
    _require_nonempty(mu)
    s, g = mu.structure, mu.grades
    for x in range(s.n):
        for y in range(s.n):
            bound = min(g[x], g[y])
            if bound == ZERO:
                continue
            for gm in range(s.k):
                if g[s.cayley[x][gm][y]] < bound:
                    return PredicateVerdict(False, Witness(x, y, gm))
    return _TRUE


def is_fuzzy_bi_ideal(mu: FuzzySubset) -> PredicateVerdict:
    """Fuzzy subsemigroup with mu(x a y b z) >= min(mu(x), mu(z))."""
    first = is_fuzzy_subsemigroup(mu)
    if not first.holds:
        return first
    s, g = mu.structure, mu.grades
    for x in range(s.n):
        for y in range(s.n):
            for z in range(s.n):
                bound = min(g[x], g[z])
                if bound == ZERO:
                    continue
                for a in range(s.k):
                    u = s.cayley[x][a][y]
                    for b in range(s.k):
                        if g[s.cayley[u][b][z]] < bound:
                            return PredicateVerdict(False, Witness(x, y, a, z, b))
    return _TRUE


def is_eq_subsemigroup(mu: FuzzySubset) -> PredicateVerdict:
    """mu(x g y) >= min(mu(x), mu(y), 1/2) for all x, y, g.

    Pairs outside the support are vacuous (the bound is 0 there), so this is
    the closed form of the (in, in-or-q) subsemigroup predicate.
    """
    _require_nonempty(mu)
    s, g = mu.structure, mu.grades
    for x in range(s.n):
        for y in range(s.n):
            bound = min(g[x], g[y], HALF)
            if bound == ZERO:
                continue
            for gm in range(s.k):
                if g[s.cayley[x][gm][y]] < bound:
                    return PredicateVerdict(False, Witness(x, y, gm))
    return _TRUE


def is_eq_bi_ideal(mu: FuzzySubset) -> PredicateVerdict:
    """is_eq_subsemigroup plus mu(x a y b z) >= min(mu(x), mu(z), 1/2)."""
    first = is_eq_subsemigroup(mu)
    if not first.holds:
        return first
    s, g = mu.structure, mu.grades
    for x in range(s.n):
        for y in range(s.n):
            for z in range(s.n):
                bound = min(g[x], g[z], HALF)
                if bound == ZERO:
                    continue
                for a in range(s.k):
                    u = s.cayley[x][a][y]
                    for b in range(s.k):
                        if g[s.cayley[u][b][z]] < bound:
                            return PredicateVerdict(False, Witness(x, y, a, z, b))
    return _TRUE


def is_eq_one_sided_ideal(mu: FuzzySubset, side: str) -> PredicateVerdict:
    """Left: mu(x g y) >= min(mu(y), 1/2).  Right: >= min(mu(x), 1/2)."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    _require_nonempty(mu)
    s, g = mu.structure, mu.grades
    for x in range(s.n):
        for y in range(s.n):
            bound = min(g[y] if side == "left" else g[x], HALF)
            if bound == ZERO:
                continue
            for gm in range(s.k):
                if g[s.cayley[x][gm][y]] < bound:
                    return PredicateVerdict(False, Witness(x, y, gm))
    return _TRUE


def is_eq_ideal(mu: FuzzySubset) -> PredicateVerdict:
    left = is_eq_one_sided_ideal(mu, "left")
    if not left.holds:
        return left
    return is_eq_one_sided_ideal(mu, "right")


def subset_or_q(nu: FuzzySubset, mu: FuzzySubset) -> bool:
    """nu is contained in-or-q in mu: every point x_r of nu is in-or-q mu.

    Closed form: for all x, mu(x) >= min(nu(x), 1 - mu(x)).  The point
    quantification fails iff some r in (0, nu(x)] has mu(x) < r and
    mu(x) + r <= 1, i.e. iff the interval (mu(x), min(nu(x), 1 - mu(x))]
    is non-empty.
    """
    if nu.structure != mu.structure:
        raise StructureMismatch("operands live over different structures")
    return all(
        m >= min(v, ONE - m) for v, m in zip(nu.grades, mu.grades)
    )


# ------------------------------------------------------------------
# Generic (alpha, beta) decider.
#
# The predicate quantifies t, r over the continuum (0,1].  Every atomic
# condition it evaluates is of the form value <= c or value > c where c is
# drawn from {mu(x), 1-mu(x), mu(y), 1-mu(y), mu(w), 1-mu(w), 1} (w the
# product), so the predicate is constant on each cell of the subdivision of
# (0,1] induced by those breakpoints.  min(t, r) of two cell representatives
# is itself the representative of the min cell, hence testing all pairs of
# representatives decides the full quantification exactly.
#
# Grades are rescaled to a common even integer base so breakpoints are even
# integers and every open cell contains an integer representative; the inner
# loops then run on plain ints.
# ------------------------------------------------------------------


def _scaled_grades(mu: FuzzySubset) -> tuple[list[int], int]:
    base = 2 * lcm(2, *(g.denominator for g in mu.grades))
    return [g.numerator * (base // g.denominator) for g in mu.grades], base


def _candidates(base: int, *grades: int) -> list[int]:
    breaks = sorted(
        {v for g in grades for v in (g, base - g) if 0 < v <= base} | {base}
    )
    cells = set(breaks)
    cells.add(breaks[0] // 2)
    cells.update((a + b) // 2 for a, b in zip(breaks, breaks[1:]))
    cells.discard(0)
    return sorted(cells)


def _premise_filter(alpha: PointRelation, g: int, base: int, cands: list[int]) -> list[int]:
    if alpha.kind is RelKind.IN:
        return [t for t in cands if t <= g]
    if alpha.kind is RelKind.Q:
        return [t for t in cands if g + t > base]
    return [t for t in cands if t <= g or g + t > base]


def _beta_holds(beta: PointRelation, g: int, m: int, base: int) -> bool:
    if beta.kind is RelKind.IN:
        result = g >= m
    elif beta.kind is RelKind.Q:
        result = g + m > base
    elif beta.kind is RelKind.IN_OR_Q:
        result = g >= m or g + m > base
    else:
        result = g >= m and g + m > base
    return not result if beta.negated else result


def is_alpha_beta_subsemigroup(mu: FuzzySubset, pair: AlphaBetaPair) -> PredicateVerdict:
    """x_t, y_r alpha mu implies (x g y)_min(t,r) beta mu, for all t, r.

    Decided exactly by cell sampling (see the note above); the witness
    carries the first failing candidate pair (t, r).
    """
    _require_nonempty(mu)
    s = mu.structure
    g, base = _scaled_grades(mu)
    for x in range(s.n):
        for y in range(s.n):
            for gm in range(s.k):
                w = s.cayley[x][gm][y]
                cands = _candidates(base, g[x], g[y], g[w])
                ts = _premise_filter(pair.alpha, g[x], base, cands)
                if not ts:
                    continue
                rs = _premise_filter(pair.alpha, g[y], base, cands)
                gw = g[w]
                for t in ts:
                    for r in rs:
                        if not _beta_holds(pair.beta, gw, t if t < r else r, base):
                            return PredicateVerdict(
                                False,
                                Witness(x, y, gm, t=Fraction(t, base), r=Fraction(r, base)),
                            )
    return _TRUE


def is_alpha_beta_bi_ideal(mu: FuzzySubset, pair: AlphaBetaPair) -> PredicateVerdict:
    """The subsemigroup predicate plus its triple form on x_t, z_r."""
    first = is_alpha_beta_subsemigroup(mu, pair)
    if not first.holds:
        return first
    s = mu.structure
    g, base = _scaled_grades(mu)
    for x in range(s.n):
        for y in range(s.n):
            for z in range(s.n):
                for a in range(s.k):
                    u = s.cayley[x][a][y]
                    for b in range(s.k):
                        w = s.cayley[u][b][z]
                        cands = _candidates(base, g[x], g[z], g[w])
                        ts = _premise_filter(pair.alpha, g[x], base, cands)
                        if not ts:
                            continue
                        rs = _premise_filter(pair.alpha, g[z], base, cands)
                        gw = g[w]
                        for t in ts:
                            for r in rs:
                                if not _beta_holds(pair.beta, gw, t if t < r else r, base):
                                    return PredicateVerdict(
                                        False,
                                        Witness(
                                            x, y, a, z, b,
                                            t=Fraction(t, base), r=Fraction(r, base),
                                        ),
                                    )
    return _TRUE


def consistency_eq_definitions(mu: FuzzySubset) -> bool:
    """The plain inequalities and the (in, in) point forms decide alike."""
    pair = AlphaBetaPair(IN, IN)
    sub_ok = is_fuzzy_subsemigroup(mu).holds == is_alpha_beta_subsemigroup(mu, pair).holds
    bi_ok = is_fuzzy_bi_ideal(mu).holds == is_alpha_beta_bi_ideal(mu, pair).holds
    return sub_ok and bi_ok


def check_by_name(name: str, mu: FuzzySubset) -> PredicateVerdict:
    """Dispatch the hyphenated predicate vocabulary used by files and reports.

    Known names: fuzzy-subsemigroup, fuzzy-bi-ideal, eq-subsemigroup,
    eq-bi-ideal, eq-left-ideal, eq-right-ideal, ab-subsemigroup:A,B and
    ab-bi-ideal:A,B with A/B drawn from in, q, invq, inandq.
    """
    simple = {
        "fuzzy-subsemigroup": is_fuzzy_subsemigroup,
        "fuzzy-bi-ideal": is_fuzzy_bi_ideal,
        "eq-subsemigroup": is_eq_subsemigroup,
        "eq-bi-ideal": is_eq_bi_ideal,
        "eq-left-ideal": lambda m: is_eq_one_sided_ideal(m, "left"),
        "eq-right-ideal": lambda m: is_eq_one_sided_ideal(m, "right"),
    }
    if name in simple:
        return simple[name](mu)
    head, _, spec = name.partition(":")
    if head == "ab-subsemigroup" and spec:
        return is_alpha_beta_subsemigroup(mu, AlphaBetaPair.parse(spec))
    if head == "ab-bi-ideal" and spec:
        return is_alpha_beta_bi_ideal(mu, AlphaBetaPair.parse(spec))
    raise ValueError(f"unknown predicate name {name!r}")
