"""Structure/fuzzy-subset generation, crisp enumeration, and witness search.

Pseudo-random generation uses SplitMix64 (Steele-Lea-Flood mixing, 64-bit),
implemented here so that every seeded stream is bit-identical across
platforms and Python versions.  Scan orders are pinned: structures in
generation order, fuzzy subsets in grid-lexicographic order over the grade
vector, elements in declaration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    BudgetExhausted,
    CarrierTooLarge,
    UnknownPredicateName,
)
from .fuzzy import FuzzySubset, characteristic, o05_product, pointwise_family
from .predicates import (
    AlphaBetaPair,
    check_by_name,
    is_alpha_beta_bi_ideal,
    is_alpha_beta_subsemigroup,
    is_eq_bi_ideal,
    is_eq_ideal,
    is_eq_one_sided_ideal,
    is_eq_subsemigroup,
    is_fuzzy_bi_ideal,
    is_fuzzy_subsemigroup,
)
from .structure import (
    CrispSubset,
    GammaSemigroup,
    is_bi_ideal,
    is_left_ideal,
    is_right_ideal,
    is_subsemigroup,
    subset_scan_limit,
    validate_structure,
)

MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit generator; the algorithm is part of the contract."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform draw from range(n), unbiased via rejection."""
        limit = MASK64 + 1 - (MASK64 + 1) % n
        while True:
            v = self.next64()
            if v < limit:
                return v % n


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    k: int
    seed: int = 0
    grid: int = 10
    count: int = 0

    def __post_init__(self):
        if self.n < 1 or self.k < 1 or self.grid < 1 or self.count < 0:
            raise ValueError("need n >= 1, k >= 1, grid >= 1, count >= 0")


# ---------------------------------------------------------------- fixtures

@dataclass(frozen=True)
class Expectation:
    """A golden pair: a predicate or evaluation label with its frozen value."""

    kind: str              # "pred" | "value" | "valid"
    subject: tuple = ()
    expected: object = True


@dataclass(frozen=True)
class Fixture:
    id: str
    structure: GammaSemigroup
    fuzzy: dict
    expected: tuple[Expectation, ...] = ()

    def verify(self) -> list[str]:
        """Re-check every golden pair; returns the labels that fail."""
        failures = []
        for exp in self.expected:
            if exp.kind == "valid":
                validate_structure(
                    self.structure.elements, self.structure.gammas, self.structure.cayley
                )
                got: object = True
            elif exp.kind == "pred":
                pred_name, fuzzy_name = exp.subject
                mu = self.fuzzy[fuzzy_name]
                got = check_by_name(pred_name, mu).holds
            elif exp.kind == "value":
                # o05 chain evaluated at one element: subject =
                # (names..., element) where name "1" means the full carrier.
                *names, element = exp.subject
                ones = characteristic(self.structure, range(self.structure.n))
                chain = [
                    ones if name == "1" else self.fuzzy[name] for name in names
                ]
                acc = chain[0]
                for nxt in chain[1:]:
                    acc = o05_product(acc, nxt)
                got = acc.grade_of(element)
            else:
                raise ValueError(f"unknown expectation kind {exp.kind!r}")
            if got != exp.expected:
                failures.append(f"{self.id}: {exp.kind}{exp.subject} = {got}, expected {exp.expected}")
        return failures


def _fixture_ex34() -> Fixture:
    s = validate_structure(
        ["e", "a", "b"],
        ["g"],
        [[[0, 0, 0]], [[0, 1, 0]], [[0, 0, 2]]],
    )
    mu = FuzzySubset.from_mapping(s, {"e": "1/2", "a": "3/5", "b": "3/5"})
    return Fixture(
        "ex3.4",
        s,
        {"mu": mu},
        (
            Expectation("pred", ("eq-subsemigroup", "mu"), True),
            Expectation("pred", ("fuzzy-subsemigroup", "mu"), False),
        ),
    )


def _fixture_ex46() -> Fixture:
    s = validate_structure(
        ["a", "b", "c", "d", "e"],
        ["g"],
        [
            [[0, 3, 0, 3, 3]],
            [[0, 1, 0, 3, 3]],
            [[0, 3, 2, 3, 4]],
            [[0, 3, 0, 3, 3]],
            [[0, 3, 2, 3, 4]],
        ],
    )
    mu = FuzzySubset.from_mapping(
        s, {"a": "4/5", "b": "7/10", "c": "3/10", "d": "1/2", "e": "3/5"}
    )
    return Fixture(
        "ex4.6",
        s,
        {"mu": mu},
        (
            Expectation("pred", ("eq-subsemigroup", "mu"), True),
            Expectation("pred", ("eq-bi-ideal", "mu"), True),
            Expectation("pred", ("ab-subsemigroup:in,in", "mu"), False),
            Expectation("pred", ("ab-bi-ideal:in,in", "mu"), False),
        ),
    )


def _fixture_ex427() -> Fixture:
    s = validate_structure(
        ["a", "b", "c"],
        ["g"],
        [[[0, 0, 0]], [[1, 1, 1]], [[2, 2, 2]]],
    )
    mu = FuzzySubset.from_mapping(s, {"a": "4/5", "b": "7/10", "c": "3/5"})
    return Fixture(
        "ex4.27",
        s,
        {"mu": mu},
        (
            Expectation("pred", ("eq-subsemigroup", "mu"), True),
            Expectation("pred", ("eq-bi-ideal", "mu"), True),
            Expectation("value", ("mu", "mu", "a"), Fraction(1, 2)),
            Expectation("value", ("mu", "1", "mu", "a"), Fraction(1, 2)),
        ),
    )


def mod_surrogate(n: int = 12) -> Fixture:
    """Z_n with x g y = x*g*y mod n for g in {5, 7}.

    Finite stand-in for the classic example over the naturals with
    Gamma = {5, 7}; same multiplication formula, carrier reduced mod n.
    """
    elements = [str(i) for i in range(n)]
    gammas = ["5", "7"]
    cube = [
        [[(x * g * y) % n for y in range(n)] for g in (5, 7)] for x in range(n)
    ]
    s = validate_structure(elements, gammas, cube)
    return Fixture(f"ex2.1-mod-{n}", s, {}, (Expectation("valid"),))


def fixtures() -> list[Fixture]:
    return [_fixture_ex34(), _fixture_ex46(), _fixture_ex427(), mod_surrogate()]


# ------------------------------------------------------------- generation

def _assoc_table(tab: Sequence[Sequence[int]], n: int) -> bool:
    for x in range(n):
        row = tab[x]
        for y in range(n):
            xy = row[y]
            for z in range(n):
                if tab[xy][z] != row[tab[y][z]]:
                    return False
    return True


def _mixed_assoc(t1, t2, n: int) -> bool:
    for x in range(n):
        for y in range(n):
            a, b = t1[x][y], t2[x][y]
            for z in range(n):
                if t2[a][z] != t1[x][t2[y][z]]:
                    return False
                if t1[b][z] != t2[x][t1[y][z]]:
                    return False
    return True


def _names(n: int, k: int) -> tuple[list[str], list[str]]:
    return [f"e{i}" for i in range(n)], [f"g{i}" for i in range(k)]


def _cube_from_tables(tables):
    n = len(tables[0])
    return tuple(tuple(tuple(t[x]) for t in tables) for x in range(n))


def _exhaustive(config: GeneratorConfig) -> Iterator[GammaSemigroup]:
    n, k = config.n, config.k
    if n > 3 or k > 2:
        raise CarrierTooLarge("exhaustive enumeration is limited to n <= 3, k <= 2")
    elements, gammas = _names(n, k)
    singles = []
    for flat in product(range(n), repeat=n * n):
        tab = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        if _assoc_table(tab, n):
            singles.append(tab)
    if k == 1:
        tabsets: Iterable = ((t,) for t in singles)
    else:
        tabsets = (
            (t1, t2)
            for t1 in singles
            for t2 in singles
            if _mixed_assoc(t1, t2, n)
        )
    emitted = 0
    for tabs in tabsets:
        yield GammaSemigroup(tuple(elements), tuple(gammas), _cube_from_tables(tabs))
        emitted += 1
        if config.count and emitted >= config.count:
            return


def generate_structures(
    config: GeneratorConfig, *, exhaustive: bool = False, budget: int = 10 ** 6
) -> Iterator[GammaSemigroup]:
    """Stream of validated structures, deterministic for a given config.

    Random mode draws n x k x n cubes from SplitMix64(seed) and keeps the
    associative ones (rejection); duplicates are possible.  Exhaustive mode
    enumerates all cubes in lexicographic order (n <= 3, k <= 2); there
    count = 0 means the whole corpus.
    """
    if exhaustive:
        yield from _exhaustive(config)
        return
    n, k = config.n, config.k
    elements, gammas = _names(n, k)
    rng = SplitMix64(config.seed)
    emitted = 0
    attempts = 0
    while emitted < config.count:
        if attempts >= budget:
            raise BudgetExhausted(
                f"{attempts} rejection attempts produced {emitted}/{config.count}"
            )
        attempts += 1
        cube = tuple(
            tuple(tuple(rng.below(n) for _ in range(n)) for _ in range(k))
            for _ in range(n)
        )
        tables = [
            tuple(cube[x][g] for x in range(n)) for g in range(k)
        ]
        if not all(_assoc_table(t, n) for t in tables):
            continue
        if k > 1 and not all(
            _mixed_assoc(tables[i], tables[j], n)
            for i in range(k) for j in range(k) if i != j
        ):
            continue
        yield GammaSemigroup(tuple(elements), tuple(gammas), cube)
        emitted += 1


def grid_subsets(structure: GammaSemigroup, grid: int) -> Iterator[FuzzySubset]:
    """All non-zero fuzzy subsets with grades in {0, 1/d, ..., 1}, lex order."""
    for vec in product(range(grid + 1), repeat=structure.n):
        if not any(vec):
            continue
        yield FuzzySubset(structure, tuple(Fraction(v, grid) for v in vec))


def random_fuzzy(structure: GammaSemigroup, config: GeneratorConfig) -> Iterator[FuzzySubset]:
    """Seeded stream of non-zero fuzzy subsets with grades on the d-grid."""
    rng = SplitMix64(config.seed)
    emitted = 0
    while emitted < config.count:
        vec = tuple(Fraction(rng.below(config.grid + 1), config.grid) for _ in range(structure.n))
        if not any(vec):
            continue
        yield FuzzySubset(structure, vec)
        emitted += 1


def sample_eq_bi_ideals(
    structure: GammaSemigroup, count: int, seed: int, grid: int = 10,
    max_attempts: int = 0,
) -> list[FuzzySubset]:
    """Up to `count` seeded random (in, in-or-q)-fuzzy bi-ideals.

    Rejection-filters seeded grid draws; may return fewer than `count` if
    the attempt cap (default 400 per requested sample) runs out.
    """
    cap = max_attempts or 400 * max(count, 1)
    rng = SplitMix64(seed)
    out: list[FuzzySubset] = []
    for _ in range(cap):
        if len(out) >= count:
            break
        vec = tuple(Fraction(rng.below(grid + 1), grid) for _ in range(structure.n))
        if not any(vec):
            continue
        mu = FuzzySubset(structure, vec)
        if is_eq_bi_ideal(mu).holds:
            out.append(mu)
    return out


# ------------------------------------------------------------ enumeration

_CRISP_KINDS: dict[str, Callable] = {
    "subsemigroup": is_subsemigroup,
    "left_ideal": is_left_ideal,
    "right_ideal": is_right_ideal,
    "bi_ideal": is_bi_ideal,
}


def enumerate_crisp(structure: GammaSemigroup, kind: str) -> list[CrispSubset]:
    """All non-empty subsets of the requested kind, ascending by bitmask."""
    check = _CRISP_KINDS.get(kind)
    if check is None:
        raise ValueError(f"kind must be one of {sorted(_CRISP_KINDS)}")
    if structure.n > subset_scan_limit():
        raise CarrierTooLarge(
            f"2^{structure.n} subset scan exceeds the cap (n <= {subset_scan_limit()})"
        )
    out = []
    for mask in range(1, 1 << structure.n):
        a = frozenset(i for i in range(structure.n) if mask >> i & 1)
        if check(structure, a):
            out.append(a)
    return out


# ---------------------------------------------------------- witness search

def _build_registry() -> dict[str, tuple[str, Callable]]:
    reg: dict[str, tuple[str, Callable]] = {
        "fuzzy_subsemigroup": ("unary", lambda mu: is_fuzzy_subsemigroup(mu).holds),
        "fuzzy_bi_ideal": ("unary", lambda mu: is_fuzzy_bi_ideal(mu).holds),
        "eq_subsemigroup": ("unary", lambda mu: is_eq_subsemigroup(mu).holds),
        "eq_bi_ideal": ("unary", lambda mu: is_eq_bi_ideal(mu).holds),
        "eq_left_ideal": ("unary", lambda mu: is_eq_one_sided_ideal(mu, "left").holds),
        "eq_right_ideal": ("unary", lambda mu: is_eq_one_sided_ideal(mu, "right").holds),
        "eq_ideal": ("unary", lambda mu: is_eq_ideal(mu).holds),
        "union_of_two_eq_subsemigroups": (
            "pair",
            lambda m1, m2: is_eq_subsemigroup(m1).holds and is_eq_subsemigroup(m2).holds,
        ),
        "union_of_two_eq_bi_ideals": (
            "pair",
            lambda m1, m2: is_eq_bi_ideal(m1).holds and is_eq_bi_ideal(m2).holds,
        ),
    }
    for a in ("in", "q", "invq"):
        for b in ("in", "q", "invq", "inandq"):
            pair = AlphaBetaPair.parse(f"{a},{b}")
            reg[f"{a}_{b}_subsemigroup"] = (
                "unary",
                lambda mu, p=pair: is_alpha_beta_subsemigroup(mu, p).holds,
            )
            reg[f"{a}_{b}_bi_ideal"] = (
                "unary",
                lambda mu, p=pair: is_alpha_beta_bi_ideal(mu, p).holds,
            )
    return reg


PREDICATE_REGISTRY = _build_registry()


class _Expr:
    """Parsed boolean combination of named predicates."""

    def __init__(self, kind: str, *parts):
        self.kind = kind
        self.parts = parts

    def atoms(self) -> set:
        if self.kind == "atom":
            return {self.parts[0]}
        return set().union(*(p.atoms() for p in self.parts))

    def evaluate(self, lookup: Callable) -> bool:
        if self.kind == "atom":
            return lookup(self.parts[0])
        if self.kind == "not":
            return not self.parts[0].evaluate(lookup)
        if self.kind == "and":
            return all(p.evaluate(lookup) for p in self.parts)
        return any(p.evaluate(lookup) for p in self.parts)


def parse_want(text: str) -> _Expr:
    """Grammar: expr := term (OR term)*; term := fact (AND fact)*;
    fact := NOT fact | ( expr ) | NAME."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def fact() -> _Expr:
        tok = peek()
        if tok is None:
            raise UnknownPredicateName("unexpected end of expression")
        if tok.upper() == "NOT":
            take()
            return _Expr("not", fact())
        if tok == "(":
            take()
            e = expr()
            if peek() != ")":
                raise UnknownPredicateName("missing closing parenthesis")
            take()
            return e
        name = take().lower()
        if name not in PREDICATE_REGISTRY:
            raise UnknownPredicateName(f"unknown predicate {name!r}")
        return _Expr("atom", name)

    def term() -> _Expr:
        parts = [fact()]
        while peek() and peek().upper() == "AND":
            take()
            parts.append(fact())
        return parts[0] if len(parts) == 1 else _Expr("and", *parts)

    def expr() -> _Expr:
        parts = [term()]
        while peek() and peek().upper() == "OR":
            take()
            parts.append(term())
        return parts[0] if len(parts) == 1 else _Expr("or", *parts)

    out = expr()
    if peek() is not None:
        raise UnknownPredicateName(f"trailing token {peek()!r}")
    return out


@dataclass(frozen=True)
class WitnessSearch:
    found: bool
    structure: GammaSemigroup | None
    subsets: tuple[FuzzySubset, ...]
    structures_scanned: int
    subsets_scanned: int

    @property
    def exhausted(self) -> bool:
        return not self.found


def find_witness(
    structures: Iterable[GammaSemigroup], want: str, grid: int
) -> WitnessSearch:
    """First (structure, fuzzy subset(s)) satisfying the predicate expression.

    Unary predicates are evaluated on each grid subset; if the expression
    mentions a pair predicate, ordered pairs of grid subsets are scanned and
    the unary predicates apply to their pointwise union (the witness tuple is
    then (mu1, mu2, union)).  Scan order is the deterministic structure /
    grid-lexicographic order, so the first hit is well defined; with no hit
    the bounds scanned are reported.
    """
    tree = parse_want(want)
    pair_mode = any(
        PREDICATE_REGISTRY[name][0] == "pair" for name in tree.atoms()
    )
    n_struct = 0
    n_sub = 0
    for s in structures:
        n_struct += 1
        if not pair_mode:
            for mu in grid_subsets(s, grid):
                n_sub += 1

                def lookup(name: str, mu=mu) -> bool:
                    return PREDICATE_REGISTRY[name][1](mu)

                if tree.evaluate(lookup):
                    return WitnessSearch(True, s, (mu,), n_struct, n_sub)
        else:
            pool = list(grid_subsets(s, grid))
            for m1 in pool:
                for m2 in pool:
                    n_sub += 1
                    union = pointwise_family("max", [m1, m2])

                    def lookup(name: str, m1=m1, m2=m2, union=union) -> bool:
                        mode, fn = PREDICATE_REGISTRY[name]
                        return fn(m1, m2) if mode == "pair" else fn(union)

                    if tree.evaluate(lookup):
                        return WitnessSearch(True, s, (m1, m2, union), n_struct, n_sub)
    return WitnessSearch(False, None, (), n_struct, n_sub)
