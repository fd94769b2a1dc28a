"""Finite Gamma-semigroups and their crisp structural predicates.

A Gamma-semigroup is a carrier S together with a family of binary operations
indexed by a second finite set Gamma, written x g y, subject to the mixed
associativity law (x b y) g z = x b (y g z) for all elements and all b, g.
The operation family is stored as an n x k x n cube of element indices, so
every product is a single indexed lookup.

Element and gamma identifiers are arbitrary strings; they are mapped to dense
indices on construction and all computation below is index-based.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import (
    AssociativityViolation,
    CarrierTooLarge,
    DuplicateName,
    EmptyCarrier,
    EmptyGammaSet,
    GammaMismatch,
    HomomorphismViolation,
    IndexOutOfRange,
    OutOfRangeEntry,
)

Cube = tuple[tuple[tuple[int, ...], ...], ...]

# Crisp subsets are frozensets of element indices.
CrispSubset = frozenset

DEFAULT_SUBSET_SCAN_LIMIT = 16


def subset_scan_limit() -> int:
    """Carrier-size cap for 2^n subset scans (env GSF_MAX_SUBSET_SCAN)."""
    raw = os.environ.get("GSF_MAX_SUBSET_SCAN")
    return int(raw) if raw else DEFAULT_SUBSET_SCAN_LIMIT


@dataclass(frozen=True)
class GammaSemigroup:
    """A validated finite Gamma-semigroup.

    cayley[x][g][y] is the index of the product x g y.  Instances should be
    built through validate_structure, which checks closure and associativity.
    """

    elements: tuple[str, ...]
    gammas: tuple[str, ...]
    cayley: Cube

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def k(self) -> int:
        return len(self.gammas)

    def op(self, x: int, g: int, y: int) -> int:
        return self.cayley[x][g][y]

    @cached_property
    def element_index(self) -> dict:
        return {name: i for i, name in enumerate(self.elements)}

    @cached_property
    def gamma_index(self) -> dict:
        return {name: i for i, name in enumerate(self.gammas)}

    @cached_property
    def factor_pairs(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each element a, the (y, z) pairs with y g z = a for some g."""
        pairs: list[set] = [set() for _ in range(self.n)]
        for y in range(self.n):
            for row in self.cayley[y]:
                for z in range(self.n):
                    pairs[row[z]].add((y, z))
        return tuple(tuple(sorted(s)) for s in pairs)

    def subset_of_names(self, names: Iterable[str]) -> CrispSubset:
        return frozenset(self.element_index[name] for name in names)

    def names_of(self, subset: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in sorted(subset))


def validate_structure(
    elements: Sequence[str], gammas: Sequence[str], raw_cube: Sequence
) -> GammaSemigroup:
    """Check closure and mixed associativity; return the validated structure.

    Raises EmptyCarrier / EmptyGammaSet / DuplicateName on malformed carriers,
    OutOfRangeEntry on a cube cell that is not an element index, and
    AssociativityViolation carrying the first failing quintuple (x,b,y,g,z)
    in element/gamma scan order together with both evaluations.
    """
    elements = tuple(elements)
    gammas = tuple(gammas)
    if not elements:
        raise EmptyCarrier("carrier must contain at least one element")
    if not gammas:
        raise EmptyGammaSet("gamma set must contain at least one symbol")
    if len(set(elements)) != len(elements):
        raise DuplicateName("duplicate element identifier")
    if len(set(gammas)) != len(gammas):
        raise DuplicateName("duplicate gamma identifier")

    n, k = len(elements), len(gammas)
    if len(raw_cube) != n or any(
        len(plane) != k or any(len(row) != n for row in plane) for plane in raw_cube
    ):
        raise ValueError(f"cube must have shape {n}x{k}x{n}")

    cube: Cube = tuple(tuple(tuple(row) for row in plane) for plane in raw_cube)
    for x in range(n):
        for g in range(k):
            for y in range(n):
                v = cube[x][g][y]
                if not isinstance(v, int) or not 0 <= v < n:
                    raise OutOfRangeEntry(elements[x], gammas[g], elements[y], v)

    for x in range(n):
        for b in range(k):
            for y in range(n):
                for g in range(k):
                    for z in range(n):
                        left = cube[cube[x][b][y]][g][z]
                        right = cube[x][b][cube[y][g][z]]
                        if left != right:
                            raise AssociativityViolation(
                                elements[x], gammas[b], elements[y],
                                gammas[g], elements[z],
                                elements[left], elements[right],
                            )
    return GammaSemigroup(elements, gammas, cube)


def _check_subset(s: GammaSemigroup, a: Iterable[int]) -> CrispSubset:
    a = frozenset(a)
    for i in a:
        if not isinstance(i, int) or not 0 <= i < s.n:
            raise IndexOutOfRange(f"element index {i!r} out of range")
    return a


def gamma_product(s: GammaSemigroup, a: Iterable[int], b: Iterable[int]) -> CrispSubset:
    """A Gamma B = {x g y : x in A, y in B, g in Gamma}."""
    a = _check_subset(s, a)
    b = _check_subset(s, b)
    return frozenset(s.cayley[x][g][y] for x in a for g in range(s.k) for y in b)


@dataclass(frozen=True)
class SubsetClassification:
    empty: bool
    subsemigroup: bool
    left_ideal: bool
    right_ideal: bool
    bi_ideal: bool


def is_left_ideal(s: GammaSemigroup, a: CrispSubset) -> bool:
    return all(s.cayley[x][g][y] in a for x in range(s.n) for g in range(s.k) for y in a)


def is_right_ideal(s: GammaSemigroup, a: CrispSubset) -> bool:
    return all(s.cayley[x][g][y] in a for x in a for g in range(s.k) for y in range(s.n))


def is_subsemigroup(s: GammaSemigroup, a: CrispSubset) -> bool:
    return all(s.cayley[x][g][y] in a for x in a for g in range(s.k) for y in a)


def is_bi_ideal(s: GammaSemigroup, a: CrispSubset) -> bool:
    """Subsemigroup with A Gamma S Gamma A contained in A."""
    if not is_subsemigroup(s, a):
        return False
    return all(
        s.cayley[s.cayley[x][g][m]][h][y] in a
        for x in a for g in range(s.k) for m in range(s.n)
        for h in range(s.k) for y in a
    )


def classify_subset(s: GammaSemigroup, a: Iterable[int]) -> SubsetClassification:
    """Crisp flags for A: subsemigroup, one-sided ideals, bi-ideal.

    The empty set is reported with all flags false and empty=True; the crisp
    notions require non-empty subsets.
    """
    a = _check_subset(s, a)
    if not a:
        return SubsetClassification(True, False, False, False, False)
    sub = is_subsemigroup(s, a)
    return SubsetClassification(
        empty=False,
        subsemigroup=sub,
        left_ideal=is_left_ideal(s, a),
        right_ideal=is_right_ideal(s, a),
        bi_ideal=sub and is_bi_ideal(s, a),
    )


@dataclass(frozen=True)
class StructureClassification:
    regular: bool
    intra_regular: bool
    left_duo: bool
    right_duo: bool
    duo: bool


def is_regular(s: GammaSemigroup) -> bool:
    """Every a equals a x b x' a for some x and operation pair (exhaustive)."""
    rng, ops = range(s.n), range(s.k)
    for a in rng:
        if not any(
            s.cayley[s.cayley[a][al][x]][be][a] == a
            for x in rng for al in ops for be in ops
        ):
            return False
    return True


def is_intra_regular(s: GammaSemigroup) -> bool:
    """Every a equals x a a y under some choice of operators (exhaustive)."""
    rng, ops = range(s.n), range(s.k)
    for a in rng:
        hit = False
        for x in rng:
            for al in ops:
                u = s.cayley[x][al][a]
                for be in ops:
                    v = s.cayley[u][be][a]
                    if any(s.cayley[v][ga][y] == a for ga in ops for y in rng):
                        hit = True
                        break
                if hit:
                    break
            if hit:
                break
        if not hit:
            return False
    return True


def _nonempty_subsets(n: int) -> Iterator[CrispSubset]:
    for mask in range(1, 1 << n):
        yield frozenset(i for i in range(n) if mask >> i & 1)


def classify_structure(s: GammaSemigroup, max_scan: int | None = None) -> StructureClassification:
    """Regularity, intra-regularity and the duo flags.

    Duo is decided by scanning all 2^n - 1 non-empty subsets for one-sided
    ideals; raises CarrierTooLarge beyond the configured cap.
    """
    cap = subset_scan_limit() if max_scan is None else max_scan
    if s.n > cap:
        raise CarrierTooLarge(f"duo scan needs 2^{s.n} subsets, cap is n <= {cap}")
    left_duo = right_duo = True
    for a in _nonempty_subsets(s.n):
        left = is_left_ideal(s, a)
        right = is_right_ideal(s, a)
        if left and not right:
            left_duo = False
        if right and not left:
            right_duo = False
        if not left_duo and not right_duo:
            break
    return StructureClassification(
        regular=is_regular(s),
        intra_regular=is_intra_regular(s),
        left_duo=left_duo,
        right_duo=right_duo,
        duo=left_duo and right_duo,
    )


@dataclass(frozen=True)
class Homomorphism:
    """A validated map f with f(x g y) = f(x) g f(y); Gamma sets must agree."""

    source: GammaSemigroup
    target: GammaSemigroup
    mapping: tuple[int, ...]

    def apply(self, x: int) -> int:
        return self.mapping[x]

    @property
    def surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.n


def validate_homomorphism(
    source: GammaSemigroup, target: GammaSemigroup, mapping: Sequence[int]
) -> Homomorphism:
    """Check totality and the homomorphism law; witness the first violation."""
    if set(source.gammas) != set(target.gammas):
        raise GammaMismatch("source and target must share the gamma identifier set")
    mapping = tuple(mapping)
    if len(mapping) != source.n:
        raise IndexOutOfRange("mapping must assign every source element")
    for v in mapping:
        if not isinstance(v, int) or not 0 <= v < target.n:
            raise IndexOutOfRange(f"mapped value {v!r} out of target range")
    # Gamma symbols may be listed in different orders on the two sides.
    tg = [target.gamma_index[name] for name in source.gammas]
    for x in range(source.n):
        for g in range(source.k):
            for y in range(source.n):
                lhs = mapping[source.cayley[x][g][y]]
                rhs = target.cayley[mapping[x]][tg[g]][mapping[y]]
                if lhs != rhs:
                    raise HomomorphismViolation(
                        source.elements[x], source.gammas[g], source.elements[y],
                        target.elements[lhs], target.elements[rhs],
                    )
    return Homomorphism(source, target, mapping)


def enumerate_homomorphisms(
    source: GammaSemigroup, target: GammaSemigroup, surjective_only: bool = False
) -> list[Homomorphism]:
    """Brute-force all (optionally surjective) homomorphisms source -> target."""
    if set(source.gammas) != set(target.gammas):
        return []
    out = []
    for mapping in product(range(target.n), repeat=source.n):
        if surjective_only and len(set(mapping)) != target.n:
            continue
        try:
            out.append(validate_homomorphism(source, target, mapping))
        except HomomorphismViolation:
            continue
    return out
