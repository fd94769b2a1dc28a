from itertools import product

import pytest

from gsfuzz import (
    classify_structure,
    classify_subset,
    enumerate_crisp,
    gamma_product,
    validate_homomorphism,
    validate_structure,
)
from gsfuzz.errors import (
    AssociativityViolation,
    CarrierTooLarge,
    DuplicateName,
    EmptyCarrier,
    GammaMismatch,
    HomomorphismViolation,
    IndexOutOfRange,
    OutOfRangeEntry,
)
from gsfuzz.search import GeneratorConfig, SplitMix64, generate_structures

EX34_CUBE = [[[0, 0, 0]], [[0, 1, 0]], [[0, 0, 2]]]


def test_validate_ex34_table():
    s = validate_structure(["e", "a", "b"], ["g"], EX34_CUBE)
    assert s.n == 3 and s.k == 1
    assert s.op(1, 0, 2) == 0  # a g b = e


def test_validate_single_element():
    s = validate_structure(["a"], ["g"], [[[0]]])
    assert s.n == 1


def test_validate_rejects_broken_associativity():
    # mutate a g b to b; exhaustive scan finds (b g a) g b != b g (a g b)
    bad = [[[0, 0, 0]], [[0, 1, 2]], [[0, 0, 2]]]
    with pytest.raises(AssociativityViolation) as exc:
        validate_structure(["e", "a", "b"], ["g"], bad)
    assert exc.value.witness == ("b", "g", "a", "g", "b")
    assert exc.value.left == "e" and exc.value.right == "b"


def test_validate_rejects_out_of_range_cell():
    with pytest.raises(OutOfRangeEntry):
        validate_structure(["a", "b"], ["g"], [[[0, 1]], [[0, 5]]])


def test_validate_rejects_empty_and_duplicates():
    with pytest.raises(EmptyCarrier):
        validate_structure([], ["g"], [])
    with pytest.raises(DuplicateName):
        validate_structure(["a", "a"], ["g"], [[[0, 0]], [[0, 0]]])
    with pytest.raises(ValueError):
        validate_structure(["a", "b"], ["g"], [[[0, 0]]])


def test_gamma_product_examples(ex34, ex46):
    s = ex34.structure
    assert gamma_product(s, {1}, {2}) == {0}  # {a} G {b} = {e}
    assert gamma_product(s, frozenset(), {0, 1, 2}) == frozenset()
    t = ex46.structure
    c, e = t.element_index["c"], t.element_index["e"]
    assert gamma_product(t, {c, e}, {c}) == {c}


def test_gamma_product_monotone(ex46):
    s = ex46.structure
    rng = SplitMix64(5)
    subsets = [
        frozenset(i for i in range(s.n) if rng.below(2)) for _ in range(12)
    ]
    for a in subsets:
        for b in subsets:
            big = gamma_product(s, a | {0}, b | {1})
            assert gamma_product(s, a, b) <= big


def test_classify_subset_examples(ex34, ex46):
    flags = classify_subset(ex34.structure, {0})  # {e}
    assert (flags.subsemigroup, flags.left_ideal, flags.right_ideal, flags.bi_ideal) == (
        True, True, True, True,
    )
    assert not classify_subset(ex46.structure, {0, 1}).subsemigroup  # a g b = d
    empty = classify_subset(ex34.structure, frozenset())
    assert empty.empty and not empty.subsemigroup and not empty.bi_ideal
    with pytest.raises(IndexOutOfRange):
        classify_subset(ex34.structure, {7})


def test_whole_carrier_always_classifies(builtin_fixtures):
    for f in builtin_fixtures.values():
        s = f.structure
        flags = classify_subset(s, range(s.n))
        assert flags.subsemigroup and flags.bi_ideal
        assert flags.left_ideal and flags.right_ideal


def test_classify_structure_fixtures(ex34, ex46, ex427):
    f34 = classify_structure(ex34.structure)
    assert (f34.regular, f34.intra_regular, f34.duo) == (True, True, True)
    f46 = classify_structure(ex46.structure)
    assert (f46.regular, f46.intra_regular) == (True, True)
    assert (f46.left_duo, f46.right_duo, f46.duo) == (False, True, False)
    # left projection: every a = a g a g a; left ideals are only S itself
    f427 = classify_structure(ex427.structure)
    assert (f427.regular, f427.intra_regular) == (True, True)
    assert (f427.left_duo, f427.right_duo, f427.duo) == (True, False, False)


def test_classify_structure_degenerate():
    s = validate_structure(["a"], ["g"], [[[0]]])
    flags = classify_structure(s)
    assert all(
        (flags.regular, flags.intra_regular, flags.left_duo, flags.right_duo, flags.duo)
    )


def test_classify_structure_scan_cap(ex34):
    with pytest.raises(CarrierTooLarge):
        classify_structure(ex34.structure, max_scan=2)


def test_homomorphism_identity_and_constant(ex34, ex427):
    f = validate_homomorphism(ex34.structure, ex34.structure, (0, 1, 2))
    assert f.surjective
    g = validate_homomorphism(ex427.structure, ex427.structure, (0, 0, 0))
    assert not g.surjective  # x -> a; a g a = a makes it a homomorphism


def test_homomorphism_violation_witness(ex34):
    with pytest.raises(HomomorphismViolation) as exc:
        validate_homomorphism(ex34.structure, ex34.structure, (1, 0, 2))
    assert exc.value.witness == ("e", "g", "a")


def test_homomorphism_gamma_mismatch(ex34, mod12):
    with pytest.raises(GammaMismatch):
        validate_homomorphism(ex34.structure, mod12.structure, (0, 0, 0))
    with pytest.raises(IndexOutOfRange):
        validate_homomorphism(ex34.structure, ex34.structure, (0, 1))


def test_association_orders_agree_on_fixtures(builtin_fixtures):
    for f in builtin_fixtures.values():
        s = f.structure
        for x, b, y, g, z in product(
            range(s.n), range(s.k), range(s.n), range(s.k), range(s.n)
        ):
            assert s.op(s.op(x, b, y), g, z) == s.op(x, b, s.op(y, g, z))


def test_generated_structures_associative():
    for s in generate_structures(GeneratorConfig(n=3, k=1, seed=3, count=10)):
        validate_structure(s.elements, s.gammas, s.cayley)


def test_enumerated_bi_ideals_reverify(builtin_fixtures):
    for f in builtin_fixtures.values():
        s = f.structure
        if s.n > 5:
            continue
        carrier = frozenset(range(s.n))
        for b in enumerate_crisp(s, "bi_ideal"):
            assert gamma_product(s, b, b) <= b
            assert gamma_product(s, gamma_product(s, b, carrier), b) <= b


def _crisp_identity_holds(s):
    bis = enumerate_crisp(s, "bi_ideal")
    for p in bis:
        for q in bis:
            if p & q != gamma_product(s, p, q) & gamma_product(s, q, p):
                return False
    return True


def test_bi_ideal_intersection_identity_iff_regular_intra(builtin_fixtures):
    """P.Q = PGQ.QGP for all bi-ideal pairs exactly on the regular+intra-regular
    structures; checked on the small fixtures and a seeded n<=4 batch."""
    from corpus import size4_structures

    structures = [
        f.structure for f in builtin_fixtures.values() if f.structure.n <= 5
    ]
    structures += list(generate_structures(GeneratorConfig(n=3, k=1, seed=11, count=15)))
    structures += list(generate_structures(GeneratorConfig(n=2, k=2, seed=11, count=10)))
    structures += size4_structures(count=8)
    for s in structures:
        flags = classify_structure(s)
        assert _crisp_identity_holds(s) == (flags.regular and flags.intra_regular)
