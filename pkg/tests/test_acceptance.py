"""Acceptance suite: one test per criterion, each printing a PASS line.

Criteria 4, 5 and 11 share a seeded corpus of at least 1000 (structure,
fuzzy subset) pairs spanning n <= 4, k <= 2 on the 1/10 grade grid; criteria
6 through 10 run over the exhaustive n <= 3, k = 1 corpus (122 structures).
All comparisons are exact rational equality, zero tolerance.
"""

import time
from fractions import Fraction as F

import pytest

from corpus import exhaustive, mixed_corpus
from gsfuzz import (
    AlphaBetaPair,
    cap05,
    characteristic,
    classify_structure,
    classify_subset,
    constant,
    gamma_product,
    image,
    is_alpha_beta_subsemigroup,
    is_eq_bi_ideal,
    is_eq_subsemigroup,
    o05_product,
    o_product,
    preimage,
    report_bi_ideal_equivalences,
    report_level_characterization,
    report_product_characterization,
    report_regular_intra_characterization,
    report_regularity_characterization,
    report_subsemigroup_equivalences,
    subset_or_q,
)
from gsfuzz.cli import document_for, print_document, run
from gsfuzz.fuzzy import HALF
from gsfuzz.search import GeneratorConfig, random_fuzzy, sample_eq_bi_ideals
from gsfuzz.structure import enumerate_homomorphisms
from oracles import sweep_eq_subsemigroup, sweep_subset_or_q

EX46_REFUTED = [
    "in,in", "q,in", "in,q", "q,invq", "q,inandq", "invq,inandq",
    "invq,in", "in,inandq", "q,q", "invq,q", "invq,invq",
]


@pytest.fixture(scope="module")
def sample_corpus():
    return mixed_corpus(min_pairs=1000, grid=10, seed=7)


@pytest.fixture(scope="module")
def small_corpus():
    return exhaustive(1, 1) + exhaustive(2, 1) + exhaustive(3, 1)


def _finish(number, started, limit):
    elapsed = time.perf_counter() - started
    assert elapsed < limit, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"
    print(f"acceptance criterion {number}: PASS ({elapsed:.1f}s)")


def _fixture_path(tmp_path, fixture):
    path = tmp_path / f"{fixture.id}.gsf"
    path.write_text(print_document(document_for(fixture.structure, fixture.fuzzy)))
    return str(path)


def test_criterion_01_ex34_checks(tmp_path, capsys, ex34):
    t0 = time.perf_counter()
    path = _fixture_path(tmp_path, ex34)
    assert run(["check", path, "--fuzzy", "mu", "--pred", "eq-subsemigroup",
                "--expect", "true"]) == 0
    assert run(["check", path, "--fuzzy", "mu", "--pred", "fuzzy-subsemigroup",
                "--expect", "false"]) == 0
    out = capsys.readouterr().out
    assert "holds: true" in out and "holds: false" in out
    witness = next(l for l in out.splitlines() if l.startswith("witness:"))
    fields = dict(part.split("=") for part in witness.split()[1:])
    s, mu = ex34.structure, ex34.fuzzy["mu"]
    product = s.op(s.element_index[fields["x"]], s.gamma_index[fields["gamma"]],
                   s.element_index[fields["y"]])
    assert mu.grades[product] == F(1, 2)
    _finish(1, t0, 1.0)


def test_criterion_02_ex46_alpha_beta_refutations(tmp_path, capsys, ex46):
    t0 = time.perf_counter()
    path = _fixture_path(tmp_path, ex46)
    assert run(["check", path, "--fuzzy", "mu", "--pred", "eq-subsemigroup",
                "--expect", "true"]) == 0
    assert run(["check", path, "--fuzzy", "mu", "--pred", "eq-bi-ideal",
                "--expect", "true"]) == 0
    for spec in EX46_REFUTED:
        assert run(["check", path, "--fuzzy", "mu",
                    "--pred", f"ab-subsemigroup:{spec}", "--expect", "false"]) == 0
        assert run(["check", path, "--fuzzy", "mu",
                    "--pred", f"ab-bi-ideal:{spec}", "--expect", "false"]) == 0
    capsys.readouterr()
    _finish(2, t0, 5.0)


def test_criterion_03_ex427_strict_containment(ex427):
    t0 = time.perf_counter()
    mu = ex427.fuzzy["mu"]
    one = characteristic(ex427.structure, range(3))
    assert o05_product(mu, mu).grade_of("a") == F(1, 2)
    assert mu.grade_of("a") == F(4, 5)
    assert o05_product(o05_product(mu, one), mu).grade_of("a") == F(1, 2)
    _finish(3, t0, 1.0)


def test_criterion_04_equivalence_harness(sample_corpus):
    t0 = time.perf_counter()
    assert len(sample_corpus) >= 1000
    for _, mu in sample_corpus:
        rep = report_subsemigroup_equivalences(mu)
        assert rep.agree, rep
        rep = report_bi_ideal_equivalences(mu)
        assert rep.agree, rep
    _finish(4, t0, 120.0)


def test_criterion_05_characterization_harness(sample_corpus):
    t0 = time.perf_counter()
    for _, mu in sample_corpus:
        for kind in ("subsemigroup", "bi_ideal"):
            assert report_level_characterization(mu, kind).agree
            assert report_product_characterization(mu, kind).agree
    _finish(5, t0, 120.0)


def test_criterion_06_characteristic_correspondence(small_corpus):
    t0 = time.perf_counter()
    for s in small_corpus:
        for mask in range(1, 1 << s.n):
            a = frozenset(i for i in range(s.n) if mask >> i & 1)
            chi = characteristic(s, a)
            flags = classify_subset(s, a)
            assert flags.subsemigroup == is_eq_subsemigroup(chi).holds
            assert flags.bi_ideal == is_eq_bi_ideal(chi).holds
    _finish(6, t0, 120.0)


def test_criterion_07_characteristic_identities(small_corpus):
    t0 = time.perf_counter()
    for s in small_corpus:
        half = constant(s, HALF)
        subsets = [frozenset(i for i in range(s.n) if m >> i & 1) for m in range(1 << s.n)]
        chis = {a: characteristic(s, a) for a in subsets}
        for a in subsets:
            for b in subsets:
                assert cap05(chis[a], chis[b]) == cap05(chis[a & b], half)
                assert o05_product(chis[a], chis[b]) == cap05(
                    characteristic(s, gamma_product(s, a, b)), half
                )
    _finish(7, t0, 60.0)


def test_criterion_08_regularity_characterization(small_corpus):
    t0 = time.perf_counter()
    for i, s in enumerate(small_corpus):
        samples = sample_eq_bi_ideals(s, 100, seed=900 + i, grid=10)
        rep = report_regularity_characterization(s, samples)
        assert rep.agree, (s.cayley, rep)
    _finish(8, t0, 300.0)


def test_criterion_09_regular_intra_characterization(small_corpus):
    t0 = time.perf_counter()
    for i, s in enumerate(small_corpus):
        samples = sample_eq_bi_ideals(s, 100, seed=900 + i, grid=10)
        rep = report_regular_intra_characterization(s, samples)
        assert rep.agree, (s.cayley, rep)
    _finish(9, t0, 300.0)


def test_criterion_10_homomorphism_suite(small_corpus):
    t0 = time.perf_counter()
    cached = {}

    def samples_for(s, seed):
        key = (s.cayley, seed)
        if key not in cached:
            cfg = GeneratorConfig(n=s.n, k=s.k, seed=seed, grid=10, count=100)
            cached[key] = [
                (mu, is_eq_subsemigroup(mu).holds, is_eq_bi_ideal(mu).holds)
                for mu in random_fuzzy(s, cfg)
            ]
        return cached[key]

    total = 0
    for src in small_corpus:
        for dst in small_corpus:
            for hom in enumerate_homomorphisms(src, dst, surjective_only=True):
                total += 1
                for mu, is_sub, is_bi in samples_for(src, 11):
                    if is_sub:
                        assert is_eq_subsemigroup(image(hom, mu)).holds
                    if is_bi:
                        assert is_eq_bi_ideal(image(hom, mu)).holds
                for nu, is_sub, is_bi in samples_for(dst, 13):
                    if is_sub:
                        assert is_eq_subsemigroup(preimage(hom, nu)).holds
                    if is_bi:
                        assert is_eq_bi_ideal(preimage(hom, nu)).holds
    assert total > 0
    print(f"  (checked {total} surjective homomorphisms)")
    _finish(10, t0, 300.0)


def test_criterion_11_oracle_cross_check(sample_corpus):
    t0 = time.perf_counter()
    eq_pair = AlphaBetaPair.parse("in,invq")
    for _, mu in sample_corpus:
        closed = is_eq_subsemigroup(mu).holds
        sampled = is_alpha_beta_subsemigroup(mu, eq_pair).holds
        swept = sweep_eq_subsemigroup(mu)
        assert closed == sampled == swept
        square = o_product(mu, mu)
        assert subset_or_q(square, mu) == sweep_subset_or_q(square, mu)
    _finish(11, t0, 120.0)
