from polyharm.classify import classify
from polyharm.gen import (
    COEFF_LIMIT,
    SplitMix64,
    gen_analytic,
    gen_bipoly,
    gen_harmonic,
    gen_strict_q_harmonic,
    spawn,
)
from polyharm.wirtinger import polyharmonic_order


def test_same_seed_same_output():
    for seed in (0, 1, 2**63, 12345):
        assert gen_analytic(seed, 3) == gen_analytic(seed, 3)
        assert gen_harmonic(seed, 4) == gen_harmonic(seed, 4)
        assert gen_strict_q_harmonic(seed, 3, 2) == gen_strict_q_harmonic(seed, 3, 2)
        assert gen_bipoly(seed, 5) == gen_bipoly(seed, 5)


def test_stream_is_pinned():
    # Frozen first draws so a silent generator change cannot slip through.
    rng = SplitMix64(42)
    assert [rng.below(1000) for _ in range(4)] == [413, 291, 858, 764]


def test_spawn_varies_with_index():
    seeds = {spawn(7, i) for i in range(100)}
    assert len(seeds) == 100
    assert spawn(7, 3) == spawn(7, 3)


def test_gen_analytic_contract():
    for index in range(100):
        f = gen_analytic(spawn(11, index), 3)
        rep = classify(f)
        assert rep.is_analytic
        assert f.deg_z <= 3
        assert not f.is_zero


def test_gen_analytic_degree_zero_is_nonzero_constant():
    f = gen_analytic(1, 0)
    assert set(f.terms) == {(0, 0)}


def test_gen_analytic_exact_degree():
    for index in range(50):
        f = gen_analytic(spawn(13, index), 4, exact_degree=True)
        assert f.deg_z == 4


def test_gen_harmonic_contract():
    for index in range(100):
        f = gen_harmonic(spawn(17, index), 4)
        assert polyharmonic_order(f) <= 1


def test_gen_harmonic_both_parts_nonconstant():
    for index in range(50):
        f = gen_harmonic(spawn(19, index), 4, both_parts_nonconstant=True)
        assert f.deg_z >= 1 and f.deg_zbar >= 1
        rep = classify(f)
        assert rep.is_harmonic and not rep.is_analytic and not rep.is_antianalytic


def test_gen_strict_q_harmonic_contract():
    for index in range(60):
        rng = SplitMix64(spawn(23, index))
        q = rng.between(1, 5)
        f = gen_strict_q_harmonic(rng.next_u64(), q, 2)
        assert polyharmonic_order(f) == q


def test_gen_strict_q_harmonic_q1_is_nonzero_harmonic():
    f = gen_strict_q_harmonic(5, 1, 2)
    assert polyharmonic_order(f) == 1 and not f.is_zero


def test_gen_strict_q_harmonic_degree_zero_components():
    f = gen_strict_q_harmonic(5, 2, 0)
    assert polyharmonic_order(f) == 2
    assert set(f.terms) <= {(0, 0), (1, 1)}


def test_coefficient_bounds():
    for index in range(60):
        f = gen_analytic(spawn(29, index), 5)
        for c in f.terms.values():
            for part in (c.re, c.im):
                assert abs(part.numerator) <= COEFF_LIMIT
                assert part.denominator <= COEFF_LIMIT
