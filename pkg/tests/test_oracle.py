"""Brute-force reference implementations against the optimized paths."""

import itertools
import random

import pytest

from ordagg import (
    Chain,
    CommFn,
    DomainError,
    GroundSet,
    Interval,
    LatticeFn,
    Measure,
    SetFamily,
    fan_sugeno,
    is_minitive,
    quantile,
    saturate,
    sqcap_family,
    sqcup_family,
    topkis_cmp,
    unanimity,
)
from ordagg.oracle import (
    oracle_fan_sugeno,
    oracle_lower_chain,
    oracle_minitive,
    oracle_saturation,
    oracle_sqcap_family,
    oracle_sqcup_family,
    oracle_topkis,
)
from helpers import (
    all_intervals,
    all_monotone_measures,
    rand_comm,
    rand_decreasing_corr,
    rand_fn,
    rand_interval,
    rand_measure,
)

G2 = GroundSet(("a", "b"))


class TestIntervalOracles:
    def test_family_joins_random(self):
        rng = random.Random(3)
        for _ in range(1000):
            chain = Chain("c", rng.randint(1, 7))
            ivs = [rand_interval(rng, chain) for _ in range(rng.randint(1, 5))]
            assert oracle_sqcup_family(ivs) == sqcup_family(ivs)
            assert oracle_sqcap_family(ivs) == sqcap_family(ivs)

    def test_single_and_singletons(self):
        c = Chain("c", 5)
        iv = Interval(c, 1, 3)
        assert oracle_sqcup_family([iv]) == iv
        singles = [Interval(c, r, r) for r in (0, 2, 4)]
        assert oracle_sqcup_family(singles) == Interval(c, 4, 4)

    def test_budget(self):
        c = Chain("c", 100)
        wide = [Interval(c, 0, 99)] * 4
        with pytest.raises(DomainError):
            oracle_sqcup_family(wide)

    def test_topkis_exhaustive(self):
        c5 = Chain("c5", 5)
        for i1, i2 in itertools.product(all_intervals(c5), repeat=2):
            assert oracle_topkis(i1, i2) == topkis_cmp(i1, i2)


class TestSaturationOracle:
    def test_matches_saturate(self):
        rng = random.Random(7)
        for _ in range(300):
            src = Chain("m", rng.randint(1, 8))
            dst = Chain("l", rng.randint(1, 8))
            psi = rand_decreasing_corr(rng, src, dst)
            sat = saturate(psi)
            for x in range(src.size):
                assert oracle_saturation(psi, x) == sat.table[x]


def e1_setup():
    grid = Chain("grid11", 11, tuple(f"{i/10:.1f}" for i in range(11)))
    mu = Measure(SetFamily.full(G2), grid, {0: 0, 1: 5, 2: 3, 3: 10})
    f = LatticeFn(G2, grid, (6, 2))
    return grid, mu, f


class TestFanSugenoOracle:
    def test_grid_example(self):
        grid, mu, f = e1_setup()
        ident = CommFn.identity(grid)
        assert oracle_fan_sugeno(mu, f, ident, "sharp") == Interval(grid, 4, 5)
        assert oracle_fan_sugeno(mu, f, ident, "plain") == Interval(grid, 3, 5)

    def test_matches_fast_path_random(self):
        rng = random.Random(11)
        for _ in range(200):
            ground = GroundSet(tuple("abcde"[: rng.randint(1, 5)]))
            l = Chain("l", rng.randint(1, 8))
            m = Chain("m", rng.randint(2, 8))
            mu = rand_measure(rng, ground, m)
            ell = rand_comm(rng, m, l)
            f = rand_fn(rng, ground, l)
            for variant in ("sharp", "plain"):
                assert oracle_fan_sugeno(mu, f, ell, variant) == fan_sugeno(
                    mu, f, ell, variant
                )

    def test_quantile_values_match_oracle_saturation(self):
        from ordagg import distribution, inverse

        rng = random.Random(13)
        for _ in range(100):
            ground = GroundSet(tuple("abc"[: rng.randint(1, 3)]))
            l = Chain("l", rng.randint(1, 6))
            m = Chain("m", rng.randint(2, 6))
            mu = rand_measure(rng, ground, m)
            f = rand_fn(rng, ground, l)
            ginv = inverse(distribution(mu, f).as_corr())
            q = quantile(mu, f, "plain")
            for p in range(m.size):
                assert q.table[p] == oracle_saturation(ginv, p)


class TestMeasureOracles:
    def test_minitive_exhaustive_small(self):
        c3 = Chain("m", 3)
        for m in all_monotone_measures(G2, c3):
            assert oracle_minitive(m) == is_minitive(m)

    def test_lower_chain_matches_minitivity(self):
        for n in (1, 2, 3):
            ground = GroundSet(tuple("abc"[:n]))
            for msize in (2, 3):
                scale = Chain("m", msize)
                for m in all_monotone_measures(ground, scale):
                    assert oracle_lower_chain(m) == is_minitive(m)

    def test_unanimity_is_lower_chain(self):
        u = unanimity(GroundSet(("a", "b", "c")), 0b011, Chain("m", 3))
        assert oracle_lower_chain(u)
        assert oracle_minitive(u)

    def test_guards(self):
        big = GroundSet(tuple("abcde"))
        u = unanimity(big, 1, Chain("m", 2))
        with pytest.raises(DomainError):
            oracle_minitive(u)
        with pytest.raises(DomainError):
            oracle_lower_chain(u)
