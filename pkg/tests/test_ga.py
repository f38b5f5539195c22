import math

import pytest

from revga.ga import (
    GaConfig,
    ReplayFailure,
    GaResult,
    crossover,
    deduce_unsigned_sequence,
    embed,
    fitness,
    heuristic_initialize,
    history_csv,
    mutate,
    run_ga,
    select_parents,
)
from revga.perms import Reversal, Rng, identity, random_permutation
from revga.oracles import bfs_unsigned_distances


class TestHeuristicInitialize:
    def test_all_ascending_strips(self):
        pop = heuristic_initialize((3, 4, 1, 2), 20, Rng(1))
        assert all(g == (True, True, True, True) for g in pop)

    def test_identity_all_positive(self):
        pop = heuristic_initialize(identity(5), 10, Rng(2))
        assert all(all(g) for g in pop)
        assert fitness(pop[0], identity(5)) == 0

    def test_singletons_random(self):
        # 2 4 1 3 has no strip of length >= 2
        pop = heuristic_initialize((2, 4, 1, 3), 200, Rng(3))
        assert len({g for g in pop}) > 1

    def test_descending_strip_negative(self):
        pop = heuristic_initialize((4, 3, 2, 1), 5, Rng(4))
        assert all(g == (False, False, False, False) for g in pop)


class TestFitness:
    def test_identity_positive(self):
        assert fitness((True, True), identity(2)) == 0

    def test_both_negative_two_one(self):
        # -2 -1 sorts with one full reversal
        assert fitness((False, False), (2, 1)) == 1

    def test_min_over_embeddings_is_unsigned_distance(self, cache_dir):
        genomes = [(a, b) for a in (False, True) for b in (False, True)]
        best = min(fitness(g, (2, 1)) for g in genomes)
        assert best == 1


class TestSelectParents:
    def test_uniform_population(self):
        pop = [(True, False)] * 6
        a, b = select_parents(pop, [2] * 6, Rng(5))
        assert a == b == (True, False)

    def test_rank_weights_statistics(self):
        pop = [(True,), (False,)]
        fits = [10, 1]  # (False,) is fitter
        rng = Rng(6)
        wins = sum(
            1
            for _ in range(10000)
            for g in select_parents(pop, fits, rng)
            if g == (False,)
        )
        # better of two has rank weight 2/3 over 20000 draws
        expect = 20000 * 2 / 3
        sigma = math.sqrt(20000 * (2 / 3) * (1 / 3))
        assert abs(wins - expect) < 3 * sigma

    def test_four_genome_multinomial(self):
        pop = [(True, True), (True, False), (False, True), (False, False)]
        fits = [4, 3, 2, 1]
        rng = Rng(7)
        counts = {g: 0 for g in pop}
        draws = 10000
        for _ in range(draws):
            a, b = select_parents(pop, fits, rng)
            counts[a] += 1
            counts[b] += 1
        total = 2 * draws
        # rank weights: worst fit 1/10 ... best fit 4/10
        for g, w in zip(pop, (1, 2, 3, 4)):
            pexp = w / 10
            sigma = math.sqrt(total * pexp * (1 - pexp))
            assert abs(counts[g] - total * pexp) < 3 * sigma


class TestCrossover:
    def test_equal_parents(self):
        g = (True, False, True)
        assert crossover(g, g, Rng(8), 1.0) == (g, g)

    def test_suffix_exchange(self):
        a = (True,) * 5
        b = (False,) * 5
        c1, c2 = crossover(a, b, Rng(9), 1.0)
        t = c1.count(True)
        assert c1 == (True,) * t + (False,) * (5 - t)
        assert c2 == (False,) * t + (True,) * (5 - t)
        assert 1 <= t <= 4

    def test_rate_zero_passthrough(self):
        a = (True, False)
        b = (False, True)
        assert crossover(a, b, Rng(10), 0.0) == (a, b)

    def test_n1_passthrough(self):
        assert crossover((True,), (False,), Rng(11), 1.0) == ((True,), (False,))


class TestMutate:
    def test_rate_zero(self):
        g = (True, False, True)
        assert mutate(g, Rng(12), 0.0) == g

    def test_n1_flip(self):
        assert mutate((True,), Rng(13), 1.0) == (False,)

    def test_flips_exactly_one_bit(self):
        g = (True,) * 8
        m = mutate(g, Rng(14), 1.0)
        assert sum(x != y for x, y in zip(g, m)) == 1

    def test_rate_statistics(self):
        rng = Rng(15)
        g = (True, False, True, False)
        mutated = sum(mutate(g, rng, 0.3) != g for _ in range(10000))
        sigma = math.sqrt(10000 * 0.3 * 0.7)
        assert abs(mutated - 3000) < 3 * sigma

    def test_per_bit_mode(self):
        g = (True,) * 50
        m = mutate(g, Rng(16), 1.0, mode="per-bit")
        assert m == (False,) * 50


class TestRunGa:
    def test_identity_terminates_at_stagnation(self):
        res = run_ga(identity(5), GaConfig(), Rng(17))
        assert res.best_distance == 0
        assert res.sorting_sequence == []
        assert res.generations_run == 1 + 3

    def test_two_one(self):
        res = run_ga((2, 1), GaConfig(), Rng(18))
        assert res.best_distance == 1

    def test_replay_validity_n8(self, cache_dir):
        table = bfs_unsigned_distances(8, cache_dir=cache_dir)
        for k in range(10):
            p = random_permutation(8, Rng(1000 + k))
            res = run_ga(p, GaConfig(), Rng(2000 + k))
            assert res.best_distance >= table.distance(p)
            assert deduce_unsigned_sequence(res, p) == res.sorting_sequence

    def test_determinism(self):
        p = random_permutation(12, Rng(19))
        r1 = run_ga(p, GaConfig(), Rng(20))
        r2 = run_ga(p, GaConfig(), Rng(20))
        assert r1 == r2

    def test_elitism_monotone_history(self):
        p = random_permutation(15, Rng(21))
        res = run_ga(p, GaConfig(), Rng(22))
        bests = [b for b, _ in res.history]
        assert all(x >= y for x, y in zip(bests, bests[1:]))

    def test_stagnation_rule(self):
        p = random_permutation(12, Rng(23))
        cfg = GaConfig()
        res = run_ga(p, cfg, Rng(24))
        bests = [b for b, _ in res.history]
        if res.generations_run < cfg.resolved_max_generations(12):
            tail = bests[-cfg.stagnation_generations:]
            assert min(tail) >= min(bests)
            assert min(bests[: -cfg.stagnation_generations]) == min(bests)

    def test_random_init_mode(self):
        p = random_permutation(8, Rng(25))
        res = run_ga(p, GaConfig(init="random"), Rng(26))
        deduce_unsigned_sequence(res, p)

    def test_population_cap(self):
        cfg = GaConfig(population_cap=16)
        assert cfg.resolved_population(10) == 16

    def test_history_csv(self):
        res = run_ga(identity(3), GaConfig(), Rng(27))
        text = history_csv(res)
        lines = text.strip().split("\n")
        assert lines[0] == "generation,best,mean"
        assert len(lines) == 1 + res.generations_run


class TestDeduce:
    def test_identity_empty(self):
        res = run_ga(identity(4), GaConfig(), Rng(28))
        assert deduce_unsigned_sequence(res, identity(4)) == []

    def test_two_one_full_reversal(self):
        seq = deduce_unsigned_sequence(run_ga((2, 1), GaConfig(), Rng(29)), (2, 1))
        assert seq == [Reversal(1, 3)]

    def test_replay_failure_detected(self):
        bogus = GaResult(
            best_genome=(True, True),
            best_distance=1,
            sorting_sequence=[Reversal(1, 2)],
            generations_run=1,
            history=[(1, 1.0)],
        )
        with pytest.raises(ReplayFailure):
            deduce_unsigned_sequence(bogus, (2, 1))


class TestConfigValidation:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"crossover_rate": 1.5},
            {"mutation_rate": -0.1},
            {"stagnation_generations": 0},
            {"init": "magic"},
            {"mutation_mode": "swap"},
        ],
    )
    def test_rejects_bad_config(self, kwargs):
        with pytest.raises(ValueError):
            GaConfig(**kwargs)


def test_embed():
    assert embed((2, 1), (False, True)) == (-2, 1)
