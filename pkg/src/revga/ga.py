"""Genetic search over the 2^n sign embeddings of an unsigned permutation.

A genome is one sign per position (True = positive). Fitness is the exact
signed reversal distance of the resulting embedding, minimized. Any best
embedding yields a sorting sequence that also sorts the unsigned input,
because reversals act identically on magnitudes.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .hp import extract_optimal_sequence, signed_distance
from .perms import (
    Permutation,
    Rng,
    apply_reversal_unsigned,
    find_strips,
    is_identity,
)


class ReplayFailure(RuntimeError):
    """A deduced sorting sequence did not sort the unsigned input."""


@dataclass
class GaConfig:
    population_size: int | None = None  # None -> min(n^2, population_cap)
    crossover_rate: float = 0.5
    mutation_rate: float = 0.3
    stagnation_generations: int = 3
    max_generations: int | None = None  # None -> 10 * n
    elitism: int = 1
    population_cap: int = 4096
    init: str = "heuristic"  # "heuristic" | "random"
    mutation_mode: str = "individual"  # "individual" | "per-bit"

    def __post_init__(self):
        if not (0.0 <= self.crossover_rate <= 1.0):
            raise ValueError("crossover_rate must be in [0, 1]")
        if not (0.0 <= self.mutation_rate <= 1.0):
            raise ValueError("mutation_rate must be in [0, 1]")
        if self.stagnation_generations < 1:
            raise ValueError("stagnation_generations must be >= 1")
        if self.init not in ("heuristic", "random"):
            raise ValueError(f"unknown init mode {self.init!r}")
        if self.mutation_mode not in ("individual", "per-bit"):
            raise ValueError(f"unknown mutation mode {self.mutation_mode!r}")

    def resolved_population(self, n: int) -> int:
        if self.population_size is not None:
            return max(2, self.population_size)
        return max(2, min(n * n, self.population_cap))

    def resolved_max_generations(self, n: int) -> int:
        if self.max_generations is not None:
            return self.max_generations
        return max(10, 10 * n)


@dataclass
class GaResult:
    best_genome: tuple
    best_distance: int
    sorting_sequence: list
    generations_run: int
    history: list = field(default_factory=list)  # (best, mean) per generation


def embed(p: Permutation, genome) -> Permutation:
    return tuple(v if pos else -v for v, pos in zip(p, genome))


def fitness(genome, p: Permutation) -> int:
    return signed_distance(embed(p, genome)).d


def heuristic_initialize(p: Permutation, size: int, rng: Rng) -> list:
    """Strip-constrained random init: + inside ascending strips, - inside
    descending strips (length >= 2); singletons drawn uniformly."""
    n = len(p)
    template = [None] * n
    for s in find_strips(p):
        if s.end > s.start:
            bit = s.direction == "ascending"
            for k in range(s.start - 1, s.end):
                template[k] = bit
    return [
        tuple(b if b is not None else rng.random() < 0.5 for b in template)
        for _ in range(size)
    ]


def random_initialize(n: int, size: int, rng: Rng) -> list:
    return [tuple(rng.random() < 0.5 for _ in range(n)) for _ in range(size)]


def select_parents(population, fitnesses, rng: Rng):
    """Linear rank selection on a minimized fitness; returns two genomes."""
    order = sorted(range(len(population)), key=lambda k: (-fitnesses[k], k))
    # order runs worst -> best; weight 1..N so the best has weight N
    weights = list(range(1, len(population) + 1))
    picks = rng.choices(order, weights=weights, k=2)
    return population[picks[0]], population[picks[1]]


def crossover(a, b, rng: Rng, rate: float):
    """Single-point suffix exchange with the given probability."""
    n = len(a)
    if rng.random() < rate and n > 1:
        t = rng.randrange(1, n)
        return a[:t] + b[t:], b[:t] + a[t:]
    return a, b


def mutate(genome, rng: Rng, rate: float, mode: str = "individual"):
    if mode == "per-bit":
        return tuple((not g) if rng.random() < rate else g for g in genome)
    if rng.random() < rate:
        k = rng.randrange(len(genome))
        return genome[:k] + (not genome[k],) + genome[k + 1:]
    return genome


def run_ga(p: Permutation, config: GaConfig, rng: Rng) -> GaResult:
    n = len(p)
    pop_size = config.resolved_population(n)
    max_gens = config.resolved_max_generations(n)

    if config.init == "heuristic":
        population = heuristic_initialize(p, pop_size, rng)
    else:
        population = random_initialize(n, pop_size, rng)

    cache = {}

    def fit(genome):
        d = cache.get(genome)
        if d is None:
            d = fitness(genome, p)
            cache[genome] = d
        return d

    history = []
    best_distance = None
    best_genome = None
    stagnant = 0
    while True:
        fits = [fit(g) for g in population]
        gen_best = min(fits)
        history.append((gen_best, sum(fits) / len(fits)))
        if best_distance is None or gen_best < best_distance:
            best_distance = gen_best
            best_genome = population[fits.index(gen_best)]
            stagnant = 0
        else:
            stagnant += 1
        if stagnant >= config.stagnation_generations:
            break
        if len(history) >= max_gens:
            break

        ranked = sorted(range(pop_size), key=lambda k: (fits[k], k))
        nxt = [population[k] for k in ranked[: config.elitism]]
        while len(nxt) < pop_size:
            a, b = select_parents(population, fits, rng)
            c1, c2 = crossover(a, b, rng, config.crossover_rate)
            nxt.append(mutate(c1, rng, config.mutation_rate, config.mutation_mode))
            if len(nxt) < pop_size:
                nxt.append(mutate(c2, rng, config.mutation_rate, config.mutation_mode))
        population = nxt

    sequence = extract_optimal_sequence(embed(p, best_genome))
    return GaResult(
        best_genome=best_genome,
        best_distance=best_distance,
        sorting_sequence=sequence,
        generations_run=len(history),
        history=history,
    )


def deduce_unsigned_sequence(result: GaResult, p: Permutation) -> list:
    """The signed sorting sequence applied sign-blind to p; verified by
    replay, which must reach the identity."""
    cur = p
    for r in result.sorting_sequence:
        cur = apply_reversal_unsigned(cur, r)
    if not is_identity(cur):
        raise ReplayFailure(
            f"sequence of length {len(result.sorting_sequence)} left {cur!r}"
        )
    return list(result.sorting_sequence)


def history_csv(result: GaResult) -> str:
    lines = ["generation,best,mean"]
    for gen, (best, mean) in enumerate(result.history):
        lines.append(f"{gen},{best},{mean}")
    return "\n".join(lines) + "\n"
