"""Seeded random characters and brute-force oracles for the randomized claims."""

import random
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Sequence

from .charcalc import IrrDecomposition
from .charspace import FormalCharacter, Weight
from .rootdata import RootSystem


def random_weight(rng: random.Random, dim: int, bound: int = 3, half_integral: bool = False) -> Weight:
    coords = [Fraction(rng.randint(-bound, bound)) for _ in range(dim)]
    if half_integral:
        coords = [c + Fraction(1, 2) for c in coords]
    return Weight._make(coords)


def random_effective_character(
    rng: random.Random, dim: int, max_dimension: int = 30, max_terms: int = 8
) -> FormalCharacter:
    """An effective character with 1 to `max_terms` weights and dimension <= `max_dimension`."""
    terms: Dict[Weight, int] = defaultdict(int)
    total = 0
    for _ in range(rng.randint(1, max_terms)):
        if total >= max_dimension:
            break
        mult = rng.randint(1, min(4, max_dimension - total))
        terms[random_weight(rng, dim, half_integral=rng.random() < 0.3)] += mult
        total += mult
    return FormalCharacter(dim, terms)


def random_virtual_character(rng: random.Random, dim: int, max_terms: int = 6) -> FormalCharacter:
    terms = {
        random_weight(rng, dim): rng.choice([-3, -2, -1, 1, 2, 3])
        for _ in range(rng.randint(1, max_terms))
    }
    return FormalCharacter(dim, terms)


def exterior_power_oracle(k: int, chi: FormalCharacter) -> FormalCharacter:
    """Elementary symmetric function e_k of the explicit weight multiset of `chi`.

    e[j] holds the sums of j-element subsets of the weights seen so far.
    """
    dim = chi.ambient_dim
    expanded: List[Weight] = [w for w, m in chi.sorted_items() for _ in range(m)]
    e: List[Dict[Weight, int]] = [{Weight.zero(dim): 1}] + [{} for _ in range(k)]
    for w in expanded:
        for j in range(k, 0, -1):
            for v, m in e[j - 1].items():
                key = v + w
                e[j][key] = e[j].get(key, 0) + m
    return FormalCharacter(dim, e[k])


def random_irreducible_combination(
    rng: random.Random,
    rs: RootSystem,
    highest_weights: Sequence[Weight],
    max_summands: int = 3,
    max_mult: int = 3,
) -> IrrDecomposition:
    """Nonnegative combination of at most `max_summands` irreducibles with multiplicities <= `max_mult`."""
    chosen = rng.sample(list(highest_weights), rng.randint(1, min(max_summands, len(highest_weights))))
    return IrrDecomposition(rs, {hw: rng.randint(1, max_mult) for hw in chosen})
