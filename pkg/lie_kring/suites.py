"""Claim suites run by the `lie-kring` CLI.

Importing this module registers every claim step in `lie_kring.claims.SUITES`.
"""

import random
from math import comb
from typing import Callable, List

from .claims import RunOptions, claim
from .common import Verdict, compare
from .kring.koszul import koszul_tor
from .kring.presentation import (
    derive_b_images,
    freeness_witness,
    kring_presentation,
    verify_lemma_5_2,
)
from .kring.tangent import verify_tangent_class
from .lie import branching
from .lie.charcalc import (
    decompose,
    half_spin_character,
    irreducible_character,
    spin10_characters,
    verify_clifford_relation,
    verify_diagram_automorphism,
    verify_lemma_4_1,
    verify_prop_3_2,
    verify_table_1,
    verify_table_2,
)
from .lie.charspace import (
    FormalCharacter,
    Weight,
    adams,
    conjugate,
    exterior_power,
    multiply,
    project,
)
from .lie.rootdata import (
    E6_FUNDAMENTAL_WEIGHTS,
    RootSystemKind,
    build_root_system,
    is_weyl_invariant,
    weyl_dimension,
    weyl_group_order,
)
from .lie.sampling import (
    exterior_power_oracle,
    random_effective_character,
    random_irreducible_combination,
    random_virtual_character,
)

SUITE_NAMES = ("dims", "table2", "branch", "restrict", "tor", "tangent", "props")

WEYL_GROUP_ORDERS = {
    RootSystemKind.D5: 1920,
    RootSystemKind.E6: 51840,
    RootSystemKind.E8: 696729600,
}
ROOT_COUNTS = {RootSystemKind.E8: 240, RootSystemKind.E6: 72, RootSystemKind.D5: 40}


# dims


@claim("table-1", "Table 1", suite="dims")
def table_1(options: RunOptions) -> List[Verdict]:
    return [verify_table_1(), verify_diagram_automorphism()]


@claim("root-data", "§3", suite="dims")
def root_data(options: RunOptions) -> List[Verdict]:
    counts = {}
    split_failures = []
    for kind in RootSystemKind:
        rs = build_root_system(kind)
        counts[kind.value] = len(rs.all_roots)
        positive = set(rs.positive_roots)
        negative = {-r for r in positive}
        if positive & negative or positive | negative != rs.all_roots:
            split_failures.append(kind.value)
    e6 = build_root_system(RootSystemKind.E6)
    listed = tuple(Weight(w) for w in E6_FUNDAMENTAL_WEIGHTS)
    return [
        compare("root-counts", "§3", counts, {k.value: n for k, n in ROOT_COUNTS.items()}),
        Verdict(
            claim="positive-roots",
            location="§3",
            passed=not split_failures,
            witness=", ".join(split_failures) or None,
            note="positive and negative roots partition the root system",
        ),
        compare(
            "e6-fundamental-weights",
            "§3",
            [str(w) for w in e6.fundamental_weights],
            [str(w) for w in listed],
        ),
    ]


@claim("weyl-group-order", "§3", suite="dims")
def weyl_group_orders(options: RunOptions) -> List[Verdict]:
    return [
        compare(
            f"weyl-group-order-{kind.value}",
            "§3",
            weyl_group_order(build_root_system(kind)),
            WEYL_GROUP_ORDERS[kind],
        )
        for kind in (RootSystemKind.D5, RootSystemKind.E6)
    ]


@claim("weyl-group-order-E8", "§3", suite="dims", slow=True, timeout=0)
def weyl_group_order_e8(options: RunOptions) -> Verdict:
    rs = build_root_system(RootSystemKind.E8)
    return compare(
        "weyl-group-order-E8",
        "§3",
        weyl_group_order(rs, allow_slow=options.allow_slow),
        WEYL_GROUP_ORDERS[RootSystemKind.E8],
    )


# table2


@claim("lemma-4.1", "Lemma 4.1", suite="table2")
def lemma_4_1(options: RunOptions) -> List[Verdict]:
    return verify_lemma_4_1()


@claim("table-2", "Table 2", suite="table2")
def table_2(options: RunOptions) -> List[Verdict]:
    return verify_table_2()


@claim("clifford-relation", "§4", suite="table2")
def clifford_relation(options: RunOptions) -> Verdict:
    return verify_clifford_relation()


# branch


@claim("branching", "§3", suite="branch")
def branching_claims(options: RunOptions) -> List[Verdict]:
    return branching.verify_branching()


@claim("prop-3.2", "Prop 3.2", suite="branch")
def prop_3_2(options: RunOptions) -> List[Verdict]:
    return verify_prop_3_2()


# restrict


@claim("prop-4.2", "Prop 4.2", suite="restrict")
def prop_4_2(options: RunOptions) -> List[Verdict]:
    return branching.verify_prop_4_2()


@claim("graded-restrictions", "Eqs. (4.3)-(4.7)", suite="restrict")
def graded_restrictions(options: RunOptions) -> List[Verdict]:
    return branching.verify_eq_4_3_to_4_5()


# tor


@claim("lemma-5.1-freeness", "Lemma 5.1", suite="tor")
def lemma_5_1(options: RunOptions) -> Verdict:
    return freeness_witness(branching.verified_prop_4_2_forms(), seed=options.seed)


@claim("lemma-5.2", "Lemma 5.2", suite="tor")
def lemma_5_2(options: RunOptions) -> List[Verdict]:
    return verify_lemma_5_2(derive_b_images())


@claim("thm-1.1", "Theorem 1.1", suite="tor")
def theorem_1_1(options: RunOptions) -> List[Verdict]:
    images = derive_b_images()
    return kring_presentation(images, koszul_tor(images.xbar, images.ybar)).verdicts


# tangent


@claim("prop-5.3", "Prop 5.3", suite="tangent")
def tangent_class(options: RunOptions) -> List[Verdict]:
    return verify_tangent_class().verdicts


# props


def _property(
    claim_id: str,
    location: str,
    cases: int,
    seed: int,
    check: Callable[[random.Random], str],
) -> Verdict:
    """Run `check` on `cases` seeded cases; it returns an error text or an empty string."""
    rng = random.Random(seed)
    for case in range(cases):
        error = check(rng)
        if error:
            return Verdict(
                claim=claim_id,
                location=location,
                passed=False,
                witness=f"seed {seed}, case {case}: {error}",
            )
    return Verdict(
        claim=claim_id, location=location, passed=True, note=f"{cases} cases, seed {seed}"
    )


@claim("prop-exterior-oracle", "§2.1", suite="props")
def exterior_oracle(options: RunOptions) -> Verdict:
    def check(rng: random.Random) -> str:
        chi = random_effective_character(rng, rng.choice((5, 6, 8)))
        k = rng.randint(0, 3)
        computed = exterior_power(k, chi)
        if computed != exterior_power_oracle(k, chi):
            return f"Lambda^{k} of\n{chi.to_text()}"
        if computed.dimension != comb(chi.dimension, k):
            return f"dim Lambda^{k} = {computed.dimension} for dimension {chi.dimension}"
        return ""

    return _property("prop-exterior-oracle", "§2.1", options.property_cases, options.seed, check)


@claim("prop-dimension-multiplicative", "§2.1", suite="props")
def dimension_multiplicative(options: RunOptions) -> Verdict:
    def check(rng: random.Random) -> str:
        dim = rng.choice((5, 6, 8))
        a, b = random_virtual_character(rng, dim), random_virtual_character(rng, dim)
        if multiply(a, b).dimension != a.dimension * b.dimension:
            return f"dim(ab) != {a.dimension}·{b.dimension}"
        return ""

    return _property(
        "prop-dimension-multiplicative", "§2.1", options.property_cases, options.seed, check
    )


@claim("prop-adams-multiplicative", "§2.1", suite="props")
def adams_multiplicative(options: RunOptions) -> Verdict:
    def check(rng: random.Random) -> str:
        dim = rng.choice((5, 6, 8))
        a, b = random_virtual_character(rng, dim), random_virtual_character(rng, dim)
        k = rng.randint(1, 4)
        if adams(k, a * b) != adams(k, a) * adams(k, b):
            return f"psi^{k}(ab) != psi^{k}(a) psi^{k}(b) for\n{a.to_text()}\nand\n{b.to_text()}"
        return ""

    return _property(
        "prop-adams-multiplicative", "§2.1", max(1, options.property_cases // 2), options.seed, check
    )


@claim("prop-conjugate", "§5.3", suite="props")
def conjugate_homomorphism(options: RunOptions) -> Verdict:
    def check(rng: random.Random) -> str:
        dim = rng.choice((5, 6, 8))
        a, b = random_virtual_character(rng, dim), random_virtual_character(rng, dim)
        if conjugate(conjugate(a)) != a:
            return f"conjugation is not an involution on\n{a.to_text()}"
        if conjugate(a * b) != conjugate(a) * conjugate(b):
            return "conjugation is not multiplicative"
        return ""

    return _property("prop-conjugate", "§5.3", options.property_cases, options.seed, check)


@claim("prop-project-linear", "Eq. (3.2)", suite="props")
def project_linear(options: RunOptions) -> Verdict:
    matrix = branching.E8_TORUS_TO_SPIN10_S1.matrix

    def check(rng: random.Random) -> str:
        a, b = random_virtual_character(rng, 8), random_virtual_character(rng, 8)
        k = rng.randint(1, 3)
        if project(a * b, matrix) != project(a, matrix) * project(b, matrix):
            return "projection does not commute with multiply"
        if project(adams(k, a), matrix) != adams(k, project(a, matrix)):
            return f"projection does not commute with psi^{k}"
        return ""

    return _property("prop-project-linear", "Eq. (3.2)", options.property_cases, options.seed, check)


@claim("prop-decompose-roundtrip", "Prop 3.2", suite="props")
def decompose_roundtrip(options: RunOptions) -> Verdict:
    rs = build_root_system(RootSystemKind.D5)
    highest = [Weight.zero(rs.ambient_dim), *rs.fundamental_weights]

    def check(rng: random.Random) -> str:
        combination = random_irreducible_combination(rng, rs, highest)
        recovered = decompose(rs, combination.reconstruct())
        if recovered != combination:
            return f"{combination} decomposed as {recovered}"
        return ""

    return _property(
        "prop-decompose-roundtrip", "Prop 3.2", max(1, options.property_cases // 2), options.seed, check
    )


def _constructed_irreducibles():
    e6 = build_root_system(RootSystemKind.E6)
    d5 = build_root_system(RootSystemKind.D5)
    weights = [(e6, Weight.zero(8)), *((e6, w) for w in e6.fundamental_weights)]
    weights.append((e6, e6.fundamental_weight(1) + e6.fundamental_weight(6)))
    weights += [(d5, Weight.zero(5)), *((d5, w) for w in d5.fundamental_weights)]
    return weights


@claim("irreducible-characters", "Table 1", suite="props")
def irreducible_characters(options: RunOptions) -> List[Verdict]:
    not_invariant, wrong_dimension = [], []
    for rs, hw in _constructed_irreducibles():
        chi = irreducible_character(rs, hw)
        name = f"{rs.kind.value} V({rs.label(hw)})"
        if not is_weyl_invariant(rs, chi):
            not_invariant.append(name)
        if chi.dimension != weyl_dimension(rs, hw):
            wrong_dimension.append(f"{name}: {chi.dimension}")
    return [
        Verdict(
            claim="weyl-invariance",
            location="§3",
            passed=not not_invariant,
            witness=", ".join(not_invariant) or None,
        ),
        Verdict(
            claim="irreducible-dimensions",
            location="Table 1",
            passed=not wrong_dimension,
            witness=", ".join(wrong_dimension) or None,
        ),
    ]


@claim("freudenthal-oracle", "Table 2", suite="props")
def freudenthal_oracle(options: RunOptions) -> Verdict:
    """Freudenthal characters of D5 against exterior powers of the vector representation
    and the explicit half-spin sign vectors."""
    blocks = spin10_characters()
    vector = FormalCharacter.from_weights(
        [Weight.basis(5, i) for i in range(5)] + [-Weight.basis(5, i) for i in range(5)], 5
    )
    expected = {
        "lambda1": vector,
        "lambda2": exterior_power(2, vector),
        "lambda3": exterior_power(3, vector),
        "delta+": half_spin_character(5, 1),
        "delta-": half_spin_character(5, -1),
    }
    mismatched = [name for name, chi in expected.items() if blocks[name] != chi]
    return Verdict(
        claim="freudenthal-oracle",
        location="Table 2",
        passed=not mismatched,
        witness=", ".join(mismatched) or None,
    )


@claim("prop-restriction-lambda-ring", "§4", suite="props")
def restriction_lambda_ring(options: RunOptions) -> Verdict:
    generators = branching.e6_generators()
    failures = []
    for name, chi in generators.items():
        if branching.rho(exterior_power(2, chi)) != exterior_power(2, branching.rho(chi)):
            failures.append(f"Lambda^2({name})")
    names = sorted(generators)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            product_ = branching.rho(generators[a] * generators[b])
            if product_ != branching.rho(generators[a]) * branching.rho(generators[b]):
                failures.append(f"{a}·{b}")
    return Verdict(
        claim="prop-restriction-lambda-ring",
        location="§4",
        passed=not failures,
        witness=", ".join(failures) or None,
        note="restriction to Spin(10) commutes with Lambda^2 and products on alpha, beta, gamma",
    )
