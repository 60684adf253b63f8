"""Restriction from the E8 and E6 tori to Spin(10)·S^1 and Spin(10).

Weights of Spin(10)·S^1 have six coordinates: the D5 coordinates c_1..c_5 and the
xi-degree d, so that the sixth coordinate is the literal exponent of xi.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Dict, List, Optional, Tuple

import sympy as sp

from lie_kring import logger
from lie_kring.common import Verdict, compare
from lie_kring.errors import DimensionMismatchError, DomainError, IntegralityError

from . import formulas
from .charcalc import (
    IrrDecomposition,
    adjoint_character_e8,
    decompose,
    half_spin_character,
    irreducible_character,
    spin10_characters,
)
from .charspace import (
    FormalCharacter,
    LinearMap,
    Weight,
    conjugate,
    exterior_power,
    linear_map,
    project,
)
from .formulas import dm, dp, l1, l2, l3, l4, wedge2_l2, xi
from .rootdata import RootSystemKind, build_root_system


@dataclass(frozen=True)
class RestrictionMap:
    name: str
    matrix: LinearMap
    # source weights must satisfy c6 = c7 = c8.
    e6_weight_space: bool = False

    @property
    def source_dim(self) -> int:
        return len(self.matrix[0])

    @property
    def target_dim(self) -> int:
        return len(self.matrix)


def _identity_rows(n: int, width: int):
    return [[1 if j == i else 0 for j in range(width)] for i in range(n)]


_TORUS_ROWS = _identity_rows(5, 8) + [[0, 0, 0, 0, 0, 2, 2, 2]]

E8_TORUS_TO_SPIN10_S1 = RestrictionMap("E8_torus_to_Spin10S1", linear_map(_TORUS_ROWS))
E6_WEIGHT_TO_SPIN10_S1 = RestrictionMap(
    "E6_weight_to_Spin10S1", linear_map(_TORUS_ROWS), e6_weight_space=True
)
SPIN10_S1_TO_SPIN10 = RestrictionMap("Spin10S1_to_Spin10", linear_map(_identity_rows(5, 6)))
# orthogonal projection of the E8 weight space onto the E6 weight space.
E8_TO_E6_WEIGHT_SPACE = RestrictionMap(
    "E8_to_E6_weight_space",
    linear_map(
        _identity_rows(5, 8)
        + [[0, 0, 0, 0, 0, Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)]] * 3
    ),
)
# D5 weights as xi-degree 0 weights of Spin(10)·S^1.
SPIN10_TO_SPIN10_S1 = RestrictionMap(
    "Spin10_to_Spin10S1", linear_map([row[:5] for row in _identity_rows(6, 6)])
)
XI_INVERSION = RestrictionMap(
    "xi_inversion", linear_map([[(-1 if i == j == 5 else int(i == j)) for j in range(6)] for i in range(6)])
)
# outer automorphism x5 -> -x5 of Spin(10); interchanges Delta+ and Delta-.
HALF_SPIN_SWAP = RestrictionMap(
    "half_spin_swap", linear_map([[(-1 if i == j == 4 else int(i == j)) for j in range(6)] for i in range(6)])
)


def restrict_character(chi: FormalCharacter, rmap: RestrictionMap) -> FormalCharacter:
    if chi.ambient_dim != rmap.source_dim:
        raise DimensionMismatchError(
            f"{rmap.name} acts on dimension {rmap.source_dim}, character has {chi.ambient_dim}"
        )
    if rmap.e6_weight_space:
        for w in chi.weights():
            if not w[5] == w[6] == w[7]:
                raise DomainError(f"{w} is not in the E6 weight space")
    return project(chi, rmap.matrix)


def rho_prime(chi: FormalCharacter) -> FormalCharacter:
    """Restriction of an E6 character to Spin(10)·S^1."""
    return restrict_character(chi, E6_WEIGHT_TO_SPIN10_S1)


def rho(chi: FormalCharacter) -> FormalCharacter:
    """Restriction of an E6 character to Spin(10)."""
    return restrict_character(rho_prime(chi), SPIN10_S1_TO_SPIN10)


@cache
def e6_generators() -> Dict[str, FormalCharacter]:
    """alpha = V_{ϖ1}, beta = V_{ϖ6}, gamma = V_{ϖ5}."""
    rs = build_root_system(RootSystemKind.E6)
    return {
        "alpha": irreducible_character(rs, rs.fundamental_weight(1)),
        "beta": irreducible_character(rs, rs.fundamental_weight(6)),
        "gamma": irreducible_character(rs, rs.fundamental_weight(5)),
    }


@cache
def graded_generators() -> Dict[str, FormalCharacter]:
    """rho' of alpha, beta, gamma."""
    return {name: rho_prime(chi) for name, chi in e6_generators().items()}


@cache
def spin10_assignment(graded: bool) -> Dict[sp.Symbol, FormalCharacter]:
    """Characters bound to the symbols of `formulas`, over Spin(10) or Spin(10)·S^1."""
    blocks = spin10_characters()
    values = {
        l1: blocks["lambda1"],
        l2: blocks["lambda2"],
        l3: blocks["lambda3"],
        l4: blocks["lambda4"],
        dp: blocks["delta+"],
        dm: blocks["delta-"],
        wedge2_l2: exterior_power(2, blocks["lambda2"]),
    }
    if not graded:
        return values
    values = {s: restrict_character(chi, SPIN10_TO_SPIN10_S1) for s, chi in values.items()}
    values[xi] = FormalCharacter.monomial(Weight((0, 0, 0, 0, 0, 1)))
    return values


def evaluate_spin10(expr: sp.Expr, graded: bool) -> FormalCharacter:
    return formulas.evaluate(expr, spin10_assignment(graded), 6 if graded else 5)


def xi_degree(w: Weight) -> int:
    d = w[5]
    if d.denominator != 1:
        raise IntegralityError(f"xi-degree of {w} is not an integer")
    return d.numerator


def xi_degree_slices(chi: FormalCharacter) -> Dict[int, FormalCharacter]:
    """Split a Spin(10)·S^1 character by xi-degree; slices are D5 characters."""
    if chi.ambient_dim != 6:
        raise DimensionMismatchError("xi-degree slices need a Spin(10)·S^1 character")
    slices = defaultdict(dict)
    for w, m in chi.items():
        slices[xi_degree(w)][Weight._make(w[:5])] = m
    return {d: FormalCharacter(5, terms) for d, terms in sorted(slices.items())}


def xi_degree_histogram(chi: FormalCharacter) -> Dict[int, int]:
    return {d: part.dimension for d, part in xi_degree_slices(chi).items()}


@dataclass(frozen=True)
class Spin10S1Decomposition:
    """Terms (D5 highest weight, xi-degree) -> multiplicity."""

    terms: Dict[Tuple[Weight, int], int]

    def reconstruct(self) -> FormalCharacter:
        rs = build_root_system(RootSystemKind.D5)
        chi = FormalCharacter.zero(6)
        for (hw, d), m in self.terms.items():
            part = restrict_character(irreducible_character(rs, hw), SPIN10_TO_SPIN10_S1)
            shift = FormalCharacter.monomial(Weight((0, 0, 0, 0, 0, d)))
            chi = chi + part * shift * m
        return chi

    def labelled(self) -> Dict[Tuple[str, int], int]:
        rs = build_root_system(RootSystemKind.D5)
        return {(rs.label(hw), d): m for (hw, d), m in sorted(self.terms.items(), key=lambda t: (t[0][1], t[0][0]))}

    def to_text(self) -> str:
        return "\n".join(f"{m} * V({label}) xi^{d}" for (label, d), m in self.labelled().items())


def decompose_over_spin10_s1(chi: FormalCharacter) -> Spin10S1Decomposition:
    rs = build_root_system(RootSystemKind.D5)
    terms = {}
    for d, part in xi_degree_slices(chi).items():
        for hw, m in decompose(rs, part).terms.items():
            terms[(hw, d)] = m
    return Spin10S1Decomposition(terms)


# highest weights of the generators, as D5 Dynkin labels.
_GENERATOR_LABELS = {
    l1: (1, 0, 0, 0, 0),
    l2: (0, 1, 0, 0, 0),
    l3: (0, 0, 1, 0, 0),
    l4: (0, 0, 0, 1, 1),
    dp: (0, 0, 0, 0, 1),
    dm: (0, 0, 0, 1, 0),
}


def expected_decomposition(expr: sp.Expr) -> Spin10S1Decomposition:
    """Decomposition read off an expression whose terms are integer * (generator or 1) * xi^d."""
    rs = build_root_system(RootSystemKind.D5)
    terms = defaultdict(int)
    for term in sp.Add.make_args(sp.expand(expr)):
        coefficient, rest = term.as_coeff_Mul()
        powers = rest.as_powers_dict()
        d = int(powers.pop(xi, 0))
        generators = [s for s in powers if s != 1]
        if len(generators) > 1 or any(powers[s] != 1 for s in generators):
            raise ValueError(f"{term} is not a single irreducible term")
        labels = _GENERATOR_LABELS[generators[0]] if generators else (0,) * 5
        terms[(rs.from_dynkin_labels(labels), d)] += int(coefficient)
    return Spin10S1Decomposition({k: m for k, m in terms.items() if m})


def satisfies_torus_kernel(w: Weight) -> bool:
    """A weight (c_1..c_5, d) is trivial on the central element (e_1...e_10, i) iff
    2(c_1+...+c_5) + d = 0 mod 4."""
    value = 2 * sum(w[:5], Fraction(0)) + w[5]
    return value.denominator == 1 and value.numerator % 4 == 0


def torus_kernel_violations(chi: FormalCharacter) -> List[Weight]:
    return sorted(w for w in chi.weights() if not satisfies_torus_kernel(w))


def match_formula(
    claim: str,
    location: str,
    computed: FormalCharacter,
    expr: sp.Expr,
    graded: bool,
) -> Tuple[Verdict, Optional[sp.Expr]]:
    """Compare against `expr`, then against `expr` with Delta+ and Delta- interchanged.

    Returns the verdict and the form that holds (None on failure).
    """
    expected_dim = formulas.dimension_of(expr)
    if computed.dimension != expected_dim:
        verdict = Verdict(
            claim=claim,
            location=location,
            passed=False,
            witness=f"dimension {computed.dimension}, right side has dimension {expected_dim}",
            dump=computed.to_text(),
        )
        return verdict, None
    expected = evaluate_spin10(expr, graded)
    if computed == expected:
        return Verdict(claim=claim, location=location, passed=True, dump=computed.to_text()), expr
    swapped = formulas.swap_half_spin(expr)
    if swapped != expr and computed == evaluate_spin10(swapped, graded):
        logger.warning("%s holds only with Delta+ and Delta- interchanged.", claim)
        verdict = Verdict(
            claim=claim,
            location=location,
            passed=True,
            note=f"holds with Δ5+ and Δ5- interchanged: {swapped}",
            dump=computed.to_text(),
        )
        return verdict, swapped
    return compare(claim, location, computed, expected), None


# item -> (E6 generator, take Lambda^2)
_PROP_4_2_INPUTS = {
    "i": ("alpha", False),
    "ii": ("beta", False),
    "iii": ("gamma", False),
    "iv": ("alpha", True),
    "v": ("beta", True),
    "vi": ("gamma", True),
}


@cache
def check_prop_4_2() -> Dict[str, Tuple[Verdict, Optional[sp.Expr]]]:
    """Each item of Proposition 4.2 with the form that was verified."""
    results = {}
    for item, (name, wedge) in _PROP_4_2_INPUTS.items():
        restricted = rho(e6_generators()[name])
        if wedge:
            # restriction is a lambda-ring map.
            restricted = exterior_power(2, restricted)
        results[item] = match_formula(
            f"prop-4.2-{item}", f"Prop 4.2({item})", restricted, formulas.PROP_4_2[item], graded=False
        )
    return results


def verify_prop_4_2() -> List[Verdict]:
    return [verdict for verdict, _ in check_prop_4_2().values()]


def verified_prop_4_2_forms() -> Dict[str, sp.Expr]:
    """Right sides of Proposition 4.2 that were machine verified."""
    forms = {}
    for item, (verdict, form) in check_prop_4_2().items():
        if form is None:
            raise DomainError(f"Prop 4.2({item}) failed: {verdict.witness}")
        forms[item] = form
    return forms


def verify_eq_4_3_to_4_5() -> List[Verdict]:
    graded = graded_generators()
    wedge = {name: exterior_power(2, chi) for name, chi in graded.items()}
    checks = [
        ("eq-4.3", "Eq. (4.3)", wedge["alpha"], formulas.WEDGE2_ALPHA),
        ("eq-4.4", "Eq. (4.4)", wedge["beta"], formulas.WEDGE2_BETA),
        ("eq-4.5", "Eq. (4.5)", wedge["gamma"], formulas.WEDGE2_GAMMA),
        ("eq-4.7", "Eq. (4.7)", wedge["gamma"], formulas.WEDGE2_GAMMA_REDUCED),
    ]
    verdicts = [match_formula(*check, graded=True)[0] for check in checks]
    # restricting the E6 character of Lambda^2(alpha) agrees with Lambda^2 of the restriction.
    direct = rho_prime(exterior_power(2, e6_generators()["alpha"]))
    verdicts.append(compare("lambda-ring-commutation", "§4", direct, wedge["alpha"]))
    return verdicts


def verify_branching() -> List[Verdict]:
    """Restriction claims for Delta8+, u1...u8, V, V', the E6 and E8 adjoints."""
    graded = graded_generators()
    verdicts = []

    delta8 = restrict_character(half_spin_character(8, 1), E8_TORUS_TO_SPIN10_S1)
    verdicts.append(match_formula("delta8-restriction", "§3", delta8, formulas.DELTA8_PLUS, graded=True)[0])

    u_product = FormalCharacter.monomial(Weight([Fraction(1, 2)] * 8))
    verdicts.append(
        compare(
            "u-product-restriction",
            "§3",
            restrict_character(u_product, E8_TORUS_TO_SPIN10_S1),
            FormalCharacter.monomial(Weight([Fraction(1, 2)] * 5 + [3])),
        )
    )

    verdicts.append(match_formula("eq-3.4-V", "Eq. (3.4)", graded["alpha"], formulas.V, graded=True)[0])
    verdicts.append(match_formula("eq-3.4-V'", "Eq. (3.4)", graded["beta"], formulas.V_PRIME, graded=True)[0])
    verdicts.append(match_formula("eq-4.2", "Eq. (4.2)", graded["gamma"], formulas.E6_ADJOINT, graded=True)[0])

    mirrored = restrict_character(restrict_character(graded["alpha"], HALF_SPIN_SWAP), XI_INVERSION)
    symmetric = graded["beta"] == conjugate(graded["alpha"]) == mirrored
    verdicts.append(
        Verdict(
            claim="conjugation-symmetry",
            location="Eq. (3.4)",
            passed=symmetric,
            witness=None if symmetric else (graded["beta"] - conjugate(graded["alpha"])).to_text(),
            note="V' = conjugate(V) = V with Δ5+ and Δ5- interchanged and xi inverted",
        )
    )

    e8 = restrict_character(adjoint_character_e8(), E8_TORUS_TO_SPIN10_S1)
    verdicts.append(match_formula("eq-3.5", "Eq. (3.5)", e8, formulas.E8_ADJOINT, graded=True)[0])
    verdicts.append(
        compare(
            "eq-3.5-terms",
            "Eq. (3.5)",
            decompose_over_spin10_s1(e8),
            expected_decomposition(formulas.E8_ADJOINT),
        )
    )

    e6 = build_root_system(RootSystemKind.E6)
    e8_on_e6 = restrict_character(adjoint_character_e8(), E8_TO_E6_WEIGHT_SPACE)
    verdicts.append(
        compare(
            "eq-3.5-e6",
            "Eq. (3.5)",
            decompose(e6, e8_on_e6),
            IrrDecomposition.of_fundamentals(e6, {5: 1, 1: 3, 6: 3, 0: 8}),
        )
    )

    restricted = [delta8, e8, *graded.values()]
    violations = [w for chi in restricted for w in torus_kernel_violations(chi)]
    if violations:
        logger.warning("%d weights violate the torus kernel congruence.", len(violations))
    verdicts.append(
        Verdict(
            claim="torus-kernel-congruence",
            location="§2.1",
            passed=not violations,
            witness="\n".join(str(w) for w in violations[:50]) or None,
            note="2(c1+...+c5) + d = 0 mod 4 on every restricted weight",
        )
    )
    return verdicts
