from fractions import Fraction

import pytest

from lie_kring.errors import DimensionMismatchError, DomainError
from lie_kring.lie import formulas
from lie_kring.lie.branching import (
    E8_TORUS_TO_SPIN10_S1,
    check_prop_4_2,
    decompose_over_spin10_s1,
    e6_generators,
    evaluate_spin10,
    expected_decomposition,
    graded_generators,
    match_formula,
    restrict_character,
    rho,
    rho_prime,
    satisfies_torus_kernel,
    verified_prop_4_2_forms,
    verify_branching,
    verify_eq_4_3_to_4_5,
    xi_degree_histogram,
)
from lie_kring.lie.charcalc import adjoint_character_e8, half_spin_character
from lie_kring.lie.charspace import FormalCharacter, Weight, exterior_power
from lie_kring.lie.formulas import dm, dp, l1, xi


def test_delta8_restriction():
    restricted = restrict_character(half_spin_character(8, 1), E8_TORUS_TO_SPIN10_S1)
    assert restricted.dimension == 128
    assert restricted == evaluate_spin10(formulas.DELTA8_PLUS, graded=True)


def test_restriction_of_alpha():
    # the half-spin labels are interchanged relative to the printed Prop 4.2(i).
    assert rho(e6_generators()["alpha"]) == evaluate_spin10(1 + l1 + dm, graded=False)
    assert rho(e6_generators()["beta"]) == evaluate_spin10(1 + l1 + dp, graded=False)


def test_prop_4_2():
    results = check_prop_4_2()
    assert all(verdict.passed for verdict, _ in results.values())
    notes = {item for item, (verdict, _) in results.items() if verdict.note}
    assert notes == {"i", "ii"}


def test_verified_forms():
    forms = verified_prop_4_2_forms()
    assert forms["i"] == 1 + l1 + dm
    assert forms["ii"] == 1 + l1 + dp
    assert forms["iii"] == formulas.PROP_4_2["iii"]


def test_graded_formulas():
    graded = graded_generators()
    assert graded["alpha"] == evaluate_spin10(formulas.V, graded=True)
    assert graded["beta"] == evaluate_spin10(formulas.V_PRIME, graded=True)
    assert graded["gamma"] == evaluate_spin10(formulas.E6_ADJOINT, graded=True)


def test_eq_4_3_to_4_5():
    assert [v.claim for v in verify_eq_4_3_to_4_5() if not v.passed] == []


def test_xi_histogram():
    wedge = exterior_power(2, rho_prime(e6_generators()["alpha"]))
    assert xi_degree_histogram(wedge) == {-4: 45, -1: 160, 2: 130, 5: 16}


def test_e8_adjoint_decomposition():
    restricted = restrict_character(adjoint_character_e8(), E8_TORUS_TO_SPIN10_S1)
    decomposition = decompose_over_spin10_s1(restricted)
    assert decomposition == expected_decomposition(formulas.E8_ADJOINT)
    assert decomposition.reconstruct() == restricted
    assert sum(decomposition.terms.values()) == 30


def test_branching_claims():
    assert [v.claim for v in verify_branching() if not v.passed] == []


def test_restrict_dimension_mismatch(blocks):
    with pytest.raises(DimensionMismatchError):
        restrict_character(blocks["lambda1"], E8_TORUS_TO_SPIN10_S1)


def test_restrict_outside_e6_weight_space():
    chi = FormalCharacter.monomial(Weight((0, 0, 0, 0, 0, 1, 0, 0)))
    with pytest.raises(DomainError):
        rho_prime(chi)


@pytest.mark.parametrize(
    "coords,expected",
    [
        ([Fraction(1, 2)] * 5 + [3], True),
        ([1, 0, 0, 0, 0, -2], True),
        ([0, 0, 0, 0, 0, 4], True),
        ([1, 0, 0, 0, 0, 0], False),
        ([0, 0, 0, 0, 0, 2], False),
    ],
)
def test_torus_kernel(coords, expected):
    assert satisfies_torus_kernel(Weight(coords)) is expected


def test_evaluate_rejects_inverse_of_sum():
    with pytest.raises(ValueError):
        evaluate_spin10((1 + xi) ** -1, graded=True)


@pytest.mark.parametrize(
    "name,expr,expected",
    [
        ("alpha", formulas.V, {("π1", -2): 1, ("π4", 1): 1, ("0", 4): 1}),
        ("gamma", formulas.E6_ADJOINT, {("0", 0): 1, ("π2", 0): 1, ("π5", 3): 1, ("π4", -3): 1}),
    ],
)
def test_spin10_s1_decomposition(name, expr, expected):
    restricted = rho_prime(e6_generators()[name])
    decomposition = decompose_over_spin10_s1(restricted)
    assert decomposition.labelled() == expected
    assert decomposition == expected_decomposition(expr)


@pytest.mark.parametrize(
    "expr,dimension",
    [
        (formulas.PROP_4_2["vi"], 3003),
        (formulas.WEDGE2_GAMMA, 3003),
        (formulas.V, 27),
        (formulas.E8_ADJOINT, 248),
    ],
)
def test_dimension_of(expr, dimension):
    assert formulas.dimension_of(expr) == dimension


def test_match_formula_dimension_mismatch():
    restricted = rho(e6_generators()["gamma"])
    verdict, form = match_formula("x", "§0", restricted, formulas.PROP_4_2["iii"] + 1, graded=False)
    assert not verdict.passed
    assert form is None
    assert verdict.witness == "dimension 78, right side has dimension 79"
