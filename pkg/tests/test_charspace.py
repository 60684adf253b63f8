import random
from fractions import Fraction

import pytest

from lie_kring.errors import DimensionMismatchError, EffectivenessError, IntegralityError
from lie_kring.lie.charspace import (
    FormalCharacter,
    Weight,
    adams,
    conjugate,
    exterior_power,
    linear_map,
    multiply,
    project,
)
from lie_kring.lie.sampling import exterior_power_oracle, random_effective_character


def test_weight_text():
    w = Weight((1, Fraction(1, 2), "-1/3"))
    assert str(w) == "(1,1/2,-1/3)"
    assert Weight.parse(str(w)) == w


def test_weight_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        Weight((1, 0)) + Weight((1, 0, 0))


def test_zero_multiplicities_are_dropped():
    chi = FormalCharacter(2, [((1, 0), 1), ((1, 0), -1)])
    assert chi.is_zero()
    assert len(chi) == 0


def test_fractional_multiplicity_rejected():
    with pytest.raises(IntegralityError):
        FormalCharacter(1, {Weight((0,)): Fraction(1, 2)})


def test_add_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        FormalCharacter.trivial(5) + FormalCharacter.trivial(6)


def test_multiply_by_trivial(blocks):
    assert multiply(blocks["1"], blocks["lambda2"]) == blocks["lambda2"]


def test_vector_square_dimension(blocks):
    assert multiply(blocks["lambda1"], blocks["lambda1"]).dimension == 100


def test_integer_arithmetic(blocks):
    chi = 2 + blocks["lambda1"] * 3 - 1
    assert chi.dimension == 31
    assert chi.multiplicity(Weight.zero(5)) == 1


def test_adams():
    chi = FormalCharacter.monomial(Weight((1, 0, 0, 0, 0)))
    assert adams(1, chi) == chi
    assert adams(2, chi) == FormalCharacter.monomial(Weight((2, 0, 0, 0, 0)))


def test_adams_on_vector(blocks):
    doubled = adams(2, blocks["lambda1"])
    assert set(doubled.weights()) == {
        Weight.basis(5, i).scale(s) for i in range(5) for s in (2, -2)
    }
    assert doubled.dimension == 10


def test_adams_rejects_zero():
    with pytest.raises(ValueError):
        adams(0, FormalCharacter.trivial(5))


def test_exterior_power_zero(blocks):
    assert exterior_power(0, blocks["delta+"]) == FormalCharacter.trivial(5)


def test_exterior_square_of_vector(blocks):
    wedge = exterior_power(2, blocks["lambda1"])
    assert wedge == blocks["lambda2"]
    assert wedge.dimension == 45
    assert wedge.multiplicity(Weight.zero(5)) == 5


@pytest.mark.parametrize("sign", ["delta+", "delta-"])
def test_exterior_square_of_half_spin(blocks, sign):
    assert exterior_power(2, blocks[sign]) == blocks["lambda3"]


def test_exterior_power_beyond_dimension(blocks):
    assert exterior_power(11, blocks["lambda1"]).is_zero()


def test_exterior_power_requires_effective(blocks):
    with pytest.raises(EffectivenessError):
        exterior_power(2, blocks["lambda1"] - blocks["1"])


@pytest.mark.parametrize("seed", range(5))
def test_exterior_power_matches_oracle(seed):
    rng = random.Random(seed)
    for _ in range(10):
        chi = random_effective_character(rng, 6)
        for k in range(4):
            assert exterior_power(k, chi) == exterior_power_oracle(k, chi)


def test_conjugate(blocks):
    assert conjugate(blocks["1"]) == blocks["1"]
    assert conjugate(blocks["lambda1"]) == blocks["lambda1"]
    assert conjugate(blocks["delta+"]) == blocks["delta-"]


def test_project_identity(blocks):
    identity = linear_map([[int(i == j) for j in range(5)] for i in range(5)])
    assert project(blocks["delta+"], identity) == blocks["delta+"]


def test_project_collects_images(blocks):
    # forget every coordinate but the first.
    first = linear_map([[1, 0, 0, 0, 0]])
    image = project(blocks["lambda1"], first)
    assert image.ambient_dim == 1
    assert image.multiplicity(Weight((0,))) == 8
    assert image.dimension == 10


def test_project_shape_mismatch(blocks):
    with pytest.raises(DimensionMismatchError):
        project(blocks["lambda1"], linear_map([[1, 0, 0]]))


def test_text_serialization(blocks):
    text = blocks["delta-"].to_text()
    assert text.splitlines()[0] == "1 * (-1/2,-1/2,-1/2,-1/2,-1/2)"
    assert FormalCharacter.from_text(text, 5) == blocks["delta-"]
