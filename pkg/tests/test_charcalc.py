import pytest

from lie_kring.errors import ClassificationError, InvarianceError, UnsupportedScaleError
from lie_kring.lie.charcalc import (
    TABLE_2,
    IrrDecomposition,
    adjoint_character_e8,
    decompose,
    irreducible_character,
    table2_rows,
    verify_clifford_relation,
    verify_diagram_automorphism,
    verify_lemma_4_1,
    verify_prop_3_2,
    verify_table_1,
    verify_table_2,
    weight_type,
)
from lie_kring.lie.charspace import FormalCharacter, Weight, exterior_power


def test_e6_adjoint(e6):
    chi = irreducible_character(e6, e6.fundamental_weight(5))
    assert chi.dimension == 78
    assert chi.multiplicity(Weight.zero(8)) == 6


def test_d5_vector(d5):
    chi = irreducible_character(d5, d5.fundamental_weight(1))
    assert chi == FormalCharacter.from_weights(
        [Weight.basis(5, i).scale(s) for i in range(5) for s in (1, -1)], 5
    )


def test_e6_largest_fundamental(e6):
    assert irreducible_character(e6, e6.fundamental_weight(4)).dimension == 2925


def test_e8_adjoint(e8):
    chi = adjoint_character_e8()
    assert chi.dimension == 248
    assert chi.multiplicity(Weight.zero(8)) == 8
    assert chi.multiplicity(Weight((1, 1, 0, 0, 0, 0, 0, 0))) == 1


def test_e8_general_irreducible_unsupported(e8):
    with pytest.raises(UnsupportedScaleError):
        irreducible_character(e8, e8.fundamental_weight(1))


@pytest.mark.parametrize(
    "k,index,expected",
    [(2, 1, {2: 1}), (2, 6, {3: 1}), (2, 5, {4: 1, 5: 1}), (3, 1, {4: 1})],
)
def test_decompose_exterior_powers(e6, k, index, expected):
    chi = exterior_power(k, irreducible_character(e6, e6.fundamental_weight(index)))
    assert decompose(e6, chi) == IrrDecomposition.of_fundamentals(e6, expected)


@pytest.mark.parametrize("index", range(1, 6))
def test_decompose_irreducible(d5, index):
    hw = d5.fundamental_weight(index)
    assert decompose(d5, irreducible_character(d5, hw)).terms == {hw: 1}


def test_decompose_virtual(d5, blocks):
    virtual = blocks["lambda2"] - blocks["1"] * 2
    result = decompose(d5, virtual)
    assert result.terms == {d5.fundamental_weight(2): 1, Weight.zero(5): -2}
    assert result.reconstruct() == virtual


def test_decompose_requires_invariance(e6):
    with pytest.raises(InvarianceError):
        decompose(e6, FormalCharacter.monomial(e6.fundamental_weight(1)))


def test_decomposition_text(e6):
    assert str(IrrDecomposition.of_fundamentals(e6, {2: 1})) == "V(ϖ2)"
    assert str(IrrDecomposition.of_fundamentals(e6, {0: 8})) == "8V(0)"


def test_table_1():
    assert verify_table_1().passed
    assert verify_diagram_automorphism().passed


def test_prop_3_2():
    verdicts = verify_prop_3_2()
    assert [v.claim for v in verdicts if not v.passed] == []


def test_lemma_4_1():
    verdicts = verify_lemma_4_1()
    assert all(v.passed for v in verdicts)


def test_lemma_4_1_dimensions(blocks):
    assert (blocks["lambda1"] * blocks["lambda3"]).dimension == 1200
    assert exterior_power(2, blocks["lambda2"]).dimension == 990


def test_table_2_rows():
    assert table2_rows() == TABLE_2
    assert all(v.passed for v in verify_table_2())


def test_weight_type():
    assert weight_type(Weight((0, -1, 1, 0, 0))) == (1, 1, 0, 0, 0)
    with pytest.raises(ClassificationError):
        weight_type(Weight((3, 0, 0, 0, 0)))


def test_clifford_relation(blocks):
    assert verify_clifford_relation().passed
    product = blocks["delta+"] * blocks["delta-"]
    assert product.dimension == 256
    assert product.multiplicity(Weight.zero(5)) == 16
