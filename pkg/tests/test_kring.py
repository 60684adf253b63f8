import pytest
import sympy as sp

from lie_kring.errors import DerivationError
from lie_kring.kring.koszul import koszul_tor
from lie_kring.kring.polys import (
    int_poly,
    poly_gcd,
    q_dimension,
    quotient_invariants,
    substitute_shift,
    t,
    u,
)
from lie_kring.kring.presentation import (
    AUGMENTATIONS,
    derive_b_images,
    freeness_witness,
    kring_presentation,
    solve_relations,
    verify_lemma_5_2,
)
from lie_kring.kring.tangent import verify_tangent_class
from lie_kring.lie import formulas
from lie_kring.lie.branching import verified_prop_4_2_forms


@pytest.mark.parametrize(
    "f,g,expected",
    [
        (t**2 - 1, t - 1, t - 1),
        (2 * t, 4, 2),
        (0, -(t + 3), t + 3),
        (6 * t + 6, 4 * t**2 - 4, 2 * t + 2),
    ],
)
def test_poly_gcd(f, g, expected):
    assert poly_gcd(int_poly(f), int_poly(g)) == int_poly(expected)


def test_quotient_invariants():
    assert quotient_invariants([]).z_rank is None
    assert quotient_invariants([int_poly(-1)]).is_zero()
    cubic = quotient_invariants([int_poly((t - 10) ** 3)])
    assert (cubic.z_rank, cubic.torsion, cubic.exact) == (3, [], True)
    mod_two = quotient_invariants([int_poly(t**2), int_poly(2)])
    assert (mod_two.z_rank, mod_two.torsion) == (0, [2, 2])
    assert str(mod_two) == "Z/2 + Z/2"


def test_q_dimension():
    assert q_dimension([int_poly((t - 10) ** 3)]) == 3
    assert q_dimension([int_poly(t**2 - 1), int_poly(t - 1)]) == 1
    assert q_dimension([int_poly(0)]) is None


def test_substitute_shift():
    assert substitute_shift(int_poly((t - 10) ** 3)) == sp.Poly(u**3, u, domain="ZZ")


def test_koszul_tor_theorem_case():
    tor = koszul_tor(0, (t - 10) ** 3)
    assert tor.h0.z_module.z_rank == 3
    assert tor.h1.generators == ["X"]
    assert tor.h1.relations == tor.h0.relations
    assert tor.h2.is_zero()
    assert tor.euler_characteristic() == 0
    assert tor.z_ranks_match_q_ranks()


def test_koszul_tor_zero():
    tor = koszul_tor(0, 0)
    assert tor.h0.b_rank == 1
    assert tor.h1.b_rank == 2
    assert tor.h2.b_rank == 1
    assert tor.euler_characteristic() is None


def test_koszul_tor_common_factor():
    tor = koszul_tor(t - 1, (t - 1) * (t + 2))
    assert tor.h0.z_module.z_rank == 1
    assert tor.h1.relations == ["t - 1"]
    assert tor.h1.z_module.z_rank == 1
    assert tor.h2.is_zero()
    assert tor.euler_characteristic() == 0


def test_koszul_tor_unit():
    tor = koszul_tor(1, t)
    assert tor.h0.is_zero()
    assert tor.h1.is_zero()
    assert tor.h2.is_zero()


def test_koszul_tor_torsion():
    tor = koszul_tor(t, 2)
    assert tor.h0.z_module.z_rank == 0
    assert tor.h0.z_module.torsion == [2]
    assert str(tor.h0.z_module) == "Z/2"
    assert tor.h1.is_zero()
    assert tor.h2.is_zero()


def test_koszul_tor_unit_ideal():
    # (2, 3) is all of Z[t] although neither generator is a unit.
    tor = koszul_tor(2, 3)
    assert tor.h0.is_zero()
    assert str(tor.h0) == "0"
    assert tor.h1.is_zero()
    assert tor.euler_characteristic() == 0


def test_homology_keeps_relation_polys():
    tor = koszul_tor(0, (t - 10) ** 3)
    assert tor.h0.relation_polys == [int_poly((t - 10) ** 3)]
    assert "relation_polys" not in tor.h0.model_dump()
    assert "relation_polys" not in tor.model_dump_json()


def test_b_images():
    images = derive_b_images()
    assert images.delta_plus == int_poly(26 - t)
    assert images.delta_minus == int_poly(26 - t)
    assert images.lambda2 == int_poly(25 + 2 * t)
    assert images.lambda3 == int_poly(t**2 - 28 * t + 300)
    assert images.lambda4 == int_poly(t**2 - 54 * t + 650)
    assert images.xbar.is_zero
    assert images.ybar == int_poly((t - 10) ** 3)
    assert images.augmentation()["lambda4"] == 210


def test_lemma_5_2():
    assert all(v.passed for v in verify_lemma_5_2(derive_b_images()))


def test_lemma_5_2_failure_carries_witness():
    images = derive_b_images()
    wrong = images.__class__(**{**images.fields(), "ybar": int_poly(t**3)})
    verdicts = {v.claim: v for v in verify_lemma_5_2(wrong)}
    assert not verdicts["lemma-5.2-e"].passed
    assert verdicts["lemma-5.2-e"].witness


def test_solve_relations_needs_unit_coefficient():
    forms = {**verified_prop_4_2_forms(), "i": 1 + formulas.l1 + 2 * formulas.dm}
    with pytest.raises(DerivationError):
        solve_relations(forms, AUGMENTATIONS)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_freeness_witness(seed):
    assert freeness_witness(verified_prop_4_2_forms(), seed=seed, points=5).passed


def test_kring_presentation():
    presentation = kring_presentation()
    assert presentation.summary() == "K0 = Z[u]/(u^3), u = lambda1 - 10"
    assert presentation.k0_basis == ["1", "u", "u^2"]
    assert presentation.k1_rank == 1
    assert all(v.passed for v in presentation.verdicts)


def test_tangent_class():
    report = verify_tangent_class()
    assert [v.claim for v in report.verdicts if not v.passed] == []
    assert report.dim_m == 33
    assert report.immersion_dimension == 53
    assert report.non_immersion_bound == 40
    (theorem,) = [v for v in report.verdicts if v.claim == "thm-1.2"]
    assert theorem.note == "relies on cited external theorems"
