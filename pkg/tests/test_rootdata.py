import pytest

from lie_kring.errors import DomainError, UnsupportedScaleError
from lie_kring.lie.charspace import Weight
from lie_kring.lie.rootdata import (
    E6_FUNDAMENTAL_WEIGHTS,
    DominantWeight,
    RootSystemKind,
    build_root_system,
    dominant_representative,
    reflect,
    weyl_dimension,
    weyl_group_order,
    weyl_orbit,
)


@pytest.mark.parametrize(
    "kind,n_roots,rank", [("E8", 240, 8), ("E6", 72, 6), ("D5", 40, 5)]
)
def test_root_counts(kind, n_roots, rank):
    rs = build_root_system(kind)
    assert len(rs.all_roots) == n_roots
    assert rs.rank == rank
    positive = set(rs.positive_roots)
    assert len(positive) == n_roots // 2
    assert positive | {-r for r in positive} == rs.all_roots


@pytest.mark.parametrize("kind", list(RootSystemKind))
def test_fundamental_weights_dual_to_coroots(kind):
    rs = build_root_system(kind)
    for i, w in enumerate(rs.fundamental_weights):
        assert rs.dynkin_labels(w) == tuple(int(i == j) for j in range(rs.rank))


def test_e6_fundamental_weights(e6):
    assert e6.fundamental_weights == tuple(Weight(w) for w in E6_FUNDAMENTAL_WEIGHTS)


def test_d5_weyl_vector(d5):
    assert d5.weyl_vector == Weight((4, 3, 2, 1, 0))


@pytest.mark.parametrize(
    "i,dimension", [(1, 27), (2, 351), (3, 351), (4, 2925), (5, 78), (6, 27)]
)
def test_table_1_dimensions(e6, i, dimension):
    assert weyl_dimension(e6, DominantWeight.fundamental(e6, i)) == dimension


def test_weyl_dimension_of_sum(e6):
    assert weyl_dimension(e6, e6.fundamental_weight(1) + e6.fundamental_weight(6)) == 650


def test_non_dominant_weight(e6):
    with pytest.raises(DomainError):
        DominantWeight(e6, -e6.fundamental_weight(1))
    with pytest.raises(DomainError):
        weyl_dimension(e6, -e6.fundamental_weight(1))


def test_reflect(d5):
    alpha = d5.simple_roots[0]
    assert reflect(alpha, alpha) == -alpha
    assert reflect(Weight((0, 0, 1, 0, 0)), alpha) == Weight((0, 0, 1, 0, 0))


@pytest.mark.parametrize(
    "kind,index,size", [("E6", 1, 27), ("E6", 5, 72), ("D5", 1, 10), ("D5", 5, 16)]
)
def test_orbit_sizes(kind, index, size):
    rs = build_root_system(kind)
    assert len(weyl_orbit(rs, rs.fundamental_weight(index))) == size


@pytest.mark.parametrize("kind,order", [("D5", 1920), ("E6", 51840)])
def test_weyl_group_order(kind, order):
    assert weyl_group_order(build_root_system(kind)) == order


def test_e8_weyl_group_order_is_guarded(e8):
    with pytest.raises(UnsupportedScaleError):
        weyl_group_order(e8)


def test_dominant_representative(e6):
    # -w0 interchanges ϖ1 and ϖ6.
    assert dominant_representative(e6, -e6.fundamental_weight(1)) == e6.fundamental_weight(6)


def test_labels(e6, d5):
    assert e6.label(e6.fundamental_weight(1) + e6.fundamental_weight(6)) == "ϖ1+ϖ6"
    assert d5.label(d5.fundamental_weight(5)) == "π5"
    assert e6.label(Weight.zero(8)) == "0"


@pytest.mark.parametrize("kind", list(RootSystemKind))
def test_roots_closed_under_reflections(kind):
    rs = build_root_system(kind)
    assert all(reflect(beta, alpha) in rs.all_roots for alpha in rs.all_roots for beta in rs.all_roots)


@pytest.mark.parametrize("kind", list(RootSystemKind))
def test_weyl_vector(kind):
    rs = build_root_system(kind)
    assert rs.dynkin_labels(rs.weyl_vector) == (1,) * rs.rank
    total = Weight.zero(rs.ambient_dim)
    for w in rs.fundamental_weights:
        total = total + w
    assert total == rs.weyl_vector


def test_d5_dominant_representative(d5):
    assert dominant_representative(d5, Weight((0, 0, 0, 0, -1))) == Weight((1, 0, 0, 0, 0))


def test_trivial_weyl_dimension(e6):
    assert weyl_dimension(e6, Weight.zero(e6.ambient_dim)) == 1


def test_orbit_progress_only_on_request(e6, capsys):
    assert weyl_group_order(e6) == 51840
    assert "orbit" not in capsys.readouterr().err
