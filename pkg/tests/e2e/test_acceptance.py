"""Exhaustive desk-scale checks of the polytope model against its oracles."""

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from kr_crystals.configurations import CrystalShape, OffsetChoice
from kr_crystals.crystal import build_graph, character, rooted_isomorphism, verify_axioms, verify_stembridge
from kr_crystals.monomials import COffsets, Monomial, MonomialCrystal
from kr_crystals.polytope import (
    Pattern,
    PolytopeCrystal,
    dyck_paths,
    enumerate_patterns,
    is_member,
    promote,
    verify_weak_promotion,
    weyl_dimension,
)
from kr_crystals.tableaux import Tableau, TableauCrystal, compare_models
from tests.shapes import desk_shapes, shape_id

CLASSICAL_SHAPES = desk_shapes(max_n=4, max_m=3)
AFFINE_SHAPES = desk_shapes(max_n=3, max_m=3)
MONOMIAL_SHAPES = desk_shapes(max_n=3, max_m=2)


class TestMembershipGoldens:
    """Test the two membership examples."""

    def test_member(self):
        """Test a grid inside B^{5,2} of type A_4."""
        assert is_member([[1, 0], [2, 1], [0, 1]], CrystalShape(n=4, m=5, i=2))

    def test_non_member(self):
        """Test a grid outside B^{5,3} of type A_5."""
        assert not is_member([[1, 0, 0], [0, 1, 3], [1, 0, 1]], CrystalShape(n=5, m=5, i=3))


@pytest.mark.slow
class TestClassicalStructure:
    """Test enumeration and the classical crystal on every shape with n <= 4, m <= 3."""

    @pytest.mark.parametrize("shape", CLASSICAL_SHAPES, ids=shape_id)
    def test_dimension(self, shape):
        """Test the member count equals the Weyl dimension of m omega_i."""
        assert len(enumerate_patterns(shape)) == weyl_dimension(shape)

    @pytest.mark.parametrize("shape", CLASSICAL_SHAPES, ids=shape_id)
    def test_axioms(self, shape):
        """Test the classical graph reaches every member and passes the axiom check."""
        crystal = PolytopeCrystal(shape)
        graph = build_graph(crystal)
        assert len(graph) == len(enumerate_patterns(shape))
        report = verify_axioms(graph, crystal)
        assert report.ok, report.summary()

    @pytest.mark.parametrize("shape", CLASSICAL_SHAPES, ids=shape_id)
    def test_stembridge_and_tableaux(self, shape):
        """Test the Stembridge conditions and the classical isomorphism to tableaux."""
        polytope, tableaux = PolytopeCrystal(shape), TableauCrystal(shape)
        polytope_graph, tableau_graph = build_graph(polytope), build_graph(tableaux)
        report = verify_stembridge(polytope_graph)
        assert report.ok, report.summary()

        assert character(polytope_graph, polytope) == character(tableau_graph, tableaux)
        _, iso_report = rooted_isomorphism(
            polytope_graph,
            tableau_graph,
            polytope_graph.index[Pattern.zero(shape)],
            tableau_graph.index[Tableau.highest_weight(shape)],
        )
        assert iso_report.ok, iso_report.summary()
        assert iso_report.checked == len(polytope_graph)


@pytest.mark.slow
class TestMonomialAgreement:
    """Test the monomial component against the polytope for n <= 3, m <= 2."""

    @pytest.mark.parametrize("shape", MONOMIAL_SHAPES, ids=shape_id)
    @pytest.mark.parametrize("choice", list(OffsetChoice))
    def test_rooted_isomorphism(self, shape, choice):
        """Test both offset choices give a graph isomorphic to the polytope graph."""
        polytope_graph = build_graph(PolytopeCrystal(shape))
        monomial_graph = build_graph(MonomialCrystal(shape, COffsets.from_choice(shape.n, choice)))
        _, report = rooted_isomorphism(
            polytope_graph,
            monomial_graph,
            polytope_graph.index[Pattern.zero(shape)],
            monomial_graph.index[Monomial.Y(shape.i, 0, shape.m)],
        )
        assert report.ok, report.summary()


class TestPromotionGoldens:
    """Test the worked promotion examples step by step."""

    def test_b33(self):
        """Test promotion on B^{3,3} of type A_5."""
        shape = CrystalShape(n=5, m=3, i=3)
        image, trace = promote(Pattern(shape, ((1, 1, 1), (2, 0, 0), (0, 0, 0))))
        assert image.rows == ((0, 1, 1), (1, 2, 0), (2, 0, 0))
        assert trace.lines() == ["l^2: 3<4<5", "1 0 0", "2 0 0", "l^1: 3<4<5", "1 2 0"]

    def test_b74(self):
        """Test promotion on B^{7,4} of type A_6."""
        shape = CrystalShape(n=6, m=7, i=4)
        image, trace = promote(Pattern(shape, ((1, 0, 1, 1), (0, 1, 3, 2), (1, 0, 2, 0))))
        assert image.rows == ((0, 1, 0, 3), (1, 0, 1, 1), (3, 1, 0, 2))
        assert trace.lines() == [
            "l^3: 5<6",
            "3 1 2",
            "1 3 2",
            "l^2: 4<5<6",
            "0 1 0",
            "0 4 2",
            "l^1: 4<5<6",
            "1 0 1",
        ]


@pytest.mark.slow
class TestWeakPromotion:
    """Test promotion on every shape with n <= 4, m <= 3."""

    @pytest.mark.parametrize("shape", CLASSICAL_SHAPES, ids=shape_id)
    def test_weak_promotion(self, shape):
        """Test content shift, bijectivity, intertwining, order and the first-column identity."""
        report = verify_weak_promotion(shape)
        assert report.ok, report.summary()

    @pytest.mark.parametrize("shape", CLASSICAL_SHAPES, ids=shape_id)
    def test_first_column(self, shape):
        """Test m minus the first column of pr(A) is the sum of the last row of A."""
        for pattern in enumerate_patterns(shape):
            image, _ = promote(pattern)
            assert all(a >= 0 for a in image.column(1))
            assert shape.m - sum(image.column(1)) == sum(pattern.rows[-1])


@pytest.mark.slow
class TestAffineCrystal:
    """Test the affine crystal on every shape with n <= 3, m <= 3."""

    @pytest.mark.parametrize("shape", AFFINE_SHAPES, ids=shape_id)
    def test_affine_axioms(self, shape):
        """Test the affine graph is connected and passes the axioms over 0..n."""
        crystal = PolytopeCrystal(shape, affine=True)
        graph = build_graph(crystal)
        assert graph.index_set == tuple(range(shape.n + 1))
        assert graph.is_connected()
        report = verify_axioms(graph, crystal)
        assert report.ok, report.summary()

    @pytest.mark.parametrize("shape", AFFINE_SHAPES, ids=shape_id)
    def test_matches_tableaux(self, shape):
        """Test the affine isomorphism to the tableau model is certified."""
        report = compare_models(shape)
        assert report.ok, report.summary()

    def test_b32_vertex_count(self):
        """Test B^{3,2} of type A_2 has ten vertices in its affine graph."""
        graph = build_graph(PolytopeCrystal(CrystalShape(n=2, m=3, i=2), affine=True))
        assert len(graph) == 10
        assert {l for _, l, _ in graph.edges} == {0, 1, 2}


def grids(shape: CrystalShape) -> st.SearchStrategy[list[list[int]]]:
    row = st.lists(st.integers(0, shape.m + 2), min_size=shape.width, max_size=shape.width)
    return st.lists(row, min_size=shape.height, max_size=shape.height)


@pytest.mark.slow
class TestMembershipOracle:
    """Test the dynamic program against explicit Dyck path totals."""

    @pytest.mark.parametrize("shape", desk_shapes(max_n=4, max_m=3), ids=shape_id)
    def test_random_grids(self, shape):
        """Test is_member on random grids with entries up to m + 2."""
        paths = dyck_paths(shape)

        @settings(
            max_examples=1000,
            derandomize=True,
            deadline=None,
            suppress_health_check=[HealthCheck.too_slow],
        )
        @given(grid=grids(shape))
        def check(grid):
            expected = max(path.total(grid, shape) for path in paths) <= shape.m
            assert is_member(grid, shape) == expected

        check()
