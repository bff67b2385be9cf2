"""Unit tests for promotion and the affine node 0."""

import pytest

from kr_crystals.configurations import CrystalShape
from kr_crystals.polytope import (
    Pattern,
    content,
    e0,
    enumerate_patterns,
    eps0,
    f0,
    phi0,
    promote,
    promote_inverse,
    verify_weak_promotion,
    weight,
)


class TestPromote:
    """Test the column-by-column promotion algorithm."""

    def test_three_columns(self, shape_b33):
        """Test promotion of a member of B^{3,3} with its intermediate columns."""
        pattern = Pattern(shape_b33, ((1, 1, 1), (2, 0, 0), (0, 0, 0)))
        image, trace = promote(pattern)
        assert image.rows == ((0, 1, 1), (1, 2, 0), (2, 0, 0))
        assert [step.l_sequence for step in trace.steps] == [(3, 4, 5), (3, 4, 5)]
        assert trace.lines() == [
            "l^2: 3<4<5",
            "1 0 0",
            "2 0 0",
            "l^1: 3<4<5",
            "1 2 0",
        ]

    def test_three_columns_level_four(self):
        """Test promotion of a member of B^{4,3}."""
        shape = CrystalShape(n=5, m=4, i=3)
        image, trace = promote(Pattern(shape, ((1, 1, 0), (0, 1, 1), (0, 0, 0))))
        assert image.rows == ((0, 1, 2), (2, 0, 0), (2, 0, 0))
        assert trace.lines() == [
            "l^2: 4<5",
            "2 0 0",
            "1 2 0",
            "l^1: 3<4<5",
            "1 0 0",
        ]

    def test_four_columns(self, shape_b74):
        """Test promotion of a member of B^{7,4} with every auxiliary column."""
        pattern = Pattern(shape_b74, ((1, 0, 1, 1), (0, 1, 3, 2), (1, 0, 2, 0)))
        image, trace = promote(pattern)
        assert image.rows == ((0, 1, 0, 3), (1, 0, 1, 1), (3, 1, 0, 2))
        assert [step.column for step in trace.steps] == [4, 3, 2]
        assert [step.l_sequence for step in trace.steps] == [(5, 6), (4, 5, 6), (4, 5, 6)]
        assert [step.pr_column for step in trace.steps] == [(3, 1, 2), (0, 1, 0), (1, 0, 1)]
        assert [step.auxiliary for step in trace.steps] == [(1, 3, 2), (0, 4, 2), None]

    def test_single_column(self):
        """Test i = 1 shifts the column down and refills the top from the level."""
        shape = CrystalShape(n=2, m=3, i=1)
        image, trace = promote(Pattern(shape, ((1,), (1,))))
        assert image.rows == ((1,), (1,))
        assert trace.steps == ()

    def test_single_column_shift(self):
        """Test i = 1 on a column with a gap."""
        shape = CrystalShape(n=3, m=4, i=1)
        image, _ = promote(Pattern(shape, ((2,), (0,), (1,))))
        assert image.rows == ((1,), (2,), (0,))

    def test_content_shifts_cyclically(self, shape_b74):
        """Test wt(pr A) = (r_{n+1}, r_1, ..., r_n)."""
        pattern = Pattern(shape_b74, ((1, 0, 1, 1), (0, 1, 3, 2), (1, 0, 2, 0)))
        r = content(pattern)
        assert content(promote(pattern)[0]) == r[-1:] + r[:-1]


class TestPromoteInverse:
    """Test inverse promotion and the order of promotion."""

    def test_inverse_on_every_member(self, shape_b32):
        """Test pr^{-1} pr = id on B^{3,2}."""
        for pattern in enumerate_patterns(shape_b32):
            assert promote_inverse(promote(pattern)[0]) == pattern

    def test_zero_pattern(self, shape_b52):
        """Test the zero pattern returns from its image."""
        zero = Pattern.zero(shape_b52)
        assert promote_inverse(promote(zero)[0]) == zero

    @pytest.mark.parametrize("n, m, i", [(2, 3, 2), (3, 2, 2), (4, 1, 2), (3, 2, 3)])
    def test_order_divides_n_plus_one(self, n, m, i):
        """Test pr^{n+1} = id."""
        shape = CrystalShape(n=n, m=m, i=i)
        for pattern in enumerate_patterns(shape):
            orbit = pattern
            for _ in range(n + 1):
                orbit = promote(orbit)[0]
            assert orbit == pattern


class TestAffineOperators:
    """Test f_0 and e_0."""

    def test_e0_inverts_f0(self, shape_b32):
        """Test e_0 f_0 = id wherever f_0 is defined."""
        for pattern in enumerate_patterns(shape_b32):
            image = f0(pattern)
            if image is not None:
                assert e0(image) == pattern

    def test_level_zero_pairing(self):
        """Test phi_0 - eps_0 = r_{n+1} - r_1."""
        shape = CrystalShape(n=3, m=2, i=2)
        for pattern in enumerate_patterns(shape):
            assert phi0(pattern) - eps0(pattern) == weight(pattern).pairing(0)

    def test_f0_on_vector_representation(self):
        """Test f_0 sends the lowest weight element back to the top in B^{1,1}."""
        shape = CrystalShape(n=2, m=1, i=1)
        lowest = Pattern(shape, ((0,), (1,)))
        assert f0(lowest) == Pattern.zero(shape)
        assert f0(Pattern.zero(shape)) is None


class TestVerifyWeakPromotion:
    """Test the exhaustive weak-promotion suite."""

    @pytest.mark.parametrize("n, m, i, elements", [(2, 3, 2, 10), (3, 2, 2, 20)])
    def test_algorithm_passes(self, n, m, i, elements):
        """Test the algorithm is a weak promotion operator."""
        report = verify_weak_promotion(CrystalShape(n=n, m=m, i=i))
        assert report.ok, report.summary()
        assert report.facts["elements"] == elements

    def test_identity_fails_content_shift(self, shape_b32):
        """Test a map that does not shift content is caught."""
        report = verify_weak_promotion(shape_b32, promotion=lambda pattern: pattern)
        assert not report.ok
        assert "content-shift" in report.clauses
