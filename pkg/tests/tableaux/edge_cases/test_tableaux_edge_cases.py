"""Edge cases of the tableau model."""

import pytest

from kr_crystals.configurations import CrystalShape
from kr_crystals.errors import NotAMemberError
from kr_crystals.tableaux import Tableau, TableauCrystal, compare_models, enumerate_ssyt, jdt_promote


class TestTableauEdgeCases:
    """Test degenerate tableaux."""

    def test_empty_rows_at_level_zero(self):
        """Test m = 0 tableaux have i empty rows and are fixed by promotion."""
        shape = CrystalShape(n=2, m=0, i=2)
        (empty,) = enumerate_ssyt(shape)
        assert empty.rows == ((), ())
        assert jdt_promote(empty) == empty

    def test_level_zero_comparison(self):
        """Test the single-element crystals compare equal."""
        report = compare_models(CrystalShape(n=2, m=0, i=1))
        assert report.ok
        assert report.facts["vertices"] == 1

    def test_full_column(self):
        """Test a column of height n is one of n+1 tableaux."""
        assert len(enumerate_ssyt(CrystalShape(n=3, m=1, i=3))) == 4

    def test_load_rejects_zero_entry(self):
        """Test the document model refuses non-positive letters."""
        crystal = TableauCrystal(CrystalShape(n=2, m=1, i=1))
        with pytest.raises(ValueError):
            crystal.load({"rows": [[0]]})

    def test_load_rejects_non_member(self):
        """Test semistandardness is checked on load."""
        crystal = TableauCrystal(CrystalShape(n=2, m=1, i=2))
        with pytest.raises(NotAMemberError):
            crystal.load({"rows": [[2], [1]]})

    def test_content_of_highest_weight(self):
        """Test the highest weight content is m in each of the first i letters."""
        tableau = Tableau.highest_weight(CrystalShape(n=3, m=2, i=2))
        assert tableau.content() == (2, 2, 0, 0)
