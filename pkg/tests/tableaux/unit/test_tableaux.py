"""Unit tests for the rectangular tableau model."""

import pytest

from kr_crystals.configurations import CrystalShape
from kr_crystals.crystal import build_graph, verify_axioms, verify_stembridge
from kr_crystals.errors import NotAMemberError, ShapeError
from kr_crystals.tableaux import (
    Tableau,
    TableauCrystal,
    TableauDocument,
    enumerate_ssyt,
    jdt_promote,
    reading_word,
    tab_e,
    tab_f,
    tab_phi,
)


def column(*entries: int) -> Tableau:
    shape = CrystalShape(n=2, m=1, i=len(entries))
    return Tableau(shape, tuple((a,) for a in entries))


class TestTableau:
    """Test tableau validation."""

    def test_highest_weight(self):
        """Test row r of the highest weight tableau is filled with r."""
        shape = CrystalShape(n=3, m=2, i=2)
        assert Tableau.highest_weight(shape).rows == ((1, 1), (2, 2))

    def test_not_semistandard_row(self):
        """Test a decreasing row is rejected."""
        with pytest.raises(NotAMemberError, match="weakly increasing"):
            Tableau(CrystalShape(n=2, m=2, i=1), ((2, 1),))

    def test_not_strict_column(self):
        """Test a repeated column entry is rejected."""
        with pytest.raises(NotAMemberError, match="strictly increasing"):
            Tableau(CrystalShape(n=2, m=1, i=2), ((1,), (1,)))

    def test_entry_out_of_range(self):
        """Test letters must lie in 1..n+1."""
        with pytest.raises(NotAMemberError, match="1..3"):
            Tableau(CrystalShape(n=2, m=1, i=1), ((4,),))

    def test_wrong_rectangle(self):
        """Test the rows must form an i x m rectangle."""
        with pytest.raises(ShapeError):
            Tableau(CrystalShape(n=2, m=2, i=2), ((1, 1),))

    def test_document(self):
        """Test the JSON form loads back."""
        shape = CrystalShape(n=2, m=3, i=2)
        tableau = Tableau(shape, ((1, 1, 2), (2, 3, 3)))
        assert tableau.to_document() == {"rows": [[1, 1, 2], [2, 3, 3]]}
        assert TableauDocument.model_validate(tableau.to_document()).to_tableau(shape) == tableau

    def test_text(self):
        """Test the aligned text form."""
        tableau = Tableau(CrystalShape(n=2, m=3, i=2), ((1, 1, 2), (2, 3, 3)))
        assert tableau.text() == "1 1 2\n2 3 3"
        assert tableau.label() == "1 1 2/2 3 3"


class TestEnumerateSSYT:
    """Test tableau enumeration."""

    def test_single_column(self):
        """Test columns of height 2 over 1..3."""
        tableaux = enumerate_ssyt(CrystalShape(n=2, m=1, i=2))
        assert [t.rows for t in tableaux] == [((1,), (2,)), ((1,), (3,)), ((2,), (3,))]

    def test_single_row(self):
        """Test rows of length 2 over 1..2."""
        tableaux = enumerate_ssyt(CrystalShape(n=1, m=2, i=1))
        assert [t.rows for t in tableaux] == [((1, 1),), ((1, 2),), ((2, 2),)]

    def test_rectangle_count(self):
        """Test the 2 x 3 rectangle over 1..3 has ten fillings."""
        assert len(enumerate_ssyt(CrystalShape(n=2, m=3, i=2))) == 10

    def test_level_zero(self):
        """Test m = 0 gives the empty tableau alone."""
        tableaux = enumerate_ssyt(CrystalShape(n=3, m=0, i=2))
        assert [t.rows for t in tableaux] == [((), ())]


class TestBracketing:
    """Test the reading word and the operators it defines."""

    def test_reading_word(self):
        """Test columns are read left to right, bottom to top."""
        tableau = Tableau(CrystalShape(n=2, m=2, i=2), ((1, 2), (3, 3)))
        assert [letter for letter, _ in reading_word(tableau)] == [3, 1, 3, 2]

    def test_f_on_column(self):
        """Test f_2 turns the unpaired 2 of a column into 3."""
        assert tab_f(column(1, 2), 2) == column(1, 3)

    def test_column_is_highest_weight(self):
        """Test the 2 of a column pairs with the 1 above it."""
        assert tab_phi(column(1, 2), 1) == 0
        assert tab_e(column(1, 2), 1) is None

    def test_f_on_row(self):
        """Test f_1 changes the rightmost unpaired 1."""
        shape = CrystalShape(n=1, m=2, i=1)
        assert tab_f(Tableau(shape, ((1, 1),)), 1).rows == ((1, 2),)

    def test_e_changes_leftmost_unpaired(self):
        """Test e_2 picks the first column's 3 when the second is paired."""
        shape = CrystalShape(n=2, m=2, i=2)
        tableau = Tableau(shape, ((1, 2), (3, 3)))
        assert tab_e(tableau, 2).rows == ((1, 2), (2, 3))

    def test_highest_weight_killed_by_e(self):
        """Test every e_l vanishes on the highest weight tableau."""
        tableau = Tableau.highest_weight(CrystalShape(n=3, m=2, i=2))
        assert all(tab_e(tableau, l) is None for l in (1, 2, 3))

    def test_e_inverts_f(self):
        """Test e_l f_l = id on every tableau."""
        shape = CrystalShape(n=3, m=2, i=2)
        for tableau in enumerate_ssyt(shape):
            for l in (1, 2, 3):
                image = tab_f(tableau, l)
                if image is not None:
                    assert tab_e(image, l) == tableau


class TestJdtPromote:
    """Test promotion by jeu de taquin."""

    def test_column_with_top_letter(self):
        """Test the n+1 slides out and a 1 enters at the top."""
        assert jdt_promote(column(2, 3)) == column(1, 3)

    def test_column_without_top_letter(self):
        """Test a tableau without n+1 is only incremented."""
        assert jdt_promote(column(1, 2)) == column(2, 3)

    def test_rectangle(self):
        """Test two holes slide in turn."""
        shape = CrystalShape(n=2, m=2, i=2)
        assert jdt_promote(Tableau(shape, ((1, 2), (3, 3)))).rows == ((1, 1), (2, 3))

    @pytest.mark.parametrize("n, m, i", [(2, 3, 2), (3, 2, 2), (3, 1, 3), (4, 1, 2)])
    def test_order(self, n, m, i):
        """Test promotion has order n+1 and shifts content."""
        for tableau in enumerate_ssyt(CrystalShape(n=n, m=m, i=i)):
            r = tableau.content()
            assert jdt_promote(tableau).content() == r[-1:] + r[:-1]
            orbit = tableau
            for _ in range(n + 1):
                orbit = jdt_promote(orbit)
            assert orbit == tableau

    def test_intertwines(self):
        """Test pr f_j = f_{j+1} pr for j = 1..n-1."""
        shape = CrystalShape(n=3, m=2, i=2)
        for tableau in enumerate_ssyt(shape):
            for j in (1, 2):
                image = tab_f(tableau, j)
                expected = tab_f(jdt_promote(tableau), j + 1)
                assert (None if image is None else jdt_promote(image)) == expected


class TestTableauCrystal:
    """Test the tableau crystal as an oracle model."""

    def test_axioms(self):
        """Test the classical tableau crystal passes the axiom check."""
        crystal = TableauCrystal(CrystalShape(n=3, m=2, i=2))
        assert verify_axioms(build_graph(crystal), crystal).ok

    def test_stembridge(self):
        """Test the classical tableau crystal satisfies the Stembridge conditions."""
        assert verify_stembridge(build_graph(TableauCrystal(CrystalShape(n=3, m=1, i=2)))).ok

    def test_affine_axioms(self):
        """Test the affine tableau crystal passes with node 0 from promotion."""
        crystal = TableauCrystal(CrystalShape(n=2, m=2, i=1), affine=True)
        assert verify_axioms(build_graph(crystal), crystal).ok

    def test_load(self):
        """Test loading a JSON document."""
        crystal = TableauCrystal(CrystalShape(n=2, m=1, i=2))
        assert crystal.load({"rows": [[1], [3]]}) == column(1, 3)
