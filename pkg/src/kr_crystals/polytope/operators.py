"""Classical Kashiwara operators on B^{m,i}.

The three cases of an index l are handled separately: l = i touches only the
corner a_{i,i}; l > i only rows l-1 and l; l < i only columns l and l+1.
"""

import logging
from typing import Sequence

from kr_crystals.crystal.models import Weight
from kr_crystals.errors import InvariantError, NotAMemberError, ShapeError
from kr_crystals.polytope.models import Pattern, StringData, TruncatedColumn
from kr_crystals.polytope.patterns import content

logger = logging.getLogger(__name__)


def weight(pattern: Pattern) -> Weight:
    """wt(P) = m * omega_i - sum of a_{p,q} * alpha_{p,q}"""
    return Weight(content(pattern))


def row_pair_stats(upper: Sequence[int], lower: Sequence[int]) -> StringData:
    """String data of two consecutive rows (q = l-1, l) indexed by p = 1..len.

    Maximizes S(p) = sum_{j<=p} upper_j + sum_{j>=p} lower_j; p_plus is the
    smallest maximizer, q_plus the largest.
    """
    width = len(upper)
    sums = [sum(upper[:p]) + sum(lower[p - 1 :]) for p in range(1, width + 1)]
    best = max(sums)
    p_plus = sums.index(best) + 1
    q_plus = width - sums[::-1].index(best)
    phi = sum(upper[:p_plus]) - sum(lower[: p_plus - 1])
    eps = sum(lower[q_plus - 1 :]) - sum(upper[q_plus:])
    return StringData(phi=phi, eps=eps, p_plus=p_plus, q_plus=q_plus)


def column_pair_stats(left: TruncatedColumn, right: TruncatedColumn) -> StringData:
    """String data of two neighbouring columns over the shared rows s..n.

    Maximizes T(p) = sum_{j=s}^{p} left_j + sum_{j=p}^{n} right_j; p_minus is
    the largest maximizer, q_minus the smallest.

    Raises:
        ShapeError: If the columns cover different rows
    """
    if (left.start_row, left.end_row) != (right.start_row, right.end_row):
        raise ShapeError(
            f"Columns cover rows {left.start_row}..{left.end_row} and "
            f"{right.start_row}..{right.end_row}"
        )
    a, b, s = left.values, right.values, left.start_row
    sums = [sum(a[: k + 1]) + sum(b[k:]) for k in range(len(a))]
    best = max(sums)
    q_minus = s + sums.index(best)
    p_minus = s + len(sums) - 1 - sums[::-1].index(best)
    phi = sum(b[p_minus - s :]) - sum(a[p_minus - s + 1 :])
    eps = sum(a[: q_minus - s + 1]) - sum(b[: q_minus - s])
    return StringData(phi=phi, eps=eps, p_minus=p_minus, q_minus=q_minus)


def pair_stats(left: TruncatedColumn, right: TruncatedColumn) -> tuple[int, int]:
    """(q_minus, eps) of two columns truncated to the same rows

    Examples:
        >>> pair_stats(TruncatedColumn(4, (1, 3, 2)), TruncatedColumn(4, (1, 2, 0)))
        (5, 3)
    """
    data = column_pair_stats(left, right)
    return data.q_minus, data.eps


def _check_index(pattern: Pattern, l: int) -> None:
    if not 1 <= l <= pattern.shape.n:
        raise ValueError(f"Index {l} out of range 1..{pattern.shape.n}")


def string_data(pattern: Pattern, l: int) -> StringData:
    """phi_l, epsilon_l and the critical indices of a pattern.

    Args:
        pattern (Pattern): Member of B^{m,i}
        l (int): Classical index 1 <= l <= n

    Returns:
        StringData: String lengths, with p/q_plus for l > i and p/q_minus for l < i

    Raises:
        ValueError: If l is out of range

    Examples:
        >>> P = Pattern(CrystalShape(n=4, m=5, i=2), ((1, 0), (2, 1), (0, 1)))
        >>> string_data(P, 1).q_minus, string_data(P, 2).phi
        (3, 2)
    """
    _check_index(pattern, l)
    shape, i = pattern.shape, pattern.shape.i
    if l == i:
        phi = shape.m - sum(pattern.rows[0][: i - 1]) - sum(pattern.column(i))
        return StringData(phi=phi, eps=pattern.entry(i, i))
    if l > i:
        return row_pair_stats(pattern.rows[l - 1 - i], pattern.rows[l - i])
    return column_pair_stats(
        TruncatedColumn(i, pattern.column(l)),
        TruncatedColumn(i, pattern.column(l + 1)),
    )


def _shift(pattern: Pattern, deltas: dict[tuple[int, int], int]) -> Pattern:
    rows = [list(row) for row in pattern.rows]
    for (p, q), delta in deltas.items():
        rows[q - pattern.shape.i][p - 1] += delta
    try:
        return Pattern(pattern.shape, tuple(tuple(row) for row in rows))
    except NotAMemberError as e:
        logger.error(f"Operator image left {pattern.shape}: {e}")
        raise InvariantError(f"Operator image is not a member: {e}") from e


def f(pattern: Pattern, l: int) -> Pattern | None:
    """Lowering operator f_l; None iff phi_l = 0

    Raises:
        ValueError: If l is out of range
        InvariantError: If the image fails the membership check

    Examples:
        >>> f(Pattern(CrystalShape(n=4, m=5, i=2), ((1, 0), (2, 1), (0, 1))), 1).rows
        ((1, 0), (3, 0), (0, 1))
    """
    data = string_data(pattern, l)
    if data.phi == 0:
        return None
    i = pattern.shape.i
    if l == i:
        return _shift(pattern, {(i, i): 1})
    if l > i:
        return _shift(pattern, {(data.p_plus, l - 1): -1, (data.p_plus, l): 1})
    return _shift(pattern, {(l, data.p_minus): 1, (l + 1, data.p_minus): -1})


def e(pattern: Pattern, l: int) -> Pattern | None:
    """Raising operator e_l; None iff epsilon_l = 0"""
    data = string_data(pattern, l)
    if data.eps == 0:
        return None
    i = pattern.shape.i
    if l == i:
        return _shift(pattern, {(i, i): -1})
    if l > i:
        return _shift(pattern, {(data.q_plus, l - 1): 1, (data.q_plus, l): -1})
    return _shift(pattern, {(l, data.q_minus): -1, (l + 1, data.q_minus): 1})
