"""Promotion on B^{m,i} and the affine operators f_0, e_0 it induces.

For i >= 2 the image is built right to left. Each step looks at a pair of
columns (k-1, current right column), reads off an increasing index sequence
l_1 < ... < l_t = n from the column-pair statistics, emits the pr-column k and
merges the pair into an auxiliary column that becomes the next right column.
The first column is fixed at the end by the level m.
"""

import functools
import logging
from typing import Callable

from kr_crystals.configurations import CrystalShape
from kr_crystals.crystal.models import Report
from kr_crystals.errors import InvariantError, NotAMemberError
from kr_crystals.polytope import operators
from kr_crystals.polytope.models import (
    Pattern,
    PromotionStep,
    PromotionTrace,
    TruncatedColumn,
)
from kr_crystals.polytope.operators import pair_stats
from kr_crystals.polytope.patterns import content, enumerate_patterns

logger = logging.getLogger(__name__)

__all__ = [
    "e0",
    "eps0",
    "f0",
    "pair_stats",
    "phi0",
    "promote",
    "promote_inverse",
    "verify_weak_promotion",
]


def _l_sequence(left: TruncatedColumn, right: TruncatedColumn) -> tuple[int, ...]:
    # each index is searched strictly below the previous one
    sequence = []
    previous = left.start_row - 1
    while previous < left.end_row:
        previous, _ = pair_stats(left.truncate(previous + 1), right.truncate(previous + 1))
        sequence.append(previous)
    return tuple(sequence)


def _column_step(
    left: TruncatedColumn, right: TruncatedColumn, with_auxiliary: bool
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...] | None]:
    top, bottom = left.start_row, left.end_row
    sequence = _l_sequence(left, right)
    pr_column = []
    for r in range(top, bottom + 1):
        if r == top or r - 1 in sequence:
            pr_column.append(pair_stats(left.truncate(r), right.truncate(r))[1])
        else:
            pr_column.append(right[r - 1])
    if not with_auxiliary:
        return sequence, tuple(pr_column), None

    auxiliary = []
    for r in range(top, bottom + 1):
        if r == bottom:
            auxiliary.append(left[r] + right[r])
        elif r in sequence[:-1]:
            _, eps = pair_stats(left.truncate(r + 1), right.truncate(r + 1))
            auxiliary.append(left[r] + right[r] - eps)
        else:
            auxiliary.append(left[r])
    if min(auxiliary) < 0:
        raise InvariantError(f"Negative auxiliary column {auxiliary}")
    return sequence, tuple(pr_column), tuple(auxiliary)


@functools.lru_cache(maxsize=1 << 16)
def promote(pattern: Pattern) -> tuple[Pattern, PromotionTrace]:
    """Promotion operator pr on B^{m,i}.

    Args:
        pattern (Pattern): Member of B^{m,i}

    Returns:
        tuple[Pattern, PromotionTrace]: The image and the per-column steps

    Raises:
        InvariantError: If the first column turns negative or the image is not a member

    Examples:
        >>> shape = CrystalShape(n=5, m=3, i=3)
        >>> promote(Pattern(shape, ((1, 1, 1), (2, 0, 0), (0, 0, 0))))[0].rows
        ((0, 1, 1), (1, 2, 0), (2, 0, 0))
    """
    shape = pattern.shape
    columns = pattern.columns()
    if shape.i == 1:
        (column,) = columns
        first = (shape.m - sum(column),) + column[:-1]
        return _build(shape, [first]), PromotionTrace()

    right = TruncatedColumn(shape.i, columns[-1])
    pr_columns: dict[int, tuple[int, ...]] = {}
    steps = []
    for k in range(shape.i, 1, -1):
        left = TruncatedColumn(shape.i, columns[k - 2])
        sequence, pr_column, auxiliary = _column_step(left, right, with_auxiliary=k > 2)
        pr_columns[k] = pr_column
        steps.append(PromotionStep(k, sequence, pr_column, auxiliary))
        if auxiliary is not None:
            right = TruncatedColumn(shape.i, auxiliary)

    first = [shape.m - sum(columns[-1]) - sum(pr_columns[k][0] for k in pr_columns)]
    for r in range(1, shape.height):
        first.append(
            sum(pattern.rows[r - 1]) - sum(pr_columns[k][r] for k in pr_columns)
        )
    if min(first) < 0:
        raise InvariantError(f"Negative first column {first} promoting {pattern.rows}")
    image = _build(shape, [tuple(first)] + [pr_columns[k] for k in range(2, shape.i + 1)])
    return image, PromotionTrace(tuple(steps))


def _build(shape: CrystalShape, columns: list[tuple[int, ...]]) -> Pattern:
    try:
        return Pattern.from_columns(shape, columns)
    except NotAMemberError as e:
        logger.error(f"Promotion left {shape}: {e}")
        raise InvariantError(f"Promotion image is not a member: {e}") from e


def promote_inverse(pattern: Pattern) -> Pattern:
    """pr^{-1}, computed as pr^n"""
    for _ in range(pattern.shape.n):
        pattern, _ = promote(pattern)
    return pattern


def f0(pattern: Pattern) -> Pattern | None:
    """f_0 = pr^{-1} f_1 pr"""
    image = operators.f(promote(pattern)[0], 1)
    return None if image is None else promote_inverse(image)


def e0(pattern: Pattern) -> Pattern | None:
    """e_0 = pr^{-1} e_1 pr"""
    image = operators.e(promote(pattern)[0], 1)
    return None if image is None else promote_inverse(image)


def phi0(pattern: Pattern) -> int:
    return operators.string_data(promote(pattern)[0], 1).phi


def eps0(pattern: Pattern) -> int:
    return operators.string_data(promote(pattern)[0], 1).eps


def _default_promotion(pattern: Pattern) -> Pattern:
    return promote(pattern)[0]


def verify_weak_promotion(
    shape: CrystalShape,
    promotion: Callable[[Pattern], Pattern] = _default_promotion,
) -> Report:
    """Check that ``promotion`` is a weak promotion operator on B^{m,i}.

    Over all members this checks the cyclic content shift, bijectivity,
    pr f_j = f_{j+1} pr and pr e_j = e_{j+1} pr for j = 1..n-1, pr^{n+1} = id,
    the first-column identity m - sum_r pr(a)_{1,r} = sum_r a_{r,n}, and for
    i >= 2 that the path defining phi_i stays below m on pr(A) whenever
    phi_{i-1}(A) > 0.

    Args:
        shape (CrystalShape): Desk-scale shape
        promotion (Callable[[Pattern], Pattern]): Map under test, the algorithm by default

    Returns:
        Report: Empty when every check passes
    """
    report = Report(title=f"weak promotion on {shape}")
    members = enumerate_patterns(shape)
    index = {pattern: v for v, pattern in enumerate(members)}
    images = {pattern: promotion(pattern) for pattern in members}

    def image_of(pattern: Pattern | None) -> Pattern | None:
        if pattern is None:
            return None
        return images[pattern] if pattern in images else promotion(pattern)

    if len(set(images.values())) != len(members) or set(images.values()) != set(members):
        report.add("bijection", None, (), "promotion is not a permutation of the members")

    for pattern, image in images.items():
        v = index[pattern]
        r = content(pattern)
        if content(image) != r[-1:] + r[:-1]:
            report.add("content-shift", v, (), f"{r} -> {content(image)}")
        for j in range(1, shape.n):
            if image_of(operators.f(pattern, j)) != operators.f(image, j + 1):
                report.add("intertwine-f", v, (j, j + 1), f"pr f_{j} != f_{j + 1} pr")
            if image_of(operators.e(pattern, j)) != operators.e(image, j + 1):
                report.add("intertwine-e", v, (j, j + 1), f"pr e_{j} != e_{j + 1} pr")

        orbit = pattern
        for _ in range(shape.n + 1):
            orbit = image_of(orbit)
        if orbit != pattern:
            report.add("order", v, (), f"pr^{shape.n + 1} does not fix {pattern.rows}")

        first_row_sum = sum(image.column(1))
        if shape.m - first_row_sum != sum(pattern.rows[-1]):
            report.add(
                "first-column",
                v,
                (),
                f"m - {first_row_sum} != {sum(pattern.rows[-1])}",
            )

        if shape.i >= 2 and operators.string_data(pattern, shape.i - 1).phi:
            path = sum(image.rows[0][: shape.i - 1]) + sum(image.column(shape.i))
            if path >= shape.m:
                report.add("boundary-level", v, (shape.i - 1, shape.i), f"path sum {path}")

    report.checked = len(members)
    report.facts["elements"] = len(members)
    logger.info(f"Weak promotion on {shape}: {len(report.violations)} violation(s)")
    return report
