"""Crystal structure on Nakajima monomials.

With S(n) the partial sum of y_l(k) over k <= n:

* phi_l = max S, epsilon_l = phi_l - sum of all y_l(k)
* n_f is the smallest and n_e the largest n where S(n) = phi_l
* f_l multiplies by A_l(n_f)^{-1}, e_l by A_l(n_e)
"""

import itertools

from kr_crystals.monomials.models import COffsets, Monomial, MonomialStats


def monomial_stats(monomial: Monomial, l: int, rank: int) -> MonomialStats:
    """Weight, phi_l, epsilon_l, n_f and n_e of a monomial.

    Partial sums are constant outside the support of y_l, so only the
    positions from one before the support to one after it are scanned; an
    empty support scans position 0 alone.

    Examples:
        >>> stats = monomial_stats(Monomial.Y(1, 1, -1) * Monomial.Y(2, 0), 1, rank=2)
        >>> stats.phi, stats.eps
        (0, 1)
    """
    weight = tuple(
        sum(y for (k, _), y in monomial.exponents if k == i) for i in range(1, rank + 1)
    )
    support = monomial.support(l)
    window = range(support[0] - 1, support[-1] + 2) if support else range(0, 1)
    sums = list(itertools.accumulate(monomial.y(l, n) for n in window))
    # the window starts below the support, so its first partial sum is 0
    phi = max(sums)
    peaks = [n for n, s in zip(window, sums) if s == phi]
    return MonomialStats(
        weight=weight,
        phi=phi,
        eps=phi - weight[l - 1],
        n_f=peaks[0],
        n_e=peaks[-1],
    )


def a_factor(l: int, position: int, offsets: COffsets) -> Monomial:
    """A_l(n) = Y_l(n) Y_l(n+1) times Y_k(n + c_{k,l})^{-1} over the neighbours k of l

    Examples:
        >>> str(a_factor(2, 0, COffsets.upper(2)))
        'Y_1(1)^-1 Y_2(0) Y_2(1)'
    """
    factors = [Monomial.Y(l, position), Monomial.Y(l, position + 1)]
    for k in (l - 1, l + 1):
        if 1 <= k <= offsets.rank:
            factors.append(Monomial.Y(k, position + offsets(k, l), -1))
    return Monomial.product(factors)


def m_f(monomial: Monomial, l: int, offsets: COffsets) -> Monomial | None:
    stats = monomial_stats(monomial, l, offsets.rank)
    if stats.phi == 0:
        return None
    return monomial * a_factor(l, stats.n_f, offsets).inverse()


def m_e(monomial: Monomial, l: int, offsets: COffsets) -> Monomial | None:
    stats = monomial_stats(monomial, l, offsets.rank)
    if stats.eps == 0:
        return None
    return monomial * a_factor(l, stats.n_e, offsets)
