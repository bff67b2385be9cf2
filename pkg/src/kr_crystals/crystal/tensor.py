"""Tensor products of crystals through the signature rule.

Factor k contributes epsilon_l(b_k) minus signs followed by phi_l(b_k) plus
signs; every "+" directly followed by a "-" cancels, leaving a reduced word
- ... - + ... +. f_l acts on the factor owning the leftmost surviving "+",
e_l on the factor owning the rightmost surviving "-". For two factors this
is the rule "f_l acts on b_1 iff phi_l(b_1) > epsilon_l(b_2)".
"""

import dataclasses
import functools
from typing import Any, Hashable, Sequence

from kr_crystals.crystal.abstract import Crystal
from kr_crystals.crystal.models import Weight


@dataclasses.dataclass(frozen=True)
class TensorElement:
    factors: tuple[Hashable, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("A tensor element needs at least one factor")


@dataclasses.dataclass(frozen=True)
class SignatureString:
    """Reduced signature; ``owners[k]`` is the factor that produced ``symbols[k]``"""

    symbols: tuple[str, ...] = ()
    owners: tuple[int, ...] = ()

    def __str__(self) -> str:
        return "".join(self.symbols)


def l_signature(
    crystals: Sequence[Crystal], element: TensorElement, l: int
) -> SignatureString:
    """Reduced l-signature of a tensor element with factor provenance.

    Factors with (epsilon, phi) = (2, 0) and (0, 1) give "--+"; (0, 1) and
    (1, 0) cancel completely.
    """
    stack: list[tuple[str, int]] = []
    for k, (crystal, b) in enumerate(zip(crystals, element.factors, strict=True)):
        symbols = "-" * crystal.epsilon(b, l) + "+" * crystal.phi(b, l)
        for symbol in symbols:
            if symbol == "-" and stack and stack[-1][0] == "+":
                stack.pop()
            else:
                stack.append((symbol, k))
    if not stack:
        return SignatureString()
    symbols, owners = zip(*stack)
    return SignatureString(tuple(symbols), tuple(owners))


def _act(
    crystals: Sequence[Crystal],
    element: TensorElement,
    l: int,
    owner: int,
    lowering: bool,
) -> TensorElement:
    crystal = crystals[owner]
    b = element.factors[owner]
    image = crystal.f(b, l) if lowering else crystal.e(b, l)
    factors = list(element.factors)
    factors[owner] = image
    return TensorElement(tuple(factors))


def tensor_f(
    crystals: Sequence[Crystal], element: TensorElement, l: int
) -> TensorElement | None:
    signature = l_signature(crystals, element, l)
    if "+" not in signature.symbols:
        return None
    owner = signature.owners[signature.symbols.index("+")]
    return _act(crystals, element, l, owner, lowering=True)


def tensor_e(
    crystals: Sequence[Crystal], element: TensorElement, l: int
) -> TensorElement | None:
    signature = l_signature(crystals, element, l)
    if "-" not in signature.symbols:
        return None
    last = len(signature.symbols) - 1 - signature.symbols[::-1].index("-")
    return _act(crystals, element, l, signature.owners[last], lowering=False)


def tensor_stats(
    crystals: Sequence[Crystal], element: TensorElement, l: int
) -> tuple[Weight, int, int]:
    """(wt, phi_l, epsilon_l) of a tensor element"""
    weights = (c.weight(b) for c, b in zip(crystals, element.factors, strict=True))
    wt = functools.reduce(lambda a, b: a + b, weights)
    signature = l_signature(crystals, element, l)
    return wt, signature.symbols.count("+"), signature.symbols.count("-")


class TensorProductCrystal(Crystal[TensorElement]):
    """B_1 ⊗ ... ⊗ B_k over the shared classical index set"""

    def __init__(self, factors: Sequence[Crystal]) -> None:
        if not factors:
            raise ValueError("A tensor product needs at least one factor")
        ranks = {factor.rank for factor in factors}
        if len(ranks) != 1 or any(factor.affine for factor in factors):
            raise ValueError("Factors must share one classical index set")
        super().__init__(rank=ranks.pop(), affine=False)
        self.factors = tuple(factors)

    def _highest_weight_element(self) -> TensorElement:
        return TensorElement(tuple(c.highest_weight_element() for c in self.factors))

    def _weight(self, b: TensorElement) -> Weight:
        return tensor_stats(self.factors, b, 1)[0]

    def _f(self, b: TensorElement, l: int) -> TensorElement | None:
        return tensor_f(self.factors, b, l)

    def _e(self, b: TensorElement, l: int) -> TensorElement | None:
        return tensor_e(self.factors, b, l)

    def _phi(self, b: TensorElement, l: int) -> int:
        return l_signature(self.factors, b, l).symbols.count("+")

    def _epsilon(self, b: TensorElement, l: int) -> int:
        return l_signature(self.factors, b, l).symbols.count("-")

    def sort_key(self, b: TensorElement) -> Any:
        return tuple(c.sort_key(x) for c, x in zip(self.factors, b.factors))

    def label(self, b: TensorElement) -> str:
        return " ⊗ ".join(c.label(x) for c, x in zip(self.factors, b.factors))

    def dump(self, b: TensorElement) -> list:
        return [c.dump(x) for c, x in zip(self.factors, b.factors)]
