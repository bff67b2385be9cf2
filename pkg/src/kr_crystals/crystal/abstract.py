import abc
import functools
import logging
from typing import Any, Callable, Generic, Hashable, TypeVar

from kr_crystals import configurations
from kr_crystals.crystal.models import Weight

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=Hashable)
R = TypeVar("R")


def validate_index(func: Callable[..., R]) -> Callable[..., R]:
    """Decorator rejecting operator indices outside the crystal's index set

    Raises:
        ValueError: If the index is not in ``self.index_set``
    """

    @functools.wraps(func)
    def wrapper(self: "Crystal", b, l: int, *args, **kwargs) -> R:
        if l not in self.index_set:
            raise ValueError(
                f"Index {l} out of range {self.index_set} for {func.__name__} operation"
            )
        return func(self, b, l, *args, **kwargs)

    return wrapper


class Crystal(abc.ABC, Generic[T]):
    """Abstract crystal over the index set {1..n}, or {0..n} when affine.

    Subclasses implement the classical operators; node 0 is obtained here by
    conjugating node 1 with the model's promotion, f_0 = pr^{-1} f_1 pr.
    """

    def __init__(self, rank: int, affine: bool = False) -> None:
        self.rank = rank
        self.affine = affine

    @property
    def index_set(self) -> tuple[int, ...]:
        return tuple(range(0 if self.affine else 1, self.rank + 1))

    def highest_weight_element(self) -> T:
        """Element killed by every classical e_l, used as the default graph seed"""
        return self._highest_weight_element()

    def weight(self, b: T) -> Weight:
        return self._weight(b)

    @validate_index
    def f(self, b: T, l: int) -> T | None:
        """Lowering operator f_l

        Args:
            b (T): Crystal element
            l (int): Index in the index set

        Returns:
            T | None: Image of b, or None when phi_l(b) = 0

        Raises:
            ValueError: If l is outside the index set
        """
        if l == 0:
            image = self._f(self.promote(b), 1)
            return None if image is None else self.promote_inverse(image)
        return self._f(b, l)

    @validate_index
    def e(self, b: T, l: int) -> T | None:
        """Raising operator e_l; None when epsilon_l(b) = 0"""
        if l == 0:
            image = self._e(self.promote(b), 1)
            return None if image is None else self.promote_inverse(image)
        return self._e(b, l)

    @validate_index
    def phi(self, b: T, l: int) -> int:
        if l == 0:
            return self._phi(self.promote(b), 1)
        return self._phi(b, l)

    @validate_index
    def epsilon(self, b: T, l: int) -> int:
        if l == 0:
            return self._epsilon(self.promote(b), 1)
        return self._epsilon(b, l)

    def promote(self, b: T) -> T:
        """Promotion: shifts content cyclically and sends f_j to f_{j+1}"""
        return self._promote(b)

    def promote_inverse(self, b: T) -> T:
        """Inverse promotion, computed as pr^n"""
        for _ in range(self.rank):
            b = self._promote(b)
        return b

    def enumerate(self) -> list[T]:
        """Every element, in the model's own deterministic order"""
        return self._enumerate()

    def _promote(self, b: T) -> T:
        raise NotImplementedError(f"{type(self).__name__} has no promotion operator")

    def _enumerate(self) -> list[T]:
        raise NotImplementedError(f"{type(self).__name__} has no direct enumeration")

    @abc.abstractmethod
    def _highest_weight_element(self) -> T:
        raise NotImplementedError

    @abc.abstractmethod
    def _weight(self, b: T) -> Weight:
        raise NotImplementedError

    @abc.abstractmethod
    def _f(self, b: T, l: int) -> T | None:
        raise NotImplementedError

    @abc.abstractmethod
    def _e(self, b: T, l: int) -> T | None:
        raise NotImplementedError

    @abc.abstractmethod
    def _phi(self, b: T, l: int) -> int:
        raise NotImplementedError

    @abc.abstractmethod
    def _epsilon(self, b: T, l: int) -> int:
        raise NotImplementedError

    @abc.abstractmethod
    def sort_key(self, b: T) -> Any:
        """Total order used to make graph numbering deterministic"""
        raise NotImplementedError

    def label(self, b: T) -> str:
        return str(b)

    def dump(self, b: T) -> Any:
        """JSON-ready form of an element"""
        raise NotImplementedError(f"{type(self).__name__} has no JSON form")

    def load(self, document: Any) -> T:
        raise NotImplementedError(f"{type(self).__name__} has no JSON form")


class CrystalComponentFactory(abc.ABC):
    config: configurations.KRCrystalConfiguration

    def __init__(
        self,
        config: dict[str, Any] | configurations.KRCrystalConfiguration,
        *args,
        **kwargs,
    ) -> None:
        if isinstance(config, dict):
            config = configurations.KRCrystalConfiguration(**config)
        self.config = config

    def create_crystal(self, *args, **kwargs) -> Crystal:
        """Create the crystal model described by the configuration

        Returns:
            Crystal: Model over {1..n}, or {0..n} when ``config.affine`` is set
        """
        crystal = self._create_crystal(*args, **kwargs)
        logger.debug(f"Created {type(crystal).__name__} for {self.config.shape}")
        return crystal

    @abc.abstractmethod
    def _create_crystal(self, *args, **kwargs) -> Crystal:
        raise NotImplementedError
