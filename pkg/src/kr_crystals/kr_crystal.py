import logging
from typing import Any

import pydantic as pdt

from kr_crystals import adapters, configurations
from kr_crystals.crystal import abstract, graph
from kr_crystals.crystal.models import CrystalGraph, Weight

__all__ = ["KRCrystal"]

logger = logging.getLogger(__name__)

DEFAULT_MODEL = configurations.Model.POLYTOPE


class KRCrystal:
    """Entry point over the configured model of B^{m,i}.

    Examples:
        >>> crystal = KRCrystal({"shape": {"n": 2, "m": 1, "i": 1}, "affine": True})
        >>> len(crystal.elements())
        3
    """

    config: configurations.KRCrystalConfiguration
    component_factory: abstract.CrystalComponentFactory
    crystal: abstract.Crystal

    def __init__(
        self,
        config: dict[str, Any] | configurations.KRCrystalConfiguration | None = None,
    ):
        if config is None:
            config = self._load_config()
        if isinstance(config, dict):
            config = configurations.KRCrystalConfiguration(**config)
        self.config = config
        self.shape = config.shape
        self.component_factory = self._init_component_factory()

    @staticmethod
    def _load_config() -> configurations.KRCrystalConfiguration:
        try:
            return configurations.KRCrystalConfiguration()
        except pdt.ValidationError as exc:
            errors = exc.errors()
            if any(error["type"] == "missing" and error["loc"][:1] == ("shape",) for error in errors):
                raise ValueError("Configuration not found") from exc
            raise ValueError(f"Invalid configuration: {errors[0]['msg']}") from exc

    @property
    def crystal(self) -> abstract.Crystal:
        if not hasattr(self, "_crystal"):
            self._crystal = self.component_factory.create_crystal()
        return self._crystal

    def graph(self) -> CrystalGraph:
        if not hasattr(self, "_graph"):
            self._graph = graph.build_graph(self.crystal)
        return self._graph

    def elements(self) -> list:
        """Elements in graph order, starting from the highest weight element"""
        return list(self.graph().vertices)

    def enumerate(self) -> list:
        """Elements in the model's enumeration order, or graph order when it has none"""
        try:
            return self.crystal.enumerate()
        except NotImplementedError:
            return self.elements()

    def weight(self, b) -> Weight:
        return self.crystal.weight(b)

    def f(self, b, l: int):
        return self.crystal.f(b, l)

    def e(self, b, l: int):
        return self.crystal.e(b, l)

    def phi(self, b, l: int) -> int:
        return self.crystal.phi(b, l)

    def epsilon(self, b, l: int) -> int:
        return self.crystal.epsilon(b, l)

    def promote(self, b):
        return self.crystal.promote(b)

    def load(self, document: Any):
        return self.crystal.load(document)

    def dump(self, b) -> Any:
        return self.crystal.dump(b)

    def label(self, b) -> str:
        return self.crystal.label(b)

    def _init_component_factory(self) -> abstract.CrystalComponentFactory:
        model = self.config.model or DEFAULT_MODEL
        if model not in adapters.adapter_routers:
            raise ValueError(f"Doesn't support model: {model}")

        return adapters.adapter_routers[model](self.config)
