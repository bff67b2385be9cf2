from .abstract import Crystal, CrystalComponentFactory
from .graph import (
    build_graph,
    character,
    check_intertwining,
    graph_to_dot,
    graph_to_json,
    rooted_isomorphism,
)
from .models import CrystalGraph, Report, Violation, Weight
from .tensor import (
    SignatureString,
    TensorElement,
    TensorProductCrystal,
    l_signature,
    tensor_e,
    tensor_f,
    tensor_stats,
)
from .verification import verify_axioms, verify_stembridge

__all__ = [
    "Crystal",
    "CrystalComponentFactory",
    "CrystalGraph",
    "Report",
    "SignatureString",
    "TensorElement",
    "TensorProductCrystal",
    "Violation",
    "Weight",
    "build_graph",
    "character",
    "check_intertwining",
    "graph_to_dot",
    "graph_to_json",
    "l_signature",
    "rooted_isomorphism",
    "tensor_e",
    "tensor_f",
    "tensor_stats",
    "verify_axioms",
    "verify_stembridge",
]
