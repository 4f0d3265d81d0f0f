"""Exact computations with Hopf algebras presented by generators and rewriting rules."""

__version__ = "0.1.0"

from .exactfield import ExactMatrix, Scalar, kernel, rank, rref, solve
from .presentation import NcPoly, Presentation
from .tensorspace import BalancedSpace, TensorElement
from .hopfcore import HopfStructure, antipode_power
from .comodule import Coaction, SubgroupMap, coinvariants, regular_coaction
from .galois import antipode_from_can, canonical_map, certify_quantum_principal_bundle
from .duality import Pairing, check_duality
from .dsl import load_text, parse, pretty

__all__ = [
    "BalancedSpace", "Coaction", "ExactMatrix", "HopfStructure", "NcPoly", "Pairing", "Presentation", "Scalar",
    "SubgroupMap", "TensorElement", "antipode_from_can", "antipode_power", "canonical_map",
    "certify_quantum_principal_bundle", "check_duality", "coinvariants", "kernel", "load_text", "parse",
    "pretty", "rank", "regular_coaction", "rref", "solve",
]
