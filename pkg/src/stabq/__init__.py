"""Exact computation with stability conditions on a three-vertex quiver:
catalog of exceptional objects, hom/ext dimensions, mutations, a rule-based
semistability engine, region membership, and verification harnesses.
"""

from .catalog import ExcObject, hom_dims, kclass, parse_label
from .engine import StabilityPoint, charge_of, phase_of, semistable
from .exact import Gaussian, Phase
from .quiver import DELTA, Vec3, euler_form
from .triples import ExcTriple, family_triple, mutate_triple

__all__ = [
    "DELTA",
    "ExcObject",
    "ExcTriple",
    "Gaussian",
    "Phase",
    "StabilityPoint",
    "Vec3",
    "charge_of",
    "euler_form",
    "family_triple",
    "hom_dims",
    "kclass",
    "mutate_triple",
    "parse_label",
    "phase_of",
    "semistable",
]

__version__ = "0.1.0"
