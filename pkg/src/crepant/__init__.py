"""Euler characteristics of crepant resolutions of Weierstrass models."""
from .gradedring import GradedClass, RingDescriptor, RingError, make_ring
from .hodge import HodgePair, hodge_cy3
from .models import (
    ModelSpec,
    catalog,
    euler_class,
    euler_polynomial,
    expand_reference,
    get_model,
    verify_against_paper,
)

__version__ = "0.1.0"

__all__ = [
    "GradedClass",
    "HodgePair",
    "ModelSpec",
    "RingDescriptor",
    "RingError",
    "catalog",
    "euler_class",
    "euler_polynomial",
    "expand_reference",
    "get_model",
    "hodge_cy3",
    "make_ring",
    "verify_against_paper",
]
