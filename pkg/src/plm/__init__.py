"""Plactic-like monoids: congruences, identity classification, deduction, lattices."""

from .congruences import CongruenceKind, class_bfs, equivalent, invariant
from .deduction import is_consequence, is_isoterm, min_identity_length, one_step
from .lattice import build as build_lattice
from .monoids import FiniteMonoid, builtin, direct_product, falsify, satisfies
from .properties import PropertyKind, check_property, implies
from .varieties import NAMED_IDENTITIES, classify, descriptor, theory_satisfies
from .words import Identity, Word, content, parse_identity, parse_word

__version__ = "0.1.0"

__all__ = [
    "CongruenceKind",
    "FiniteMonoid",
    "Identity",
    "NAMED_IDENTITIES",
    "PropertyKind",
    "Word",
    "build_lattice",
    "builtin",
    "check_property",
    "class_bfs",
    "classify",
    "content",
    "descriptor",
    "direct_product",
    "equivalent",
    "falsify",
    "implies",
    "invariant",
    "is_consequence",
    "is_isoterm",
    "min_identity_length",
    "one_step",
    "parse_identity",
    "parse_word",
    "satisfies",
    "theory_satisfies",
]
