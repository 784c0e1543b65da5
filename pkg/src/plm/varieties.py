"""The 26 varieties: property characterizations, finite bases, classification.

Each descriptor names a variety whose equational theory is exactly the set of
balanced identities satisfying a conjunction of properties, together with a
finite basis for that theory.  Joins are computed on property sets (theory
intersection); meets are lattice lookups, since they are proved case by case
and are not a property-set operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from .errors import UnknownNameError
from .properties import (
    PropertyKind,
    closure,
    property_profile,
    satisfied_properties,
    side_signature,
)
from .words import Identity, Word

P = PropertyKind


def _ident(lhs: str, rhs: str) -> Identity:
    return Identity(tuple(lhs), tuple(rhs))


#: The named identities, verbatim.
NAMED_IDENTITIES: Dict[str, Identity] = {
    "L1": _ident("xyx", "xxy"),
    "R1": _ident("xyx", "yxx"),
    "L2": _ident("xzytxy", "xzytyx"),
    "R2": _ident("xyzxty", "yxzxty"),
    "M2": _ident("xzxyty", "xzyxty"),
    "M3": _ident("xyxzx", "xxyzx"),
    "M4": _ident("xxyy", "yyxx"),
    "O21": _ident("xzytxyry", "xzytyxry"),
    "E21": _ident("xzytxyrx", "xzytyxrx"),
    "O12": _ident("xzxytxry", "xzyxtxry"),
    "E12": _ident("xzxytyrx", "xzyxtyrx"),
    "O22": _ident("xzytxyrxsy", "xzytyxrxsy"),
    "T22": _ident("xzytxyrysx", "xzytyxrysx"),
}


@dataclass(frozen=True)
class VarietyDescriptor:
    """A variety given by the property set characterizing its theory."""

    name: str
    properties: FrozenSet[PropertyKind]
    basis: Optional[Tuple[str, ...]] = None
    generator_note: Optional[str] = None

    @property
    def property_closure(self) -> FrozenSet[PropertyKind]:
        return closure(self.properties)

    def basis_identities(self) -> Tuple[Identity, ...]:
        if self.basis is None:
            return ()
        return tuple(NAMED_IDENTITIES[tag] for tag in self.basis)

    def __str__(self) -> str:
        return self.name


def _v(name, props, basis, note=None) -> VarietyDescriptor:
    return VarietyDescriptor(name, frozenset(props), basis, note)


_TABLE: Tuple[VarietyDescriptor, ...] = (
    _v("baxt", {P.C_PRE, P.C_SUF}, ("O22", "T22"), "N*/baxt"),
    _v("rstvsylvh", {P.C_PRE, P.S_SUF}, ("O21", "E21"), "N*/(rSt meet sylv#)"),
    _v("lstvsylv", {P.C_SUF, P.S_PRE}, ("O12", "E12"), "N*/(lSt meet sylv)"),
    _v("sylvh", {P.C_PRE}, ("L2",), "N*/sylv#"),
    _v("mstvS", {P.SUB2, P.RST1V, P.S_PRE, P.S_SUF}, ("O12", "E12", "O21", "E21")),
    _v("sylv", {P.C_SUF}, ("R2",), "N*/sylv"),
    _v("lstvS", {P.SUB2, P.RST1V, P.S_PRE}, ("O12", "E12", "L2")),
    _v("M2v", {P.RST1V, P.S_PRE, P.S_SUF}, ("M2",)),
    _v("hypovmst", {P.SUB2, P.S_PRE, P.S_SUF}, ("M3",), "N*/(hypo meet mSt)"),
    _v("rstvS", {P.SUB2, P.RST1V, P.S_SUF}, ("O21", "E21", "R2")),
    _v("M2v^sylvh", {P.RST1V, P.S_PRE}, ("M2", "L2")),
    _v("hypovlst", {P.SUB2, P.S_PRE}, ("M3", "L2"), "N*/(hypo meet lSt)"),
    _v("S", {P.SUB2, P.RST1V}, ("L2", "R2")),
    _v("mst", {P.S_PRE, P.S_SUF}, ("M2", "M3"), "N*/mSt"),
    _v("hypovrst", {P.SUB2, P.S_SUF}, ("M3", "R2"), "N*/(hypo meet rSt)"),
    _v("M2v^sylv", {P.RST1V, P.S_SUF}, ("M2", "R2")),
    _v("mst^sylvh", {P.S_PRE, P.S1_SUF}, ("L2", "M2", "M3"), "N*/(mSt join sylv#)"),
    _v("hypo", {P.SUB2}, ("L2", "R2", "M3"), "N*/hypo"),
    _v("M2v^S", {P.RST1V}, ("M2", "L2", "R2")),
    _v("mst^sylv", {P.S_SUF, P.S1_PRE}, ("R2", "M2", "M3"), "N*/(mSt join sylv)"),
    _v("lst", {P.S_PRE}, ("L1",), "N*/lSt"),
    _v("mst^S", {P.S1_PRE, P.S1_SUF}, ("L2", "R2", "M2", "M3"), "N*/(hypo join mSt)"),
    _v("rst", {P.S_SUF}, ("R1",), "N*/rSt"),
    _v("lst^sylv", {P.S1_PRE}, ("L1", "M4"), "N*/(lSt join sylv)"),
    _v("rst^sylvh", {P.S1_SUF}, ("R1", "M4"), "N*/(rSt join sylv#)"),
    _v("jst", {P.RST1}, ("L1", "R1"), "N*/jSt"),
)

DESCRIPTORS: Dict[str, VarietyDescriptor] = {v.name: v for v in _TABLE}

#: Deterministic top-down listing used for classification output.
NODE_ORDER: Tuple[str, ...] = tuple(v.name for v in _TABLE)

_ALIASES = {
    "sylvsharp": "sylvh",
    "m2var": "M2v",
    "m2": "M2v",
    "svar": "S",
    "mstvs": "mstvS",
    "lstvs": "lstvS",
    "rstvs": "rstvS",
    "m2v^s": "M2v^S",
    "m2v^sylvh": "M2v^sylvh",
    "m2v^sylv": "M2v^sylv",
    "mst^s": "mst^S",
}


def _normalize(name: str) -> str:
    text = name.strip().replace(" ", "")
    text = text.replace("∧", "^").replace("∨", "v")  # ∧ ∨
    text = text.replace("#", "h")
    text = text.replace("V_", "").replace("Var_", "")
    return text


def descriptor(name: str) -> VarietyDescriptor:
    """Look up one of the 26 descriptors by canonical name or alias."""
    text = _normalize(name)
    if text in DESCRIPTORS:
        return DESCRIPTORS[text]
    lowered = text.lower()
    if lowered in _ALIASES:
        return DESCRIPTORS[_ALIASES[lowered]]
    for canonical in DESCRIPTORS:
        if canonical.lower() == lowered:
            return DESCRIPTORS[canonical]
    raise UnknownNameError(f"unknown variety {name!r}")


def all_descriptors() -> Tuple[VarietyDescriptor, ...]:
    return _TABLE


def theory_satisfies(variety: VarietyDescriptor, identity: Identity) -> bool:
    """Membership of an identity in the variety's equational theory.

    Trivial identities always belong; non-trivial unbalanced ones never do,
    as every theory here is overcommutative.
    """
    if identity.is_trivial:
        return True
    if not identity.is_balanced:
        return False
    satisfied = satisfied_properties(identity)
    return variety.properties <= satisfied


def classify(identity: Identity) -> Tuple[str, ...]:
    """Names of all descriptors whose theory contains the identity."""
    if identity.is_trivial:
        return NODE_ORDER
    profile = property_profile(identity)
    if not profile.balanced:
        return ()
    return tuple(
        name
        for name in NODE_ORDER
        if DESCRIPTORS[name].properties <= profile.satisfied
    )


def variety_signature(word: Word, properties: Iterable[PropertyKind], simples):
    """Tuple of side signatures; equal-content words are theory-equal iff equal."""
    return tuple(
        side_signature(word, kind, simples)
        for kind in sorted(properties, key=lambda k: k.value)
    )


def resolve_properties(properties: Iterable[PropertyKind]) -> Optional[VarietyDescriptor]:
    """The canonical descriptor with the same property closure, if any."""
    target = closure(properties)
    for v in _TABLE:
        if v.property_closure == target:
            return v
    return None


def join(a: VarietyDescriptor, b: VarietyDescriptor) -> VarietyDescriptor:
    """Varietal join: theory intersection, i.e. the union of the property sets."""
    union = a.properties | b.properties
    canonical = resolve_properties(union)
    if canonical is not None:
        return canonical
    return VarietyDescriptor(f"{a.name}v{b.name}", frozenset(union))


def meet(a: VarietyDescriptor, b: VarietyDescriptor) -> VarietyDescriptor:
    """Varietal meet, looked up in the full lattice (not a property operation)."""
    from .lattice import build  # lattice builds on this module

    lat = build("L3")
    if a.name not in lat.node_set or b.name not in lat.node_set:
        raise UnknownNameError(
            f"meet is defined inside the lattice; got {a.name!r}, {b.name!r}"
        )
    return DESCRIPTORS[lat.meet(a.name, b.name)]
