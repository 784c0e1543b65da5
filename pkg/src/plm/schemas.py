"""Pydantic request/response models for the service API."""

from __future__ import annotations

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class ClassifyRequest(BaseModel):
    identity: str


class ClassifyResponse(BaseModel):
    identity: str
    trivial: bool
    balanced: bool
    properties: List[str]
    varieties: List[str]


class EquivRequest(BaseModel):
    kind: str
    left: str
    right: str
    cap: Optional[int] = None


class EquivResponse(BaseModel):
    kind: str
    left: str
    right: str
    equivalent: bool


class TraceStep(BaseModel):
    basis: str
    direction: str
    substitution: Dict[str, str]
    left_context: str
    right_context: str
    result: str


class ConsequenceRequest(BaseModel):
    identity: str
    basis: List[str]
    cap: Optional[int] = None


class ConsequenceResponse(BaseModel):
    identity: str
    basis: List[str]
    derivable: bool
    complete_within_class: bool = True
    trace: Optional[List[TraceStep]] = None


class IsotermRequest(BaseModel):
    variety: str
    word: str
    cap: Optional[int] = None


class IsotermResponse(BaseModel):
    variety: str
    word: str
    isoterm: bool
    counterexample: Optional[str] = None


class MonoidResponse(BaseModel):
    name: str
    size: int
    elements: List[str]
    identity_element: str
    zero_element: Optional[str] = None
    table: List[List[str]]


class MonoidCheckRequest(BaseModel):
    name: str
    identity: str


class MonoidCheckResponse(BaseModel):
    name: str
    identity: str
    satisfies: bool
    falsifier: Optional[Dict[str, str]] = None


class VarietyResponse(BaseModel):
    name: str
    properties: List[str]
    basis: Optional[List[str]] = None
    basis_identities: Optional[List[str]] = None
    generator_note: Optional[str] = None


class LatticeResponse(BaseModel):
    name: str
    nodes: List[str]
    cover_edges: List[List[str]]
    top: str
    bottom: str


class LatticeCheckModel(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class LatticeVerifyResponse(BaseModel):
    name: str
    ok: bool
    checks: List[LatticeCheckModel]


class VerifyRequest(BaseModel):
    suite: str = Field(default="paper", pattern="^(paper|quick)$")


class VerifyItem(BaseModel):
    id: int
    description: str
    passed: bool
    detail: str
    seconds: float


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    items: List[VerifyItem]
