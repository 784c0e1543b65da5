"""FastAPI service wrapping the library; the CLI is a thin client of this app."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse

from . import deduction, lattice, monoids, varieties
from .congruences import DEFAULT_CLASS_CAP, CongruenceKind, equivalent
from .errors import (
    BoundExceededError,
    CapExceededError,
    ComparablePairError,
    ParseError,
    PreconditionError,
    SymbolAbsentError,
    UnknownNameError,
)
from .properties import property_profile
from .schemas import (
    ClassifyRequest,
    ClassifyResponse,
    ConsequenceRequest,
    ConsequenceResponse,
    EquivRequest,
    EquivResponse,
    IsotermRequest,
    IsotermResponse,
    LatticeCheckModel,
    LatticeResponse,
    LatticeVerifyResponse,
    MonoidCheckRequest,
    MonoidCheckResponse,
    MonoidResponse,
    TraceStep,
    VarietyResponse,
    VerifyItem,
    VerifyRequest,
    VerifyResponse,
)
from .verification import run_suite
from .words import parse_identity, parse_word, word_str

app = FastAPI(
    title="plm",
    description="Word equivalence in plactic-like monoids, identity "
    "classification over the variety lattice, and bounded equational deduction.",
    version="0.1.0",
)


_USER_ERRORS = (
    ParseError,
    SymbolAbsentError,
    PreconditionError,
    BoundExceededError,
    UnknownNameError,
    ComparablePairError,
    ValueError,
)


def _user_error(exc: Exception) -> HTTPException:
    if isinstance(exc, UnknownNameError):
        return HTTPException(status_code=404, detail=str(exc).strip("'\""))
    if isinstance(exc, CapExceededError):
        return HTTPException(status_code=413, detail=str(exc))
    return HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/classify", response_model=ClassifyResponse)
def classify_endpoint(request: ClassifyRequest) -> ClassifyResponse:
    try:
        identity = parse_identity(request.identity)
    except _USER_ERRORS as exc:
        raise _user_error(exc)
    profile = property_profile(identity)
    return ClassifyResponse(
        identity=str(identity),
        trivial=identity.is_trivial,
        balanced=profile.balanced,
        properties=list(profile.tokens()) if profile.precondition_ok else [],
        varieties=list(varieties.classify(identity)),
    )


@app.post("/equiv", response_model=EquivResponse)
def equiv_endpoint(request: EquivRequest) -> EquivResponse:
    try:
        kind = CongruenceKind.from_name(request.kind)
        left = parse_word(request.left)
        right = parse_word(request.right)
        cap = request.cap or DEFAULT_CLASS_CAP
        result = equivalent(kind, left, right, cap)
    except CapExceededError as exc:
        raise _user_error(exc)
    except _USER_ERRORS as exc:
        raise _user_error(exc)
    return EquivResponse(
        kind=kind.value, left=request.left, right=request.right, equivalent=result
    )


def _parse_basis(items) -> list:
    return [parse_identity(text) for text in items]


@app.post("/consequence", response_model=ConsequenceResponse)
def consequence_endpoint(request: ConsequenceRequest) -> ConsequenceResponse:
    try:
        identity = parse_identity(request.identity)
        basis = _parse_basis(request.basis)
        cap = request.cap or deduction.DEFAULT_CAP
        chain = deduction.derivation(identity, basis, cap)
    except CapExceededError as exc:
        raise _user_error(exc)
    except _USER_ERRORS as exc:
        raise _user_error(exc)
    trace = None
    if chain is not None:
        trace = [
            TraceStep(
                basis=str(step.basis_identity),
                direction=step.direction,
                substitution={x: word_str(w) for x, w in step.substitution},
                left_context=word_str(step.left_context),
                right_context=word_str(step.right_context),
                result=word_str(step.result),
            )
            for step in chain
        ]
    return ConsequenceResponse(
        identity=str(identity),
        basis=request.basis,
        derivable=chain is not None,
        trace=trace,
    )


@app.post("/isoterm", response_model=IsotermResponse)
def isoterm_endpoint(request: IsotermRequest) -> IsotermResponse:
    try:
        variety = varieties.descriptor(request.variety)
        word = parse_word(request.word)
        cap = request.cap or deduction.DEFAULT_CAP
        counterexample = deduction.isoterm_counterexample(variety, word, cap)
    except CapExceededError as exc:
        raise _user_error(exc)
    except _USER_ERRORS as exc:
        raise _user_error(exc)
    return IsotermResponse(
        variety=variety.name,
        word=request.word,
        isoterm=counterexample is None,
        counterexample=None if counterexample is None else str(counterexample),
    )


@app.get("/monoid/{name}", response_model=MonoidResponse)
def monoid_endpoint(name: str) -> MonoidResponse:
    try:
        monoid = monoids.builtin(name)
    except _USER_ERRORS as exc:
        raise _user_error(exc)
    return MonoidResponse(
        name=name,
        size=monoid.size,
        elements=list(monoid.names),
        identity_element=monoid.names[monoid.identity_elt],
        zero_element=None if monoid.zero_elt is None else monoid.names[monoid.zero_elt],
        table=[
            [monoid.names[monoid.table[i][j]] for j in range(monoid.size)]
            for i in range(monoid.size)
        ],
    )


@app.post("/monoid/check", response_model=MonoidCheckResponse)
def monoid_check_endpoint(request: MonoidCheckRequest) -> MonoidCheckResponse:
    try:
        monoid = monoids.builtin(request.name)
        identity = parse_identity(request.identity)
        witness = monoids.falsify(monoid, identity)
    except _USER_ERRORS as exc:
        raise _user_error(exc)
    return MonoidCheckResponse(
        name=request.name,
        identity=str(identity),
        satisfies=witness is None,
        falsifier=None if witness is None else witness.as_dict(),
    )


@app.get("/variety/{name}", response_model=VarietyResponse)
def variety_endpoint(name: str) -> VarietyResponse:
    try:
        v = varieties.descriptor(name)
    except _USER_ERRORS as exc:
        raise _user_error(exc)
    return VarietyResponse(
        name=v.name,
        properties=sorted(k.token for k in v.properties),
        basis=list(v.basis) if v.basis else None,
        basis_identities=[str(i) for i in v.basis_identities()] or None,
        generator_note=v.generator_note,
    )


@app.get("/lattice/{name}", response_model=LatticeResponse)
def lattice_endpoint(name: str) -> LatticeResponse:
    try:
        lat = lattice.build(name)
    except _USER_ERRORS as exc:
        raise _user_error(exc)
    return LatticeResponse(
        name=lat.name,
        nodes=list(lat.nodes),
        cover_edges=[[low, high] for low, high in sorted(lat.hasse_edges)],
        top=lat.top,
        bottom=lat.bottom,
    )


@app.get("/lattice/{name}/dot", response_class=PlainTextResponse)
def lattice_dot_endpoint(name: str) -> str:
    try:
        return lattice.to_dot(lattice.build(name))
    except _USER_ERRORS as exc:
        raise _user_error(exc)


@app.post("/lattice/{name}/verify", response_model=LatticeVerifyResponse)
def lattice_verify_endpoint(name: str) -> LatticeVerifyResponse:
    try:
        report = lattice.verify(lattice.build(name))
    except _USER_ERRORS as exc:
        raise _user_error(exc)
    return LatticeVerifyResponse(
        name=report.lattice,
        ok=report.ok,
        checks=[
            LatticeCheckModel(name=c.name, passed=c.passed, detail=c.detail if not c.passed else "")
            for c in report.checks
        ],
    )


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(request: VerifyRequest) -> VerifyResponse:
    report = run_suite(request.suite)
    return VerifyResponse(
        suite=report.suite,
        passed=report.passed,
        items=[
            VerifyItem(
                id=r.id,
                description=r.description,
                passed=r.passed,
                detail=r.detail,
                seconds=round(r.seconds, 3),
            )
            for r in report.results
        ],
    )
