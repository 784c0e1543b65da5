import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from starlette.testclient import TestClient

from plm.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_classify(client):
    response = client.post("/classify", json={"identity": "xzxyty = xzyxty"})
    assert response.status_code == 200
    data = response.json()
    assert data["balanced"] and not data["trivial"]
    assert "M2v" in data["varieties"]
    assert "Spre" in data["properties"]


def test_classify_named_tag(client):
    by_tag = client.post("/classify", json={"identity": "M2"}).json()
    by_text = client.post("/classify", json={"identity": "xzxyty = xzyxty"}).json()
    assert by_tag == by_text


def test_classify_parse_error(client):
    response = client.post("/classify", json={"identity": "xy ="})
    assert response.status_code == 422
    assert "right-hand side" in response.json()["detail"]


def test_equiv(client):
    response = client.post(
        "/equiv", json={"kind": "sylv", "left": "2 1 1", "right": "1 2 1"}
    )
    assert response.status_code == 200
    assert response.json()["equivalent"] is True

    response = client.post(
        "/equiv", json={"kind": "sylv", "left": "2 1", "right": "1 2"}
    )
    assert response.json()["equivalent"] is False


def test_equiv_unknown_kind(client):
    response = client.post(
        "/equiv", json={"kind": "plactic", "left": "1", "right": "1"}
    )
    assert response.status_code == 404


def test_equiv_cap(client):
    response = client.post(
        "/equiv",
        json={"kind": "hs", "left": "1 2 3 4 5 6 7 8 9", "right": "9 8 7 6 5 4 3 2 1", "cap": 10},
    )
    assert response.status_code == 413


def test_consequence_with_trace(client):
    response = client.post(
        "/consequence", json={"identity": "xxyy = yyxx", "basis": ["L1", "R2"]}
    )
    assert response.status_code == 200
    data = response.json()
    assert data["derivable"] and data["complete_within_class"]
    assert data["trace"], "derivable result should carry a trace"
    assert data["trace"][-1]["result"] == "yyxx"


def test_consequence_refuted(client):
    response = client.post(
        "/consequence", json={"identity": "L2", "basis": ["R2"]}
    )
    data = response.json()
    assert not data["derivable"] and data["trace"] is None


def test_consequence_inline_basis(client):
    response = client.post(
        "/consequence",
        json={"identity": "xxyy = yyxx", "basis": ["xyx = xxy", "xyzxty = yxzxty"]},
    )
    assert response.json()["derivable"]


def test_isoterm(client):
    response = client.post("/isoterm", json={"variety": "hypo", "word": "xzxyty"})
    assert response.json()["isoterm"] is True

    response = client.post("/isoterm", json={"variety": "hypo", "word": "xzytxy"})
    data = response.json()
    assert data["isoterm"] is False and data["counterexample"]


def test_monoid(client):
    response = client.get("/monoid/J1")
    assert response.status_code == 200
    data = response.json()
    assert data["size"] == 4 and data["zero_element"] == "0"
    row_a = data["table"][data["elements"].index("a")]
    assert row_a[data["elements"].index("a")] == "0"

    assert client.get("/monoid/nope").status_code == 404


def test_monoid_check(client):
    response = client.post(
        "/monoid/check", json={"name": "J1", "identity": "xyx = yxx"}
    )
    assert response.json()["satisfies"] is True

    response = client.post(
        "/monoid/check", json={"name": "J1", "identity": "xyx = xxy"}
    )
    data = response.json()
    assert data["satisfies"] is False and data["falsifier"]


def test_variety(client):
    response = client.get("/variety/mst^S")
    data = response.json()
    assert data["properties"] == ["S1pre", "S1suf"]
    assert data["basis"] == ["L2", "R2", "M2", "M3"]


def test_lattice(client):
    response = client.get("/lattice/L3")
    data = response.json()
    assert len(data["nodes"]) == 26 and len(data["cover_edges"]) == 48
    assert data["top"] == "baxt" and data["bottom"] == "jst"

    assert client.get("/lattice/L9").status_code == 404


def test_lattice_dot(client):
    response = client.get("/lattice/L1/dot")
    assert response.status_code == 200
    assert response.text.startswith("digraph L1 {")
    assert response.text == client.get("/lattice/L1/dot").text


def test_lattice_verify(client):
    response = client.post("/lattice/L2/verify")
    data = response.json()
    assert data["ok"] is True
    assert all(check["passed"] for check in data["checks"])


def test_verify_quick_suite(client):
    response = client.post("/verify", json={"suite": "quick"})
    data = response.json()
    assert data["passed"] is True
    assert [item["id"] for item in data["items"]] == list(range(1, 13))


def test_verify_unknown_suite(client):
    assert client.post("/verify", json={"suite": "huge"}).status_code == 422
