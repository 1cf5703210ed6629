from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from lexidiv.service import create_app

from conftest import make_table1_db


@pytest.fixture
def api():
    db = make_table1_db()
    return TestClient(create_app(db)), db


def test_concept_panorama_endpoint(api):
    client, _ = api
    response = client.get("/concepts/sibling")
    assert response.status_code == 200
    body = response.json()
    assert body["concept"] == "sibling"
    assert len(body["statuses"]) == 8
    assert body["statuses"]["ind"]["kind"] == "lexicalized"
    assert body["statuses"]["jpn"]["kind"] == "gap"
    assert "brother" in body["children"]


def test_status_endpoint(api):
    client, _ = api
    body = client.get("/lexicons/ind/status/sibling").json()
    assert body["sense"]["lemmas"] == ["saudara"]
    assert client.get("/lexicons/ind/status/nope").status_code == 404
    assert client.get("/lexicons/xxx/status/sibling").status_code == 404


def test_fallback_endpoint(api):
    client, _ = api
    body = client.get("/lexicons/jav/fallback/younger-sister").json()
    assert body["status"] == "ancestor"
    assert body["distance"] == 1
    assert body["matches"][0]["sense"]["lemmas"] == ["adhi"]


def test_words_endpoint(api):
    client, _ = api
    body = client.get("/lexicons/hin/words", params={"lemma": "भैया"}).json()
    assert [m["concept"] for m in body["meanings"]] == ["brother", "elder-brother"]


def test_overlap_endpoint_returns_matrix(api):
    client, _ = api
    body = client.get(
        "/stats/overlap", params={"langs": "ind,jav,hun", "universe": "base"}
    ).json()
    assert len(body["matrix"]) == 3
    assert body["matrix"][0][0] == 1.0
    assert body["matrix"][0][1] == body["matrix"][1][0]
    assert body["matrix_percent"][0][0] == "100.0"


def test_counts_endpoint(api):
    client, _ = api
    body = client.get("/stats/counts", params={"mode": "closed"}).json()
    rows = {r["lexicon"]: r for r in body["rows"]}
    assert rows["ind"]["words"] + rows["ind"]["gaps"] == 184


def test_error_body_carries_code_and_message(api):
    client, _ = api
    response = client.get("/concepts/none-such")
    assert response.status_code == 404
    body = response.json()
    assert body["code"] == "unknown-concept"
    assert "none-such" in body["message"]


def test_task_lifecycle_over_http(api):
    client, db = api
    created = client.post("/tasks", json={
        "lexicon": "jav",
        "subdomains": ["grandparents"],
        "contributor": "speaker",
        "lexicon_validator": "expert",
        "concept_validator": "concept-expert",
    })
    assert created.status_code == 201
    task_id = created.json()["id"]
    assert created.json()["state_counts"] == {"pending": 19}

    listed = client.get("/tasks").json()["tasks"]
    assert any(t["id"] == task_id for t in listed)

    answered = client.post(
        f"/tasks/{task_id}/items/grandfather/answer",
        json={"type": "word", "lemma": "simbah kakung"},
        headers={"X-Actor": "speaker"},
    )
    assert answered.status_code == 200
    assert answered.json()["state"] == "answered"

    pending = client.get(f"/tasks/{task_id}/items", params={"state": "pending"}).json()
    assert len(pending["items"]) == 18

    reviewed = client.post(
        f"/tasks/{task_id}/items/grandfather/lexicon-review",
        json={"verdict": "correct"},
        headers={"X-Actor": "expert"},
    )
    assert reviewed.json()["state"] == "lexicon-approved"

    integrated = client.post(f"/tasks/{task_id}/items/grandfather/integrate")
    assert integrated.json()["state"] == "integrated"
    status = client.get("/lexicons/jav/status/grandfather").json()
    assert status["kind"] == "lexicalized"


def test_wrong_state_maps_to_409(api):
    client, _ = api
    task_id = client.post("/tasks", json={
        "lexicon": "jav", "subdomains": ["grandparents"],
        "contributor": "speaker", "lexicon_validator": "expert",
        "concept_validator": "concept-expert",
    }).json()["id"]
    response = client.post(
        f"/tasks/{task_id}/items/grandfather/lexicon-review",
        json={"verdict": "correct"},
        headers={"X-Actor": "expert"},
    )
    assert response.status_code == 409
    assert response.json()["code"] == "wrong-state"


def test_actor_header_required(api):
    client, _ = api
    task_id = client.post("/tasks", json={
        "lexicon": "jav", "subdomains": ["grandparents"],
        "contributor": "speaker", "lexicon_validator": "expert",
        "concept_validator": "concept-expert",
    }).json()["id"]
    response = client.post(
        f"/tasks/{task_id}/items/grandfather/answer",
        json={"type": "word", "lemma": "x"},
    )
    assert response.status_code == 422


def test_wrong_actor_maps_to_409(api):
    client, _ = api
    task_id = client.post("/tasks", json={
        "lexicon": "jav", "subdomains": ["grandparents"],
        "contributor": "speaker", "lexicon_validator": "expert",
        "concept_validator": "concept-expert",
    }).json()["id"]
    response = client.post(
        f"/tasks/{task_id}/items/grandfather/answer",
        json={"type": "word", "lemma": "x"},
        headers={"X-Actor": "expert"},
    )
    assert response.status_code == 409
    assert response.json()["code"] == "wrong-actor"


def test_merge_endpoint(api):
    client, _ = api
    task_id = client.post("/tasks", json={
        "lexicon": "jav",
        "subdomains": ["uncle-aunt"],
        "contributor": "speaker", "lexicon_validator": "expert",
        "concept_validator": "concept-expert",
    }).json()["id"]
    client.post(
        f"/tasks/{task_id}/items/new:gulu/answer",
        json={"type": "new-concept", "lemma": "gulu",
              "definition": "parent's second eldest sibling",
              "subdomain": "uncle-aunt"},
        headers={"X-Actor": "speaker"},
    )
    client.post(
        f"/tasks/{task_id}/items/new:gulu/lexicon-review",
        json={"verdict": "correct"}, headers={"X-Actor": "expert"},
    )
    client.post(
        f"/tasks/{task_id}/items/new:gulu/concept-review",
        json={"verdict": "accept"}, headers={"X-Actor": "concept-expert"},
    )
    merged = client.post(
        "/concepts/merge",
        json={"task": task_id, "concept": "new:gulu",
              "parents": ["parents-elder-sibling"],
              "new_id": "parents-second-eldest-sibling"},
        headers={"X-Actor": "concept-expert"},
    )
    assert merged.status_code == 200
    assert merged.json()["new_id"] == "parents-second-eldest-sibling"
    status = client.get(
        "/lexicons/jav/status/parents-second-eldest-sibling"
    ).json()
    assert status["sense"]["lemmas"] == ["gulu"]


def test_persistence_on_mutation(tmp_path):
    from lexidiv.store import load_lexdb, save_lexdb

    db = make_table1_db()
    path = tmp_path / "served.json"
    save_lexdb(db, path)
    client = TestClient(create_app(db, db_path=path))
    client.post("/tasks", json={
        "lexicon": "jav", "subdomains": ["grandparents"],
        "contributor": "speaker", "lexicon_validator": "expert",
        "concept_validator": "concept-expert",
    })
    reloaded = load_lexdb(path)
    assert len(reloaded.tasks) == 1


def test_malformed_query_params_map_to_422(api):
    client, _ = api
    task_id = client.post("/tasks", json={
        "lexicon": "jav", "subdomains": ["grandparents"],
        "contributor": "speaker", "lexicon_validator": "expert",
        "concept_validator": "concept-expert",
    }).json()["id"]
    assert client.get(f"/tasks/{task_id}/items", params={"state": "bogus"}).status_code == 422
    assert client.get("/stats/counts", params={"mode": "bogus"}).status_code == 422
    assert client.get("/stats/overlap", params={"langs": ""}).status_code == 422
    assert client.get(
        "/stats/overlap", params={"langs": "jav", "universe": "Bogus"}
    ).status_code == 422


def test_malformed_bodies_map_to_422(api):
    client, _ = api
    bad_subdomains = client.post("/tasks", json={
        "lexicon": "jav", "subdomains": "grandparents",
        "contributor": "s", "lexicon_validator": "v", "concept_validator": "c",
    })
    assert bad_subdomains.status_code == 422
    task_id = client.post("/tasks", json={
        "lexicon": "jav", "subdomains": ["grandparents"],
        "contributor": "speaker", "lexicon_validator": "expert",
        "concept_validator": "concept-expert",
    }).json()["id"]
    bad_evidence = client.post(
        f"/tasks/{task_id}/items/grandfather/answer",
        json={"type": "gap", "evidence": [{"kind": "hearsay"}]},
        headers={"X-Actor": "speaker"},
    )
    assert bad_evidence.status_code == 422
    assert bad_evidence.json()["code"] == "validation"
    bad_verdict = client.post(
        f"/tasks/{task_id}/items/grandfather/lexicon-review",
        json={"verdict": "fine"},
        headers={"X-Actor": "expert"},
    )
    assert bad_verdict.status_code == 422
