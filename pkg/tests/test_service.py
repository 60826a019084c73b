import random

import pytest
from fastapi.testclient import TestClient

from lexdiv import exchange
from lexdiv.fixtures import build_alpine_store, build_rice_kinship_store
from lexdiv.service import EditLog, create_app, replay
from lexdiv.store import Store


@pytest.fixture
def alpine_client():
    store, concepts = build_alpine_store()
    app = create_app(store)
    return TestClient(app), store, concepts, app.state.log


@pytest.fixture
def rice_client():
    store, concepts = build_rice_kinship_store()
    app = create_app(store)
    return TestClient(app), store, concepts


def edit(client, action, args, contributor="anna"):
    return client.post("/edits", json={"contributor": contributor,
                                       "action": action, "args": args})


class TestReads:
    def test_languages(self, alpine_client):
        client, _, _, _ = alpine_client
        codes = [l["code"] for l in client.get("/languages").json()]
        assert codes == ["de", "mhn"]

    def test_search_lemma(self, rice_client):
        client, _, concepts = rice_client
        items = client.get("/search", params={"lemma": "riz",
                                              "language": "fr"}).json()["items"]
        assert len(items) == 1
        assert items[0]["interlingual"] == concepts["rice"].id

    def test_concept_badges(self, rice_client):
        client, _, concepts = rice_client
        data = client.get(f"/concepts/{concepts['rice'].id}").json()
        status = {l["language"]: l["status"] for l in data["lexicalizations"]}
        assert status["fr"] == "lexicalized"
        assert status["sw"] == "gap"
        children = {c["label"] for c in data["children"]}
        assert children == {"uncooked rice", "cooked rice"}

    def test_missing_vs_gap_badges(self, alpine_client):
        client, _, concepts, _ = alpine_client
        rye = client.get(f"/concepts/{concepts['rye_bread'].id}").json()
        status = {l["language"]: l["status"] for l in rye["lexicalizations"]}
        assert status == {"de": "lexicalized", "mhn": "missing"}
        pastry = client.get(f"/concepts/{concepts['pastry'].id}").json()
        status = {l["language"]: l["status"] for l in pastry["lexicalizations"]}
        assert status == {"de": "lexicalized", "mhn": "gap"}

    def test_unknown_concept_404(self, alpine_client):
        client, _, _, _ = alpine_client
        response = client.get("/concepts/424242")
        assert response.status_code == 404
        assert response.json()["code"] == "UNKNOWN_REF"

    def test_page_past_end_is_empty(self, rice_client):
        client, _, _ = rice_client
        page = client.get("/search", params={"lemma": "riz",
                                             "page": 99}).json()
        assert page["items"] == [] and page["total"] == 1

    def test_pagination_window(self, rice_client):
        client, _, _ = rice_client
        full = client.get("/concepts", params={"page_size": 100}).json()
        first = client.get("/concepts", params={"page_size": 5}).json()
        second = client.get("/concepts",
                            params={"page_size": 5, "page": 2}).json()
        assert first["items"] == full["items"][:5]
        assert second["items"] == full["items"][5:10]

    def test_mappings_endpoint(self, rice_client):
        client, _, _ = rice_client
        record = client.get("/mappings", params={"source": "sw",
                                                 "target": "ja"}).json()
        kinds = {r["kind"] for r in record["relations"]}
        assert "equivalent" in kinds

    def test_coverage_and_bias_endpoints(self, alpine_client):
        client, _, _, _ = alpine_client
        report = client.get("/coverage",
                            params={"capability": "full"}).json()
        assert report["per_language"] == {"de": 1.0, "mhn": 1.0}
        result = client.get("/bias", params={"capability": "full"}).json()
        assert result["bias"] == 0.0

    def test_bias_post(self, alpine_client):
        client, _, _, _ = alpine_client
        payload = {"task": "mt", "direction": "lower_better",
                   "records": [{"language": l, "value": v} for l, v in
                               [("ru", 0.34), ("ja", 0.38), ("ko", 0.90),
                                ("hu", 1.06), ("mn", 1.12)]]}
        result = client.post("/bias", json=payload).json()
        assert result["bias"] == pytest.approx(0.374, abs=1e-3)


class TestEdits:
    def test_successful_edit_logged(self, alpine_client):
        client, _, concepts, log = alpine_client
        response = edit(client, "lexicalize",
                        {"interlingual": concepts["rye_bread"].id,
                         "language": "mhn", "lemma": "roggenproat"})
        assert response.status_code == 200
        body = response.json()
        assert body["seq"] == 1 and body["status"] == "ok"
        assert log.events[-1].contributor == "anna"

    def test_conflicting_edit_logged_as_failure(self, alpine_client):
        client, store, concepts, log = alpine_client
        before = exchange.canonical_bytes(exchange.export_document(store))
        response = edit(client, "mark_gap",
                        {"interlingual": concepts["bread"].id,
                         "language": "mhn"})
        assert response.status_code == 409
        assert response.json()["code"] == "SENSE_CONFLICT"
        assert log.events[-1].status == "error"
        assert exchange.canonical_bytes(
            exchange.export_document(store)) == before

    def test_contributor_required(self, alpine_client):
        client, _, concepts, log = alpine_client
        response = edit(client, "mark_gap",
                        {"interlingual": concepts["rye_bread"].id,
                         "language": "mhn"}, contributor="")
        assert response.status_code == 400
        assert log.events == []

    def test_read_your_writes(self, alpine_client):
        client, _, concepts, _ = alpine_client
        edit(client, "lexicalize", {"interlingual": concepts["rye_bread"].id,
                                    "language": "mhn", "lemma": "roggenproat"})
        data = client.get(f"/concepts/{concepts['rye_bread'].id}").json()
        status = {l["language"]: l["status"] for l in data["lexicalizations"]}
        assert status["mhn"] == "lexicalized"

    def test_changelog_order_and_since(self, alpine_client):
        client, _, concepts, _ = alpine_client
        edit(client, "lexicalize", {"interlingual": concepts["rye_bread"].id,
                                    "language": "mhn", "lemma": "roggenproat"},
             contributor="anna")
        edit(client, "add_interlingual_concept", {"label": "wheat bread"},
             contributor="berta")
        edit(client, "mark_gap", {"interlingual": concepts["bread"].id,
                                  "language": "mhn"}, contributor="anna")
        full = client.get("/changelog").json()
        assert [e["seq"] for e in full] == [1, 2, 3]
        assert [e["contributor"] for e in full] == ["anna", "berta", "anna"]
        assert client.get("/changelog", params={"since": 3}).json() == []
        tail = client.get("/changelog", params={"since": 1}).json()
        assert [e["seq"] for e in tail] == [2, 3]

    def test_replay_reproduces_store(self, alpine_client):
        client, store, concepts, log = alpine_client
        edit(client, "lexicalize", {"interlingual": concepts["rye_bread"].id,
                                    "language": "mhn", "lemma": "roggenproat"})
        edit(client, "mark_gap", {"interlingual": concepts["bread"].id,
                                  "language": "mhn"})  # fails, stays logged
        response = edit(client, "add_interlingual_concept",
                        {"label": "flatbread"})
        edit(client, "add_semantic_relation",
             {"source": response.json()["result"]["id"],
              "target": concepts["bread"].id, "kind": "hypernym"})
        rebuilt, _ = build_alpine_store()
        replay(log.events, rebuilt)
        assert exchange.canonical_bytes(
            exchange.export_document(rebuilt)) == exchange.canonical_bytes(
            exchange.export_document(store))


class TestLogPersistence:
    def test_log_round_trip(self, tmp_path):
        path = tmp_path / "edits.jsonl"
        log = EditLog(path)
        store = Store()
        app = create_app(store, log=log)
        client = TestClient(app)
        edit(client, "add_language", {"code": "sw", "name": "Swahili"})
        edit(client, "add_interlingual_concept", {"label": "rice"})
        reloaded = EditLog(path)
        assert [e.seq for e in reloaded.events] == [1, 2]
        rebuilt = replay(reloaded.events)
        assert rebuilt.language_codes() == ["sw"]
        assert len(rebuilt.concepts) == 1

    def test_snapshot_written_after_edit(self, tmp_path):
        snapshot = tmp_path / "snap.json"
        store = Store()
        app = create_app(store, snapshot_path=snapshot)
        client = TestClient(app)
        edit(client, "add_language", {"code": "sw", "name": "Swahili"})
        doc = exchange.loads(snapshot.read_text(encoding="utf-8"))
        assert [l["code"] for l in doc["languages"]] == ["sw"]


def test_scripted_session_determinism():
    """Hundreds of mixed edits from several contributors, some failing;
    replaying the log must reproduce the live store byte for byte."""
    store = Store()
    app = create_app(store)
    client = TestClient(app)
    log = app.state.log
    rng = random.Random(13)
    concept_ids, sense_args = [], []
    contributors = ["anna", "berta", "chen"]
    for i in range(300):
        who = rng.choice(contributors)
        roll = rng.random()
        if roll < 0.1:
            edit(client, "add_language",
                 {"code": f"q{chr(97 + rng.randrange(6))}", "name": "L"},
                 contributor=who)
        elif roll < 0.35:
            response = edit(client, "add_interlingual_concept",
                            {"label": f"c{i}"}, contributor=who)
            concept_ids.append(response.json()["result"]["id"])
        elif roll < 0.55 and len(concept_ids) >= 2:
            edit(client, "add_semantic_relation",
                 {"source": rng.choice(concept_ids),
                  "target": rng.choice(concept_ids), "kind": "hypernym"},
                 contributor=who)
        elif roll < 0.8 and concept_ids:
            edit(client, "lexicalize",
                 {"interlingual": rng.choice(concept_ids),
                  "language": f"q{chr(97 + rng.randrange(6))}",
                  "lemma": f"w{rng.randrange(120)}"}, contributor=who)
        elif concept_ids:
            edit(client, "mark_gap",
                 {"interlingual": rng.choice(concept_ids),
                  "language": f"q{chr(97 + rng.randrange(6))}"},
                 contributor=who)
    assert any(e.status == "error" for e in log.events)
    assert [e.seq for e in log.events] == list(
        range(1, len(log.events) + 1))
    rebuilt = replay(log.events)
    assert exchange.canonical_bytes(
        exchange.export_document(rebuilt)) == exchange.canonical_bytes(
        exchange.export_document(store))
