import pytest
from fastapi.testclient import TestClient

from punkit.config import default_config
from punkit.judgments import import_judgments
from punkit.server import create_app


@pytest.fixture()
def client(tmp_path, data_dir):
    config = default_config(data_dir, feedback_log=tmp_path / "feedback.csv")
    app = create_app(config)
    with TestClient(app) as tc:
        tc.feedback_log = tmp_path / "feedback.csv"
        yield tc


class TestHealthAndPairs:
    def test_health(self, client):
        body = client.get("/health").json()
        assert body["status"] == "ok"
        assert body["pairs"] == 500
        assert "config_hash" in body["provenance"]

    def test_pairs_carry_glosses_and_kind(self, client):
        body = client.get("/pairs").json()
        assert len(body["pairs"]) == 500
        sample = body["pairs"][0]
        assert {"pair_id", "pun_word", "alt_word", "pun_gloss", "alt_gloss",
                "kind"} <= set(sample)


class TestRetrieve:
    def test_single_keyword(self, client):
        resp = client.post("/retrieve", json={"keywords": ["whale"], "k": 1,
                                              "method": "unsupervised"})
        assert resp.status_code == 200
        body = resp.json()
        assert len(body["results"]) == 1
        assert body["results"][0]["rank"] == 1
        assert body["shortfall"] == 0

    def test_deterministic_given_config(self, client):
        payload = {"keywords": ["hunts", "deer"], "k": 5,
                   "method": "unsupervised"}
        a = client.post("/retrieve", json=payload).json()
        b = client.post("/retrieve", json=payload).json()
        assert a == b

    def test_invalid_body_is_400_with_field(self, client):
        resp = client.post("/retrieve", json={"k": 1})
        assert resp.status_code == 400
        assert resp.json()["field"] == "keywords"

    def test_classifier_unconfigured_is_503(self, client):
        resp = client.post("/retrieve", json={"keywords": ["whale"], "k": 1,
                                              "method": "classifier"})
        assert resp.status_code == 503
        assert "classifier" in resp.json()["error"]


class TestGenerateAndPipeline:
    def test_generate_known_pair(self, client):
        resp = client.post("/generate", json={"keywords": ["hunts", "deer"],
                                              "pair_id": "boar/bore"})
        assert resp.status_code == 200
        gen = resp.json()["generation"]
        assert gen["text"] == "hunts deer boar"
        assert gen["backend_id"] == "stub:template"

    def test_generate_unknown_pair_404(self, client):
        resp = client.post("/generate", json={"keywords": ["whale"],
                                              "pair_id": "zz/qq"})
        assert resp.status_code == 404

    def test_pipeline_with_keywords(self, client):
        resp = client.post("/pipeline", json={"keywords": ["hunts", "deer"],
                                              "k": 3})
        assert resp.status_code == 200
        body = resp.json()
        assert body["keywords"] == ["hunts", "deer"]
        assert len(body["results"]) == 3
        for entry in body["results"]:
            assert "prompt" in entry and "text" in entry
            assert entry["pun_word"] in entry["text"]

    def test_pipeline_with_text(self, client):
        resp = client.post("/pipeline", json={
            "text": "If you sight a whale, it could be a fluke.", "k": 2})
        assert resp.status_code == 200
        assert "whale" in resp.json()["keywords"]

    def test_pipeline_requires_exactly_one_input(self, client):
        resp = client.post("/pipeline", json={"k": 2})
        assert resp.status_code == 400
        both = client.post("/pipeline", json={"text": "x",
                                              "keywords": ["y"], "k": 2})
        assert both.status_code == 400

    def test_pipeline_deterministic(self, client):
        payload = {"keywords": ["whale"], "k": 2}
        a = client.post("/pipeline", json=payload).json()
        b = client.post("/pipeline", json=payload).json()
        assert a == b


class TestFeedback:
    def gen_id(self, client):
        resp = client.post("/generate", json={"keywords": ["hunts", "deer"],
                                              "pair_id": "boar/bore"})
        return resp.json()["generation"]["generation_id"]

    def test_roundtrip_and_duplicate_409(self, client):
        gen_id = self.gen_id(client)
        first = client.post("/feedback", json={"generation_id": gen_id,
                                               "success": 1,
                                               "judge_id": "sess1"})
        assert first.status_code == 200
        dup = client.post("/feedback", json={"generation_id": gen_id,
                                             "success": 1,
                                             "judge_id": "sess1"})
        assert dup.status_code == 409
        other_judge = client.post("/feedback", json={"generation_id": gen_id,
                                                     "success": 0,
                                                     "judge_id": "sess2"})
        assert other_judge.status_code == 200

    def test_unknown_generation_404(self, client):
        resp = client.post("/feedback", json={"generation_id": "nope",
                                              "success": 1})
        assert resp.status_code == 404

    def test_log_reimports_with_same_rate(self, client):
        ids = set()
        for pair_id in ("boar/bore", "stair/stare"):
            resp = client.post("/generate",
                               json={"keywords": ["hunts", "deer"],
                                     "pair_id": pair_id})
            ids.add(resp.json()["generation"]["generation_id"])
        id_a, id_b = sorted(ids)
        client.post("/feedback", json={"generation_id": id_a, "success": 1,
                                       "judge_id": "j1"})
        client.post("/feedback", json={"generation_id": id_b, "success": 0,
                                       "judge_id": "j1"})
        report = import_judgments(client.feedback_log, known_ids=ids)
        assert report.rate == 50.0
        assert report.generations == 2

    def test_invalid_success_value_400(self, client):
        gen_id = self.gen_id(client)
        resp = client.post("/feedback", json={"generation_id": gen_id,
                                              "success": 5})
        assert resp.status_code == 400
