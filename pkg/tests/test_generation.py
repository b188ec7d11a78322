import httpx
import pytest

from punkit.backends import (EchoBackend, HttpClassifierClient,
                             HttpGeneratorBackend, TemplateBackend,
                             make_generator_backend)
from punkit.errors import BackendError, ValidationError
from punkit.generation import build_prompt, generate, run_pipeline
from punkit.prompts import build_ambipun_prompt, build_pun_prompt
from punkit.types import ContextSpec, DecodeParams, PunPair


def pair_boar():
    return PunPair("boar", "bore", "an uncastrated male hog",
                   "a dull and uninteresting person")


class TestStubBackends:
    def test_echo_roundtrips_prompt(self):
        ctx = ContextSpec(("hunts", "deer"))
        prompt = build_pun_prompt(ctx, pair_boar())
        rec = generate(EchoBackend(), prompt, DecodeParams(), ctx, pair_boar())
        assert rec.text == prompt.prompt
        assert rec.backend_id == "stub:echo"

    def test_template_concatenates_keywords_and_pun_word(self):
        ctx = ContextSpec(("hunts", "deer"))
        prompt = build_pun_prompt(ctx, pair_boar())
        rec = generate(TemplateBackend(), prompt, DecodeParams(), ctx,
                       pair_boar())
        assert rec.text == "hunts deer boar"

    def test_template_handles_ambipun_prompt(self):
        ctx = ContextSpec(("hunts", "deer"))
        prompt = build_ambipun_prompt(ctx, pair_boar())
        text = TemplateBackend().generate_text(prompt.prompt, DecodeParams())
        assert text == "hunts deer boar"

    def test_template_deterministic(self):
        ctx = ContextSpec(("whale",))
        pair = PunPair("fluke", "fluke", "a stroke of luck", "a tail lobe")
        prompt = build_pun_prompt(ctx, pair)
        texts = {TemplateBackend().generate_text(prompt.prompt, DecodeParams())
                 for _ in range(5)}
        assert texts == {"whale fluke"}

    def test_factory(self):
        assert make_generator_backend("stub:echo").backend_id == "stub:echo"
        assert isinstance(make_generator_backend("stub:template"),
                          TemplateBackend)
        with pytest.raises(BackendError):
            make_generator_backend("stub:nonsense")


class TestGenerate:
    def test_empty_text_is_an_error(self):
        class Empty:
            backend_id = "stub:empty"

            def generate_text(self, prompt, decode):
                return "   "

        ctx = ContextSpec(("deer",))
        prompt = build_pun_prompt(ctx, pair_boar())
        with pytest.raises(BackendError, match="empty generation"):
            generate(Empty(), prompt, DecodeParams(), ctx, pair_boar())

    def test_provenance_recorded(self):
        ctx = ContextSpec(("deer",))
        prompt = build_pun_prompt(ctx, pair_boar())
        decode = DecodeParams(beam_size=4, max_target_len=64)
        rec = generate(EchoBackend(), prompt, decode, ctx, pair_boar())
        assert rec.decode == decode
        assert rec.context == ctx and rec.pair == pair_boar()

    def test_unknown_prompt_style(self):
        with pytest.raises(ValidationError):
            build_prompt(ContextSpec(("deer",)), pair_boar(), "haiku")


def http_backend_with(handler):
    transport = httpx.MockTransport(handler)
    client = httpx.Client(transport=transport)
    return HttpGeneratorBackend("http://gen.test/generate", client=client)


class TestHttpGenerator:
    def test_wire_contract(self):
        seen = {}

        def handler(request):
            import json
            seen.update(json.loads(request.content))
            return httpx.Response(200, json={"text": "a boar walked in"})

        backend = http_backend_with(handler)
        text = backend.generate_text("some prompt", DecodeParams(beam_size=2))
        assert text == "a boar walked in"
        assert seen == {"prompt": "some prompt", "beam_size": 2,
                        "max_target_len": 256}

    def test_retries_then_succeeds_on_transient_failures(self):
        calls = {"n": 0}

        def handler(request):
            calls["n"] += 1
            if calls["n"] < 3:
                return httpx.Response(503)
            return httpx.Response(200, json={"text": "ok"})

        import punkit.backends as backends
        orig = backends.time.sleep
        backends.time.sleep = lambda s: None
        try:
            assert http_backend_with(handler).generate_text(
                "p", DecodeParams()) == "ok"
        finally:
            backends.time.sleep = orig
        assert calls["n"] == 3

    def test_gives_up_after_bounded_retries(self):
        def handler(request):
            raise httpx.ConnectError("refused")

        import punkit.backends as backends
        orig = backends.time.sleep
        backends.time.sleep = lambda s: None
        try:
            with pytest.raises(BackendError) as err:
                http_backend_with(handler).generate_text("p", DecodeParams())
        finally:
            backends.time.sleep = orig
        assert err.value.retryable

    def test_client_error_not_retried(self):
        calls = {"n": 0}

        def handler(request):
            calls["n"] += 1
            return httpx.Response(400, json={"error": "bad"})

        with pytest.raises(BackendError):
            http_backend_with(handler).generate_text("p", DecodeParams())
        assert calls["n"] == 1

    def test_malformed_response_rejected(self):
        def handler(request):
            return httpx.Response(200, json={"nottext": 1})

        with pytest.raises(BackendError, match="malformed"):
            http_backend_with(handler).generate_text("p", DecodeParams())


class TestHttpClassifier:
    def test_wire_contract(self):
        def handler(request):
            import json
            body = json.loads(request.content)
            assert body == {"premise": "hunts, deer", "hypothesis": "boar / bore"}
            return httpx.Response(200, json={"label": "suitable",
                                             "confidence": 0.83})

        client = HttpClassifierClient(
            "http://clf.test/classify",
            client=httpx.Client(transport=httpx.MockTransport(handler)))
        verdict = client.classify("hunts, deer", "boar / bore")
        assert verdict.label == "suitable"
        assert verdict.confidence == pytest.approx(0.83)

    def test_malformed_verdict_rejected(self):
        def handler(request):
            return httpx.Response(200, json={"label": "maybe",
                                             "confidence": 0.5})

        client = HttpClassifierClient(
            "http://clf.test/classify",
            client=httpx.Client(transport=httpx.MockTransport(handler)))
        with pytest.raises(BackendError):
            client.classify("p", "h")


class TestRunPipeline:
    def test_stub_pipeline_end_to_end(self, catalog, table):
        ctx = ContextSpec(("hunts", "deer"))
        run = run_pipeline(ctx, catalog, table, k=3,
                           backend_spec="stub:template")
        assert len(run.retrieved) == 3
        assert len(run.generations) + len(run.skipped_pairs) == 3
        for rec in run.generations:
            assert rec.pair.pun_word in rec.text

    def test_deterministic_across_runs(self, catalog, table):
        ctx = ContextSpec(("whale",))
        a = run_pipeline(ctx, catalog, table, k=5, backend_spec="stub:template")
        b = run_pipeline(ctx, catalog, table, k=5, backend_spec="stub:template")
        assert [g.text for g in a.generations] == [g.text for g in b.generations]
        assert [sp.pair.key for sp in a.retrieved] == \
            [sp.pair.key for sp in b.retrieved]

    def test_colliding_keyword_dropped_from_prompt(self, table):
        pair = PunPair("whale", "wail", "a large marine mammal",
                       "a long cry of grief")
        from punkit.types import PairCatalog
        catalog = PairCatalog(pairs=(pair,), id_index={pair.key: 0})
        run = run_pipeline(ContextSpec(("whale", "harbor")), catalog, table,
                           k=1, backend_spec="stub:template")
        (rec,) = run.generations
        assert "whale" not in rec.prompt.split("using the word")[0]

    def test_single_colliding_keyword_skips_pair(self, table):
        pair = PunPair("whale", "wail", "a large marine mammal",
                       "a long cry of grief")
        from punkit.types import PairCatalog
        catalog = PairCatalog(pairs=(pair,), id_index={pair.key: 0})
        run = run_pipeline(ContextSpec(("whale",)), catalog, table, k=1,
                           backend_spec="stub:template")
        assert run.generations == ()
        assert run.skipped_pairs == ("whale/wail",)

    def test_classifier_method_requires_client(self, catalog, table):
        with pytest.raises(BackendError):
            run_pipeline(ContextSpec(("whale",)), catalog, table, k=1,
                         method="classifier")
