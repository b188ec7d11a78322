"""HTTP service exposing the pipeline to the web UI and external programs.

Shared state (catalog, embeddings, config) is loaded once at startup and
never mutated; the feedback log is the only mutable resource and all writes
to it are serialized through one lock.
"""

from __future__ import annotations

import csv
import logging
import threading
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .backends import make_classifier_client
from .config import AppConfig
from .corpus import build_pair_catalog, load_compatibility_file
from .embeddings import load_embeddings
from .errors import BackendError, PunkitError, ValidationError
from .generation import build_prompt, generate, record_to_dict
from .judgments import SHEET_COLUMNS, sheet_row
from .keywords import PosLexicon, build_context, default_stopwords, load_stopwords
from .retrieval import classify_then_rank, rank_unsupervised
from .backends import make_generator_backend
from .types import ContextSpec, DecodeParams, GenerationRecord

log = logging.getLogger(__name__)


class RetrieveBody(BaseModel):
    keywords: list[str] = Field(min_length=1)
    k: int = Field(default=5, ge=1)
    method: str = "unsupervised"


class DecodeBody(BaseModel):
    beam_size: int = Field(default=2, ge=1)
    max_target_len: int = Field(default=256, ge=1)


class GenerateBody(BaseModel):
    keywords: list[str] = Field(min_length=1)
    pair_id: str
    decode: Optional[DecodeBody] = None


class PipelineBody(BaseModel):
    text: Optional[str] = None
    keywords: Optional[list[str]] = None
    k: int = Field(default=5, ge=1)
    method: Optional[str] = None


class FeedbackBody(BaseModel):
    generation_id: str
    success: int = Field(ge=0, le=1)
    judge_id: str = "ui"


class ServerState:
    def __init__(self, config: AppConfig):
        self.config = config
        self.catalog = build_pair_catalog(config.pair_lexicon_path)
        self.table = load_embeddings(config.embeddings_path)
        self.dataset = load_compatibility_file(config.records_path)
        self.stopwords = (load_stopwords(config.stopwords_path)
                          if config.stopwords_path else default_stopwords())
        self.pos_lexicon = (PosLexicon.load(config.pos_lexicon_path)
                            if config.pos_lexicon_path else None)
        self.generations: dict[str, GenerationRecord] = {}
        self.feedback_seen: set[tuple[str, str]] = set()
        self.feedback_lock = threading.Lock()
        self._load_feedback_log()

    def _load_feedback_log(self):
        path = Path(self.config.feedback_log)
        if not path.exists():
            return
        with path.open("r", encoding="utf-8", newline="") as fh:
            for row in csv.DictReader(fh):
                gen_id = (row.get("generation_id") or "").strip()
                judge = (row.get("judge_id") or "").strip()
                if gen_id and judge:
                    self.feedback_seen.add((gen_id, judge))

    def provenance(self) -> dict:
        return {"seed": self.config.seed, "config_hash": self.config.hash,
                "dataset_hash": self.dataset.content_hash}

    def append_feedback(self, record: GenerationRecord, judge_id: str,
                        success: int) -> None:
        path = Path(self.config.feedback_log)
        with self.feedback_lock:
            new_file = not path.exists()
            with path.open("a", encoding="utf-8", newline="") as fh:
                writer = csv.writer(fh)
                if new_file:
                    writer.writerow(SHEET_COLUMNS)
                writer.writerow(sheet_row(record, judge_id, str(success)))
            self.feedback_seen.add((record.generation_id, judge_id))


def pair_payload(pair, score=None, rank=None) -> dict:
    body = {
        "pair_id": f"{pair.pun_word}/{pair.alt_word}",
        "pun_word": pair.pun_word,
        "alt_word": pair.alt_word,
        "pun_gloss": pair.pun_gloss,
        "alt_gloss": pair.alt_gloss,
        "kind": pair.kind,
    }
    if score is not None:
        body["score"] = score
        body["rank"] = rank
    return body


def create_app(config: AppConfig) -> FastAPI:
    state = ServerState(config)
    app = FastAPI(title="punkit", version="0.1.0")
    app.state.punkit = state

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc):
        first = exc.errors()[0] if exc.errors() else {}
        field = ".".join(str(p) for p in first.get("loc", ()) if p != "body")
        return JSONResponse(status_code=400,
                            content={"error": first.get("msg", "invalid body"),
                                     "field": field or "body"})

    @app.exception_handler(PunkitError)
    async def on_domain_error(request: Request, exc):
        status = 503 if isinstance(exc, BackendError) else 400
        return JSONResponse(status_code=status, content={"error": str(exc)})

    def retrieve_pairs(context: ContextSpec, k: int, method: str):
        if method == "unsupervised":
            return rank_unsupervised(context, state.catalog, state.table, k)
        if method == "classifier":
            if not config.classifier_url:
                raise BackendError("classifier backend not configured",
                                   retryable=False)
            client = make_classifier_client(config.classifier_url)
            return classify_then_rank(context, state.catalog, client, k)
        raise ValidationError(f"unknown retrieval method {method!r}",
                              field="method")

    def generate_for(context: ContextSpec, pair, decode: DecodeParams):
        keywords = tuple(kw for kw in context.keywords
                         if kw != pair.pun_word)
        if not keywords:
            raise ValidationError("context empty after excluding the pun word")
        prompt_ctx = (context if keywords == context.keywords
                      else ContextSpec(keywords))
        backend = make_generator_backend(config.generator_backend)
        prompt = build_prompt(prompt_ctx, pair)
        record = generate(backend, prompt, decode, prompt_ctx, pair)
        state.generations[record.generation_id] = record
        return record

    @app.get("/health")
    async def health():
        from .scoring import KERNEL_BACKEND
        return {"status": "ok", "pairs": len(state.catalog),
                "records": len(state.dataset), "kernel": KERNEL_BACKEND,
                "provenance": state.provenance()}

    @app.get("/pairs")
    async def pairs():
        return {"pairs": [pair_payload(p) for p in state.catalog.pairs],
                "provenance": state.provenance()}

    @app.post("/retrieve")
    async def retrieve(body: RetrieveBody):
        context = ContextSpec(tuple(dict.fromkeys(
            " ".join(k.split()).lower() for k in body.keywords if k.strip())))
        ranked = retrieve_pairs(context, body.k, body.method)
        return {
            "keywords": list(context.keywords),
            "method": body.method,
            "results": [pair_payload(sp.pair, sp.score, sp.rank)
                        for sp in ranked],
            "shortfall": max(0, body.k - len(ranked)),
            "provenance": state.provenance(),
        }

    @app.post("/generate")
    async def generate_endpoint(body: GenerateBody):
        if "/" not in body.pair_id:
            raise ValidationError("pair_id must be 'pun_word/alt_word'",
                                  field="pair_id")
        pun_word, alt_word = body.pair_id.split("/", 1)
        pair = state.catalog.get(pun_word.strip().lower(),
                                 alt_word.strip().lower())
        if pair is None:
            return JSONResponse(status_code=404,
                                content={"error": f"unknown pair "
                                         f"{body.pair_id!r}"})
        decode = (DecodeParams(body.decode.beam_size, body.decode.max_target_len)
                  if body.decode else config.decode)
        context = ContextSpec(tuple(dict.fromkeys(
            " ".join(k.split()).lower() for k in body.keywords if k.strip())))
        record = generate_for(context, pair, decode)
        return {"generation": record_to_dict(record),
                "provenance": state.provenance()}

    @app.post("/pipeline")
    async def pipeline(body: PipelineBody):
        if (body.text is None) == (body.keywords is None):
            raise ValidationError("provide exactly one of text or keywords",
                                  field="text")
        if body.text is not None:
            context = build_context(text=body.text, stopwords=state.stopwords,
                                    pos_lexicon=state.pos_lexicon)
        else:
            context = ContextSpec(tuple(dict.fromkeys(
                " ".join(k.split()).lower()
                for k in body.keywords if k.strip())))
        method = body.method or config.retrieval_method
        ranked = retrieve_pairs(context, body.k, method)
        results = []
        for sp in ranked:
            entry = pair_payload(sp.pair, sp.score, sp.rank)
            try:
                record = generate_for(context, sp.pair, config.decode)
            except ValidationError as err:
                entry["skipped"] = str(err)
            else:
                entry["prompt"] = record.prompt
                entry["text"] = record.text
                entry["generation_id"] = record.generation_id
                entry["backend_id"] = record.backend_id
            results.append(entry)
        return {
            "keywords": list(context.keywords),
            "method": method,
            "results": results,
            "shortfall": max(0, body.k - len(ranked)),
            "provenance": state.provenance(),
        }

    @app.post("/feedback")
    async def feedback(body: FeedbackBody):
        record = state.generations.get(body.generation_id)
        if record is None:
            return JSONResponse(status_code=404,
                                content={"error": f"unknown generation_id "
                                         f"{body.generation_id!r}"})
        key = (body.generation_id, body.judge_id)
        if key in state.feedback_seen:
            return JSONResponse(status_code=409,
                                content={"error": "feedback already recorded",
                                         "generation_id": body.generation_id,
                                         "judge_id": body.judge_id})
        state.append_feedback(record, body.judge_id, body.success)
        return {"status": "recorded", "generation_id": body.generation_id,
                "judge_id": body.judge_id,
                "provenance": state.provenance()}

    static = config.static_dir
    if static and Path(static).is_dir():
        # Added last so API routes keep precedence over the SPA bundle.
        app.mount("/", StaticFiles(directory=str(static), html=True),
                  name="ui")

    return app


def run_server(config: AppConfig):
    import uvicorn

    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
