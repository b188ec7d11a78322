"""Obtaining generations from a backend and running the retrieve-generate pipeline."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .backends import make_generator_backend
from .embeddings import EmbeddingTable
from .errors import BackendError, ValidationError
from .prompts import build_ambipun_prompt, build_pun_prompt
from .retrieval import classify_then_rank, rank_unsupervised
from .types import (ContextSpec, DecodeParams, GenerationRecord, PairCatalog,
                    PromptRecord, PunPair, ScoredPair)

log = logging.getLogger(__name__)

PROMPT_STYLES = ("pun_finetune", "ambipun")


def generate(backend, prompt: PromptRecord, decode: DecodeParams,
             context: ContextSpec, pair: PunPair) -> GenerationRecord:
    """Send one prompt to a generation backend and record full provenance."""
    text = backend.generate_text(prompt.prompt, decode)
    if not text or not text.strip():
        raise BackendError(f"empty generation for prompt {prompt.prompt[:60]!r}")
    return GenerationRecord(
        context=context, pair=pair, prompt=prompt.prompt, text=text,
        backend_id=backend.backend_id, decode=decode,
    )


def build_prompt(context: ContextSpec, pair: PunPair,
                 style: str = "pun_finetune") -> PromptRecord:
    if style == "pun_finetune":
        return build_pun_prompt(context, pair)
    if style == "ambipun":
        return build_ambipun_prompt(context, pair)
    raise ValidationError(f"unknown prompt style {style!r}", field="style")


@dataclass(frozen=True)
class PipelineRun:
    """Retrieval plus generations for one context."""

    context: ContextSpec
    retrieved: tuple[ScoredPair, ...]
    generations: tuple[GenerationRecord, ...]
    skipped_pairs: tuple[str, ...] = ()


def run_pipeline(context: ContextSpec, catalog: PairCatalog,
                 table: Optional[EmbeddingTable], k: int,
                 backend_spec: str = "stub:template",
                 method: str = "unsupervised",
                 classifier_client=None,
                 decode: DecodeParams = DecodeParams(),
                 prompt_style: str = "pun_finetune") -> PipelineRun:
    """Retrieve top-k pairs for a context and generate one pun per pair.

    Pairs whose pun word collides with a context keyword have the colliding
    keyword dropped from their prompt; pairs that would empty the context are
    skipped and reported.
    """
    if method == "unsupervised":
        if table is None:
            raise ValidationError("unsupervised retrieval needs embeddings")
        retrieved = rank_unsupervised(context, catalog, table, k)
    elif method == "classifier":
        if classifier_client is None:
            raise BackendError("classifier retrieval needs a classifier backend",
                               retryable=False)
        retrieved = classify_then_rank(context, catalog, classifier_client, k)
    else:
        raise ValidationError(f"unknown retrieval method {method!r}")

    backend = make_generator_backend(backend_spec)
    generations = []
    skipped = []
    for scored in retrieved:
        keywords = tuple(kw for kw in context.keywords
                         if kw != scored.pair.pun_word)
        if not keywords:
            skipped.append(scored.pair.label_string())
            continue
        prompt_context = (context if keywords == context.keywords
                          else ContextSpec(keywords))
        prompt = build_prompt(prompt_context, scored.pair, prompt_style)
        generations.append(generate(backend, prompt, decode,
                                    prompt_context, scored.pair))
    if skipped:
        log.info("skipped %d pair(s) with no usable context: %s",
                 len(skipped), ", ".join(skipped))
    return PipelineRun(context=context, retrieved=tuple(retrieved),
                       generations=tuple(generations),
                       skipped_pairs=tuple(skipped))


def run_pipeline_batch(contexts: Sequence[ContextSpec], **kwargs) -> list[PipelineRun]:
    return [run_pipeline(ctx, **kwargs) for ctx in contexts]


def record_to_dict(rec: GenerationRecord) -> dict:
    return {
        "generation_id": rec.generation_id,
        "keywords": list(rec.context.keywords),
        "pun_word": rec.pair.pun_word,
        "alt_word": rec.pair.alt_word,
        "pun_gloss": rec.pair.pun_gloss,
        "alt_gloss": rec.pair.alt_gloss,
        "prompt": rec.prompt,
        "text": rec.text,
        "backend_id": rec.backend_id,
        "beam_size": rec.decode.beam_size,
        "max_target_len": rec.decode.max_target_len,
    }


def record_from_dict(data: dict) -> GenerationRecord:
    return GenerationRecord(
        context=ContextSpec(tuple(data["keywords"])),
        pair=PunPair(data["pun_word"], data["alt_word"],
                     data["pun_gloss"], data["alt_gloss"]),
        prompt=data["prompt"], text=data["text"],
        backend_id=data["backend_id"],
        decode=DecodeParams(beam_size=data["beam_size"],
                            max_target_len=data["max_target_len"]),
    )


def save_generation_records(records: Sequence[GenerationRecord], path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(record_to_dict(rec), sort_keys=True) + "\n")


def load_generation_records(path) -> list[GenerationRecord]:
    records = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.strip():
            records.append(record_from_dict(json.loads(line)))
    return records
