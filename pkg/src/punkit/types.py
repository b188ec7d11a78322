"""Core domain types.

Everything here is an immutable value object validated on construction, so
downstream code can assume well-formed data and share instances across
threads freely.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Optional

from .errors import ValidationError

HETEROGRAPHIC = "heterographic"
HOMOGRAPHIC = "homographic"

SPLITS = ("train", "dev", "test")

MAX_CONTEXT_KEYWORDS = 16
MAX_KEYWORD_TOKENS = 5


@dataclass(frozen=True)
class PunPair:
    """A pun word / alternative word pair with one sense gloss each.

    Heterographic pairs hold two distinct spellings (homophones); homographic
    pairs repeat one polysemous spelling with two senses.
    """

    pun_word: str
    alt_word: str
    pun_gloss: str
    alt_gloss: str
    pun_sense_key: Optional[str] = None
    alt_sense_key: Optional[str] = None
    kind: str = ""

    def __post_init__(self):
        object.__setattr__(self, "pun_word", self.pun_word.strip().lower())
        object.__setattr__(self, "alt_word", self.alt_word.strip().lower())
        for name in ("pun_word", "alt_word"):
            word = getattr(self, name)
            if not word:
                raise ValidationError("empty word", field=name)
            if any(ch.isspace() for ch in word):
                raise ValidationError(f"word contains whitespace: {word!r}",
                                      field=name)
        for name in ("pun_gloss", "alt_gloss"):
            if not getattr(self, name).strip():
                raise ValidationError("empty gloss", field=name)
        derived = HOMOGRAPHIC if self.pun_word == self.alt_word else HETEROGRAPHIC
        if not self.kind:
            object.__setattr__(self, "kind", derived)
        elif self.kind != derived:
            raise ValidationError(
                f"kind {self.kind!r} inconsistent with words "
                f"({self.pun_word!r}, {self.alt_word!r})", field="kind")

    @property
    def key(self) -> tuple[str, str]:
        return (self.pun_word, self.alt_word)

    def label_string(self) -> str:
        return f"{self.pun_word}/{self.alt_word}"


@dataclass(frozen=True)
class ContextSpec:
    """An ordered set of lowercase context keyword phrases."""

    keywords: tuple[str, ...]
    source_sentence: Optional[str] = None

    def __post_init__(self):
        normalized = tuple(" ".join(k.split()).lower() for k in self.keywords)
        object.__setattr__(self, "keywords", normalized)
        if not normalized:
            raise ValidationError("context has no keywords", field="keywords")
        if len(normalized) > MAX_CONTEXT_KEYWORDS:
            raise ValidationError(
                f"too many keywords ({len(normalized)} > {MAX_CONTEXT_KEYWORDS})",
                field="keywords")
        seen = set()
        for kw in normalized:
            if not kw:
                raise ValidationError("empty keyword", field="keywords")
            ntok = len(kw.split())
            if ntok > MAX_KEYWORD_TOKENS:
                raise ValidationError(
                    f"keyword {kw!r} has {ntok} tokens (max {MAX_KEYWORD_TOKENS})",
                    field="keywords")
            if kw in seen:
                raise ValidationError(f"duplicate keyword {kw!r}", field="keywords")
            seen.add(kw)

    @property
    def key(self) -> tuple[str, ...]:
        return self.keywords

    def joined(self, sep: str = ", ") -> str:
        return sep.join(self.keywords)


@dataclass(frozen=True)
class CompatibilityRecord:
    """One annotated (context, pun pair) tuple.

    ``label`` says whether a pun could be written for the combination; rows
    labeled 1 may carry that human-written pun and a 1..5 difficulty score.
    """

    context: ContextSpec
    pair: PunPair
    label: int
    human_pun: Optional[str] = None
    difficulty: Optional[int] = None
    split: Optional[str] = None

    def __post_init__(self):
        if self.label not in (0, 1):
            raise ValidationError(f"label must be 0 or 1, got {self.label!r}",
                                  field="label")
        if self.label == 0 and self.human_pun is not None:
            raise ValidationError("label 0 rows cannot carry a human pun",
                                  field="human_pun")
        if self.difficulty is not None and not 1 <= self.difficulty <= 5:
            raise ValidationError(
                f"difficulty {self.difficulty!r} outside [1, 5]", field="difficulty")
        if self.split is not None and self.split not in SPLITS:
            raise ValidationError(f"unknown split {self.split!r}", field="split")
        # Pairing rule: a context keyword may not equal the pun word it is
        # evaluated against.
        if self.pair.pun_word in self.context.keywords:
            raise ValidationError(
                f"keyword equals pun word {self.pair.pun_word!r}", field="context")


@dataclass(frozen=True)
class PairCatalog:
    """The fixed candidate set retrieval ranks over."""

    pairs: tuple[PunPair, ...]
    id_index: dict = field(compare=False)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def get(self, pun_word: str, alt_word: str) -> Optional[PunPair]:
        idx = self.id_index.get((pun_word, alt_word))
        return None if idx is None else self.pairs[idx]


@dataclass(frozen=True)
class ScoredPair:
    """A catalog pair with its retrieval score and 1-based rank."""

    pair: PunPair
    score: float
    rank: int
    method: str

    def __post_init__(self):
        if self.rank < 1:
            raise ValidationError("rank must be >= 1", field="rank")
        if self.method not in ("unsupervised", "classifier"):
            raise ValidationError(f"unknown method {self.method!r}", field="method")


@dataclass(frozen=True)
class ClassifierVerdict:
    label: str
    confidence: float

    def __post_init__(self):
        if self.label not in ("suitable", "unsuitable"):
            raise ValidationError(f"unknown label {self.label!r}", field="label")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValidationError(
                f"confidence {self.confidence!r} outside [0, 1]", field="confidence")


@dataclass(frozen=True)
class DecodeParams:
    """Decoding knobs forwarded to generation backends.

    Decoding stops at the end-of-sequence token or after max_target_len,
    whichever comes first; ``stop`` names the terminator contract.
    """

    beam_size: int = 2
    max_target_len: int = 256
    stop: str = "eos"

    def __post_init__(self):
        if self.beam_size < 1:
            raise ValidationError("beam_size must be >= 1", field="beam_size")
        if self.max_target_len < 1:
            raise ValidationError("max_target_len must be >= 1",
                                  field="max_target_len")
        if self.stop != "eos":
            raise ValidationError(f"unsupported stop criterion {self.stop!r}",
                                  field="stop")


PROMPT_KINDS = ("pun_finetune", "pretrain", "ambipun")


@dataclass(frozen=True)
class PromptRecord:
    """A ready-to-send prompt, optionally paired with a training target."""

    prompt: str
    kind: str
    target: Optional[str] = None

    def __post_init__(self):
        if not self.prompt:
            raise ValidationError("empty prompt", field="prompt")
        if self.kind not in PROMPT_KINDS:
            raise ValidationError(f"unknown prompt kind {self.kind!r}", field="kind")
        if self.kind == "pretrain" and self.target is None:
            raise ValidationError("pretrain prompts require a target",
                                  field="target")


@dataclass(frozen=True)
class GenerationRecord:
    """One backend generation with full provenance."""

    context: ContextSpec
    pair: PunPair
    prompt: str
    text: str
    backend_id: str
    decode: DecodeParams

    def __post_init__(self):
        if not self.text:
            raise ValidationError("empty generation text", field="text")

    @property
    def generation_id(self) -> str:
        payload = "\x1f".join([
            self.context.joined("|"), self.pair.pun_word, self.pair.alt_word,
            self.prompt, self.text, self.backend_id,
        ])
        return hashlib.sha1(payload.encode("utf-8")).hexdigest()[:12]
