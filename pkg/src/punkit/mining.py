"""Mining sentence/prompt pairs for sense-incorporation pretraining.

Scans a one-sentence-per-line corpus for sentences containing heterographic
pair words (lemma-matched), extracts a keyword context from each hit, and
emits pretraining prompt records with the sentence as target.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import ValidationError
from .keywords import PosLexicon, build_context, lemmatize, tokenize
from .prompts import build_pretrain_prompt
from .types import ContextSpec, PairCatalog, PromptRecord

log = logging.getLogger(__name__)

DEFAULT_PER_WORD = 200
MIN_SENTENCE_TOKENS = 5
MAX_SENTENCE_TOKENS = 40


@dataclass(frozen=True)
class MiningResult:
    records: tuple[PromptRecord, ...]
    shortfall: dict[str, int]

    @property
    def total_shortfall(self) -> int:
        return sum(self.shortfall.values())


def mining_targets(catalog: PairCatalog) -> dict[str, str]:
    """word -> gloss over heterographic pairs; first catalog occurrence wins.

    Homographic pairs are excluded so one spelling never carries two senses
    into pretraining.
    """
    targets: dict[str, str] = {}
    for pair in catalog.pairs:
        if pair.kind != "heterographic":
            continue
        targets.setdefault(pair.pun_word, pair.pun_gloss)
        targets.setdefault(pair.alt_word, pair.alt_gloss)
    return targets


def mine_pretrain_corpus(corpus_stream: Iterable[str], catalog: PairCatalog,
                         per_word: int = DEFAULT_PER_WORD,
                         stopwords: Optional[frozenset[str]] = None,
                         pos_lexicon: Optional[PosLexicon] = None) -> MiningResult:
    """Collect up to ``per_word`` prompt/target records per heterographic word.

    Sentences are matched on lemmas, filtered to 5..40 tokens, and must yield
    a non-empty keyword context once the mined word is excluded. Matches are
    taken in corpus order.
    """
    if per_word < 1:
        raise ValueError("per_word must be >= 1")
    targets = mining_targets(catalog)
    if not targets:
        raise ValidationError("catalog has no heterographic pairs to mine for")
    lemma_to_words: dict[str, list[str]] = {}
    for word in targets:
        lemma_to_words.setdefault(lemmatize(word), []).append(word)

    counts = {w: 0 for w in targets}
    remaining = len(targets)
    records: list[PromptRecord] = []

    for raw in corpus_stream:
        if remaining == 0:
            break
        sentence = raw.strip()
        if not sentence:
            continue
        tokens = tokenize(sentence)
        if not MIN_SENTENCE_TOKENS <= len(tokens) <= MAX_SENTENCE_TOKENS:
            continue
        lemmas = list(dict.fromkeys(lemmatize(t) for t in tokens))
        for lemma in lemmas:
            for word in lemma_to_words.get(lemma, ()):
                if counts[word] >= per_word:
                    continue
                try:
                    context = build_context(
                        text=sentence,
                        exclude=None,
                        stopwords=stopwords,
                        pos_lexicon=pos_lexicon,
                    )
                except ValidationError:
                    continue
                word_lemma = lemmatize(word)
                kept = tuple(kw for kw in context.keywords
                             if all(lemmatize(t) != word_lemma
                                    for t in kw.split()))
                if not kept:
                    continue
                ctx = ContextSpec(kept, source_sentence=sentence)
                records.append(build_pretrain_prompt(
                    ctx, word, targets[word], target=sentence))
                counts[word] += 1
                if counts[word] == per_word:
                    remaining -= 1

    shortfall = {w: per_word - c for w, c in counts.items() if c < per_word}
    if shortfall:
        log.info("mining shortfall for %d/%d words (worst %d)",
                 len(shortfall), len(targets), max(shortfall.values()))
    return MiningResult(records=tuple(records), shortfall=shortfall)


def save_prompt_records(records: Iterable[PromptRecord], path) -> None:
    """Line-delimited `prompt TAB target` rows."""
    import io
    from pathlib import Path

    buf = io.StringIO()
    for r in records:
        target = r.target or ""
        if "\t" in r.prompt or "\t" in target:
            raise ValidationError("prompt/target contains a tab")
        buf.write(f"{r.prompt}\t{target}\n")
    Path(path).write_text(buf.getvalue(), encoding="utf-8")
