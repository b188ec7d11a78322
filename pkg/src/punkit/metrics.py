"""Evaluation metrics: incorporation rates, TP@N, classifier scores, kappa."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import ValidationError
from .keywords import lemmatize, tokenize
from .types import CompatibilityRecord, ContextSpec, GenerationRecord, ScoredPair

INCORPORATION_MODES = ("pun_word", "context")


def text_lemmas(text: str) -> set[str]:
    return {lemmatize(t) for t in tokenize(text)}


@dataclass(frozen=True)
class IncorporationResult:
    rate: float              # percent of records passing the mode's test
    hits: int
    total: int
    keyword_micro_rate: Optional[float] = None  # context mode only

    def __float__(self):
        return self.rate


def incorporation_rate(records: Sequence[GenerationRecord],
                       mode: str) -> IncorporationResult:
    """Lemma-aware incorporation percentage over generation records.

    ``pun_word``: the text contains the pun word's lemma. ``context``: the
    text contains the head-word lemma of every context keyword (strict); the
    per-keyword micro rate comes along for free.
    """
    if mode not in INCORPORATION_MODES:
        raise ValidationError(f"unknown mode {mode!r}", field="mode")
    if not records:
        raise ValidationError("no records to score")

    hits = 0
    kw_hits = 0
    kw_total = 0
    for rec in records:
        lemmas = text_lemmas(rec.text)
        if mode == "pun_word":
            hits += lemmatize(rec.pair.pun_word) in lemmas
        else:
            matched = [lemmatize(kw.split()[-1]) in lemmas
                       for kw in rec.context.keywords]
            hits += all(matched)
            kw_hits += sum(matched)
            kw_total += len(matched)
    rate = 100.0 * hits / len(records)
    micro = 100.0 * kw_hits / kw_total if mode == "context" else None
    return IncorporationResult(rate=rate, hits=hits, total=len(records),
                               keyword_micro_rate=micro)


# ---------------------------------------------------------------------------
# TP@N

@dataclass(frozen=True)
class TpAtNResult:
    rate: float
    positive_slots: int
    labeled_slots: int
    unlabeled_slots: int

    def __float__(self):
        return self.rate


def _gold_index(gold: Sequence[CompatibilityRecord]) -> dict:
    index = {}
    for r in gold:
        index[(r.context.key, r.pair.key)] = r.label
    return index


def tp_at_n(retrievals: Mapping[tuple, Sequence[ScoredPair]] |
            Sequence[tuple[ContextSpec, Sequence[ScoredPair]]],
            gold: Sequence[CompatibilityRecord], n: int) -> TpAtNResult:
    """Percentage of gold-positive pairs among labeled top-n slots.

    Top-n slots without a gold label are excluded from both numerator and
    denominator and reported separately.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    index = _gold_index(gold)
    items = (retrievals.items() if isinstance(retrievals, Mapping)
             else retrievals)
    positive = labeled = unlabeled = 0
    for context, ranked in items:
        key = context.key if isinstance(context, ContextSpec) else tuple(context)
        for scored in list(ranked)[:n]:
            label = index.get((key, scored.pair.key))
            if label is None:
                unlabeled += 1
            else:
                labeled += 1
                positive += label
    if labeled == 0:
        raise ValidationError("no labeled top-n slots; cannot compute TP@N")
    return TpAtNResult(rate=100.0 * positive / labeled,
                       positive_slots=positive, labeled_slots=labeled,
                       unlabeled_slots=unlabeled)


# ---------------------------------------------------------------------------
# Classifier metrics

@dataclass(frozen=True)
class ClassifierMetrics:
    f1: float
    precision: float
    recall: float
    accuracy: float

    def as_dict(self) -> dict[str, float]:
        return {"f1": self.f1, "precision": self.precision,
                "recall": self.recall, "accuracy": self.accuracy}


def classifier_metrics(predictions: Sequence[int],
                       golds: Sequence[int]) -> ClassifierMetrics:
    """Macro-averaged precision/recall/F1 over the two classes, plus accuracy.

    All values are percentages. Undefined per-class ratios (no predictions
    or no gold instances for a class) count as zero in the macro average.
    """
    if not predictions or len(predictions) != len(golds):
        raise ValidationError("predictions and golds must be equal-length, "
                              "non-empty")
    for v in list(predictions) + list(golds):
        if v not in (0, 1):
            raise ValidationError(f"labels must be 0/1, got {v!r}")

    def prf(cls: int) -> tuple[float, float, float]:
        tp = sum(1 for p, g in zip(predictions, golds) if p == cls and g == cls)
        fp = sum(1 for p, g in zip(predictions, golds) if p == cls and g != cls)
        fn = sum(1 for p, g in zip(predictions, golds) if p != cls and g == cls)
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        f1 = (2 * precision * recall / (precision + recall)
              if precision + recall else 0.0)
        return precision, recall, f1

    p0, r0, f0 = prf(0)
    p1, r1, f1 = prf(1)
    correct = sum(1 for p, g in zip(predictions, golds) if p == g)
    return ClassifierMetrics(
        f1=100.0 * (f0 + f1) / 2,
        precision=100.0 * (p0 + p1) / 2,
        recall=100.0 * (r0 + r1) / 2,
        accuracy=100.0 * correct / len(golds),
    )


# ---------------------------------------------------------------------------
# Fleiss' kappa

def fleiss_kappa(table: Sequence[Sequence[int]]) -> float:
    """Chance-corrected agreement for a fixed number of raters per item.

    ``table[i][j]`` counts raters assigning item i to category j. Every row
    must sum to the same rater count r >= 2.
    """
    if not table or not table[0]:
        raise ValidationError("empty rating table")
    rows = [list(row) for row in table]
    width = len(rows[0])
    raters = sum(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ValidationError(f"ragged table at row {i}")
        if any(c < 0 for c in row):
            raise ValidationError(f"negative count at row {i}")
        if sum(row) != raters:
            raise ValidationError(
                f"unequal rater counts: row {i} sums to {sum(row)}, "
                f"expected {raters}")
    if raters < 2:
        raise ValidationError("need at least 2 raters per item")

    n_items = len(rows)
    total = n_items * raters
    p_observed = sum(
        (sum(c * c for c in row) - raters) / (raters * (raters - 1))
        for row in rows) / n_items
    category_shares = [sum(row[j] for row in rows) / total for j in range(width)]
    p_expected = sum(s * s for s in category_shares)
    if p_expected == 1.0:
        if p_observed == 1.0:
            return 1.0
        raise ValidationError("degenerate marginals: chance agreement is 1 "
                              "but observed agreement is not")
    return (p_observed - p_expected) / (1 - p_expected)


# ---------------------------------------------------------------------------
# Human baseline selection

def select_human_baseline(records: Sequence[CompatibilityRecord],
                          context: ContextSpec,
                          rng: random.Random | int = 0) -> str:
    """The human pun written with the least difficulty for a context.

    Only label-1 rows carrying both a pun and a difficulty participate;
    ties at minimum difficulty resolve by seeded random choice.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    candidates = [r for r in records
                  if r.context.key == context.key and r.label == 1
                  and r.human_pun and r.difficulty is not None]
    if not candidates:
        raise ValidationError(
            f"no written pun with difficulty for context "
            f"{context.joined(', ')!r}")
    best = min(r.difficulty for r in candidates)
    pool = [r.human_pun for r in candidates if r.difficulty == best]
    return rng.choice(pool)
