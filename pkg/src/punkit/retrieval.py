"""Pun-pair retrieval: embedding-distance scoring and classifier-backed ranking."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Protocol

import numpy as np

from .embeddings import EmbeddingTable
from .errors import BackendError
from .scoring import batch_pair_scores
from .types import ClassifierVerdict, ContextSpec, PairCatalog, PunPair, ScoredPair

log = logging.getLogger(__name__)

DEFAULT_PARALLELISM = 8


def pair_distance(context: ContextSpec, pair: PunPair,
                  table: EmbeddingTable) -> float:
    """Summed Euclidean distance from both pair words to every context keyword.

    Homographic pairs contribute the pun-word distance twice, once per sum.
    Out-of-vocabulary words resolve to the table's per-dimension mean vector.
    """
    ctx = table.context_matrix(context)
    pun = table.vector(pair.pun_word)[None, :]
    alt = table.vector(pair.alt_word)[None, :]
    return float(batch_pair_scores(pun, alt, ctx)[0])


def catalog_distances(context: ContextSpec, catalog: PairCatalog,
                      table: EmbeddingTable) -> np.ndarray:
    """Distance of every catalog pair to the context, in catalog order."""
    ctx = table.context_matrix(context)
    pun = np.stack([table.vector(p.pun_word) for p in catalog.pairs])
    alt = np.stack([table.vector(p.alt_word) for p in catalog.pairs])
    return batch_pair_scores(pun, alt, ctx)


def rank_unsupervised(context: ContextSpec, catalog: PairCatalog,
                      table: EmbeddingTable, k: int) -> list[ScoredPair]:
    """Rank catalog pairs by ascending distance; score is the negated distance.

    Ties break lexicographically on (pun_word, alt_word). Returns
    min(k, |catalog|) entries with ranks 1..k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not len(catalog):
        raise ValueError("empty catalog")
    distances = catalog_distances(context, catalog, table)
    order = sorted(range(len(catalog)),
                   key=lambda i: (distances[i], catalog.pairs[i].key))
    return [
        ScoredPair(pair=catalog.pairs[i], score=-float(distances[i]),
                   rank=rank, method="unsupervised")
        for rank, i in enumerate(order[:k], start=1)
    ]


class ClassifierClient(Protocol):
    def classify(self, premise: str, hypothesis: str) -> ClassifierVerdict: ...


def pair_hypothesis(pair: PunPair, with_glosses: bool = False) -> str:
    """The sentence-2 string sent to the compatibility classifier."""
    base = f"{pair.pun_word} / {pair.alt_word}"
    if with_glosses:
        base += (f", {pair.pun_word} means {pair.pun_gloss} "
                 f"and {pair.alt_word} means {pair.alt_gloss}")
    return base


def classify_then_rank(context: ContextSpec, catalog: PairCatalog,
                       client: ClassifierClient, k: int,
                       with_glosses: bool = False,
                       parallelism: int = DEFAULT_PARALLELISM) -> list[ScoredPair]:
    """Keep pairs the classifier labels suitable, ranked by confidence.

    One classifier call per catalog pair; calls may run concurrently but the
    result order is deterministic (confidence descending, then lexicographic).
    Fewer than k suitable pairs is not an error; the shortfall is logged.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    premise = context.joined(", ")

    def ask(pair: PunPair) -> ClassifierVerdict:
        verdict = client.classify(premise, pair_hypothesis(pair, with_glosses))
        if not isinstance(verdict, ClassifierVerdict):
            raise BackendError(
                f"malformed verdict for pair {pair.label_string()}: {verdict!r}")
        return verdict

    if parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            verdicts = list(pool.map(ask, catalog.pairs))
    else:
        verdicts = [ask(p) for p in catalog.pairs]

    suitable = [(pair, v.confidence) for pair, v in zip(catalog.pairs, verdicts)
                if v.label == "suitable"]
    suitable.sort(key=lambda pv: (-pv[1], pv[0].key))
    if len(suitable) < k:
        log.warning("classifier shortfall: only %d suitable pairs for k=%d",
                    len(suitable), k)
    return [
        ScoredPair(pair=pair, score=conf, rank=rank, method="classifier")
        for rank, (pair, conf) in enumerate(suitable[:k], start=1)
    ]
