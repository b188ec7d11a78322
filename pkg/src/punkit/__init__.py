"""punkit: context-situated pun generation toolkit.

Pipeline: extract context keywords, retrieve compatible pun pairs from a
fixed catalog, build generation prompts, call a pluggable text-generation
backend, and evaluate the results.
"""

from .corpus import (CompatibilityDataset, build_pair_catalog,
                     load_compatibility_file, parse_semeval,
                     save_compatibility_file, split_dataset)
from .embeddings import EmbeddingTable, load_embeddings
from .errors import BackendError, ParseError, PunkitError, ValidationError
from .generation import generate, run_pipeline
from .judgments import export_human_eval, import_judgments
from .keywords import (PosLexicon, ScoredPhrase, build_context, lemmatize,
                       pos_filter, rake_extract)
from .metrics import (classifier_metrics, fleiss_kappa, incorporation_rate,
                      select_human_baseline, tp_at_n)
from .mining import mine_pretrain_corpus
from .prompts import (build_ambipun_prompt, build_pretrain_prompt,
                      build_pun_prompt)
from .retrieval import classify_then_rank, pair_distance, rank_unsupervised
from .scoring import KERNEL_BACKEND
from .types import (ClassifierVerdict, CompatibilityRecord, ContextSpec,
                    DecodeParams, GenerationRecord, PairCatalog, PromptRecord,
                    PunPair, ScoredPair)

__version__ = "0.1.0"

__all__ = [
    "BackendError", "ClassifierVerdict", "CompatibilityDataset",
    "CompatibilityRecord", "ContextSpec", "DecodeParams", "EmbeddingTable",
    "GenerationRecord", "KERNEL_BACKEND", "PairCatalog", "ParseError",
    "PosLexicon", "PromptRecord", "PunPair", "PunkitError", "ScoredPair",
    "ScoredPhrase", "ValidationError", "build_ambipun_prompt",
    "build_context", "build_pair_catalog", "build_pretrain_prompt",
    "build_pun_prompt", "classifier_metrics", "classify_then_rank",
    "export_human_eval", "fleiss_kappa", "generate", "import_judgments",
    "incorporation_rate", "lemmatize", "load_compatibility_file",
    "load_embeddings", "mine_pretrain_corpus", "pair_distance", "parse_semeval",
    "pos_filter", "rake_extract", "rank_unsupervised", "run_pipeline",
    "save_compatibility_file", "select_human_baseline", "split_dataset",
    "tp_at_n",
]
