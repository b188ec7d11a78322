"""Application configuration: INI file plus programmatic defaults.

Every path named in the config must exist at load time; retrieval and decode
knobs are validated once here so the CLI and server can trust them.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import ValidationError
from .reporting import config_hash
from .types import DecodeParams


@dataclass(frozen=True)
class AppConfig:
    records_path: Path
    pair_lexicon_path: Path
    embeddings_path: Path
    pos_lexicon_path: Optional[Path] = None
    stopwords_path: Optional[Path] = None
    gloss_table_path: Optional[Path] = None
    feedback_log: Path = Path("feedback_log.csv")
    classifier_url: str = ""
    generator_backend: str = "stub:template"
    retrieval_method: str = "unsupervised"
    k: int = 5
    decode: DecodeParams = field(default_factory=DecodeParams)
    host: str = "127.0.0.1"
    port: int = 8808
    static_dir: Optional[Path] = None
    seed: int = 13

    def __post_init__(self):
        if self.k < 1:
            raise ValidationError("k must be >= 1", field="k")
        if self.retrieval_method not in ("unsupervised", "classifier"):
            raise ValidationError(
                f"unknown retrieval method {self.retrieval_method!r}",
                field="retrieval_method")
        for name in ("records_path", "pair_lexicon_path", "embeddings_path",
                     "pos_lexicon_path", "stopwords_path", "gloss_table_path"):
            path = getattr(self, name)
            if path is not None and not Path(path).exists():
                raise ValidationError(f"missing file: {path}", field=name)

    def as_dict(self) -> dict:
        return {
            "records": str(self.records_path),
            "pair_lexicon": str(self.pair_lexicon_path),
            "embeddings": str(self.embeddings_path),
            "pos_lexicon": str(self.pos_lexicon_path),
            "stopwords": str(self.stopwords_path),
            "classifier_url": self.classifier_url,
            "generator_backend": self.generator_backend,
            "retrieval_method": self.retrieval_method,
            "k": self.k,
            "beam_size": self.decode.beam_size,
            "max_target_len": self.decode.max_target_len,
            "seed": self.seed,
        }

    @property
    def hash(self) -> str:
        return config_hash(self.as_dict())


def default_config(data_dir="data", **overrides) -> AppConfig:
    data = Path(data_dir)
    values = dict(
        records_path=data / "compat_records.tsv",
        pair_lexicon_path=data / "pair_lexicon.tsv",
        embeddings_path=data / "embeddings_300d.txt",
        pos_lexicon_path=(data / "pos_lexicon.tsv"
                          if (data / "pos_lexicon.tsv").exists() else None),
        gloss_table_path=(data / "gloss_table.tsv"
                          if (data / "gloss_table.tsv").exists() else None),
    )
    values.update(overrides)
    return AppConfig(**values)


def load_config(path) -> AppConfig:
    """Read the documented INI format (see docs/data-formats.md)."""
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ValidationError(f"cannot read config file {path}")
    base = Path(path).resolve().parent

    def path_of(section, option, fallback=None):
        raw = parser.get(section, option, fallback=None)
        if raw is None or not raw.strip():
            return fallback
        candidate = Path(raw.strip())
        return candidate if candidate.is_absolute() else base / candidate

    decode = DecodeParams(
        beam_size=parser.getint("decode", "beam_size", fallback=2),
        max_target_len=parser.getint("decode", "max_target_len", fallback=256),
    )
    static = path_of("server", "static_dir")
    return AppConfig(
        records_path=path_of("paths", "records"),
        pair_lexicon_path=path_of("paths", "pair_lexicon"),
        embeddings_path=path_of("paths", "embeddings"),
        pos_lexicon_path=path_of("paths", "pos_lexicon"),
        stopwords_path=path_of("paths", "stopwords"),
        gloss_table_path=path_of("paths", "gloss_table"),
        feedback_log=path_of("paths", "feedback_log",
                             fallback=base / "feedback_log.csv"),
        classifier_url=parser.get("backends", "classifier_url", fallback=""),
        generator_backend=parser.get("backends", "generator",
                                     fallback="stub:template"),
        retrieval_method=parser.get("retrieval", "method",
                                    fallback="unsupervised"),
        k=parser.getint("retrieval", "k", fallback=5),
        decode=decode,
        host=parser.get("server", "host", fallback="127.0.0.1"),
        port=parser.getint("server", "port", fallback=8808),
        static_dir=static,
        seed=parser.getint("misc", "seed", fallback=13),
    )
