"""Word-embedding file parsing and lookup.

The on-disk format is one entry per line: ``token SPACE float ... float``.
Dimension is inferred from the first line; deviating lines are skipped and
counted rather than aborting a multi-hundred-megabyte load.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .errors import ParseError
from .types import ContextSpec

log = logging.getLogger(__name__)


class EmbeddingTable:
    """Immutable token -> vector map backed by one dense matrix."""

    def __init__(self, tokens: Sequence[str], matrix: np.ndarray,
                 skipped_lines: int = 0):
        if matrix.ndim != 2 or matrix.shape[0] != len(tokens):
            raise ValueError("matrix shape does not match token count")
        if not len(tokens):
            raise ParseError("embedding table has empty vocabulary")
        self._index = {t: i for i, t in enumerate(tokens)}
        self._matrix = np.ascontiguousarray(matrix, dtype=np.float64)
        self._matrix.setflags(write=False)
        self.skipped_lines = skipped_lines
        # Per-dimension mean doubles as the out-of-vocabulary fallback.
        self._mean = self._matrix.mean(axis=0)
        self._mean.setflags(write=False)

    @property
    def dim(self) -> int:
        return self._matrix.shape[1]

    @property
    def mean_vector(self) -> np.ndarray:
        return self._mean

    def __len__(self):
        return len(self._index)

    def __contains__(self, token: str) -> bool:
        return token in self._index

    def vector(self, token: str) -> np.ndarray:
        """Vector for ``token``; OOV tokens get the per-dimension mean."""
        idx = self._index.get(token)
        return self._mean if idx is None else self._matrix[idx]

    def phrase_vector(self, phrase: str) -> np.ndarray:
        """Arithmetic mean of the in-vocabulary token vectors of a phrase.

        A phrase with no in-vocabulary token falls back to the mean vector.
        """
        rows = [self._index[t] for t in phrase.split() if t in self._index]
        if not rows:
            return self._mean
        if len(rows) == 1:
            return self._matrix[rows[0]]
        return self._matrix[rows].mean(axis=0)

    def context_matrix(self, context: ContextSpec) -> np.ndarray:
        return np.ascontiguousarray(
            np.stack([self.phrase_vector(kw) for kw in context.keywords]))


def load_embeddings(path, vocabulary: Optional[set[str]] = None) -> EmbeddingTable:
    """Parse an embedding file.

    ``vocabulary``, when given, restricts loading to the listed tokens (plus
    dimension bookkeeping), which keeps memory sane on large pretrained files.
    """
    path = Path(path)
    tokens: list[str] = []
    rows: list[np.ndarray] = []
    seen: set[str] = set()
    dim = None
    skipped = 0
    with path.open("r", encoding="utf-8", errors="replace") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.rstrip("\n").split(" ")
            if len(parts) < 2 or not parts[0]:
                if line.strip():
                    skipped += 1
                continue
            if dim is None:
                dim = len(parts) - 1
                if dim < 1:
                    raise ParseError("first line has no vector components",
                                     record=lineno)
            if len(parts) - 1 != dim:
                skipped += 1
                continue
            token = parts[0].lower()
            if token in seen:
                skipped += 1
                continue
            if vocabulary is not None and token not in vocabulary:
                continue
            try:
                vec = np.array(parts[1:], dtype=np.float64)
            except ValueError:
                skipped += 1
                continue
            seen.add(token)
            tokens.append(token)
            rows.append(vec)
    if dim is None:
        raise ParseError(f"empty embedding file: {path}")
    if not tokens:
        raise ParseError(f"no usable vectors in {path}")
    if skipped:
        log.warning("skipped %d malformed/duplicate lines in %s", skipped, path)
    return EmbeddingTable(tokens, np.vstack(rows), skipped_lines=skipped)
