"""Dataset ingestion: compatibility records, pair lexicons, pun corpora.

File formats are documented in ``docs/data-formats.md``. The compatibility
file is UTF-8 TSV with a fixed header; context keywords are joined by ``|``
inside their field. Parsing is single-pass and pure; loaded datasets are
immutable and safe for concurrent reads.
"""

from __future__ import annotations

import hashlib
import logging
import random
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union
from xml.etree import ElementTree

from .errors import ParseError, ValidationError
from .types import CompatibilityRecord, ContextSpec, PairCatalog, PunPair, SPLITS

log = logging.getLogger(__name__)

RECORD_COLUMNS = (
    "context_keywords", "pun_word", "alt_word", "pun_gloss", "alt_gloss",
    "label", "human_pun", "difficulty", "split",
)
LEXICON_COLUMNS = ("pun_word", "alt_word", "pun_gloss", "alt_gloss")

DEFAULT_SPLIT_RATIOS = (0.7, 0.1, 0.2)


@dataclass(frozen=True)
class CompatibilityDataset:
    """Loaded compatibility records plus ingest bookkeeping."""

    records: tuple[CompatibilityRecord, ...]
    content_hash: str
    path: Optional[str] = None

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def label_counts(self) -> dict[int, int]:
        counts = {0: 0, 1: 0}
        for r in self.records:
            counts[r.label] += 1
        return counts

    @property
    def split_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for r in self.records:
            key = r.split if r.split is not None else "unsplit"
            counts[key] = counts.get(key, 0) + 1
        return counts

    def subset(self, split: str) -> tuple[CompatibilityRecord, ...]:
        return tuple(r for r in self.records if r.split == split)

    def contexts(self, split: Optional[str] = None) -> list[ContextSpec]:
        """Unique contexts in first-occurrence order."""
        seen = {}
        for r in self.records:
            if split is not None and r.split != split:
                continue
            seen.setdefault(r.context.key, r.context)
        return list(seen.values())


def _clean_field(value: str) -> str:
    return value.strip()


def _parse_record(fields: dict[str, str], lineno: int) -> CompatibilityRecord:
    keywords = tuple(k.strip() for k in fields["context_keywords"].split("|")
                     if k.strip())
    if not keywords:
        raise ValidationError("no context keywords", field="context_keywords",
                              line=lineno)
    label_text = fields["label"]
    if label_text not in ("0", "1"):
        raise ValidationError(f"label must be 0 or 1, got {label_text!r}",
                              field="label", line=lineno)
    difficulty = None
    if fields["difficulty"]:
        try:
            difficulty = int(fields["difficulty"])
        except ValueError:
            raise ValidationError(f"difficulty not an integer: "
                                  f"{fields['difficulty']!r}",
                                  field="difficulty", line=lineno)
    try:
        return CompatibilityRecord(
            context=ContextSpec(keywords),
            pair=PunPair(fields["pun_word"], fields["alt_word"],
                         fields["pun_gloss"], fields["alt_gloss"]),
            label=int(label_text),
            human_pun=fields["human_pun"] or None,
            difficulty=difficulty,
            split=fields["split"] or None,
        )
    except ValidationError as err:
        raise ValidationError(str(err), line=lineno) from err


def load_compatibility_file(path) -> CompatibilityDataset:
    """Load and validate a compatibility-record TSV file."""
    path = Path(path)
    raw = path.read_bytes()
    lines = raw.decode("utf-8").splitlines()
    if not lines:
        raise ParseError(f"empty file: {path}")
    header = tuple(lines[0].split("\t"))
    if header != RECORD_COLUMNS:
        raise ParseError(f"bad header {header!r}; expected {RECORD_COLUMNS!r}",
                         record=1)
    records = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cells = line.split("\t")
        if len(cells) != len(RECORD_COLUMNS):
            raise ParseError(
                f"expected {len(RECORD_COLUMNS)} fields, got {len(cells)}",
                record=lineno)
        fields = {col: _clean_field(cell)
                  for col, cell in zip(RECORD_COLUMNS, cells)}
        records.append(_parse_record(fields, lineno))
    dataset = CompatibilityDataset(
        records=tuple(records),
        content_hash=hashlib.sha256(raw).hexdigest()[:16],
        path=str(path),
    )
    log.info("loaded %d records from %s (labels %s, splits %s)",
             len(dataset), path, dataset.label_counts, dataset.split_counts)
    return dataset


def record_to_row(record: CompatibilityRecord) -> str:
    cells = [
        "|".join(record.context.keywords),
        record.pair.pun_word,
        record.pair.alt_word,
        record.pair.pun_gloss,
        record.pair.alt_gloss,
        str(record.label),
        record.human_pun or "",
        "" if record.difficulty is None else str(record.difficulty),
        record.split or "",
    ]
    for col, cell in zip(RECORD_COLUMNS, cells):
        if "\t" in cell or "\n" in cell:
            raise ValidationError("field contains tab/newline", field=col)
    if any("|" in kw for kw in record.context.keywords):
        raise ValidationError("keyword contains '|'", field="context_keywords")
    return "\t".join(cells)


def save_compatibility_file(records: Iterable[CompatibilityRecord], path) -> None:
    lines = ["\t".join(RECORD_COLUMNS)]
    lines.extend(record_to_row(r) for r in records)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# Pair catalog

def _pairs_from_lexicon_file(path) -> list[PunPair]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise ParseError(f"empty lexicon file: {path}")
    header = tuple(lines[0].split("\t"))
    if header != LEXICON_COLUMNS:
        raise ParseError(f"bad lexicon header {header!r}", record=1)
    pairs = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cells = line.split("\t")
        if len(cells) != 4:
            raise ParseError(f"expected 4 fields, got {len(cells)}",
                             record=lineno)
        try:
            pairs.append(PunPair(*[c.strip() for c in cells]))
        except ValidationError as err:
            raise ValidationError(str(err), line=lineno) from err
    return pairs


def build_pair_catalog(
        source: Union[str, Path, Iterable]) -> PairCatalog:
    """Build the fixed candidate catalog from records, pairs, or a lexicon file.

    Entries are deduplicated on the full (pun, alt, pun_gloss, alt_gloss)
    tuple; ordering is first occurrence. The id index maps (pun, alt) to the
    first entry carrying those words.
    """
    if isinstance(source, (str, Path)):
        pairs = _pairs_from_lexicon_file(source)
    else:
        pairs = []
        for item in source:
            pairs.append(item.pair if isinstance(item, CompatibilityRecord)
                         else item)
    unique: list[PunPair] = []
    seen = set()
    id_index: dict[tuple[str, str], int] = {}
    for pair in pairs:
        full_key = (pair.pun_word, pair.alt_word, pair.pun_gloss, pair.alt_gloss)
        if full_key in seen:
            continue
        seen.add(full_key)
        unique.append(pair)
        id_index.setdefault(pair.key, len(unique) - 1)
    if not unique:
        raise ValidationError("no valid pun pairs in catalog source")
    log.info("catalog built: %d pairs", len(unique))
    return PairCatalog(pairs=tuple(unique), id_index=id_index)


def save_pair_lexicon(catalog: PairCatalog, path) -> None:
    lines = ["\t".join(LEXICON_COLUMNS)]
    for p in catalog.pairs:
        lines.append("\t".join([p.pun_word, p.alt_word, p.pun_gloss, p.alt_gloss]))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def validate_against_catalog(records: Sequence[CompatibilityRecord],
                             catalog: PairCatalog) -> None:
    """Every record's pair must resolve in the catalog with identical glosses."""
    for i, record in enumerate(records):
        found = catalog.get(*record.pair.key)
        if found is None:
            raise ValidationError(
                f"pair {record.pair.label_string()} not in catalog", line=i)
        if (found.pun_gloss, found.alt_gloss) != (record.pair.pun_gloss,
                                                  record.pair.alt_gloss):
            raise ValidationError(
                f"gloss mismatch for {record.pair.label_string()}", line=i)


# ---------------------------------------------------------------------------
# Dataset splitting

def largest_remainder_sizes(n: int, ratios: Sequence[float]) -> list[int]:
    """Integer split sizes: floor targets, then leftovers to largest remainders."""
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise ValueError(f"ratios must sum to 1, got {sum(ratios)}")
    exact = [n * r for r in ratios]
    sizes = [int(x) for x in exact]
    order = sorted(range(len(ratios)), key=lambda i: exact[i] - sizes[i],
                   reverse=True)
    for i in order[:n - sum(sizes)]:
        sizes[i] += 1
    return sizes


def split_dataset(records: Sequence[CompatibilityRecord],
                  ratios: Sequence[float] = DEFAULT_SPLIT_RATIOS,
                  seed: int = 0,
                  force: bool = False) -> list[CompatibilityRecord]:
    """Assign train/dev/test splits with largest-remainder sizes.

    Deterministic for a given seed. Records that already carry a split are
    ground truth; reassigning them requires ``force``.
    """
    if len(ratios) != len(SPLITS):
        raise ValueError(f"need {len(SPLITS)} ratios")
    already = sum(1 for r in records if r.split is not None)
    if already and not force:
        raise ValidationError(
            f"{already} records already carry a split; pass force to reassign")
    sizes = largest_remainder_sizes(len(records), ratios)
    indices = list(range(len(records)))
    random.Random(seed).shuffle(indices)
    assignment = {}
    start = 0
    for split, size in zip(SPLITS, sizes):
        for idx in indices[start:start + size]:
            assignment[idx] = split
        start += size
    return [replace(r, split=assignment[i]) for i, r in enumerate(records)]


# ---------------------------------------------------------------------------
# Annotated pun corpus (SemEval-style XML + gold senses)

@dataclass(frozen=True)
class PunEntry:
    """One annotated pun: surface text plus its resolved pun pair."""

    text: str
    pair: PunPair
    pun_word_id: str


@dataclass(frozen=True)
class PunCorpusResult:
    entries: tuple[PunEntry, ...]
    skipped: int


def load_gloss_table(path) -> dict[str, str]:
    """Two-column file: sense_key TAB gloss."""
    table = {}
    for lineno, line in enumerate(
            Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise ParseError("expected `sense_key TAB gloss`", record=lineno)
        table[parts[0].strip()] = parts[1].strip()
    return table


def _sense_lemma(sense_key: str) -> str:
    return sense_key.split("%", 1)[0].replace("_", "-").lower()


def parse_semeval(text_file: bytes, gold_file: bytes,
                  gloss_table: dict[str, str]) -> PunCorpusResult:
    """Parse pun-text XML plus a gold sense file into pun entries.

    The gold file maps a word position to two sense keys (``;``-joined
    alternates allowed; the first is used). The pun and alternative words are
    the lemmas of the two keys; glosses resolve through ``gloss_table``.
    Puns lacking a gold row or a resolvable gloss are skipped and counted.
    """
    try:
        root = ElementTree.fromstring(text_file.decode("utf-8"))
    except ElementTree.ParseError as err:
        raise ParseError(f"bad pun-text XML: {err}") from err

    texts: dict[str, tuple[str, dict[str, str]]] = {}
    for text_el in root.iter("text"):
        text_id = text_el.get("id")
        if not text_id:
            raise ParseError("text element without id")
        words = {}
        tokens = []
        for word_el in text_el.iter("word"):
            wid = word_el.get("id")
            token = (word_el.text or "").strip()
            if not wid:
                raise ParseError(f"word without id in text {text_id}")
            words[wid] = token
            tokens.append(token)
        texts[text_id] = (" ".join(tokens), words)

    entries = []
    skipped = 0
    for lineno, line in enumerate(gold_file.decode("utf-8").splitlines(),
                                  start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ParseError(f"expected `word_id TAB key TAB key`, "
                             f"got {len(parts)} fields", record=lineno)
        word_id, pun_keys, alt_keys = (p.strip() for p in parts)
        text_id = word_id.rsplit("_", 1)[0]
        if text_id not in texts:
            raise ParseError(f"gold row references unknown text {text_id!r}",
                             record=lineno)
        pun_key = pun_keys.split(";")[0].strip()
        alt_key = alt_keys.split(";")[0].strip()
        pun_gloss = gloss_table.get(pun_key)
        alt_gloss = gloss_table.get(alt_key)
        if pun_gloss is None or alt_gloss is None:
            missing = pun_key if pun_gloss is None else alt_key
            log.warning("skipping %s: unresolvable sense key %r",
                        word_id, missing)
            skipped += 1
            continue
        pair = PunPair(
            pun_word=_sense_lemma(pun_key), alt_word=_sense_lemma(alt_key),
            pun_gloss=pun_gloss, alt_gloss=alt_gloss,
            pun_sense_key=pun_key, alt_sense_key=alt_key,
        )
        entries.append(PunEntry(text=texts[text_id][0], pair=pair,
                                pun_word_id=word_id))
    if skipped:
        log.info("parsed %d pun entries, skipped %d", len(entries), skipped)
    return PunCorpusResult(entries=tuple(entries), skipped=skipped)
