"""Human-evaluation round-trip: judging sheets out, judgments back in.

Sheets are UTF-8 CSV with a fixed header. Export writes one row per
generation with an empty judge/success; judges fill both and the file (or an
appended feedback log in the same format) goes back through the importer.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import ValidationError
from .types import GenerationRecord

SHEET_COLUMNS = ("generation_id", "judge_id", "context", "pun_word",
                 "alt_word", "pun_gloss", "alt_gloss", "text", "success")


@dataclass(frozen=True)
class Judgment:
    generation_id: str
    judge_id: str
    success: int

    def __post_init__(self):
        if not self.generation_id:
            raise ValidationError("empty generation_id", field="generation_id")
        if not self.judge_id:
            raise ValidationError("empty judge_id", field="judge_id")
        if self.success not in (0, 1):
            raise ValidationError(f"success must be 0/1, got {self.success!r}",
                                  field="success")


@dataclass(frozen=True)
class SuccessReport:
    rate: float               # percent of generations with a success majority
    successes: int
    generations: int
    judgments: int

    def __float__(self):
        return self.rate


def sheet_row(record: GenerationRecord, judge_id: str = "",
              success: str = "") -> list[str]:
    return [
        record.generation_id, judge_id, record.context.joined("|"),
        record.pair.pun_word, record.pair.alt_word,
        record.pair.pun_gloss, record.pair.alt_gloss, record.text, success,
    ]


def export_human_eval(records: Sequence[GenerationRecord], path) -> None:
    """Write a judging sheet: metadata filled in, judge/success left blank."""
    if not records:
        raise ValidationError("no generations to export")
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SHEET_COLUMNS)
        for rec in records:
            writer.writerow(sheet_row(rec))


def parse_judgment_rows(rows: Iterable[dict]) -> list[Judgment]:
    judgments = []
    seen = set()
    for i, row in enumerate(rows, start=2):
        gen_id = (row.get("generation_id") or "").strip()
        judge = (row.get("judge_id") or "").strip()
        raw = (row.get("success") or "").strip()
        if not raw and not judge:
            continue  # unjudged sheet row
        if raw not in ("0", "1"):
            raise ValidationError(f"success must be 0 or 1, got {raw!r}",
                                  field="success", line=i)
        judgment = Judgment(gen_id, judge, int(raw))
        key = (judgment.generation_id, judgment.judge_id)
        if key in seen:
            raise ValidationError(
                f"duplicate judgment for {key}", field="generation_id", line=i)
        seen.add(key)
        judgments.append(judgment)
    return judgments


def import_judgments(path, known_ids: Optional[set[str]] = None) -> SuccessReport:
    """Read judged rows, majority-vote per generation, return the success rate.

    A generation succeeds when strictly more than half of its votes are 1.
    Unknown generation ids are an error when ``known_ids`` is supplied.
    """
    with Path(path).open("r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or tuple(reader.fieldnames) != SHEET_COLUMNS:
            raise ValidationError(
                f"bad sheet header {reader.fieldnames!r}", line=1)
        judgments = parse_judgment_rows(reader)
    if not judgments:
        raise ValidationError(f"no judged rows in {path}")
    if known_ids is not None:
        for j in judgments:
            if j.generation_id not in known_ids:
                raise ValidationError(
                    f"unknown generation_id {j.generation_id!r}",
                    field="generation_id")
    votes: dict[str, list[int]] = {}
    for j in judgments:
        votes.setdefault(j.generation_id, []).append(j.success)
    successes = sum(1 for v in votes.values() if sum(v) * 2 > len(v))
    return SuccessReport(
        rate=100.0 * successes / len(votes),
        successes=successes, generations=len(votes), judgments=len(judgments),
    )
