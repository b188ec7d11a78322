"""Metric report assembly with stable serialization and config hashing."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .errors import ValidationError
from .generation import PipelineRun
from .judgments import SuccessReport
from .metrics import incorporation_rate


def config_hash(config: Mapping) -> str:
    """Stable short hash of a configuration mapping."""
    canonical = json.dumps(config, sort_keys=True, separators=(",", ":"),
                           default=str)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class MetricsReport:
    metrics: dict[str, float]
    counts: dict[str, int]
    provenance: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        for name, value in self.metrics.items():
            if name.endswith("_pct") and not 0.0 <= value <= 100.0:
                raise ValidationError(f"rate metric {name} outside [0, 100]:"
                                      f" {value}", field=name)
        for name, value in self.counts.items():
            if value < 0:
                raise ValidationError(f"negative count {name}", field=name)

    def to_json(self) -> str:
        return json.dumps(
            {"metrics": self.metrics, "counts": self.counts,
             "provenance": self.provenance},
            sort_keys=True, indent=2)

    def render_table(self) -> str:
        width = max(len(k) for k in list(self.metrics) + list(self.counts))
        lines = []
        for name in sorted(self.metrics):
            lines.append(f"{name:<{width}}  {self.metrics[name]:>8.2f}")
        for name in sorted(self.counts):
            lines.append(f"{name:<{width}}  {self.counts[name]:>8d}")
        for name in sorted(self.provenance):
            lines.append(f"# {name}: {self.provenance[name]}")
        return "\n".join(lines)


def end_to_end_report(runs: Sequence[PipelineRun],
                      judgments: Optional[SuccessReport] = None,
                      provenance: Optional[Mapping[str, str]] = None,
                      label: str = "") -> MetricsReport:
    """Incorporation metrics (and success, when judged) over pipeline runs."""
    records = [g for run in runs for g in run.generations]
    if not records:
        raise ValidationError("no generations across runs")
    prefix = f"{label}_" if label else ""
    ctx = incorporation_rate(records, "context")
    pw = incorporation_rate(records, "pun_word")
    metrics = {
        f"{prefix}context_incorporation_pct": ctx.rate,
        f"{prefix}context_keyword_micro_pct": ctx.keyword_micro_rate,
        f"{prefix}pun_word_incorporation_pct": pw.rate,
    }
    counts = {
        f"{prefix}contexts": len(runs),
        f"{prefix}generations": len(records),
        f"{prefix}skipped_pairs": sum(len(r.skipped_pairs) for r in runs),
    }
    if judgments is not None:
        metrics[f"{prefix}success_pct"] = judgments.rate
        counts[f"{prefix}judged_generations"] = judgments.generations
        counts[f"{prefix}judgments"] = judgments.judgments
    return MetricsReport(metrics=metrics, counts=counts,
                         provenance=dict(provenance or {}))


def merge_reports(reports: Sequence[MetricsReport],
                  provenance: Optional[Mapping[str, str]] = None) -> MetricsReport:
    metrics: dict[str, float] = {}
    counts: dict[str, int] = {}
    for rep in reports:
        for k, v in rep.metrics.items():
            if k in metrics:
                raise ValidationError(f"duplicate metric {k} while merging")
            metrics[k] = v
        for k, v in rep.counts.items():
            if k in counts:
                raise ValidationError(f"duplicate count {k} while merging")
            counts[k] = v
    merged_prov: dict[str, str] = {}
    for rep in reports:
        merged_prov.update(rep.provenance)
    merged_prov.update(provenance or {})
    return MetricsReport(metrics=metrics, counts=counts, provenance=merged_prov)
