"""Crowdsourced-rating evaluation of occupation codes.

Raters score predicted occupations 1 (totally inaccurate) to 4 (totally
accurate). Per item, ratings aggregate as a mean weighted by each worker's
spot-checked accuracy; aggregates binarize at a threshold of 3 (>= 3 is
correct) and precision is correct / total. Two code sources are compared with
a two-proportion z-test, and rater consistency is summarized by
Krippendorff's alpha over all pairable values.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import DataError
from .taxonomy import Taxonomy

RATING_SOURCES = ("lc_soc", "fewsoc", "concordant")
DEFAULT_BINARIZE_THRESHOLD = 3.0


@dataclass(frozen=True)
class Rating:
    hit_id: str
    worker_id: str
    value: int
    label_source: str

    def __post_init__(self):
        if self.value not in (1, 2, 3, 4):
            raise ValueError(f"rating value must be 1..4, got {self.value}")
        if self.label_source not in RATING_SOURCES:
            raise ValueError(f"unknown label source {self.label_source!r}")


def load_ratings(path: str | Path) -> list[Rating]:
    """Load ``hit_id,worker_id,value,source`` rows."""
    path = Path(path)
    out = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(line for line in fh if not line.startswith("#"))
        required = {"hit_id", "worker_id", "value", "source"}
        if reader.fieldnames is None or not required <= set(reader.fieldnames):
            raise DataError(f"{path}: ratings file needs columns {sorted(required)}")
        for lineno, row in enumerate(reader, start=2):
            try:
                out.append(
                    Rating(
                        hit_id=row["hit_id"],
                        worker_id=row["worker_id"],
                        value=int(row["value"]),
                        label_source=row["source"],
                    )
                )
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: {exc}") from exc
    return out


def load_worker_accuracies(path: str | Path) -> dict[str, float]:
    """Load ``worker_id,accuracy`` rows; accuracies live in [0, 1]."""
    path = Path(path)
    out: dict[str, float] = {}
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(line for line in fh if not line.startswith("#"))
        if reader.fieldnames is None or not {"worker_id", "accuracy"} <= set(reader.fieldnames):
            raise DataError(f"{path}: accuracy file needs worker_id and accuracy columns")
        for lineno, row in enumerate(reader, start=2):
            try:
                acc = float(row["accuracy"])
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: {exc}") from exc
            if not 0.0 <= acc <= 1.0:
                raise DataError(f"{path}:{lineno}: accuracy {acc} outside [0,1]")
            out[row["worker_id"]] = acc
    return out


def aggregate_rating(values: Sequence[float], accuracies: Sequence[float]) -> float:
    """Accuracy-weighted mean rating; all-zero weights fall back to the plain mean."""
    if not values:
        raise ValueError("no ratings to aggregate")
    if len(values) != len(accuracies):
        raise ValueError("values and accuracies differ in length")
    total_weight = sum(accuracies)
    if total_weight == 0:
        return sum(values) / len(values)
    return sum(a * v for a, v in zip(accuracies, values)) / total_weight


def binarize(aggregate: float, threshold: float = DEFAULT_BINARIZE_THRESHOLD) -> bool:
    """Correct iff the aggregate reaches the threshold (3 or greater)."""
    return aggregate >= threshold


def precision(flags: Iterable[bool]) -> float:
    flags = list(flags)
    if not flags:
        raise ValueError("precision over an empty set")
    return sum(flags) / len(flags)


@dataclass(frozen=True)
class ZTestResult:
    z: float
    p_two_sided: float
    degenerate: bool = False


def two_proportion_ztest(
    p1: float, n1: int, p2: float, n2: int, pooled: bool = False
) -> ZTestResult:
    """Two-sided z-test for a difference of proportions.

    The default standard error is unpooled, sqrt(p1 q1 / n1 + p2 q2 / n2);
    ``pooled=True`` uses the pooled estimate
    p = (p1 n1 + p2 n2) / (n1 + n2) with sqrt(p(1-p)(1/n1 + 1/n2)). A zero
    standard error (all successes or all failures) is degenerate and reported
    as such rather than raising.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("sample sizes must be >= 1")
    for name, value in (("p1", p1), ("p2", p2)):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"{name} must be in [0,1], got {value}")
    if pooled:
        pbar = (p1 * n1 + p2 * n2) / (n1 + n2)
        variance = pbar * (1.0 - pbar) * (1.0 / n1 + 1.0 / n2)
    else:
        variance = p1 * (1.0 - p1) / n1 + p2 * (1.0 - p2) / n2
    if variance <= 0.0:
        return ZTestResult(z=float("nan"), p_two_sided=float("nan"), degenerate=True)
    z = (p1 - p2) / math.sqrt(variance)
    return ZTestResult(z=z, p_two_sided=math.erfc(abs(z) / math.sqrt(2.0)))


def _ordinal_distance_sq(c: float, k: float, freq: Mapping[float, int]) -> float:
    lo, hi = min(c, k), max(c, k)
    total = sum(count for value, count in freq.items() if lo <= value <= hi)
    return (total - (freq[c] + freq[k]) / 2.0) ** 2


def krippendorff_alpha(
    items: Iterable[Sequence[float]], metric: str = "interval"
) -> float:
    """Chance-corrected agreement over items' rating multisets.

    alpha = 1 - observed/expected disagreement in the coincidence
    formulation; items with fewer than two ratings are excluded. Metrics:
    ``nominal`` (mismatch), ``interval`` (squared difference, the default for
    the graded 1-4 scale), ``ordinal`` (squared cumulative-frequency
    distance).
    """
    units = [list(vals) for vals in items if len(vals) >= 2]
    n_pairable = sum(len(u) for u in units)
    if not units or n_pairable < 2:
        raise ValueError("no pairable values")

    freq: dict[float, int] = {}
    for unit in units:
        for v in unit:
            freq[v] = freq.get(v, 0) + 1
    values = sorted(freq)

    if metric == "nominal":
        dist = {(c, k): float(c != k) for c in values for k in values}
    elif metric == "interval":
        dist = {(c, k): (c - k) ** 2 for c in values for k in values}
    elif metric == "ordinal":
        dist = {(c, k): _ordinal_distance_sq(c, k, freq) for c in values for k in values}
    else:
        raise ValueError(f"unknown metric {metric!r}")

    observed = 0.0
    for unit in units:
        unit_counts: dict[float, int] = {}
        for v in unit:
            unit_counts[v] = unit_counts.get(v, 0) + 1
        pair_sum = sum(
            unit_counts[c] * unit_counts[k] * dist[(c, k)]
            for c in unit_counts
            for k in unit_counts
        )
        observed += pair_sum / (len(unit) - 1)
    observed /= n_pairable

    expected = sum(
        freq[c] * freq[k] * dist[(c, k)] for c in values for k in values
    ) / (n_pairable * (n_pairable - 1))

    if expected == 0.0:
        return 1.0
    return 1.0 - observed / expected


@dataclass(frozen=True)
class ClassifiedItem:
    """One classified job with both code sources, feeding HIT construction."""

    title: str
    company: str
    lc_soc: str | None
    fewsoc_code: str | None
    non_occupational: bool = False


@dataclass
class HitRow:
    hit_id: str
    title: str
    company: str
    soc_code: str
    soc_title: str
    soc_description: str
    sample_titles: str
    source: str


@dataclass
class HitSets:
    concordant: list[HitRow]
    discordant_lc: list[HitRow]
    discordant_fewsoc: list[HitRow]


def build_hit_sets(items: Sequence[ClassifiedItem], tax: Taxonomy) -> HitSets:
    """Split classified items by 8-digit agreement and emit validation-task rows.

    Items flagged non-occupational or missing either code are screened out.
    Concordant items (codes equal) produce one row; discordant items produce
    one row per source so the two codes can be judged independently. Hit ids
    are deterministic in input order.
    """
    sets = HitSets(concordant=[], discordant_lc=[], discordant_fewsoc=[])
    seq = 0

    def row(item: ClassifiedItem, code: str, source: str) -> HitRow:
        entry = tax.get(code)
        return HitRow(
            hit_id=f"H{seq:06d}",
            title=item.title,
            company=item.company,
            soc_code=code,
            soc_title=entry.title if entry else "",
            soc_description=entry.description if entry else "",
            sample_titles="|".join(entry.sample_titles) if entry else "",
            source=source,
        )

    for item in items:
        if item.non_occupational or not item.lc_soc or not item.fewsoc_code:
            continue
        if item.lc_soc == item.fewsoc_code:
            seq += 1
            sets.concordant.append(row(item, item.fewsoc_code, "concordant"))
        else:
            seq += 1
            sets.discordant_lc.append(row(item, item.lc_soc, "lc_soc"))
            seq += 1
            sets.discordant_fewsoc.append(row(item, item.fewsoc_code, "fewsoc"))
    return sets


@dataclass
class SourceStats:
    count: int
    mean_rating: float
    sd_rating: float
    precision: float


@dataclass
class PrecisionComparison:
    basis: str  # "all" or "discordant"
    fewsoc_precision: float
    fewsoc_n: int
    lc_precision: float
    lc_n: int
    z: float
    p_two_sided: float
    degenerate: bool


@dataclass
class EvalReport:
    items: list[dict]
    per_source: dict[str, SourceStats]
    comparisons: list[PrecisionComparison]
    alpha_overall: float
    alpha_by_source: dict[str, float]


def evaluate_ratings(
    ratings: Sequence[Rating],
    accuracies: Mapping[str, float],
    threshold: float = DEFAULT_BINARIZE_THRESHOLD,
    alpha_metric: str = "interval",
) -> EvalReport:
    """Full evaluation over ingested ratings: aggregates, precision, z, alpha.

    Items rated by a single worker still get an aggregate but never enter
    alpha. Precision for each code source is reported on two bases (the
    source's items alone, and together with the concordant set), with the
    companion z-test for each basis.
    """
    if not ratings:
        raise ValueError("no ratings")
    by_hit: dict[str, list[Rating]] = {}
    for r in ratings:
        by_hit.setdefault(r.hit_id, []).append(r)

    items = []
    for hit_id in sorted(by_hit):
        rs = by_hit[hit_id]
        sources = {r.label_source for r in rs}
        if len(sources) != 1:
            raise DataError(f"hit {hit_id} has inconsistent label sources {sorted(sources)}")
        try:
            weights = [accuracies[r.worker_id] for r in rs]
        except KeyError as exc:
            raise DataError(f"hit {hit_id}: no accuracy for worker {exc.args[0]!r}") from exc
        agg = aggregate_rating([r.value for r in rs], weights)
        items.append(
            {
                "hit_id": hit_id,
                "source": rs[0].label_source,
                "n_ratings": len(rs),
                "aggregate": agg,
                "correct": binarize(agg, threshold),
            }
        )

    per_source: dict[str, SourceStats] = {}
    for source in RATING_SOURCES:
        group = [it for it in items if it["source"] == source]
        if not group:
            continue
        aggs = [it["aggregate"] for it in group]
        mean = sum(aggs) / len(aggs)
        sd = math.sqrt(sum((a - mean) ** 2 for a in aggs) / len(aggs))
        per_source[source] = SourceStats(
            count=len(group),
            mean_rating=mean,
            sd_rating=sd,
            precision=precision([it["correct"] for it in group]),
        )

    comparisons = []
    for basis, few_sources, lc_sources in (
        ("discordant", ("fewsoc",), ("lc_soc",)),
        ("all", ("fewsoc", "concordant"), ("lc_soc", "concordant")),
    ):
        few = [it["correct"] for it in items if it["source"] in few_sources]
        lc = [it["correct"] for it in items if it["source"] in lc_sources]
        if not few or not lc:
            continue
        p_few, p_lc = precision(few), precision(lc)
        test = two_proportion_ztest(p_few, len(few), p_lc, len(lc))
        comparisons.append(
            PrecisionComparison(
                basis=basis,
                fewsoc_precision=p_few,
                fewsoc_n=len(few),
                lc_precision=p_lc,
                lc_n=len(lc),
                z=test.z,
                p_two_sided=test.p_two_sided,
                degenerate=test.degenerate,
            )
        )

    def alpha_for(hit_ids: Iterable[str]) -> float | None:
        wanted = set(hit_ids)
        units = [[r.value for r in by_hit[h]] for h in sorted(wanted)]
        try:
            return krippendorff_alpha(units, metric=alpha_metric)
        except ValueError:
            return None

    alpha_overall = alpha_for(by_hit)
    alpha_by_source = {}
    for source in RATING_SOURCES:
        hit_ids = [it["hit_id"] for it in items if it["source"] == source]
        if hit_ids:
            a = alpha_for(hit_ids)
            if a is not None:
                alpha_by_source[source] = a
    if alpha_overall is None:
        raise DataError("no pairable ratings for reliability computation")

    return EvalReport(
        items=items,
        per_source=per_source,
        comparisons=comparisons,
        alpha_overall=alpha_overall,
        alpha_by_source=alpha_by_source,
    )


def render_eval_summary(report: EvalReport) -> str:
    lines = ["Crowd evaluation summary", "========================", ""]
    lines.append(f"Rated items: {len(report.items)}")
    lines.append(f"Krippendorff's alpha (overall, interval): {report.alpha_overall:.4f}")
    for source, a in sorted(report.alpha_by_source.items()):
        lines.append(f"  alpha[{source}]: {a:.4f}")
    lines.append("")
    for source, stats in sorted(report.per_source.items()):
        lines.append(
            f"{source}: n={stats.count}, mean rating={stats.mean_rating:.3f} "
            f"(SD {stats.sd_rating:.3f}), precision={stats.precision:.4f}"
        )
    lines.append("")
    for cmp in report.comparisons:
        if cmp.degenerate:
            verdict = "z undefined (degenerate proportions)"
        else:
            verdict = f"z={cmp.z:.3f}, two-sided p={cmp.p_two_sided:.4g}"
        lines.append(
            f"precision ({cmp.basis}): fewsoc {cmp.fewsoc_precision:.4f} (n={cmp.fewsoc_n}) "
            f"vs lc_soc {cmp.lc_precision:.4f} (n={cmp.lc_n}); {verdict}"
        )
    return "\n".join(lines) + "\n"
