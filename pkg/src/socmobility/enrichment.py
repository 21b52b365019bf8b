"""Wage, regional, cohort, and outcome enrichment of career trajectories.

Occupational wages are state-level mean annual figures keyed by
(year, state, 6-digit SOC). Wage-table codes are standardized to the 2019
taxonomy through crosswalks before use; gaps along the year axis are filled
by linear interpolation with flat extrapolation at the ends. The upward
outcome compares the first job's wage with the wage of the job held five
years after the first start: upward = 1 iff w5 - w1 > 0 (ties are 0).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .dates import YearMonth
from .errors import DataError
from .profiles import DEGREE_RANK, Profile
from .taxonomy import CrosswalkTable, build_soc6_crosswalk, is_soc_code, soc2, soc6
from .trajectory import CareerTrajectory, JobChangeFlags, MobilityCount

DEFAULT_GRADUATION_AGE = 23
#: Pew generation boundaries by birth year (inclusive).
DEFAULT_GENERATIONS = (
    ("silent", 1928, 1945),
    ("boomer", 1946, 1964),
    ("gen_x", 1965, 1980),
    ("millennial", 1981, 1996),
    ("gen_z", 1997, 2012),
)
DEFAULT_WAGE_YEARS = (1999, 2022)


@dataclass(frozen=True)
class WageTable:
    """(year, state, soc6) -> mean annual wage in USD/year."""

    entries: Mapping[tuple[int, str, str], float]
    year_range: tuple[int, int] = DEFAULT_WAGE_YEARS

    def __post_init__(self):
        lo, hi = self.year_range
        for (year, state, code), wage in self.entries.items():
            if wage <= 0:
                raise ValueError(f"non-positive wage for ({year},{state},{code}): {wage}")
            if not lo <= year <= hi:
                raise ValueError(f"wage year {year} outside [{lo},{hi}]")

    def series(self, state: str, code6: str) -> dict[int, float]:
        return {
            year: wage
            for (year, st, c6), wage in self.entries.items()
            if st == state and c6 == code6
        }


@dataclass(frozen=True)
class GdpDecileTable:
    """(year, state) -> real-GDP decile 1..10 within that year."""

    entries: Mapping[tuple[int, str], int]

    def __post_init__(self):
        for key, decile in self.entries.items():
            if not 1 <= decile <= 10:
                raise ValueError(f"decile out of range for {key}: {decile}")


def load_wage_table(
    path: str | Path, year_range: tuple[int, int] = DEFAULT_WAGE_YEARS
) -> WageTable:
    """Load a wage file with header ``year,state,soc6,mean_annual_wage``."""
    path = Path(path)
    entries: dict[tuple[int, str, str], float] = {}
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(_skip_comments(fh))
        required = {"year", "state", "soc6", "mean_annual_wage"}
        if reader.fieldnames is None or not required <= set(reader.fieldnames):
            raise DataError(f"{path}: wage file needs columns {sorted(required)}")
        for lineno, row in enumerate(reader, start=2):
            try:
                year = int(row["year"])
                wage = float(row["mean_annual_wage"])
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: {exc}") from exc
            key = (year, row["state"].strip().upper(), row["soc6"].strip())
            if wage <= 0:
                raise DataError(f"{path}:{lineno}: non-positive wage {wage}")
            entries[key] = wage
    try:
        return WageTable(entries=entries, year_range=year_range)
    except ValueError as exc:
        raise DataError(f"{path}: {exc}") from exc


def load_gdp_table(path: str | Path) -> GdpDecileTable:
    """Load ``year,state,real_gdp`` rows and compute within-year deciles at load."""
    path = Path(path)
    by_year: dict[int, list[tuple[str, float]]] = {}
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(_skip_comments(fh))
        required = {"year", "state", "real_gdp"}
        if reader.fieldnames is None or not required <= set(reader.fieldnames):
            raise DataError(f"{path}: GDP file needs columns {sorted(required)}")
        for lineno, row in enumerate(reader, start=2):
            try:
                year = int(row["year"])
                gdp = float(row["real_gdp"])
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: {exc}") from exc
            by_year.setdefault(year, []).append((row["state"].strip().upper(), gdp))
    entries: dict[tuple[int, str], int] = {}
    for year, rows in by_year.items():
        ranked = sorted(rows, key=lambda r: (r[1], r[0]))  # gdp ties break on state
        n = len(ranked)
        for rank, (state, _) in enumerate(ranked, start=1):
            entries[(year, state)] = math.ceil(10 * rank / n)
    return GdpDecileTable(entries=entries)


def _skip_comments(fh):
    return (line for line in fh if not line.startswith("#"))


def standardize_wage_socs(
    raw: WageTable,
    crosswalks: Sequence[CrosswalkTable],
    valid_soc6: set[str],
    drop_codes: set[str] = frozenset(),
) -> tuple[WageTable, list[str]]:
    """Re-key wage entries onto 2019 6-digit codes.

    A legacy code mapping to several 2019 codes contributes its wage to each;
    codes listed in ``drop_codes`` (e.g. known-incompatible entries between
    table vintages) and codes no crosswalk reaches are dropped with a log
    line. Where a target key collects several contributions, a direct (already
    valid) observation wins, otherwise the contributions are averaged.
    """
    tables6 = build_soc6_crosswalk(crosswalks)
    dropped: list[str] = []
    direct: dict[tuple[int, str, str], float] = {}
    remapped: dict[tuple[int, str, str], list[float]] = {}
    cache: dict[str, set[str]] = {}
    for (year, state, code), wage in raw.entries.items():
        if code in drop_codes:
            dropped.append(f"({year},{state},{code}): listed incompatible")
            continue
        if code in valid_soc6:
            direct[(year, state, code)] = wage
            continue
        if code not in cache:
            frontier = {code}
            for table in tables6:
                frontier = set().union(
                    *(table.mapping.get(c, frozenset((c,))) for c in frontier)
                )
            cache[code] = {c for c in frontier if c in valid_soc6}
        images = cache[code]
        if not images:
            dropped.append(f"({year},{state},{code}): no crosswalk image")
            continue
        for image in images:
            remapped.setdefault((year, state, image), []).append(wage)
    entries = {key: sum(vals) / len(vals) for key, vals in remapped.items()}
    entries.update(direct)
    return WageTable(entries=entries, year_range=raw.year_range), dropped


def lookup_wage(
    year: int,
    state: str,
    socs: str | Sequence[str],
    table: WageTable,
) -> float | None:
    """Wage for one or more applicable 8-digit codes; arithmetic mean when several hit.

    Codes are truncated to their 6-digit prefix. None signals a miss the
    caller should interpolate.
    """
    if isinstance(socs, str):
        socs = [socs]
    prefixes = []
    for code in socs:
        prefixes.append(soc6(code) if is_soc_code(code) else code)
    found = [
        table.entries[(year, state, p)]
        for p in dict.fromkeys(prefixes)  # de-dupe, order-preserving
        if (year, state, p) in table.entries
    ]
    if not found:
        return None
    return sum(found) / len(found)


def interpolate_missing(
    series: Mapping[int, float], years: Iterable[int] | None = None
) -> dict[int, float]:
    """Fill a year -> wage series: linear between observations, flat outside.

    Observed points pass through exactly. ``years`` defaults to the full
    range between the first and last observation.
    """
    if not series:
        raise ValueError("cannot interpolate an empty series")
    observed_years = sorted(series)
    if years is None:
        years = range(observed_years[0], observed_years[-1] + 1)
    xp = np.asarray(observed_years, dtype=float)
    fp = np.asarray([series[y] for y in observed_years], dtype=float)
    out = {}
    for y in years:
        out[y] = series[y] if y in series else float(np.interp(y, xp, fp))
    return out


def wage_at(series: Mapping[int, float], year: int) -> float:
    """Single-year read of an interpolated series."""
    if not series:
        raise ValueError("cannot interpolate an empty series")
    if year in series:
        return series[year]
    observed_years = sorted(series)
    xp = np.asarray(observed_years, dtype=float)
    fp = np.asarray([series[y] for y in observed_years], dtype=float)
    return float(np.interp(year, xp, fp))


def cohort(
    profile: Profile,
    graduation_age: int = DEFAULT_GRADUATION_AGE,
    generations: Sequence[tuple[str, int, int]] = DEFAULT_GENERATIONS,
) -> str:
    """Generation label from the inferred birth year (bachelor's year minus graduation age)."""
    ba_years = [
        e.end_date.year
        for e in profile.education
        if e.degree_level == "bachelor" and e.end_date is not None
    ]
    if not ba_years:
        raise ValueError(f"profile {profile.id}: no bachelor's end year")
    birth_year = min(ba_years) - graduation_age
    for name, lo, hi in generations:
        if lo <= birth_year <= hi:
            return name
    return "other"


def regional_rank(state: str, year: int, gdp: GdpDecileTable) -> int:
    """GDP decile of a state in a year; missing years fall back to the nearest
    available one (ties toward the later year). Unknown states are errors."""
    state = state.upper()
    if (year, state) in gdp.entries:
        return gdp.entries[(year, state)]
    candidates = [y for (y, st) in gdp.entries if st == state]
    if not candidates:
        raise DataError(f"no GDP data for state {state!r}")
    nearest = min(candidates, key=lambda y: (abs(y - year), -y))
    return gdp.entries[(nearest, state)]


@dataclass
class EnrichedRecord:
    """One analysis row per retained trajectory."""

    profile_id: str
    gender: str | None
    race: str | None
    education: str
    generation: str
    regional_rank: int
    w1: float
    w5: float
    log_w1: float
    upward: int
    mobility: int
    flags: JobChangeFlags
    occ2: str
    ind2: str
    occ2_year5: str = ""

    def __post_init__(self):
        if self.w1 <= 0:
            raise ValueError(f"{self.profile_id}: w1 must be positive")
        if self.upward != int(self.w5 - self.w1 > 0):
            raise ValueError(f"{self.profile_id}: upward label contradicts wages")


@dataclass(frozen=True)
class EnrichmentSkip:
    profile_id: str
    reason: str


def upward_label(w1: float, w5: float) -> int:
    """1 iff the fifth-year wage strictly exceeds the first-year wage."""
    return int(w5 - w1 > 0)


def _job_wage(job, year: int, table: WageTable) -> float | None:
    direct = lookup_wage(year, job.state.upper(), job.soc, table)
    if direct is not None:
        return direct
    code6 = soc6(job.soc) if is_soc_code(job.soc) else job.soc
    series = table.series(job.state.upper(), code6)
    if not series:
        return None
    return wage_at(series, year)


def fifth_year_job(trajectory: CareerTrajectory, window_years: float = 5.0):
    """Job held at first_start + window: the last job starting at or before it."""
    first = trajectory.first_start
    cutoff = first.total_months + window_years * 12
    held = [j for j in trajectory.jobs if j.start_date.total_months <= cutoff]
    return held[-1]


def enrich_trajectory(
    profile: Profile,
    trajectory: CareerTrajectory,
    wage_table: WageTable,
    gdp_table: GdpDecileTable,
    mobility: MobilityCount,
    flags: JobChangeFlags,
    graduation_age: int = DEFAULT_GRADUATION_AGE,
    generations: Sequence[tuple[str, int, int]] = DEFAULT_GENERATIONS,
) -> EnrichedRecord | EnrichmentSkip:
    """Assemble the analysis row for one trajectory, or a skip with its reason.

    w1 prices the first job at its own start year/state/code; w5 prices the
    job held at the five-year mark at that year and that job's state/code.
    Trajectories whose wages stay unresolvable after interpolation are
    skipped, as are those with jobs lacking final codes.
    """
    if not trajectory.jobs:
        return EnrichmentSkip(profile.id, "empty trajectory")
    first = trajectory.jobs[0]
    if any(j.soc is None for j in trajectory.jobs):
        return EnrichmentSkip(profile.id, "job without final occupation code")

    try:
        generation = cohort(profile, graduation_age, generations)
    except ValueError as exc:
        return EnrichmentSkip(profile.id, str(exc))

    year5_point: YearMonth = first.start_date.add_years(trajectory.window_years or 5.0)
    job5 = fifth_year_job(trajectory, trajectory.window_years or 5.0)

    w1 = _job_wage(first, first.start_date.year, wage_table)
    if w1 is None:
        return EnrichmentSkip(profile.id, f"no wage series for first job {first.soc}@{first.state}")
    w5 = _job_wage(job5, year5_point.year, wage_table)
    if w5 is None:
        return EnrichmentSkip(profile.id, f"no wage series for year-5 job {job5.soc}@{job5.state}")

    try:
        rank = regional_rank(first.state, first.start_date.year, gdp_table)
    except DataError as exc:
        return EnrichmentSkip(profile.id, str(exc))

    levels = [e.degree_level for e in profile.education if e.degree_level in DEGREE_RANK]
    education = max(levels, key=lambda lv: DEGREE_RANK[lv]) if levels else "bachelor"

    return EnrichedRecord(
        profile_id=profile.id,
        gender=profile.gender,
        race=profile.race,
        education=education,
        generation=generation,
        regional_rank=rank,
        w1=w1,
        w5=w5,
        log_w1=math.log(w1),
        upward=upward_label(w1, w5),
        mobility=mobility.capped,
        flags=flags,
        occ2=soc2(first.soc),
        ind2=(first.naics or "")[:2],
        occ2_year5=soc2(job5.soc),
    )


ENRICHED_HEADER = [
    "profile_id",
    "gender",
    "race",
    "education",
    "generation",
    "regional_rank",
    "w1",
    "w5",
    "log_w1",
    "upward",
    "mobility",
    "type1",
    "type2",
    "type3",
    "type4",
    "occ2",
    "ind2",
    "occ2_year5",
]


def record_to_row(r: EnrichedRecord) -> list[str]:
    t1, t2, t3, t4 = r.flags.as_tuple()
    return [
        r.profile_id,
        r.gender or "",
        r.race or "",
        r.education,
        r.generation,
        str(r.regional_rank),
        repr(r.w1),  # full precision so the upward label survives a round-trip
        repr(r.w5),
        repr(r.log_w1),
        str(r.upward),
        str(r.mobility),
        str(t1),
        str(t2),
        str(t3),
        str(t4),
        r.occ2,
        r.ind2,
        r.occ2_year5,
    ]


def record_from_row(row: Mapping[str, str]) -> EnrichedRecord:
    return EnrichedRecord(
        profile_id=row["profile_id"],
        gender=row["gender"] or None,
        race=row["race"] or None,
        education=row["education"],
        generation=row["generation"],
        regional_rank=int(row["regional_rank"]),
        w1=float(row["w1"]),
        w5=float(row["w5"]),
        log_w1=float(row["log_w1"]),
        upward=int(row["upward"]),
        mobility=int(row["mobility"]),
        flags=JobChangeFlags(
            type1=row["type1"] == "1",
            type2=row["type2"] == "1",
            type3=row["type3"] == "1",
            type4=row["type4"] == "1",
        ),
        occ2=row["occ2"],
        ind2=row["ind2"],
        occ2_year5=row.get("occ2_year5", ""),
    )
