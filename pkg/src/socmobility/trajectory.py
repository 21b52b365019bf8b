"""Linear career trajectories, observation windows, and job-change typing.

A trajectory is a chronologically ordered, temporally non-overlapping
subsequence of a job history: sort by (start, -end), seed with the first
record, then append each record whose start is at or after the end of the
last appended one. Trajectories shorter than the observation window are
rejected; longer ones keep only jobs starting within the window.

Consecutive jobs are typed by comparing employers and 8-digit codes:
type 1 = different firm & different occupation, type 2 = same firm &
different occupation, type 3 = different firm & same occupation, type 4 =
same firm & same occupation. Exactly one type holds per pair; a trajectory's
flags OR the pairs together.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .dates import YearMonth, years_between
from .profiles import JobRecord

DEFAULT_WINDOW_YEARS = 5.0
DEFAULT_MOBILITY_CAP = 4
DEFAULT_SNAPSHOT = YearMonth(2022, 10)


@dataclass(frozen=True)
class CareerTrajectory:
    profile_id: str
    jobs: tuple[JobRecord, ...]
    window_years: float = DEFAULT_WINDOW_YEARS

    @property
    def first_start(self) -> YearMonth | None:
        return self.jobs[0].start_date if self.jobs else None

    @property
    def span_years(self) -> float:
        """Observed span: last end minus first start (ends are non-decreasing)."""
        if not self.jobs:
            return 0.0
        return years_between(self.jobs[-1].end_date, self.jobs[0].start_date)


@dataclass(frozen=True)
class JobChangeFlags:
    type1: bool = False
    type2: bool = False
    type3: bool = False
    type4: bool = False

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (int(self.type1), int(self.type2), int(self.type3), int(self.type4))


@dataclass(frozen=True)
class MobilityCount:
    raw_changes: int
    capped: int


def fill_current_end(jobs: Sequence[JobRecord], snapshot: YearMonth = DEFAULT_SNAPSHOT) -> list[JobRecord]:
    """Give still-held jobs the dataset snapshot date as their end."""
    filled = []
    for job in jobs:
        if job.end_date is None:
            filled.append(replace(job, end_date=snapshot))
        else:
            filled.append(job)
    return filled


def construct_trajectory(history: Sequence[JobRecord], profile_id: str = "") -> CareerTrajectory:
    """Greedy non-overlapping selection over a sorted job history.

    Every record must carry both dates (fill_current_end handles still-held
    jobs). Sorting is by (start, -end) with input order breaking exact ties,
    and a record is kept iff its start >= the end of the last kept record —
    a start equal to the previous end is admitted.
    """
    for i, job in enumerate(history):
        if job.start_date is None or job.end_date is None:
            raise ValueError(f"job[{i}] lacks start or end date; trajectories need both")
    indexed = sorted(
        range(len(history)),
        key=lambda i: (history[i].start_date, -history[i].end_date.total_months, i),
    )
    selected: list[JobRecord] = []
    for i in indexed:
        job = history[i]
        if not selected or job.start_date >= selected[-1].end_date:
            selected.append(job)
    return CareerTrajectory(profile_id=profile_id, jobs=tuple(selected))


def window_truncate(
    trajectory: CareerTrajectory, years: float = DEFAULT_WINDOW_YEARS
) -> CareerTrajectory | None:
    """Keep jobs starting within ``years`` of the first start; None if the span is shorter.

    The boundary is closed: a job starting exactly at first_start + years is
    retained.
    """
    if not trajectory.jobs:
        raise ValueError("cannot window an empty trajectory")
    if trajectory.span_years < years:
        return None
    first = trajectory.first_start
    cutoff_months = first.total_months + years * 12
    kept = tuple(j for j in trajectory.jobs if j.start_date.total_months <= cutoff_months)
    return CareerTrajectory(profile_id=trajectory.profile_id, jobs=kept, window_years=years)


def normalize_company(name: str) -> str:
    """Case-folded, whitespace-collapsed employer identity for change typing."""
    return " ".join(name.casefold().split())


def classify_pair(prev: JobRecord, curr: JobRecord) -> int:
    """Type (1-4) of a single consecutive transition."""
    if prev.soc is None or curr.soc is None:
        raise ValueError("job-change typing requires SOC codes on both records")
    same_firm = normalize_company(prev.company) == normalize_company(curr.company)
    same_occ = prev.soc == curr.soc
    if not same_firm and not same_occ:
        return 1
    if same_firm and not same_occ:
        return 2
    if not same_firm and same_occ:
        return 3
    return 4


def job_change_flags(trajectory: CareerTrajectory) -> JobChangeFlags:
    """OR the per-pair types over the trajectory; single-job trajectories are all-false."""
    seen = {1: False, 2: False, 3: False, 4: False}
    for prev, curr in zip(trajectory.jobs, trajectory.jobs[1:]):
        seen[classify_pair(prev, curr)] = True
    return JobChangeFlags(type1=seen[1], type2=seen[2], type3=seen[3], type4=seen[4])


def job_mobility(trajectory: CareerTrajectory, cap: int = DEFAULT_MOBILITY_CAP) -> MobilityCount:
    """Job-change count, top-coded at ``cap`` to blunt outlier churners."""
    raw = max(0, len(trajectory.jobs) - 1)
    return MobilityCount(raw_changes=raw, capped=min(raw, cap))
