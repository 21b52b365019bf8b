"""Resume-profile ingestion, cleaning criteria, and hash partitioning.

Profiles arrive as line-delimited JSON, one profile per line, with job and
education sections. Cleaning applies five criteria:

  1. job records carry all required fields, and end dates do not precede
     start dates (past jobs must have end dates);
  2. job titles denote standard single occupations (classifier flags when
     available, keyword blocklist + title-length fallback otherwise);
  3. education records are complete and the profile holds a bachelor's
     degree or higher (an explicit bachelor's record is required — later
     stages need its completion year);
  4. the gap between bachelor's completion and the first job stays within
     the per-degree threshold;
  5. job records fall inside the study timeframe.

Record-level criteria (1, 2, 5) are evaluated first, then profile-level
criteria (3, 4) against the surviving records; this keeps filtering
idempotent while each dropped record/profile is still attributed to its
first failing criterion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from .dates import YearMonth, years_between

DEGREE_LEVELS = ("bachelor", "master", "doctorate")
DEGREE_RANK = {"bachelor": 1, "master": 2, "doctorate": 3}

DEFAULT_BLOCKLIST = frozenset({"student", "intern", "volunteer", "founder", "owner", "member"})
DEFAULT_GAP_THRESHOLDS = {"bachelor": 3.75, "master": 5.59, "doctorate": 8.25}


@dataclass(frozen=True)
class JobRecord:
    title: str = ""
    company: str = ""
    city: str = ""
    state: str = ""
    country: str = ""
    start_date: YearMonth | None = None
    end_date: YearMonth | None = None
    is_current: bool = False
    soc: str | None = None
    naics: str | None = None
    wage: float | None = None


@dataclass(frozen=True)
class EducationRecord:
    degree_level: str = "other"
    degree_name: str = ""
    start_date: YearMonth | None = None
    end_date: YearMonth | None = None
    school: str = ""
    city: str = ""
    state: str = ""


@dataclass(frozen=True)
class Profile:
    id: str
    jobs: tuple[JobRecord, ...] = ()
    education: tuple[EducationRecord, ...] = ()
    gender: str | None = None
    race: str | None = None


@dataclass(frozen=True)
class LineError:
    line_no: int
    message: str


@dataclass(frozen=True)
class FilterCriteria:
    require_fields: tuple[str, ...] = ("title", "company", "city", "state", "country")
    max_title_words: int = 7
    timeframe: tuple[int, int] = (1999, 2022)
    gap_thresholds_years: Mapping[str, float] = field(
        default_factory=lambda: dict(DEFAULT_GAP_THRESHOLDS)
    )
    min_degree: str = "bachelor"
    blocklist: frozenset[str] = DEFAULT_BLOCKLIST
    snapshot: YearMonth = YearMonth(2022, 10)

    def __post_init__(self):
        lo, hi = self.timeframe
        if lo > hi:
            raise ValueError(f"timeframe start {lo} after end {hi}")
        for degree, years in self.gap_thresholds_years.items():
            if years <= 0:
                raise ValueError(f"non-positive gap threshold for {degree}: {years}")


@dataclass(frozen=True)
class Rejection:
    profile_id: str
    criterion: int
    scope: str  # "profile" or "record"
    detail: str


@dataclass
class FilterOutcome:
    retained: list[Profile]
    ledger: list[Rejection]

    def rejected_profile_ids(self) -> set[str]:
        return {r.profile_id for r in self.ledger if r.scope == "profile"}


def _parse_date(value, where: str) -> YearMonth | None:
    if value in (None, ""):
        return None
    try:
        return YearMonth.parse(str(value))
    except ValueError as exc:
        raise ValueError(f"{where}: {exc}") from exc


def _parse_job(obj: dict, idx: int) -> JobRecord:
    if not isinstance(obj, dict):
        raise ValueError(f"jobs[{idx}] is not an object")
    return JobRecord(
        title=str(obj.get("title") or ""),
        company=str(obj.get("company") or ""),
        city=str(obj.get("city") or ""),
        state=str(obj.get("state") or ""),
        country=str(obj.get("country") or ""),
        start_date=_parse_date(obj.get("start_date"), f"jobs[{idx}].start_date"),
        end_date=_parse_date(obj.get("end_date"), f"jobs[{idx}].end_date"),
        is_current=bool(obj.get("is_current", False)),
        soc=obj.get("soc") or None,
        naics=str(obj["naics"]) if obj.get("naics") else None,
        wage=float(obj["wage"]) if obj.get("wage") is not None else None,
    )


def _parse_education(obj: dict, idx: int) -> EducationRecord:
    if not isinstance(obj, dict):
        raise ValueError(f"education[{idx}] is not an object")
    level = str(obj.get("degree_level") or "other").strip().lower()
    if level not in DEGREE_LEVELS:
        level = "other"
    return EducationRecord(
        degree_level=level,
        degree_name=str(obj.get("degree_name") or ""),
        start_date=_parse_date(obj.get("start_date"), f"education[{idx}].start_date"),
        end_date=_parse_date(obj.get("end_date"), f"education[{idx}].end_date"),
        school=str(obj.get("school") or ""),
        city=str(obj.get("city") or ""),
        state=str(obj.get("state") or ""),
    )


def parse_profile_line(line: str) -> Profile:
    obj = json.loads(line)
    if not isinstance(obj, dict):
        raise ValueError("line is not a JSON object")
    pid = str(obj.get("id") or "").strip()
    if not pid:
        raise ValueError("missing profile id")
    jobs_raw = obj.get("jobs", [])
    edu_raw = obj.get("education", [])
    if not isinstance(jobs_raw, list) or not isinstance(edu_raw, list):
        raise ValueError("'jobs' and 'education' must be arrays")
    gender = obj.get("gender") or None
    race = obj.get("race") or None
    if gender is not None and gender not in ("male", "female"):
        raise ValueError(f"unknown gender {gender!r}")
    if race is not None and race not in ("white", "black", "asian", "hispanic"):
        raise ValueError(f"unknown race {race!r}")
    return Profile(
        id=pid,
        jobs=tuple(_parse_job(j, i) for i, j in enumerate(jobs_raw)),
        education=tuple(_parse_education(e, i) for i, e in enumerate(edu_raw)),
        gender=gender,
        race=race,
    )


def parse_profiles(lines: Iterable[str]) -> tuple[list[Profile], list[LineError]]:
    """Parse line-delimited profiles; malformed lines become positioned errors.

    Comment lines (starting with '#') and blank lines are skipped. A record
    with an end date before its start date parses fine here — that violation
    is surfaced at the filter stage.
    """
    profiles: list[Profile] = []
    errors: list[LineError] = []
    for line_no, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            profiles.append(parse_profile_line(stripped))
        except (ValueError, json.JSONDecodeError) as exc:
            errors.append(LineError(line_no=line_no, message=str(exc)))
    return profiles, errors


_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_U64 = 0xFFFFFFFFFFFFFFFF


def fnv1a_64(data: bytes) -> int:
    """64-bit FNV-1a: stable across runs and platforms, unlike built-in hash()."""
    h = _FNV_OFFSET
    for b in data:
        h = ((h ^ b) * _FNV_PRIME) & _U64
    return h


def hash_partition(profile_id: str, n_partitions: int) -> int:
    """Deterministic partition index in [0, n_partitions) for a profile id."""
    if n_partitions < 1:
        raise ValueError(f"n_partitions must be >= 1, got {n_partitions}")
    return fnv1a_64(profile_id.encode("utf-8")) % n_partitions


def _bachelor_end(profile: Profile) -> YearMonth | None:
    ends = [
        e.end_date
        for e in profile.education
        if e.degree_level == "bachelor" and e.end_date is not None
    ]
    return min(ends) if ends else None


def post_graduation_gap(profile: Profile) -> float | None:
    """Years between bachelor's completion and the earliest job start.

    May be negative when the first job predates graduation (the threshold
    test clamps it to 0). None when the bachelor's end date or jobs are
    missing.
    """
    ba_end = _bachelor_end(profile)
    starts = [j.start_date for j in profile.jobs if j.start_date is not None]
    if ba_end is None or not starts:
        return None
    return years_between(min(starts), ba_end)


def _title_words(title: str) -> list[str]:
    # letter runs only, so "Co-Founder" yields the blocklisted token "founder"
    # while "Internal" does not yield "intern"
    out, cur = [], []
    for ch in title.lower():
        if ch.isalpha():
            cur.append(ch)
        elif cur:
            out.append("".join(cur))
            cur = []
    if cur:
        out.append("".join(cur))
    return out


def _check_record(
    job: JobRecord,
    criteria: FilterCriteria,
    flags: tuple[bool, bool] | None,
) -> tuple[int, str] | None:
    """First failing record-level criterion (1, 2, or 5) for a job, or None."""
    # criterion 1: required fields, end dates for past jobs, date ordering
    for name in criteria.require_fields:
        if not getattr(job, name):
            return 1, f"missing {name}"
    if job.start_date is None:
        return 1, "missing start_date"
    if not job.is_current and job.end_date is None:
        return 1, "past job without end_date"
    # still-held jobs take the snapshot date as their effective end
    effective_end = job.end_date if job.end_date is not None else criteria.snapshot
    if effective_end < job.start_date:
        return 1, f"end date {effective_end} precedes start_date {job.start_date}"

    # criterion 2: non-occupational / multi-role titles
    if flags is not None:
        non_occupational, multi_role = flags
        if non_occupational:
            return 2, f"non-occupational title {job.title!r}"
        if multi_role:
            return 2, f"multi-role title {job.title!r}"
    else:
        words = _title_words(job.title)
        hits = sorted(set(words) & criteria.blocklist)
        if hits:
            return 2, f"blocklisted title word {hits[0]!r} in {job.title!r}"
    if len(job.title.split()) > criteria.max_title_words:
        return 2, f"title longer than {criteria.max_title_words} words"

    # criterion 5: study timeframe
    lo, hi = criteria.timeframe
    if job.start_date.year < lo or effective_end.year > hi:
        return 5, f"outside timeframe [{lo}, {hi}]: {job.start_date}..{effective_end}"
    return None


def _complete_education(e: EducationRecord) -> bool:
    return bool(e.school) and e.start_date is not None and e.end_date is not None


def filter_profiles(
    profiles: Iterable[Profile],
    criteria: FilterCriteria | None = None,
    flags_from_fewsoc: Mapping[tuple[str, int], tuple[bool, bool]] | None = None,
) -> FilterOutcome:
    """Apply cleaning criteria 1-5; returns retained profiles plus a rejection ledger.

    ``flags_from_fewsoc`` maps (profile_id, job_index) to (non_occupational,
    multi_role) classifier flags; when absent (entirely or for a given job),
    criterion 2 uses the keyword-blocklist fallback. Rejections are data, not
    errors: every dropped record or profile gets a ledger entry naming its
    first failing criterion, and every input profile is either retained or
    covered by a profile-scope entry.
    """
    criteria = criteria or FilterCriteria()
    retained: list[Profile] = []
    ledger: list[Rejection] = []

    for profile in profiles:
        record_drop_criteria: list[int] = []
        kept_jobs: list[JobRecord] = []
        for idx, job in enumerate(profile.jobs):
            flags = None
            if flags_from_fewsoc is not None:
                flags = flags_from_fewsoc.get((profile.id, idx))
            failure = _check_record(job, criteria, flags)
            if failure is None:
                kept_jobs.append(job)
            else:
                criterion, detail = failure
                record_drop_criteria.append(criterion)
                ledger.append(
                    Rejection(profile.id, criterion, "record", f"job[{idx}]: {detail}")
                )

        kept_edu = []
        for idx, edu in enumerate(profile.education):
            if _complete_education(edu):
                kept_edu.append(edu)
            else:
                ledger.append(
                    Rejection(profile.id, 3, "record", f"education[{idx}]: incomplete record")
                )

        # criterion 3: explicit bachelor's record (its end year feeds the
        # gap test and the cohort derivation) and minimum attainment
        levels = {e.degree_level for e in kept_edu}
        ranked = [DEGREE_RANK[lv] for lv in levels if lv in DEGREE_RANK]
        has_bachelor = any(
            e.degree_level == "bachelor" and e.end_date is not None for e in kept_edu
        )
        if not has_bachelor or not ranked or max(ranked) < DEGREE_RANK[criteria.min_degree]:
            ledger.append(
                Rejection(profile.id, 3, "profile", "no complete bachelor's-or-higher education")
            )
            continue

        if not kept_jobs:
            criterion = min(record_drop_criteria) if record_drop_criteria else 1
            ledger.append(
                Rejection(profile.id, criterion, "profile", "no job records survive filtering")
            )
            continue

        # criterion 4: post-graduation gap vs the highest degree's threshold
        trimmed = replace(profile, jobs=tuple(kept_jobs), education=tuple(kept_edu))
        gap = post_graduation_gap(trimmed)
        highest = max(
            (lv for lv in levels if lv in DEGREE_RANK), key=lambda lv: DEGREE_RANK[lv]
        )
        threshold = criteria.gap_thresholds_years.get(highest)
        if gap is None or threshold is None:
            ledger.append(
                Rejection(profile.id, 4, "profile", f"gap undefined for degree {highest!r}")
            )
            continue
        if max(gap, 0.0) > threshold:
            ledger.append(
                Rejection(
                    profile.id,
                    4,
                    "profile",
                    f"post-graduation gap {gap:.2f}y exceeds {threshold}y ({highest})",
                )
            )
            continue

        retained.append(trimmed)

    return FilterOutcome(retained=retained, ledger=ledger)


def profile_to_json(profile: Profile) -> str:
    """Serialize a profile back to its one-line JSON form (stable key order)."""

    def job_obj(j: JobRecord) -> dict:
        return {
            "title": j.title,
            "company": j.company,
            "city": j.city,
            "state": j.state,
            "country": j.country,
            "start_date": str(j.start_date) if j.start_date else None,
            "end_date": str(j.end_date) if j.end_date else None,
            "is_current": j.is_current,
            "soc": j.soc,
            "naics": j.naics,
            "wage": j.wage,
        }

    def edu_obj(e: EducationRecord) -> dict:
        return {
            "degree_level": e.degree_level,
            "degree_name": e.degree_name,
            "start_date": str(e.start_date) if e.start_date else None,
            "end_date": str(e.end_date) if e.end_date else None,
            "school": e.school,
            "city": e.city,
            "state": e.state,
        }

    return json.dumps(
        {
            "id": profile.id,
            "gender": profile.gender,
            "race": profile.race,
            "jobs": [job_obj(j) for j in profile.jobs],
            "education": [edu_obj(e) for e in profile.education],
        },
        sort_keys=False,
        separators=(",", ": "),
    )
