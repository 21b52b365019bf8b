"""O*NET-SOC 2019 taxonomy, historical crosswalks, and code resolution.

An 8-digit O*NET-SOC code has the shape ``DD-DDDD.DD``: a 6-digit SOC base
plus a 2-digit specialization. The 2019 release carries 1,016 occupations.
Crosswalk tables map codes from older taxonomy versions forward and may be
one-to-many.

Everything here is immutable after load and safe for concurrent reads.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import DataError

SOC_CODE_RE = re.compile(r"^\d{2}-\d{4}\.\d{2}$")

#: Standard SOC major groups, keyed by the leading 2 digits.
MAJOR_GROUP_TITLES = {
    "11": "Management",
    "13": "Business and Financial Operations",
    "15": "Computer and Mathematical",
    "17": "Architecture and Engineering",
    "19": "Life, Physical, and Social Science",
    "21": "Community and Social Service",
    "23": "Legal",
    "25": "Educational Instruction and Library",
    "27": "Arts, Design, Entertainment, Sports, and Media",
    "29": "Healthcare Practitioners and Technical",
    "31": "Healthcare Support",
    "33": "Protective Service",
    "35": "Food Preparation and Serving Related",
    "37": "Building and Grounds Cleaning and Maintenance",
    "39": "Personal Care and Service",
    "41": "Sales and Related",
    "43": "Office and Administrative Support",
    "45": "Farming, Fishing, and Forestry",
    "47": "Construction and Extraction",
    "49": "Installation, Maintenance, and Repair",
    "51": "Production",
    "53": "Transportation and Material Moving",
    "55": "Military Specific",
}


def is_soc_code(text: str) -> bool:
    return bool(SOC_CODE_RE.match(text))


def soc6(code: str) -> str:
    """6-digit prefix (``DD-DDDD``) of an 8-digit code."""
    return code[:7]


def soc2(code: str) -> str:
    """2-digit major group of any SOC-shaped code."""
    return code[:2]


@dataclass(frozen=True)
class SocEntry:
    code: str
    title: str
    description: str = ""
    sample_titles: tuple[str, ...] = ()

    def __post_init__(self):
        if not is_soc_code(self.code):
            raise ValueError(f"malformed SOC code: {self.code!r}")
        if not self.title:
            raise ValueError(f"entry {self.code} has an empty title")


@dataclass(frozen=True)
class Taxonomy:
    entries: Mapping[str, SocEntry]
    version: str = "2019"

    def __contains__(self, code: str) -> bool:
        return code in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, code: str) -> SocEntry | None:
        return self.entries.get(code)

    def codes(self) -> list[str]:
        return list(self.entries.keys())


@dataclass(frozen=True)
class CrosswalkTable:
    """Maps codes of one taxonomy version to non-empty sets of newer codes."""

    from_version: str
    to_version: str
    mapping: Mapping[str, frozenset[str]]

    def __post_init__(self):
        for old, new in self.mapping.items():
            if not new:
                raise ValueError(f"crosswalk maps {old} to an empty set")


@dataclass
class MatchResult:
    """Outcome of a title-similarity search over the taxonomy."""

    code: str
    score: float
    low_confidence: bool = field(default=False)


def load_taxonomy(path: str | Path, delimiter: str = ",") -> Taxonomy:
    """Load a delimited taxonomy file with header ``code,title[,description[,sample_titles]]``.

    sample_titles are '|'-separated within their field. Raises DataError on
    malformed or duplicate codes (naming the offending row) and on files with
    no data rows.
    """
    path = Path(path)
    entries: dict[str, SocEntry] = {}
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh, delimiter=delimiter)
        if reader.fieldnames is None or "code" not in reader.fieldnames or "title" not in reader.fieldnames:
            raise DataError(f"{path}: taxonomy file needs 'code' and 'title' columns")
        for lineno, row in enumerate(reader, start=2):
            code = (row.get("code") or "").strip()
            title = (row.get("title") or "").strip()
            if not is_soc_code(code):
                raise DataError(f"{path}:{lineno}: malformed SOC code {code!r}")
            if code in entries:
                raise DataError(f"{path}:{lineno}: duplicate SOC code {code}")
            if not title:
                raise DataError(f"{path}:{lineno}: empty title for {code}")
            samples = tuple(s.strip() for s in (row.get("sample_titles") or "").split("|") if s.strip())
            entries[code] = SocEntry(code, title, (row.get("description") or "").strip(), samples)
    if not entries:
        raise DataError(f"{path}: empty taxonomy")
    return Taxonomy(entries=entries)


_XWALK_NAME_RE = re.compile(r"(?:^|[^0-9])(\d{4})_to_(\d{4})")


def load_crosswalk(
    path: str | Path,
    from_version: str | None = None,
    to_version: str | None = None,
    delimiter: str = ",",
) -> CrosswalkTable:
    """Load a crosswalk file with header ``old_code,new_code`` (one row per pair).

    Versions default to the ``<from>_to_<to>`` pattern in the filename.
    """
    path = Path(path)
    if from_version is None or to_version is None:
        m = _XWALK_NAME_RE.search(path.stem)
        if not m:
            raise DataError(f"{path}: cannot infer crosswalk versions from filename; pass them explicitly")
        from_version = from_version or m.group(1)
        to_version = to_version or m.group(2)
    mapping: dict[str, set[str]] = {}
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh, delimiter=delimiter)
        if reader.fieldnames is None or "old_code" not in reader.fieldnames or "new_code" not in reader.fieldnames:
            raise DataError(f"{path}: crosswalk file needs 'old_code' and 'new_code' columns")
        for lineno, row in enumerate(reader, start=2):
            old = (row.get("old_code") or "").strip()
            new = (row.get("new_code") or "").strip()
            if not old or not new:
                raise DataError(f"{path}:{lineno}: blank code in crosswalk row")
            mapping.setdefault(old, set()).add(new)
    return CrosswalkTable(
        from_version=from_version,
        to_version=to_version,
        mapping={k: frozenset(v) for k, v in mapping.items()},
    )


def is_valid(code: str, tax: Taxonomy) -> bool:
    """True iff code appears in the taxonomy."""
    return code in tax


def crosswalk_resolve(code: str, tables: Sequence[CrosswalkTable], tax: Taxonomy) -> set[str]:
    """Chain a candidate code forward through crosswalks to valid codes.

    Tables are consulted once each, in the given (oldest-to-newest) order;
    codes a table does not map carry forward unchanged. Returns the subset of
    reached codes that are valid in ``tax`` — empty when no chain lands on a
    valid code (the caller then falls back to word-overlap matching).
    """
    if code in tax:
        return {code}
    frontier = {code}
    for table in tables:
        frontier = set().union(*(table.mapping.get(c, frozenset((c,))) for c in frontier))
    return {c for c in frontier if c in tax}


def word_overlap_sim(query_title: str, target_title: str) -> float:
    """Proportion of query words that appear in the target title.

    Both titles are lowercased and split on whitespace. Query words count
    with multiplicity; membership in the target is set-based. An empty or
    whitespace-only query scores 0.0.
    """
    query_words = query_title.lower().split()
    if not query_words:
        return 0.0
    target_words = set(target_title.lower().split())
    overlap = sum(1 for w in query_words if w in target_words)
    return overlap / len(query_words)


def closest_match(query_title: str, tax: Taxonomy) -> MatchResult:
    """Code whose title maximizes word overlap with the query.

    Ties break toward the lexicographically smallest code so reruns are
    deterministic. A best score of 0 still returns that code, flagged
    low_confidence.
    """
    if len(tax) == 0:
        raise ValueError("cannot match against an empty taxonomy")
    best_code = None
    best_score = -1.0
    for code in sorted(tax.entries):
        score = word_overlap_sim(query_title, tax.entries[code].title)
        if score > best_score:
            best_code, best_score = code, score
    return MatchResult(code=best_code, score=best_score, low_confidence=best_score == 0.0)


def build_soc6_crosswalk(tables: Iterable[CrosswalkTable]) -> list[CrosswalkTable]:
    """Derive 6-digit crosswalk tables by truncating 8-digit mappings.

    Used for wage-table standardization, where codes are 6-digit. Rows whose
    codes are already 6-digit pass through untouched.
    """
    out = []
    for table in tables:
        mapping: dict[str, set[str]] = {}
        for old, news in table.mapping.items():
            old6 = soc6(old) if is_soc_code(old) else old
            target = mapping.setdefault(old6, set())
            target.update(soc6(n) if is_soc_code(n) else n for n in news)
        out.append(
            CrosswalkTable(
                from_version=table.from_version,
                to_version=table.to_version,
                mapping={k: frozenset(v) for k, v in mapping.items()},
            )
        )
    return out
