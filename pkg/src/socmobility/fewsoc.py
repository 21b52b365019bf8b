"""Two-stage few-shot occupation coding.

Stage one prompts a completion backend with k-shot examples to emit, per job
title-company pair, an occupation title:code plus two auxiliary Y/N flags
(non-occupational role, multiple roles). Stage two repairs codes that are
not valid 2019 entries: chain them through crosswalks, let the backend pick
among multiple candidates, and fall back to word-overlap title matching when
no candidate survives.
"""

from __future__ import annotations

import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .errors import BackendError, DataError
from .llm_backend import CompletionRequest
from .taxonomy import (
    CrosswalkTable,
    Taxonomy,
    closest_match,
    crosswalk_resolve,
    is_soc_code,
    is_valid,
)

STUDENT_SENTINEL = "Student"
DEFAULT_MAX_BATCH = 5
DEFAULT_SHOT_COUNT = 17

GENERATION_TEMPLATE = (
    "You are an expert O*NET-SOC 2019 coder. Given a list of job title-company name pairs "
    "in input texts, assign the following labels for each input text:\n"
    "1. Occupational title and code from the O*NET-SOC 2019. Separate the title and code "
    "with colon. If no suitable answer is available, a best or random guess is fine. "
    "If the input text mentions a student, answer 'Student'.\n"
    "2. Yes (Y) or no (N) to whether the input text mentions a non-occupational role or not. "
    "Non-occupational roles typically include keywords such as intern, student, volunteer, "
    "founder, owner, member, etc.\n"
    "3. Yes (Y) or no (N) to whether the input text mentions multiple roles or not.\n"
    "Separated each label with semi-colon. Do not explain.\n"
    "---\n"
    "Answer format:\n"
    "Task ID; Label 1; Label 2; Label 3\n"
    "---\n"
    "Examples:\n"
    "{examples}\n"
    "---\n"
    "Input texts:\n"
    "{data}\n"
    "Answers:\n"
)

SELECTION_TEMPLATE = (
    "Select the O*NET-SOC that best describes each job title-company name pair below. "
    "Choose only one number from the options provided. Do not explain.\n"
    "---\n"
    "Examples:\n"
    "T1. social media manager, mcs - midwest conference service // options: "
    "1. Public Relations Managers (11-2032.00); 2. Fundraising Managers (11-2033.00)\n"
    "T2. medical scribe, proscribe // options: "
    "1. Medical Records Specialists (29-2072.00); "
    "2. Health Information Technologists and Medical Registrars (29-9021.00)\n"
    "Answers:\n"
    "T1:1\n"
    "T2:1\n"
    "---\n"
    "{data}\n"
    "Answers:\n"
)

RESOLUTION_PATHS = (
    "direct_valid",
    "crosswalk_unique",
    "crosswalk_llm_selected",
    "word_overlap_fallback",
)


@dataclass(frozen=True)
class FewShotExampleSet:
    """Ordered shot pairs: task line ``"title, company"``, answer line ``"Title:code; Y/N; Y/N"``."""

    examples: tuple[tuple[str, str], ...]

    @property
    def k(self) -> int:
        return len(self.examples)

    def __post_init__(self):
        for i, (task, answer) in enumerate(self.examples, start=1):
            if not task.strip():
                raise ValueError(f"shot {i}: empty task line")
            head = answer.split(";", 1)[0].strip()
            if head != STUDENT_SENTINEL:
                if ":" not in head:
                    raise ValueError(f"shot {i}: answer lacks 'Title:code': {answer!r}")
                code = head.rsplit(":", 1)[1].strip()
                if not is_soc_code(code):
                    raise ValueError(f"shot {i}: malformed SOC code {code!r}")


def load_shot_set(path: str | Path) -> FewShotExampleSet:
    """Load shots stored in the same two-block layout the prompt uses.

    The file is a literal ``Input texts:`` block of ``Tn; title, company``
    lines followed by an ``Answers:`` block of ``Tn; Title:code; Y; N``
    lines, with matching task ids.
    """
    text = Path(path).read_text(encoding="utf-8")
    tasks: dict[str, str] = {}
    answers: dict[str, str] = {}
    section = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "Input texts:":
            section = tasks
            continue
        if line == "Answers:":
            section = answers
            continue
        m = re.match(r"^(T\d+)\s*;\s*(.*)$", line)
        if section is None or not m:
            raise DataError(f"{path}: unparseable shot line {line!r}")
        section[m.group(1)] = m.group(2)
    if set(tasks) != set(answers):
        raise DataError(f"{path}: task/answer ids differ: {sorted(set(tasks) ^ set(answers))}")
    ordered = sorted(tasks, key=lambda t: int(t[1:]))
    return FewShotExampleSet(examples=tuple((tasks[t], answers[t]) for t in ordered))


@dataclass(frozen=True)
class GenerationRecord:
    task_id: str
    soc_title: str
    soc_code: str  # SOC-shaped code, free-text guess, or the Student sentinel
    non_occupational: bool
    multi_role: bool

    @property
    def is_student(self) -> bool:
        return self.soc_code == STUDENT_SENTINEL


@dataclass(frozen=True)
class ParseIssue:
    task_id: str | None
    message: str


@dataclass
class ClassificationResult:
    title: str
    company: str
    generated_title: str = ""
    generated_code: str = ""
    final_code: str | None = None
    resolution_path: str | None = None
    non_occupational: bool = False
    multi_role: bool = False
    low_confidence: bool = False
    unclassified: bool = False
    backend_failed: bool = False


def render_generation_prompt(
    batch: Sequence[tuple[str, str]],
    shots: FewShotExampleSet,
    max_batch: int = DEFAULT_MAX_BATCH,
) -> str:
    """Render the generation prompt for up to ``max_batch`` jobs; byte-stable."""
    if not batch:
        raise ValueError("empty batch")
    if len(batch) > max_batch:
        raise ValueError(f"batch of {len(batch)} exceeds max {max_batch}")
    example_tasks = "\n".join(
        f"T{i}; {task}" for i, (task, _) in enumerate(shots.examples, start=1)
    )
    example_answers = "\n".join(
        f"T{i}; {answer}" for i, (_, answer) in enumerate(shots.examples, start=1)
    )
    examples = f"Input texts:\n{example_tasks}\nAnswers:\n{example_answers}"
    data = "\n".join(
        f"T{i}; {title}, {company}" for i, (title, company) in enumerate(batch, start=1)
    )
    return GENERATION_TEMPLATE.replace("{examples}", examples).replace("{data}", data)


_ANSWER_LINE_RE = re.compile(r"^\s*(T\d+)\s*;\s*(.*?)\s*$")


def parse_generation_response(
    text: str, expected_ids: Sequence[str]
) -> tuple[list[GenerationRecord], list[ParseIssue]]:
    """Parse ``Tn; Title:code; Y; N`` lines; never raises on garbage.

    Unknown, duplicate, and missing task ids as well as lines that fail the
    grammar come back as ParseIssue entries; well-formed lines still parse.
    """
    expected = list(expected_ids)
    records: dict[str, GenerationRecord] = {}
    issues: list[ParseIssue] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        m = _ANSWER_LINE_RE.match(line)
        if not m:
            issues.append(ParseIssue(None, f"unrecognized line {line!r}"))
            continue
        tid, rest = m.group(1), m.group(2)
        if tid not in expected:
            issues.append(ParseIssue(tid, f"unknown task id {tid}"))
            continue
        if tid in records:
            issues.append(ParseIssue(tid, f"duplicate answer for {tid}"))
            continue
        parts = [p.strip() for p in rest.split(";")]
        if len(parts) != 3:
            issues.append(ParseIssue(tid, f"expected 3 labels, got {len(parts)}: {line!r}"))
            continue
        label, flag_non_occ, flag_multi = parts
        if flag_non_occ not in ("Y", "N") or flag_multi not in ("Y", "N"):
            issues.append(ParseIssue(tid, f"flags must be Y or N: {line!r}"))
            continue
        if label == STUDENT_SENTINEL:
            title, code = "", STUDENT_SENTINEL
        elif ":" in label:
            title, code = (s.strip() for s in label.rsplit(":", 1))
            if not code:
                issues.append(ParseIssue(tid, f"empty code after colon: {line!r}"))
                continue
        else:
            issues.append(ParseIssue(tid, f"missing 'Title:code' separator: {line!r}"))
            continue
        records[tid] = GenerationRecord(
            task_id=tid,
            soc_title=title,
            soc_code=code,
            non_occupational=(flag_non_occ == "Y") or code == STUDENT_SENTINEL,
            multi_role=flag_multi == "Y",
        )
    for tid in expected:
        if tid not in records:
            if not any(issue.task_id == tid for issue in issues):
                issues.append(ParseIssue(tid, f"no answer line for {tid}"))
    return [records[t] for t in expected if t in records], issues


@dataclass(frozen=True)
class SelectionItem:
    title: str
    company: str
    candidates: tuple[tuple[str, str], ...]  # (soc_title, soc_code), already ordered

    def __post_init__(self):
        if len(self.candidates) < 2:
            raise ValueError("selection needs at least 2 candidates; short-circuit singletons")


def render_selection_prompt(items: Sequence[SelectionItem]) -> str:
    """Render the candidate-selection prompt; option numbering restarts per item."""
    if not items:
        raise ValueError("no selection items")
    lines = []
    for i, item in enumerate(items, start=1):
        options = "; ".join(
            f"{k}. {title} ({code})" for k, (title, code) in enumerate(item.candidates, start=1)
        )
        lines.append(f"T{i}. {item.title}, {item.company} // options: {options}")
    return SELECTION_TEMPLATE.replace("{data}", "\n".join(lines))


_SELECTION_ANSWER_RE = re.compile(r"^\s*(T\d+)\s*:\s*(\d+)\s*$")


def parse_selection_response(
    text: str, items: Sequence[SelectionItem]
) -> tuple[dict[str, int], list[ParseIssue]]:
    """Map task ids to 1-based chosen option; range/missing problems become issues."""
    sizes = {f"T{i}": len(item.candidates) for i, item in enumerate(items, start=1)}
    choices: dict[str, int] = {}
    issues: list[ParseIssue] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        m = _SELECTION_ANSWER_RE.match(line)
        if not m:
            issues.append(ParseIssue(None, f"unrecognized answer line {line!r}"))
            continue
        tid, num = m.group(1), int(m.group(2))
        if tid not in sizes:
            issues.append(ParseIssue(tid, f"unknown task id {tid}"))
            continue
        if tid in choices:
            issues.append(ParseIssue(tid, f"duplicate answer for {tid}"))
            continue
        if not 1 <= num <= sizes[tid]:
            issues.append(ParseIssue(tid, f"choice {num} out of range 1..{sizes[tid]}"))
            continue
        choices[tid] = num
    for tid in sizes:
        if tid not in choices and not any(issue.task_id == tid for issue in issues):
            issues.append(ParseIssue(tid, f"no answer for {tid}"))
    return choices, issues


def _fallback(result: ClassificationResult, tax: Taxonomy) -> None:
    query = result.generated_title
    if not query.strip():
        query = result.title
        result.low_confidence = True
    match = closest_match(query.strip().lower(), tax)
    result.final_code = match.code
    result.low_confidence = result.low_confidence or match.low_confidence
    result.resolution_path = "word_overlap_fallback"


def classify_batch(
    jobs: Sequence[tuple[str, str]],
    backend,
    shots: FewShotExampleSet,
    tax: Taxonomy,
    crosswalks: Sequence[CrosswalkTable] = (),
    max_batch: int = DEFAULT_MAX_BATCH,
) -> list[ClassificationResult]:
    """Classify one batch end to end; every emitted code is valid in ``tax``.

    Per job: generate a label; valid code -> direct_valid; otherwise chain
    crosswalks (unique image -> crosswalk_unique; several -> backend
    selection -> crosswalk_llm_selected; none, or selection failure ->
    word-overlap fallback on the generated title). Student-sentinel answers
    produce a flagged result with no code. A backend failure on the
    generation call marks the whole batch unclassified so the caller can
    resume; a malformed answer line earns one singleton re-ask first.
    """
    if not jobs:
        raise ValueError("empty batch")
    if len(jobs) > max_batch:
        raise ValueError(f"batch of {len(jobs)} exceeds max {max_batch}")
    results = [ClassificationResult(title=t, company=c) for t, c in jobs]

    def generate(batch_jobs: Sequence[tuple[str, str]]) -> tuple[list, list]:
        prompt = render_generation_prompt(batch_jobs, shots, max_batch=max_batch)
        text = backend.complete(CompletionRequest(prompt=prompt))
        return parse_generation_response(text, [f"T{i}" for i in range(1, len(batch_jobs) + 1)])

    try:
        records, _ = generate(jobs)
    except BackendError:
        for r in results:
            r.unclassified = True
            r.backend_failed = True
        return results

    by_tid = {rec.task_id: rec for rec in records}
    assigned: dict[int, GenerationRecord] = {}
    for i in range(len(jobs)):
        tid = f"T{i + 1}"
        if tid in by_tid:
            assigned[i] = by_tid[tid]
        else:
            # one re-ask in a singleton batch, then give up on this job
            try:
                retry_records, _ = generate([jobs[i]])
            except BackendError:
                retry_records = []
            if retry_records:
                assigned[i] = retry_records[0]
            else:
                results[i].unclassified = True

    pending_selection: list[tuple[int, SelectionItem]] = []
    for i, rec in assigned.items():
        result = results[i]
        result.generated_title = rec.soc_title
        result.generated_code = "" if rec.is_student else rec.soc_code
        result.non_occupational = rec.non_occupational
        result.multi_role = rec.multi_role
        if rec.is_student:
            continue  # feeds the cleaning filter, never the resolver
        if is_valid(rec.soc_code, tax):
            result.final_code = rec.soc_code
            result.resolution_path = "direct_valid"
            continue
        resolved = sorted(crosswalk_resolve(rec.soc_code, crosswalks, tax))
        if len(resolved) == 1:
            result.final_code = resolved[0]
            result.resolution_path = "crosswalk_unique"
        elif len(resolved) > 1:
            candidates = tuple((tax.entries[c].title, c) for c in resolved)
            pending_selection.append(
                (i, SelectionItem(title=result.title, company=result.company, candidates=candidates))
            )
        else:
            _fallback(result, tax)

    if pending_selection:
        items = [item for _, item in pending_selection]
        try:
            text = backend.complete(CompletionRequest(prompt=render_selection_prompt(items)))
            choices, _ = parse_selection_response(text, items)
        except BackendError:
            choices = {}
        for pos, (i, item) in enumerate(pending_selection, start=1):
            result = results[i]
            choice = choices.get(f"T{pos}")
            if choice is None:
                _fallback(result, tax)
            else:
                result.final_code = item.candidates[choice - 1][1]
                result.resolution_path = "crosswalk_llm_selected"

    for result in results:
        if result.final_code is not None and result.final_code not in tax:
            raise AssertionError(f"invalid code escaped resolution: {result.final_code}")
    return results


def classify_jobs(
    jobs: Sequence[tuple[str, str]],
    backend,
    shots: FewShotExampleSet,
    tax: Taxonomy,
    crosswalks: Sequence[CrosswalkTable] = (),
    batch_size: int = DEFAULT_MAX_BATCH,
    max_workers: int = 1,
    on_batch_done: Callable[[int, list[ClassificationResult]], None] | None = None,
) -> list[ClassificationResult]:
    """Classify a job list in batches, reassembling results in input order.

    ``max_workers`` > 1 classifies batches concurrently (bounded further by
    the backend's own in-flight cap); per-job outcomes do not depend on the
    partitioning. ``on_batch_done(start_index, results)`` fires as each batch
    lands, in input order, for checkpointing.
    """
    if batch_size < 1:
        raise ValueError("batch_size must be >= 1")
    chunks = [
        (start, list(jobs[start : start + batch_size]))
        for start in range(0, len(jobs), batch_size)
    ]
    out: list[ClassificationResult] = [None] * len(jobs)  # type: ignore[list-item]

    def run(chunk):
        start, batch = chunk
        return start, classify_batch(batch, backend, shots, tax, crosswalks, max_batch=batch_size)

    def settle(start: int, batch_results: list[ClassificationResult]) -> None:
        out[start : start + len(batch_results)] = batch_results
        if on_batch_done is not None:
            on_batch_done(start, batch_results)

    if max_workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            for start, batch_results in pool.map(run, chunks):
                settle(start, batch_results)
    else:
        for chunk in chunks:
            settle(*run(chunk))
    return out


def resolution_path_counts(results: Sequence[ClassificationResult]) -> dict[str, int]:
    """Counts per resolution path; they sum to the number of classified jobs."""
    counts = {path: 0 for path in RESOLUTION_PATHS}
    for r in results:
        if r.resolution_path is not None:
            counts[r.resolution_path] += 1
    return counts
