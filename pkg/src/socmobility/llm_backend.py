"""Completion-backend contract used by the occupation classifier.

Two implementations: a deterministic mock (pure function of the prompt, for
hermetic runs and tests) and a chat-completion-style HTTP client. All LLM
traffic in the package flows through this contract; no other module builds
network requests.
"""

from __future__ import annotations

import os
import re
import threading
import time
from dataclasses import dataclass, field
from typing import Callable, Mapping

import requests

from .errors import AuthError, BackendError, ConfigError, ResponseFormatError, TransportError
from .taxonomy import word_overlap_sim

GENERATION_PROMPT_MARKER = "You are an expert O*NET-SOC 2019 coder"
SELECTION_PROMPT_MARKER = "Select the O*NET-SOC that best describes"

NON_OCCUPATIONAL_WORDS = frozenset({"student", "intern", "volunteer", "founder", "owner", "member"})

#: Ordered keyword -> (SOC title, SOC code) fallback used by the mock when a
#: task line has no canned answer. First match (in this order) wins. Codes
#: marked legacy are pre-2019 on purpose, so fixture runs exercise the
#: crosswalk and selection paths.
DEFAULT_KEYWORD_SOCS: dict[str, tuple[str, str]] = {
    "systems analyst": ("Computer Systems Analysts", "15-1121.00"),  # legacy 2010
    "medical records": ("Medical Records and Health Information Technicians", "29-2071.00"),  # legacy 2010
    "web developer": ("Web Developers", "15-1134.00"),  # legacy 2010
    "software": ("Software Developers", "15-1252.00"),
    "data scientist": ("Data Scientists", "15-2051.00"),
    "financial analyst": ("Financial and Investment Analysts", "13-2051.00"),
    "project manager": ("Project Management Specialists", "13-1082.00"),
    "sales manager": ("Sales Managers", "11-2022.00"),
    "marketing": ("Marketing Managers", "11-2021.00"),
    "human resources": ("Human Resources Specialists", "13-1071.00"),
    "recruiter": ("Human Resources Specialists", "13-1071.00"),
    "accountant": ("Accountants and Auditors", "13-2011.00"),
    "auditor": ("Accountants and Auditors", "13-2011.00"),
    "economist": ("Economists", "19-3011.00"),
    "agronomist": ("Soil and Plant Scientists", "19-1013.00"),
    "farm": ("Farmers, Ranchers, and Other Agricultural Managers", "11-9013.00"),
    "rancher": ("Farmers, Ranchers, and Other Agricultural Managers", "11-9013.00"),
    "chief executive": ("Chief Executives", "11-1011.00"),
    "ceo": ("Chief Executives", "11-1011.00"),
    "nurse": ("Registered Nurses", "29-1141.00"),
    "physician": ("General Internal Medicine Physicians", "29-1216.00"),
    "pharmacist": ("Pharmacists", "29-1051.00"),
    "teacher": ("Secondary School Teachers, Except Special and Career/Technical Education", "25-2031.00"),
    "lawyer": ("Lawyers", "23-1011.00"),
    "attorney": ("Lawyers", "23-1011.00"),
    "paralegal": ("Paralegals and Legal Assistants", "23-2011.00"),
    "electrician": ("Electricians", "47-2111.00"),
    "mechanic": ("Automotive Service Technicians and Mechanics", "49-3023.00"),
    "barista": ("Baristas", "35-3023.01"),
    "waiter": ("Waiters and Waitresses", "35-3031.00"),
    "cook": ("Cooks, Restaurant", "35-2014.00"),
    "janitor": ("Janitors and Cleaners, Except Maids and Housekeeping Cleaners", "37-2011.00"),
    "truck driver": ("Heavy and Tractor-Trailer Truck Drivers", "53-3032.00"),
    "cashier": ("Cashiers", "41-2011.00"),
    "customer service": ("Customer Service Representatives", "43-4051.00"),
    "administrative assistant": (
        "Secretaries and Administrative Assistants, Except Legal, Medical, and Executive",
        "43-6014.00",
    ),
    "receptionist": ("Receptionists and Information Clerks", "43-4171.00"),
    "graphic designer": ("Graphic Designers", "27-1024.00"),
    "designer": ("Graphic Designers", "27-1024.00"),
    "writer": ("Writers and Authors", "27-3043.00"),
    "editor": ("Editors", "27-3041.00"),
    "engineer": ("Mechanical Engineers", "17-2141.00"),
    "technician": ("Industrial Engineering Technologists and Technicians", "17-3026.00"),
    "analyst": ("Management Analysts", "13-1111.00"),
    "consultant": ("Management Analysts", "13-1111.00"),
    "sales": ("Retail Salespersons", "41-2031.00"),
    "manager": ("General and Operations Managers", "11-1021.00"),
    "director": ("General and Operations Managers", "11-1021.00"),
}

#: Returned when nothing else matches: syntactically valid but nonexistent,
#: which pushes the classifier onto its word-overlap fallback.
DEFAULT_GUESS = ("Miscellaneous Workers", "99-9999.00")


@dataclass(frozen=True)
class CompletionRequest:
    prompt: str
    temperature: float = 0.0
    max_output_tokens: int = 1024

    def __post_init__(self):
        if not self.prompt:
            raise ValueError("prompt must be non-empty")
        if self.temperature < 0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature}")


@dataclass(frozen=True)
class BackendDescriptor:
    kind: str  # "mock" or "http"
    model_name: str = "mock-soc-coder"
    endpoint: str | None = None
    credentials_env_var: str | None = None
    max_in_flight: int = 4
    max_attempts: int = 3
    backoff_start_s: float = 1.0
    timeout_s: float = 60.0

    def __post_init__(self):
        if self.kind not in ("mock", "http"):
            raise ValueError(f"unknown backend kind {self.kind!r}")
        if self.kind == "http" and (not self.endpoint or not self.credentials_env_var):
            raise ValueError("http backend requires endpoint and credentials_env_var")


def _task_block(prompt: str, header: str) -> list[str]:
    """Lines of the final ``header ... Answers:`` block of a rendered prompt."""
    start = prompt.rfind(header)
    if start < 0:
        return []
    body = prompt[start + len(header):]
    end = body.rfind("Answers:")
    if end >= 0:
        body = body[:end]
    return [ln.strip() for ln in body.splitlines() if ln.strip()]


_GEN_TASK_RE = re.compile(r"^(T\d+)\s*;\s*(.*)$")
_SEL_TASK_RE = re.compile(r"^(T\d+)\.\s*(.*?)\s*//\s*options:\s*(.*)$")
_SEL_OPTION_RE = re.compile(r"(\d+)\.\s*([^;]+?)\s*\((\d{2}-\d{4}\.\d{2})\)")


class MockCompletionBackend:
    """Deterministic stand-in for a chat-completion API.

    Answers are a pure function of the prompt: task lines are matched against
    a canned table first (exact ``"title, company"`` text), then against an
    ordered keyword table, then a fixed guess. Flag rules: a non-occupational
    word anywhere in the task text sets flag 2; " and " or "/" sets flag 3.
    Selection prompts are answered by word overlap against each option title.
    """

    def __init__(
        self,
        canned: Mapping[str, str] | None = None,
        keyword_table: Mapping[str, tuple[str, str]] | None = None,
    ):
        self.canned = dict(canned or {})
        self.keyword_table = dict(keyword_table if keyword_table is not None else DEFAULT_KEYWORD_SOCS)

    def register(self, task_text: str, answer_tail: str) -> None:
        """Pin an exact answer: ``answer_tail`` is everything after ``"Tn; "``."""
        self.canned[task_text] = answer_tail

    def complete(self, request: CompletionRequest) -> str:
        prompt = request.prompt
        if SELECTION_PROMPT_MARKER in prompt and GENERATION_PROMPT_MARKER not in prompt:
            return self._answer_selection(prompt)
        return self._answer_generation(prompt)

    def _answer_generation(self, prompt: str) -> str:
        lines = []
        for raw in _task_block(prompt, "Input texts:"):
            m = _GEN_TASK_RE.match(raw)
            if not m:
                continue
            tid, text = m.group(1), m.group(2)
            lines.append(f"{tid}; {self._label(text)}")
        return "\n".join(lines)

    def _label(self, task_text: str) -> str:
        lowered = task_text.lower()
        words = set(re.findall(r"[a-z]+", lowered))
        non_occ = "Y" if words & NON_OCCUPATIONAL_WORDS else "N"
        multi = "Y" if (" and " in lowered or "/" in lowered) else "N"
        if task_text in self.canned:
            return self.canned[task_text]
        if "student" in words:
            return f"Student; Y; {multi}"
        for keyword, (title, code) in self.keyword_table.items():
            if keyword in lowered:
                return f"{title}:{code}; {non_occ}; {multi}"
        title, code = DEFAULT_GUESS
        return f"{title}:{code}; {non_occ}; {multi}"

    def _answer_selection(self, prompt: str) -> str:
        answers = []
        for raw in _task_block(prompt, "---"):
            m = _SEL_TASK_RE.match(raw)
            if not m:
                continue
            tid, job_text, options_text = m.groups()
            options = _SEL_OPTION_RE.findall(options_text)
            if not options:
                continue
            scored = [(word_overlap_sim(job_text, title), -int(num)) for num, title, _ in options]
            best_idx = max(range(len(options)), key=lambda i: scored[i])
            answers.append(f"{tid}:{options[best_idx][0]}")
        return "\n".join(answers)


class HttpCompletionBackend:
    """Chat-completion HTTP client with bounded retries and an in-flight cap.

    Credentials come only from the environment variable named in the
    descriptor, checked before any network call. Transient transport faults
    (connection errors, timeouts, 429, 5xx) are retried with exponential
    backoff; auth rejections and other 4xx are not.
    """

    def __init__(
        self,
        descriptor: BackendDescriptor,
        post: Callable[..., "requests.Response"] | None = None,
        sleep: Callable[[float], None] = time.sleep,
    ):
        if descriptor.kind != "http":
            raise ValueError("descriptor is not an http backend")
        self.descriptor = descriptor
        self._post = post or requests.post
        self._sleep = sleep
        self._gate = threading.Semaphore(descriptor.max_in_flight)

    def _credentials(self) -> str:
        var = self.descriptor.credentials_env_var
        value = os.environ.get(var or "")
        if not value:
            raise ConfigError(f"credentials variable {var!r} is unset or empty")
        return value

    def complete(self, request: CompletionRequest) -> str:
        token = self._credentials()
        payload = {
            "model": self.descriptor.model_name,
            "messages": [{"role": "user", "content": request.prompt}],
            "temperature": request.temperature,
            "max_tokens": request.max_output_tokens,
        }
        headers = {"Authorization": f"Bearer {token}", "Content-Type": "application/json"}
        last_error: BackendError | None = None
        with self._gate:
            for attempt in range(self.descriptor.max_attempts):
                if attempt:
                    self._sleep(self.descriptor.backoff_start_s * 2 ** (attempt - 1))
                try:
                    response = self._post(
                        self.descriptor.endpoint,
                        json=payload,
                        headers=headers,
                        timeout=self.descriptor.timeout_s,
                    )
                except requests.RequestException as exc:
                    last_error = TransportError(f"transport failure: {exc}")
                    continue
                status = response.status_code
                if status in (401, 403):
                    raise AuthError(f"authentication rejected (HTTP {status})")
                if status == 429 or status >= 500:
                    last_error = TransportError(f"retryable HTTP {status}")
                    continue
                if status >= 400:
                    raise BackendError(f"HTTP {status}: {response.text[:200]}")
                try:
                    body = response.json()
                    return body["choices"][0]["message"]["content"]
                except (ValueError, KeyError, IndexError, TypeError) as exc:
                    raise ResponseFormatError(f"malformed completion body: {exc}") from exc
        raise TransportError(
            f"gave up after {self.descriptor.max_attempts} attempts: {last_error}"
        )


def build_backend(descriptor: BackendDescriptor, **mock_kwargs):
    if descriptor.kind == "mock":
        return MockCompletionBackend(**mock_kwargs)
    return HttpCompletionBackend(descriptor)


def complete(request: CompletionRequest, backend) -> str:
    """Run one completion through whichever backend implementation is given."""
    return backend.complete(request)
