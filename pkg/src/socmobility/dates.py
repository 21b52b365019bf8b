"""Year-month dates and duration arithmetic.

Resume data rarely carries day-of-month, so every date in the pipeline is a
calendar (year, month) pair. Durations are counted in whole months and
converted to years as months / 12.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_YM_RE = re.compile(r"^(\d{4})-(\d{2})$")

MONTHS_PER_YEAR = 12


@dataclass(frozen=True, order=True)
class YearMonth:
    year: int
    month: int

    def __post_init__(self):
        if not 1 <= self.month <= 12:
            raise ValueError(f"month out of range: {self.month}")

    @classmethod
    def parse(cls, text: str) -> "YearMonth":
        m = _YM_RE.match(text.strip())
        if not m:
            raise ValueError(f"not a YYYY-MM date: {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.year:04d}-{self.month:02d}"

    @property
    def total_months(self) -> int:
        return self.year * MONTHS_PER_YEAR + (self.month - 1)

    def add_months(self, n: int) -> "YearMonth":
        t = self.total_months + n
        return YearMonth(t // MONTHS_PER_YEAR, t % MONTHS_PER_YEAR + 1)

    def add_years(self, years: float) -> "YearMonth":
        """Shift by a (possibly fractional) number of years, rounded to whole months."""
        return self.add_months(round(years * MONTHS_PER_YEAR))


def months_between(later: YearMonth, earlier: YearMonth) -> int:
    return later.total_months - earlier.total_months


def years_between(later: YearMonth, earlier: YearMonth) -> float:
    """Signed duration in fractional years (1 month = 1/12 year)."""
    return months_between(later, earlier) / MONTHS_PER_YEAR
