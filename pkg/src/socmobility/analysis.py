"""Upward-mobility regressions and descriptive statistics.

Four fixed-effects logistic models over the enriched records, with N-1 dummy
coding (reference levels absorbed into the intercept): a main-effects model,
gender x change-type and race x change-type interaction models, and the race
interaction model stratified by gender. The type-4 flag never enters as a
predictor; it is determined by the other three. Fitting is plain maximum
likelihood via iteratively reweighted least squares with observed-information
standard errors and normal-approximation p-values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .enrichment import EnrichedRecord
from .taxonomy import MAJOR_GROUP_TITLES

REFERENCES = {
    "gender": "male",
    "race": "white",
    "education": "bachelor",
    "generation": "gen_x",
    "occ2": "11",
    "ind2": "11",
}

#: Non-reference levels per categorical, in report order.
CATEGORICAL_LEVELS = {
    "gender": ("female",),
    "race": ("black", "asian", "hispanic"),
    "education": ("doctorate", "master"),
    "generation": ("millennial",),
}

ALL_LEVELS = {
    "gender": ("male", "female"),
    "race": ("white", "black", "asian", "hispanic"),
    "education": ("bachelor", "doctorate", "master"),
    "generation": ("gen_x", "millennial"),
}

LEVEL_DISPLAY = {
    "female": "Female",
    "black": "Black",
    "asian": "Asian",
    "hispanic": "Hispanic",
    "doctorate": "Doctorate",
    "master": "Master's Degree",
    "millennial": "Millennials",
}

FLAG_DISPLAY = {"type1": "Type-1 Change", "type2": "Type-2 Change", "type3": "Type-3 Change"}

MODEL_COLUMN_ORDER = ("M1", "M2", "M3", "M4-Male", "M4-Female")

DEFAULT_RARE_LEVEL_THRESHOLD = 30
SEPARATION_BOUND = 30.0


@dataclass(frozen=True)
class ModelSpec:
    id: str
    interactions: tuple[tuple[str, str], ...] = ()
    strata: str | None = None
    controls: tuple[str, ...] = ("occ2", "ind2")
    reference_categories: Mapping[str, str] = field(default_factory=lambda: dict(REFERENCES))


MODEL_SPECS = {
    "M1_main": ModelSpec(id="M1_main"),
    "M2_gender_x_type": ModelSpec(
        id="M2_gender_x_type",
        interactions=(("gender", "type1"), ("gender", "type2"), ("gender", "type3")),
    ),
    "M3_race_x_type": ModelSpec(
        id="M3_race_x_type",
        interactions=(("race", "type1"), ("race", "type2"), ("race", "type3")),
    ),
    "M4_stratified": ModelSpec(
        id="M4_stratified",
        interactions=(("race", "type1"), ("race", "type2"), ("race", "type3")),
        strata="gender",
    ),
}


@dataclass
class DesignMatrix:
    X: np.ndarray
    columns: list[str]
    y: np.ndarray

    @property
    def n(self) -> int:
        return self.X.shape[0]


def _flag_value(record: EnrichedRecord, flag: str) -> int:
    return int(getattr(record.flags, flag))


def _categorical_value(record: EnrichedRecord, var: str) -> str:
    value = {"gender": record.gender, "race": record.race,
             "education": record.education, "generation": record.generation}[var]
    if value not in ALL_LEVELS[var]:
        raise ValueError(f"unseen {var} level {value!r} on profile {record.profile_id}")
    return value


def _control_columns(
    records: Sequence[EnrichedRecord], var: str, reference: str, rare_threshold: int
) -> tuple[list[str], dict[str, str]]:
    """Observed non-reference levels (rare ones merged to 'other') and the relabel map."""
    counts: dict[str, int] = {}
    for r in records:
        level = getattr(r, var)
        counts[level] = counts.get(level, 0) + 1
    relabel = {}
    kept = set()
    for level, count in counts.items():
        if level == reference:
            continue
        if count < rare_threshold:
            relabel[level] = "other"
        else:
            kept.add(level)
    ordered = sorted(kept)
    if relabel:
        ordered.append("other")
    return ordered, relabel


def encode_design(
    records: Sequence[EnrichedRecord],
    spec: ModelSpec,
    rare_level_threshold: int = DEFAULT_RARE_LEVEL_THRESHOLD,
) -> list[tuple[str, DesignMatrix]]:
    """Build N-1 dummy-coded matrices for a model; stratified specs yield one per stratum.

    Columns: intercept, non-reference dummies, continuous covariates, the
    three change-type flags, any interaction products, then the 2-digit
    occupation and industry control blocks (levels rarer than the threshold
    merged into 'other'). Raises on unseen levels and on zero-variance columns.
    """
    if not records:
        raise ValueError("no records to encode")
    if spec.strata is not None:
        strata_levels = ALL_LEVELS[spec.strata]
        out = []
        for level in strata_levels:
            subset = [r for r in records if _categorical_value(r, spec.strata) == level]
            if not subset:
                raise ValueError(f"stratum {level!r} is empty")
            sub_spec = ModelSpec(
                id=spec.id,
                interactions=spec.interactions,
                strata=None,
                controls=spec.controls,
                reference_categories=spec.reference_categories,
            )
            _, design = _encode_single(subset, sub_spec, rare_level_threshold,
                                       drop_factors=(spec.strata,))[0]
            out.append((level, design))
        return out
    return _encode_single(records, spec, rare_level_threshold, drop_factors=())


def _encode_single(
    records: Sequence[EnrichedRecord],
    spec: ModelSpec,
    rare_threshold: int,
    drop_factors: tuple[str, ...],
) -> list[tuple[str, DesignMatrix]]:
    columns: list[str] = ["Intercept"]
    builders = [lambda r: 1.0]

    def add(name, fn):
        columns.append(name)
        builders.append(fn)

    for var in ("gender", "race", "education", "generation"):
        if var in drop_factors:
            continue
        for level in CATEGORICAL_LEVELS[var]:
            add(
                LEVEL_DISPLAY[level],
                lambda r, v=var, lv=level: float(_categorical_value(r, v) == lv),
            )

    add("Regional Economic Ranking", lambda r: float(r.regional_rank))
    add("Log(Wage)", lambda r: r.log_w1)
    add("Job Mobility", lambda r: float(r.mobility))
    for flag in ("type1", "type2", "type3"):
        add(FLAG_DISPLAY[flag], lambda r, f=flag: float(_flag_value(r, f)))

    for var, flag in spec.interactions:
        if var in drop_factors:
            continue
        for level in CATEGORICAL_LEVELS[var]:
            add(
                f"{LEVEL_DISPLAY[level]} x {FLAG_DISPLAY[flag]}",
                lambda r, v=var, lv=level, f=flag: float(
                    _categorical_value(r, v) == lv
                ) * _flag_value(r, f),
            )

    control_display = {"occ2": "Occupation", "ind2": "Industry"}
    for var in spec.controls:
        reference = spec.reference_categories.get(var, REFERENCES[var])
        levels, relabel = _control_columns(records, var, reference, rare_threshold)
        for level in levels:
            def control_fn(r, v=var, lv=level, rl=relabel, ref=reference):
                value = getattr(r, v)
                value = rl.get(value, value)
                return float(value == lv)

            add(f"{control_display[var]} {level}", control_fn)

    X = np.empty((len(records), len(columns)), dtype=float)
    for i, record in enumerate(records):
        for j, fn in enumerate(builders):
            X[i, j] = fn(record)
    if not np.isfinite(X).all():
        raise ValueError("design matrix contains non-finite entries")
    for j, name in enumerate(columns):
        if j > 0 and np.all(X[:, j] == X[0, j]):
            raise ValueError(f"zero-variance column {name!r}")
    y = np.asarray([r.upward for r in records], dtype=float)
    return [("all", DesignMatrix(X=X, columns=columns, y=y))]


@dataclass
class FitResult:
    columns: list[str]
    estimates: np.ndarray
    std_errors: np.ndarray
    z_values: np.ndarray
    p_values: np.ndarray
    converged: bool
    iterations: int
    log_likelihood: float
    grad_max_norm: float
    separation: bool
    n: int

    def coef(self, name: str) -> float:
        return float(self.estimates[self.columns.index(name)])

    def p_value(self, name: str) -> float:
        return float(self.p_values[self.columns.index(name)])


def significance_marker(p: float) -> str:
    if p < 0.001:
        return "*"
    if p < 0.01:
        return "‡"
    if p < 0.05:
        return "†"
    return ""


def _stable_sigmoid(eta: np.ndarray) -> np.ndarray:
    out = np.empty_like(eta)
    pos = eta >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-eta[pos]))
    ex = np.exp(eta[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def _log_likelihood(eta: np.ndarray, y: np.ndarray) -> float:
    # sum y*eta - log(1 + exp(eta)), stably
    return float(np.sum(y * eta - np.logaddexp(0.0, eta)))


def _collinear_columns(X: np.ndarray, columns: Sequence[str]) -> list[str]:
    """Columns outside a greedy maximal independent set (error path only)."""
    keep: list[int] = []
    rank = 0
    for j in range(X.shape[1]):
        trial = keep + [j]
        if np.linalg.matrix_rank(X[:, trial]) > rank:
            keep.append(j)
            rank += 1
    return [columns[j] for j in range(X.shape[1]) if j not in keep]


def fit_logistic(
    design: DesignMatrix,
    max_iter: int = 100,
    grad_tol: float = 1e-8,
    ll_tol: float = 1e-10,
) -> FitResult:
    """Maximum-likelihood logistic fit by iteratively reweighted least squares.

    Stops when the gradient max-norm drops below ``grad_tol`` or the relative
    log-likelihood change below ``ll_tol`` (at most ``max_iter`` iterations).
    Standard errors come from the inverse observed information; p-values are
    two-sided normal. Estimates drifting past +/-30 in magnitude flag the fit
    as (quasi-)separated. The matrix must be full column rank; if not, the
    error names a collinear set.
    """
    X, y = design.X, design.y
    n, p = X.shape
    if n < p:
        raise ValueError(f"more columns ({p}) than rows ({n})")
    if np.linalg.matrix_rank(X) < p:
        bad = _collinear_columns(X, design.columns)
        raise ValueError(f"design matrix is rank deficient; collinear set: {bad}")

    beta = np.zeros(p)
    eta = X @ beta
    ll = _log_likelihood(eta, y)
    converged = False
    separation = False
    iterations = 0
    grad = X.T @ (y - _stable_sigmoid(eta))

    for iterations in range(1, max_iter + 1):
        mu = _stable_sigmoid(eta)
        w = np.clip(mu * (1.0 - mu), 1e-10, None)
        grad = X.T @ (y - mu)
        hessian = X.T @ (X * w[:, None])
        step = np.linalg.solve(hessian, grad)

        # step-halve if the likelihood would decrease
        scale = 1.0
        for _ in range(30):
            candidate = beta + scale * step
            cand_eta = X @ candidate
            cand_ll = _log_likelihood(cand_eta, y)
            if cand_ll >= ll - 1e-12:
                break
            scale *= 0.5
        beta, eta = candidate, cand_eta
        prev_ll, ll = ll, cand_ll

        grad = X.T @ (y - _stable_sigmoid(eta))
        if np.max(np.abs(beta)) > SEPARATION_BOUND:
            separation = True
            break
        if np.max(np.abs(grad)) < grad_tol:
            converged = True
            break
        if abs(ll - prev_ll) < ll_tol * (abs(prev_ll) + 1.0):
            converged = True
            break

    mu = _stable_sigmoid(eta)
    w = np.clip(mu * (1.0 - mu), 1e-10, None)
    information = X.T @ (X * w[:, None])
    covariance = np.linalg.inv(information)
    se = np.sqrt(np.diag(covariance))
    z = np.divide(beta, se, out=np.zeros_like(beta), where=se > 0)
    p_values = np.array([math.erfc(abs(zi) / math.sqrt(2.0)) for zi in z])

    return FitResult(
        columns=list(design.columns),
        estimates=beta,
        std_errors=se,
        z_values=z,
        p_values=p_values,
        converged=converged,
        iterations=iterations,
        log_likelihood=ll,
        grad_max_norm=float(np.max(np.abs(grad))),
        separation=separation,
        n=n,
    )


@dataclass
class ModelRun:
    """All requested fits plus the rows excluded before fitting."""

    fits: dict[str, FitResult]
    excluded: list[tuple[str, str]]
    used: int


def _modeling_subset(records: Sequence[EnrichedRecord]) -> tuple[list[EnrichedRecord], list[tuple[str, str]]]:
    usable = []
    excluded = []
    for r in records:
        if r.gender is None:
            excluded.append((r.profile_id, "missing gender"))
        elif r.race is None:
            excluded.append((r.profile_id, "missing race"))
        elif r.generation not in ("gen_x", "millennial"):
            excluded.append((r.profile_id, f"generation {r.generation!r} outside analysis cohorts"))
        elif not r.ind2:
            excluded.append((r.profile_id, "missing industry code"))
        else:
            usable.append(r)
    return usable, excluded


def run_models(
    records: Sequence[EnrichedRecord],
    models: Iterable[str] = tuple(MODEL_SPECS),
    rare_level_threshold: int = DEFAULT_RARE_LEVEL_THRESHOLD,
) -> ModelRun:
    """Fit the requested models; returns fits keyed M1/M2/M3/M4-Male/M4-Female."""
    usable, excluded = _modeling_subset(records)
    if not usable:
        raise ValueError("no records usable for modeling after exclusions")
    fits: dict[str, FitResult] = {}
    for model_id in models:
        spec = MODEL_SPECS[model_id]
        short = model_id.split("_")[0]
        for label, design in encode_design(usable, spec, rare_level_threshold):
            key = short if spec.strata is None else f"{short}-{label.capitalize()}"
            fits[key] = fit_logistic(design)
    return ModelRun(fits=fits, excluded=excluded, used=len(usable))


def _term_order(run: ModelRun) -> list[str]:
    """Report row order: shared main effects, then interactions, then controls."""
    ordered: list[str] = []
    seen = set()
    for key in MODEL_COLUMN_ORDER:
        fit = run.fits.get(key)
        if fit is None:
            continue
        for name in fit.columns:
            if name not in seen and not name.startswith(("Occupation ", "Industry ")):
                ordered.append(name)
                seen.add(name)
    for prefix in ("Occupation ", "Industry "):
        for key in MODEL_COLUMN_ORDER:
            fit = run.fits.get(key)
            if fit is None:
                continue
            for name in fit.columns:
                if name.startswith(prefix) and name not in seen:
                    ordered.append(name)
                    seen.add(name)
    return ordered


def coefficient_rows(run: ModelRun) -> list[dict[str, str]]:
    """Long-form rows (model, term, estimate, se, z, p, marker) for delimited output."""
    rows = []
    for key in MODEL_COLUMN_ORDER:
        fit = run.fits.get(key)
        if fit is None:
            continue
        for j, name in enumerate(fit.columns):
            rows.append(
                {
                    "model": key,
                    "term": name,
                    "estimate": f"{fit.estimates[j]:.6f}",
                    "std_error": f"{fit.std_errors[j]:.6f}",
                    "z": f"{fit.z_values[j]:.4f}",
                    "p_value": f"{fit.p_values[j]:.6g}",
                    "marker": significance_marker(float(fit.p_values[j])),
                }
            )
    return rows


def render_coefficient_table(run: ModelRun) -> str:
    """Fixed-width text table, one column per model, significance-marked estimates."""
    keys = [k for k in MODEL_COLUMN_ORDER if k in run.fits]
    terms = _term_order(run)
    width = max(len(t) for t in terms) + 2
    col_w = 14
    lines = []
    header = "Variable".ljust(width) + "".join(k.rjust(col_w) for k in keys)
    lines.append(header)
    lines.append("-" * len(header))
    for term in terms:
        cells = []
        for key in keys:
            fit = run.fits[key]
            if term in fit.columns:
                j = fit.columns.index(term)
                cells.append(f"{fit.estimates[j]:.4f}{significance_marker(float(fit.p_values[j]))}".rjust(col_w))
            else:
                cells.append("-".rjust(col_w))
        lines.append(term.ljust(width) + "".join(cells))
    lines.append("-" * len(header))
    lines.append("Markers: † p<0.05, ‡ p<0.01, * p<0.001. Reference categories: Male, "
                 "White, Bachelor's degree, Generation X, Management (occupation), "
                 "Agriculture, Forestry, Fishing, and Hunting (industry).")
    for key in keys:
        fit = run.fits[key]
        lines.append(
            f"{key}: n={fit.n}, log-likelihood={fit.log_likelihood:.3f}, "
            f"iterations={fit.iterations}, converged={fit.converged}"
            + (", separation flagged" if fit.separation else "")
        )
    return "\n".join(lines) + "\n"


@dataclass
class DescriptiveReport:
    n: int
    upward_pct: float
    demographics: list[tuple[str, str, int, float]]  # variable, category, count, pct
    job_change_counts: list[tuple[str, int, float]]  # type label, count, pct
    occupation_growth: list[dict]  # per 2-digit SOC: counts and growth, ranked
    transition_labels: list[str]
    transition_matrix: np.ndarray  # year-1 occ x year-5 occ, diagonal empty


_DEMO_ROWS = (
    ("Gender", "gender", (("male", "Male"), ("female", "Female"))),
    ("Race", "race", (("white", "White"), ("black", "Black"), ("asian", "Asian"), ("hispanic", "Hispanic"))),
    (
        "Educational Attainment",
        "education",
        (("bachelor", "Bachelor's Degree"), ("master", "Master's Degree"), ("doctorate", "Doctorate")),
    ),
    ("Social Generation", "generation", (("millennial", "Millennials"), ("gen_x", "Generation X"))),
)

_TYPE_LABELS = (
    ("type1", "Inter-firm Occupation Change (Type 1)"),
    ("type2", "Intra-firm Occupation Change (Type 2)"),
    ("type3", "Inter-firm Lateral Move (Type 3)"),
    ("type4", "Intra-firm Lateral Move (Type 4)"),
)


def descriptives(records: Sequence[EnrichedRecord]) -> DescriptiveReport:
    """Distribution tables, change-type counts, growth ranking, and the transition matrix.

    Change-type counts are individuals with at least one instance of the
    type. Growth per 2-digit occupation is (year5 - year1) / year1 counts;
    the transition matrix counts year1 -> year5 moves with self-transitions
    excluded. All tables are invariant to record order.
    """
    n = len(records)
    if n == 0:
        raise ValueError("no records")
    upward_pct = 100.0 * sum(r.upward for r in records) / n

    demographics = []
    for display_var, attr, levels in _DEMO_ROWS:
        values = [getattr(r, attr) for r in records]
        known = [v for v in values if v is not None]
        for level, display in levels:
            count = sum(1 for v in known if v == level)
            pct = 100.0 * count / len(known) if known else 0.0
            demographics.append((display_var, display, count, pct))

    job_change_counts = []
    for flag, label in _TYPE_LABELS:
        count = sum(1 for r in records if getattr(r.flags, flag))
        job_change_counts.append((label, count, 100.0 * count / n))

    year1: dict[str, int] = {}
    year5: dict[str, int] = {}
    for r in records:
        year1[r.occ2] = year1.get(r.occ2, 0) + 1
        if r.occ2_year5:
            year5[r.occ2_year5] = year5.get(r.occ2_year5, 0) + 1
    codes = sorted(set(year1) | set(year5))
    growth_rows = []
    for code in codes:
        c1 = year1.get(code, 0)
        c5 = year5.get(code, 0)
        growth = (c5 - c1) / c1 if c1 > 0 else None
        growth_rows.append(
            {
                "occ2": code,
                "title": MAJOR_GROUP_TITLES.get(code, "Unknown"),
                "year1_count": c1,
                "year1_pct": 100.0 * c1 / n,
                "year5_count": c5,
                "year5_pct": 100.0 * c5 / n,
                "growth_rate": growth,
            }
        )
    growth_rows.sort(key=lambda row: (row["growth_rate"] is None, -(row["growth_rate"] or 0.0), row["occ2"]))

    matrix = np.zeros((len(codes), len(codes)), dtype=int)
    index = {c: i for i, c in enumerate(codes)}
    for r in records:
        if r.occ2_year5 and r.occ2 != r.occ2_year5:
            matrix[index[r.occ2], index[r.occ2_year5]] += 1

    return DescriptiveReport(
        n=n,
        upward_pct=upward_pct,
        demographics=demographics,
        job_change_counts=job_change_counts,
        occupation_growth=growth_rows,
        transition_labels=codes,
        transition_matrix=matrix,
    )
