"""Pipeline configuration: one JSON file, flag overrides win.

Every stage reads the same resolved config; its canonical hash is stamped
into the header line of every artifact a stage writes.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .dates import YearMonth
from .enrichment import DEFAULT_GENERATIONS, DEFAULT_GRADUATION_AGE
from .errors import ConfigError
from .llm_backend import BackendDescriptor
from .profiles import DEFAULT_BLOCKLIST, DEFAULT_GAP_THRESHOLDS, FilterCriteria

DEFAULT_MODELS = ("M1_main", "M2_gender_x_type", "M3_race_x_type", "M4_stratified")


@dataclass
class PipelineConfig:
    taxonomy: Path
    crosswalks: list[Path]
    wage_table: Path
    gdp_table: Path
    shot_set: Path
    input_profiles: Path
    output_dir: Path
    backend: BackendDescriptor
    ratings: Path | None = None
    worker_accuracy: Path | None = None
    batch_size: int = 5
    n_partitions: int = 4
    window_years: float = 5.0
    mobility_cap: int = 4
    snapshot_date: YearMonth = YearMonth(2022, 10)
    graduation_age: int = DEFAULT_GRADUATION_AGE
    generations: tuple = DEFAULT_GENERATIONS
    models: tuple = DEFAULT_MODELS
    rare_level_threshold: int = 30
    max_workers: int = 1
    seed: int = 0
    filter_criteria: FilterCriteria = field(default_factory=FilterCriteria)
    config_hash: str = ""

    def out(self, name: str) -> Path:
        return self.output_dir / name


_PATH_KEYS = ("taxonomy", "wage_table", "gdp_table", "shot_set", "input_profiles")
_OPTIONAL_PATH_KEYS = ("ratings", "worker_accuracy")


def _hash_config(resolved: dict) -> str:
    # where outputs land must not change what they contain, so the output
    # directory stays out of the hash
    hashable = dict(resolved)
    if isinstance(hashable.get("paths"), dict):
        hashable["paths"] = {
            k: v for k, v in hashable["paths"].items() if k != "output_dir"
        }
    canonical = json.dumps(hashable, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:12]


def load_config(path: str | Path, overrides: dict | None = None) -> PipelineConfig:
    """Parse, override, validate, and hash a pipeline config file.

    ``overrides`` maps top-level config keys to replacement values (CLI flags).
    Raises ConfigError for unreadable files, missing keys, or paths that do
    not exist.
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: config must be a JSON object")

    merged = dict(raw)
    for key, value in (overrides or {}).items():
        if value is not None:
            if key == "backend" and isinstance(merged.get("backend"), dict) and isinstance(value, str):
                merged["backend"] = {**merged["backend"], "kind": value}
            else:
                merged[key] = value

    paths = merged.get("paths")
    if not isinstance(paths, dict):
        raise ConfigError(f"{path}: missing 'paths' object")
    base = path.parent

    def resolve(p: str) -> Path:
        candidate = Path(p)
        return candidate if candidate.is_absolute() else (base / candidate)

    missing = [k for k in _PATH_KEYS if not paths.get(k)]
    if missing:
        raise ConfigError(f"{path}: missing path keys: {missing}")
    resolved_paths = {}
    for key in _PATH_KEYS:
        p = resolve(paths[key])
        if not p.exists():
            raise ConfigError(f"{path}: {key} path does not exist: {p}")
        resolved_paths[key] = p
    crosswalks = [resolve(p) for p in paths.get("crosswalks", [])]
    for p in crosswalks:
        if not p.exists():
            raise ConfigError(f"{path}: crosswalk path does not exist: {p}")
    for key in _OPTIONAL_PATH_KEYS:
        if paths.get(key):
            p = resolve(paths[key])
            if not p.exists():
                raise ConfigError(f"{path}: {key} path does not exist: {p}")
            resolved_paths[key] = p
        else:
            resolved_paths[key] = None
    if not paths.get("output_dir"):
        raise ConfigError(f"{path}: missing output_dir")
    output_dir = resolve(paths["output_dir"])

    backend_raw = merged.get("backend", {"kind": "mock"})
    try:
        backend = BackendDescriptor(
            kind=backend_raw.get("kind", "mock"),
            model_name=backend_raw.get("model_name", "mock-soc-coder"),
            endpoint=backend_raw.get("endpoint"),
            credentials_env_var=backend_raw.get("credentials_env_var"),
            max_in_flight=int(backend_raw.get("max_in_flight", 4)),
            max_attempts=int(backend_raw.get("max_attempts", 3)),
            backoff_start_s=float(backend_raw.get("backoff_start_s", 1.0)),
            timeout_s=float(backend_raw.get("timeout_s", 60.0)),
        )
    except (ValueError, AttributeError, TypeError) as exc:
        raise ConfigError(f"{path}: bad backend block: {exc}") from exc

    filt_raw = merged.get("filter", {})
    try:
        snapshot = YearMonth.parse(merged.get("snapshot_date", "2022-10"))
        criteria = FilterCriteria(
            require_fields=tuple(
                filt_raw.get("require_fields", ("title", "company", "city", "state", "country"))
            ),
            max_title_words=int(filt_raw.get("max_title_words", 7)),
            timeframe=tuple(filt_raw.get("timeframe", (1999, 2022))),
            gap_thresholds_years=dict(
                filt_raw.get("gap_thresholds_years", DEFAULT_GAP_THRESHOLDS)
            ),
            min_degree=filt_raw.get("min_degree", "bachelor"),
            blocklist=frozenset(filt_raw.get("blocklist", DEFAULT_BLOCKLIST)),
            snapshot=snapshot,
        )
        generations = tuple(
            (name, int(lo), int(hi))
            for name, lo, hi in merged.get("generations", DEFAULT_GENERATIONS)
        )
        cfg = PipelineConfig(
            taxonomy=resolved_paths["taxonomy"],
            crosswalks=crosswalks,
            wage_table=resolved_paths["wage_table"],
            gdp_table=resolved_paths["gdp_table"],
            shot_set=resolved_paths["shot_set"],
            input_profiles=resolved_paths["input_profiles"],
            output_dir=output_dir,
            backend=backend,
            ratings=resolved_paths["ratings"],
            worker_accuracy=resolved_paths["worker_accuracy"],
            batch_size=int(merged.get("batch_size", 5)),
            n_partitions=int(merged.get("n_partitions", 4)),
            window_years=float(merged.get("window_years", 5.0)),
            mobility_cap=int(merged.get("mobility_cap", 4)),
            snapshot_date=snapshot,
            graduation_age=int(merged.get("graduation_age", DEFAULT_GRADUATION_AGE)),
            generations=generations,
            models=tuple(merged.get("models", DEFAULT_MODELS)),
            rare_level_threshold=int(merged.get("rare_level_threshold", 30)),
            max_workers=int(merged.get("max_workers", 1)),
            seed=int(merged.get("seed", 0)),
            filter_criteria=criteria,
        )
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"{path}: {exc}") from exc

    if cfg.batch_size < 1:
        raise ConfigError(f"{path}: batch_size must be >= 1")
    if cfg.n_partitions < 1:
        raise ConfigError(f"{path}: n_partitions must be >= 1")
    for model in cfg.models:
        if model not in DEFAULT_MODELS:
            raise ConfigError(f"{path}: unknown model id {model!r}")

    cfg.config_hash = _hash_config(merged)
    return cfg
