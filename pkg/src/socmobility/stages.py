"""Pipeline stages behind the CLI subcommands.

Each stage reads its upstream artifact, writes its own artifact plus a JSON
manifest (row counts, elapsed time), and stamps every artifact with a header
line naming the stage and the config hash. All artifacts are line-delimited
text; logs go to stderr, data to files.
"""

from __future__ import annotations

import csv
import json
import sys
import time
from dataclasses import asdict
from pathlib import Path

from . import analysis, crowdeval, enrichment, fewsoc, profiles, trajectory
from .config import PipelineConfig
from .dates import YearMonth
from .errors import BackendError, DataError
from .llm_backend import MockCompletionBackend, build_backend
from .profiles import JobRecord, Profile
from .taxonomy import load_crosswalk, load_taxonomy, soc6
from .trajectory import CareerTrajectory


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _header(stage: str, cfg: PipelineConfig) -> str:
    return f"# stage={stage} config_hash={cfg.config_hash}"


def _write_lines(path: Path, stage: str, cfg: PipelineConfig, lines) -> int:
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(_header(stage, cfg) + "\n")
        for line in lines:
            fh.write(line + "\n")
            count += 1
    return count


def _write_csv(path: Path, stage: str, cfg: PipelineConfig, fieldnames, rows) -> int:
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with path.open("w", encoding="utf-8", newline="") as fh:
        fh.write(_header(stage, cfg) + "\n")
        writer = csv.DictWriter(fh, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
            count += 1
    return count


def _read_data_lines(path: Path) -> list[str]:
    if not path.exists():
        raise DataError(f"missing upstream artifact: {path}")
    with path.open(encoding="utf-8") as fh:
        return [line.rstrip("\n") for line in fh if not line.startswith("#")]


def _read_csv_rows(path: Path) -> list[dict]:
    if not path.exists():
        raise DataError(f"missing upstream artifact: {path}")
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(line for line in fh if not line.startswith("#"))
        return list(reader)


def _write_manifest(cfg: PipelineConfig, stage: str, started: float, payload: dict) -> None:
    manifest_dir = cfg.output_dir / "manifests"
    manifest_dir.mkdir(parents=True, exist_ok=True)
    body = {
        "stage": stage,
        "config_hash": cfg.config_hash,
        "elapsed_s": round(time.monotonic() - started, 3),
        **payload,
    }
    (manifest_dir / f"{stage}.json").write_text(
        json.dumps(body, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def _load_input_profiles(cfg: PipelineConfig) -> tuple[list[Profile], list[profiles.LineError]]:
    lines = _read_data_lines(cfg.input_profiles)
    return profiles.parse_profiles(lines)


def stage_partition(cfg: PipelineConfig) -> dict:
    """Split the input stream into hash partitions (operational artifact)."""
    started = time.monotonic()
    lines = _read_data_lines(cfg.input_profiles)
    buckets: list[list[str]] = [[] for _ in range(cfg.n_partitions)]
    errors = 0
    for line in lines:
        if not line.strip():
            continue
        try:
            profile = profiles.parse_profile_line(line)
        except (ValueError, json.JSONDecodeError):
            errors += 1
            continue
        buckets[profiles.hash_partition(profile.id, cfg.n_partitions)].append(line)
    part_dir = cfg.output_dir / "partitions"
    counts = []
    for i, bucket in enumerate(buckets):
        _write_lines(part_dir / f"profiles.part-{i:03d}.jsonl", "partition", cfg, bucket)
        counts.append(len(bucket))
    _log(f"partition: {sum(counts)} profiles into {cfg.n_partitions} partitions")
    _write_manifest(cfg, "partition", started, {
        "profiles": sum(counts), "partitions": counts, "parse_errors": errors,
    })
    return {"counts": counts}


def stage_filter(cfg: PipelineConfig, flags_path: Path | None = None) -> dict:
    """Apply cleaning criteria; emits retained profiles and the rejection ledger."""
    started = time.monotonic()
    parsed, line_errors = _load_input_profiles(cfg)
    flags_map = None
    if flags_path is not None:
        flags_map = {}
        for row in (json.loads(s) for s in _read_data_lines(flags_path)):
            flags_map[(row["profile_id"], int(row["job_index"]))] = (
                bool(row.get("non_occupational")), bool(row.get("multi_role")),
            )
    outcome = profiles.filter_profiles(parsed, cfg.filter_criteria, flags_map)
    _write_lines(
        cfg.out("profiles_retained.jsonl"), "filter", cfg,
        (profiles.profile_to_json(p) for p in outcome.retained),
    )
    _write_csv(
        cfg.out("rejections.csv"), "filter", cfg,
        ["profile_id", "criterion", "scope", "detail"],
        (asdict(r) for r in outcome.ledger),
    )
    by_criterion: dict[int, int] = {}
    for r in outcome.ledger:
        if r.scope == "profile":
            by_criterion[r.criterion] = by_criterion.get(r.criterion, 0) + 1
    _log(
        f"filter: {len(outcome.retained)} retained, "
        f"{len(outcome.rejected_profile_ids())} rejected, {len(line_errors)} parse errors"
    )
    _write_manifest(cfg, "filter", started, {
        "input_profiles": len(parsed),
        "retained": len(outcome.retained),
        "rejected_profiles": len(outcome.rejected_profile_ids()),
        "rejections_by_criterion": {str(k): v for k, v in sorted(by_criterion.items())},
        "parse_errors": len(line_errors),
    })
    return {"retained": len(outcome.retained)}


def _load_retained(cfg: PipelineConfig) -> list[Profile]:
    parsed, errors = profiles.parse_profiles(_read_data_lines(cfg.out("profiles_retained.jsonl")))
    if errors:
        raise DataError(f"retained-profiles artifact is corrupt: {errors[0].message}")
    return parsed


def _classification_line(index: int, pid: str, job_index: int, lc_soc, r: fewsoc.ClassificationResult) -> str:
    return json.dumps(
        {
            "index": index,
            "profile_id": pid,
            "job_index": job_index,
            "title": r.title,
            "company": r.company,
            "lc_soc": lc_soc,
            "generated_title": r.generated_title,
            "generated_code": r.generated_code,
            "final_code": r.final_code,
            "resolution_path": r.resolution_path,
            "non_occupational": r.non_occupational,
            "multi_role": r.multi_role,
            "low_confidence": r.low_confidence,
            "unclassified": r.unclassified,
        },
        sort_keys=False,
    )


def stage_classify(cfg: PipelineConfig, resume: bool = False) -> dict:
    """Classify every retained job; resumable through a checkpoint of done indices."""
    started = time.monotonic()
    retained = _load_retained(cfg)
    tax = load_taxonomy(cfg.taxonomy)
    crosswalks = [load_crosswalk(p) for p in cfg.crosswalks]
    shots = fewsoc.load_shot_set(cfg.shot_set)

    jobs_meta = []  # (profile_id, job_index, lc_soc)
    jobs = []
    for profile in retained:
        for idx, job in enumerate(profile.jobs):
            jobs_meta.append((profile.id, idx, job.soc))
            jobs.append((job.title, job.company))

    backend = build_backend(cfg.backend)
    if isinstance(backend, MockCompletionBackend):
        for task, answer in shots.examples:
            backend.register(task, answer)

    checkpoint_path = cfg.out("classify.checkpoint")
    partial_path = cfg.out("classify.partial.jsonl")
    done: dict[int, str] = {}
    if not resume:
        checkpoint_path.unlink(missing_ok=True)
        partial_path.unlink(missing_ok=True)
    if resume and checkpoint_path.exists() and partial_path.exists():
        completed = {int(s) for s in _read_data_lines(checkpoint_path) if s.strip()}
        for line in _read_data_lines(partial_path):
            row = json.loads(line)
            if row["index"] in completed:
                done[row["index"]] = line
        _log(f"classify: resuming with {len(done)} of {len(jobs)} jobs done")

    pending = [i for i in range(len(jobs)) if i not in done]
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    ck_fh = checkpoint_path.open("a", encoding="utf-8")
    part_fh = partial_path.open("a", encoding="utf-8")

    def on_batch_done(start: int, batch_results):
        for offset, result in enumerate(batch_results):
            if result.backend_failed:
                continue
            index = pending[start + offset]
            pid, job_index, lc = jobs_meta[index]
            line = _classification_line(index, pid, job_index, lc, result)
            done[index] = line
            part_fh.write(line + "\n")
            ck_fh.write(f"{index}\n")
        part_fh.flush()
        ck_fh.flush()

    backend_failures = 0
    try:
        if pending:
            results = fewsoc.classify_jobs(
                [jobs[i] for i in pending],
                backend,
                shots,
                tax,
                crosswalks,
                batch_size=cfg.batch_size,
                max_workers=cfg.max_workers,
                on_batch_done=on_batch_done,
            )
            backend_failures = sum(1 for r in results if r.backend_failed)
    finally:
        ck_fh.close()
        part_fh.close()

    if backend_failures:
        raise BackendError(
            f"classify: {backend_failures} jobs not classified after retries; "
            f"checkpoint kept, rerun with --resume"
        )

    ordered = [done[i] for i in sorted(done)]
    _write_lines(cfg.out("classified.jsonl"), "classify", cfg, ordered)
    checkpoint_path.unlink(missing_ok=True)
    partial_path.unlink(missing_ok=True)

    results_rows = [json.loads(s) for s in ordered]
    paths = {p: 0 for p in fewsoc.RESOLUTION_PATHS}
    for row in results_rows:
        if row["resolution_path"]:
            paths[row["resolution_path"]] += 1
    _log(f"classify: {len(ordered)} jobs, paths={paths}")
    _write_manifest(cfg, "classify", started, {
        "jobs": len(ordered),
        "resolution_paths": paths,
        "unclassified": sum(1 for r in results_rows if r["unclassified"]),
        "flagged_non_occupational": sum(1 for r in results_rows if r["non_occupational"]),
        "flagged_multi_role": sum(1 for r in results_rows if r["multi_role"]),
    })
    return {"jobs": len(ordered)}


def _job_to_obj(job: JobRecord) -> dict:
    return {
        "title": job.title,
        "company": job.company,
        "city": job.city,
        "state": job.state,
        "country": job.country,
        "start_date": str(job.start_date),
        "end_date": str(job.end_date),
        "soc": job.soc,
        "naics": job.naics,
    }


def stage_trajectories(cfg: PipelineConfig) -> dict:
    """Build windowed non-overlapping trajectories from classified jobs."""
    started = time.monotonic()
    retained = _load_retained(cfg)
    class_rows = [json.loads(s) for s in _read_data_lines(cfg.out("classified.jsonl"))]
    class_map = {(r["profile_id"], r["job_index"]): r for r in class_rows}

    out_lines = []
    drops = []
    history_total = 0
    selected_total = 0
    for profile in retained:
        usable: list[JobRecord] = []
        for idx, job in enumerate(profile.jobs):
            c = class_map.get((profile.id, idx))
            if c is None or c["unclassified"]:
                drops.append((profile.id, f"job[{idx}]: unclassified"))
                continue
            if c["non_occupational"] or c["multi_role"]:
                drops.append((profile.id, f"job[{idx}]: classifier flagged"))
                continue
            if not c["final_code"]:
                drops.append((profile.id, f"job[{idx}]: no final code"))
                continue
            usable.append(
                JobRecord(
                    title=job.title,
                    company=job.company,
                    city=job.city,
                    state=job.state,
                    country=job.country,
                    start_date=job.start_date,
                    end_date=job.end_date,
                    is_current=job.is_current,
                    soc=c["final_code"],
                    naics=job.naics,
                )
            )
        if not usable:
            drops.append((profile.id, "profile: no classifiable jobs"))
            continue
        filled = trajectory.fill_current_end(usable, cfg.snapshot_date)
        built = trajectory.construct_trajectory(filled, profile_id=profile.id)
        history_total += len(filled)
        selected_total += len(built.jobs)
        windowed = trajectory.window_truncate(built, cfg.window_years)
        if windowed is None:
            drops.append((profile.id, f"profile: career span {built.span_years:.2f}y < {cfg.window_years}y"))
            continue
        flags = trajectory.job_change_flags(windowed)
        mobility = trajectory.job_mobility(windowed, cfg.mobility_cap)
        out_lines.append(
            json.dumps(
                {
                    "profile_id": profile.id,
                    "window_years": cfg.window_years,
                    "jobs": [_job_to_obj(j) for j in windowed.jobs],
                    "flags": {
                        "type1": flags.type1,
                        "type2": flags.type2,
                        "type3": flags.type3,
                        "type4": flags.type4,
                    },
                    "mobility_raw": mobility.raw_changes,
                    "mobility_capped": mobility.capped,
                }
            )
        )

    _write_lines(cfg.out("trajectories.jsonl"), "trajectories", cfg, out_lines)
    _write_csv(
        cfg.out("trajectory_drops.csv"), "trajectories", cfg,
        ["profile_id", "detail"],
        ({"profile_id": pid, "detail": d} for pid, d in drops),
    )
    retention = selected_total / history_total if history_total else 0.0
    _log(f"trajectories: {len(out_lines)} built, retention ratio {retention:.3f}")
    _write_manifest(cfg, "trajectories", started, {
        "profiles_in": len(retained),
        "trajectories": len(out_lines),
        "drops": len(drops),
        "selection_retention_ratio": round(retention, 4),
    })
    return {"trajectories": len(out_lines)}


def _trajectory_from_row(row: dict) -> tuple[CareerTrajectory, trajectory.JobChangeFlags, trajectory.MobilityCount]:
    jobs = tuple(
        JobRecord(
            title=j["title"],
            company=j["company"],
            city=j["city"],
            state=j["state"],
            country=j["country"],
            start_date=YearMonth.parse(j["start_date"]),
            end_date=YearMonth.parse(j["end_date"]),
            soc=j["soc"],
            naics=j.get("naics"),
        )
        for j in row["jobs"]
    )
    traj = CareerTrajectory(
        profile_id=row["profile_id"], jobs=jobs, window_years=float(row["window_years"])
    )
    f = row["flags"]
    flags = trajectory.JobChangeFlags(
        type1=f["type1"], type2=f["type2"], type3=f["type3"], type4=f["type4"]
    )
    mobility = trajectory.MobilityCount(
        raw_changes=int(row["mobility_raw"]), capped=int(row["mobility_capped"])
    )
    return traj, flags, mobility


def stage_enrich(cfg: PipelineConfig) -> dict:
    """Attach wages, GDP decile, cohort, and the upward label to trajectories."""
    started = time.monotonic()
    retained = {p.id: p for p in _load_retained(cfg)}
    rows = [json.loads(s) for s in _read_data_lines(cfg.out("trajectories.jsonl"))]
    tax = load_taxonomy(cfg.taxonomy)
    crosswalks = [load_crosswalk(p) for p in cfg.crosswalks]
    raw_wages = enrichment.load_wage_table(cfg.wage_table, cfg.filter_criteria.timeframe)
    valid6 = {soc6(code) for code in tax.codes()}
    wages, dropped_codes = enrichment.standardize_wage_socs(raw_wages, crosswalks, valid6)
    gdp = enrichment.load_gdp_table(cfg.gdp_table)

    records = []
    skips = []
    for row in rows:
        profile = retained.get(row["profile_id"])
        if profile is None:
            skips.append(enrichment.EnrichmentSkip(row["profile_id"], "profile missing upstream"))
            continue
        traj, flags, mobility = _trajectory_from_row(row)
        outcome = enrichment.enrich_trajectory(
            profile, traj, wages, gdp, mobility, flags,
            graduation_age=cfg.graduation_age, generations=cfg.generations,
        )
        if isinstance(outcome, enrichment.EnrichmentSkip):
            skips.append(outcome)
        else:
            records.append(outcome)

    _write_csv(
        cfg.out("enriched.csv"), "enrich", cfg,
        enrichment.ENRICHED_HEADER,
        (dict(zip(enrichment.ENRICHED_HEADER, enrichment.record_to_row(r))) for r in records),
    )
    _write_csv(
        cfg.out("enrich_skips.csv"), "enrich", cfg,
        ["profile_id", "reason"],
        (asdict(s) for s in skips),
    )
    _log(f"enrich: {len(records)} records, {len(skips)} skipped, "
         f"{len(dropped_codes)} wage codes dropped in standardization")
    _write_manifest(cfg, "enrich", started, {
        "trajectories_in": len(rows),
        "enriched": len(records),
        "skipped": len(skips),
        "wage_codes_dropped": len(dropped_codes),
        "upward_share": round(sum(r.upward for r in records) / len(records), 4) if records else None,
    })
    return {"enriched": len(records)}


def stage_analyze(cfg: PipelineConfig) -> dict:
    """Fit the configured models and emit coefficient + descriptive tables."""
    started = time.monotonic()
    rows = _read_csv_rows(cfg.out("enriched.csv"))
    records = [enrichment.record_from_row(r) for r in rows]
    if not records:
        raise DataError("no enriched records to analyze")
    try:
        run = analysis.run_models(records, cfg.models, cfg.rare_level_threshold)
        report = analysis.descriptives(records)
    except ValueError as exc:
        raise DataError(str(exc)) from exc

    _write_csv(
        cfg.out("coefficients.csv"), "analyze", cfg,
        ["model", "term", "estimate", "std_error", "z", "p_value", "marker"],
        analysis.coefficient_rows(run),
    )
    table = analysis.render_coefficient_table(run)
    cfg.out("model_report.txt").write_text(
        _header("analyze", cfg) + "\n" + table, encoding="utf-8"
    )

    _write_csv(
        cfg.out("demographics.csv"), "analyze", cfg,
        ["variable", "category", "count", "pct"],
        (
            {"variable": v, "category": c, "count": n, "pct": f"{pct:.2f}"}
            for v, c, n, pct in report.demographics
        ),
    )
    _write_csv(
        cfg.out("job_change_types.csv"), "analyze", cfg,
        ["job_change_type", "count", "pct"],
        (
            {"job_change_type": label, "count": n, "pct": f"{pct:.2f}"}
            for label, n, pct in report.job_change_counts
        ),
    )
    _write_csv(
        cfg.out("occupation_growth.csv"), "analyze", cfg,
        ["occ2", "title", "year1_count", "year1_pct", "year5_count", "year5_pct", "growth_rate"],
        (
            {
                "occ2": g["occ2"],
                "title": g["title"],
                "year1_count": g["year1_count"],
                "year1_pct": f"{g['year1_pct']:.2f}",
                "year5_count": g["year5_count"],
                "year5_pct": f"{g['year5_pct']:.2f}",
                "growth_rate": "" if g["growth_rate"] is None else f"{g['growth_rate']:.4f}",
            }
            for g in report.occupation_growth
        ),
    )
    labels = report.transition_labels
    matrix_rows = []
    for i, src in enumerate(labels):
        row = {"occ2": src}
        for j, dst in enumerate(labels):
            row[dst] = "" if i == j else str(report.transition_matrix[i, j])
        matrix_rows.append(row)
    _write_csv(cfg.out("transitions.csv"), "analyze", cfg, ["occ2", *labels], matrix_rows)

    _log(f"analyze: {run.used} records modeled, {len(run.excluded)} excluded, "
         f"upward {report.upward_pct:.2f}%")
    _write_manifest(cfg, "analyze", started, {
        "records": len(records),
        "modeled": run.used,
        "excluded": len(run.excluded),
        "models": sorted(run.fits.keys()),
        "upward_pct": round(report.upward_pct, 2),
    })
    return {"modeled": run.used}


def stage_eval(cfg: PipelineConfig) -> dict:
    """Emit HIT input files from classifications and score ingested ratings."""
    started = time.monotonic()
    payload: dict = {}
    tax = load_taxonomy(cfg.taxonomy)

    classified_path = cfg.out("classified.jsonl")
    if classified_path.exists():
        rows = [json.loads(s) for s in _read_data_lines(classified_path)]
        items = [
            crowdeval.ClassifiedItem(
                title=r["title"],
                company=r["company"],
                lc_soc=r["lc_soc"],
                fewsoc_code=r["final_code"],
                non_occupational=r["non_occupational"],
            )
            for r in rows
        ]
        sets = crowdeval.build_hit_sets(items, tax)
        fields = ["hit_id", "title", "company", "soc_code", "soc_title",
                  "soc_description", "sample_titles", "source"]
        for name, hit_rows in (
            ("hits_concordant.csv", sets.concordant),
            ("hits_discordant_lc.csv", sets.discordant_lc),
            ("hits_discordant_fewsoc.csv", sets.discordant_fewsoc),
        ):
            _write_csv(cfg.out(name), "eval", cfg, fields, (asdict(h) for h in hit_rows))
        payload["hits"] = {
            "concordant": len(sets.concordant),
            "discordant_lc": len(sets.discordant_lc),
            "discordant_fewsoc": len(sets.discordant_fewsoc),
        }

    if cfg.ratings and cfg.worker_accuracy:
        ratings = crowdeval.load_ratings(cfg.ratings)
        accuracies = crowdeval.load_worker_accuracies(cfg.worker_accuracy)
        report = crowdeval.evaluate_ratings(ratings, accuracies)
        _write_csv(
            cfg.out("eval_items.csv"), "eval", cfg,
            ["hit_id", "source", "n_ratings", "aggregate", "correct"],
            (
                {
                    "hit_id": it["hit_id"],
                    "source": it["source"],
                    "n_ratings": it["n_ratings"],
                    "aggregate": f"{it['aggregate']:.6f}",
                    "correct": int(it["correct"]),
                }
                for it in report.items
            ),
        )
        _write_csv(
            cfg.out("eval_comparisons.csv"), "eval", cfg,
            ["basis", "fewsoc_precision", "fewsoc_n", "lc_precision", "lc_n", "z", "p_two_sided"],
            (
                {
                    "basis": c.basis,
                    "fewsoc_precision": f"{c.fewsoc_precision:.6f}",
                    "fewsoc_n": c.fewsoc_n,
                    "lc_precision": f"{c.lc_precision:.6f}",
                    "lc_n": c.lc_n,
                    "z": "" if c.degenerate else f"{c.z:.4f}",
                    "p_two_sided": "" if c.degenerate else f"{c.p_two_sided:.6g}",
                }
                for c in report.comparisons
            ),
        )
        summary = crowdeval.render_eval_summary(report)
        cfg.out("eval_summary.txt").write_text(
            _header("eval", cfg) + "\n" + summary, encoding="utf-8"
        )
        payload["rated_items"] = len(report.items)
        payload["alpha_overall"] = round(report.alpha_overall, 4)

    if not payload:
        raise DataError("eval: neither classified.jsonl nor ratings inputs available")
    _log(f"eval: {payload}")
    _write_manifest(cfg, "eval", started, payload)
    return payload


STAGE_ORDER = ("partition", "filter", "classify", "trajectories", "enrich", "analyze", "eval")

STAGES = {
    "partition": stage_partition,
    "filter": stage_filter,
    "classify": stage_classify,
    "trajectories": stage_trajectories,
    "enrich": stage_enrich,
    "analyze": stage_analyze,
    "eval": stage_eval,
}


def stage_all(cfg: PipelineConfig) -> dict:
    """Chain every stage in pipeline order.

    Eval always runs at the end: it rebuilds the HIT input files from the
    classification artifact and scores ratings only when rating inputs are
    configured.
    """
    results = {}
    for name in STAGE_ORDER:
        results[name] = STAGES[name](cfg)
    return results
