"""Command-line front end.

    socmobility <stage> --config config.json [overrides]

Stages: partition, filter, classify, trajectories, enrich, analyze, eval,
and all (which chains them in pipeline order). Exit codes: 0 success,
2 config error, 3 data error, 4 backend error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import load_config
from .errors import BackendError, ConfigError, DataError
from .stages import STAGES, stage_all, stage_classify, stage_filter

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_BACKEND = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="socmobility",
        description=(
            "Resume-to-career-trajectory pipeline: occupation coding, wage "
            "enrichment, and upward-mobility analysis."
        ),
    )
    sub = parser.add_subparsers(dest="stage", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="pipeline config JSON file")
    common.add_argument("--output-dir", help="override the configured output directory")
    common.add_argument("--backend", choices=["mock", "http"], help="override backend kind")
    common.add_argument("--batch-size", type=int, help="jobs per classification prompt")
    common.add_argument("--n-partitions", type=int, help="hash partition count")
    common.add_argument("--window-years", type=float, help="observation window length")
    common.add_argument("--mobility-cap", type=int, help="job-change top-code cap")
    common.add_argument("--max-workers", type=int, help="concurrent classification batches")
    common.add_argument("--seed", type=int, help="run seed recorded in the config hash")

    sub.add_parser("partition", parents=[common], help="split input profiles by hashed id")
    p_filter = sub.add_parser("filter", parents=[common], help="apply the cleaning criteria")
    p_filter.add_argument(
        "--flags",
        help="classification artifact supplying non-occupational/multi-role flags "
        "(criterion 2 uses the keyword fallback without it)",
    )
    p_classify = sub.add_parser("classify", parents=[common], help="assign occupation codes")
    p_classify.add_argument(
        "--resume", action="store_true", help="continue from the classify checkpoint"
    )
    sub.add_parser("trajectories", parents=[common], help="build windowed career trajectories")
    sub.add_parser("enrich", parents=[common], help="attach wages, cohort, region, outcome")
    sub.add_parser("analyze", parents=[common], help="fit models and emit tables")
    sub.add_parser("eval", parents=[common], help="build HIT files and score crowd ratings")
    sub.add_parser("all", parents=[common], help="run every stage in order")
    return parser


def _overrides(args: argparse.Namespace) -> dict:
    return {
        "backend": args.backend,
        "batch_size": args.batch_size,
        "n_partitions": args.n_partitions,
        "window_years": args.window_years,
        "mobility_cap": args.mobility_cap,
        "max_workers": args.max_workers,
        "seed": args.seed,
    }


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        overrides = {k: v for k, v in _overrides(args).items() if v is not None}
        cfg = load_config(args.config, overrides)
        if args.output_dir:
            cfg.output_dir = Path(args.output_dir)
        cfg.output_dir.mkdir(parents=True, exist_ok=True)

        if args.stage == "all":
            stage_all(cfg)
        elif args.stage == "classify":
            stage_classify(cfg, resume=args.resume)
        elif args.stage == "filter":
            flags = Path(args.flags) if args.flags else None
            stage_filter(cfg, flags_path=flags)
        else:
            STAGES[args.stage](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except BackendError as exc:
        print(f"backend error: {exc}", file=sys.stderr)
        return EXIT_BACKEND
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
