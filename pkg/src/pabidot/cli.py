"""Command line interface.

Subcommands:
    perturb   read a delimited file, perturb it, write the release
    search    grid-search only; reports parameters, never writes data
    evaluate  attack-resistance / bias / utility metrics for a release
    bench     synthetic scaling run emitting a timing table

Environment:
    PABIDOT_SEED     default seed when --seed is not given
    PABIDOT_THREADS  caps BLAS/OpenMP thread pools (set before numpy loads)

Exit codes:
    0 success, 1 unexpected error, 2 usage, 3 missing file,
    4 bad file format / constant column, 5 bad parameter value,
    6 shape mismatch between inputs.

Failures print a single machine-parsable line to stderr:
    pabidot: [<category>] <message>
with category one of file, format, parameter, shape, unexpected.

Heavy imports happen inside the command handlers so the thread cap can be
applied first.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_FILE = 3
EXIT_FORMAT = 4
EXIT_PARAMETER = 5
EXIT_SHAPE = 6

_ATTACKS = ("ni", "io", "ks", "entropy", "knn")


def _env_seed(value: int | None) -> int:
    if value is not None:
        return value
    raw = os.environ.get("PABIDOT_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        from .errors import ParameterError

        raise ParameterError(f"PABIDOT_SEED must be an integer, got {raw!r}") from None


def _apply_thread_cap() -> None:
    raw = os.environ.get("PABIDOT_THREADS")
    if not raw:
        return
    for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS",
                "NUMEXPR_NUM_THREADS"):
        os.environ.setdefault(var, raw)


def _load(args, path):
    from .dataio import drop_constant_columns, load_csv

    dataset = load_csv(
        path,
        has_header=not args.no_header,
        class_column=_class_selector(args),
        on_missing=args.on_missing,
    )
    if getattr(args, "drop_constant", False):
        dataset, dropped = drop_constant_columns(dataset)
        for name in dropped:
            print(f"warning: dropped constant column {name!r}", file=sys.stderr)
    return dataset


def _class_selector(args):
    raw = args.class_column
    if raw is None:
        return None
    if args.no_header:
        try:
            return int(raw)
        except ValueError:
            from .errors import ParameterError

            raise ParameterError(
                f"--class-column must be a 0-based index for headerless files, got {raw!r}"
            ) from None
    return raw


def _emit_report_and_figures(report, args) -> None:
    from .report import emit_report

    if not args.report:
        return
    emit_report(report, args.report)
    print(f"report written to {args.report}")
    if args.no_figures or report.grid is None:
        return
    from .plots import save_grid_figures

    for path in save_grid_figures(report.grid, args.report):
        print(f"figure written to {path}")


def cmd_perturb(args) -> int:
    from .dataio import write_csv
    from .pipeline import PerturbationConfig, perturb
    from .report import RunManifest

    dataset = _load(args, args.input)
    config = PerturbationConfig(
        sigma=args.sigma,
        seed=_env_seed(args.seed),
        class_column=args.class_column,
    )
    result = perturb(
        dataset.matrix,
        config,
        class_values=dataset.class_values,
        column_names=dataset.column_names,
    )
    dataset.matrix = result.data
    dataset.class_values = result.class_values
    write_csv(args.output, dataset)
    result.report.manifest = RunManifest(
        config=config,
        input_path=args.input,
        output_path=args.output,
        report_path=args.report,
    )
    grid = result.report.grid
    print(
        f"perturbed {result.report.row_count} rows x {result.report.column_count} columns: "
        f"theta={grid.theta_optimal} axis={grid.rif_optimal} "
        f"guarantee={grid.phi_optimal:.4f} sigma={config.sigma} seed={config.seed}"
    )
    print(f"release written to {args.output}")
    _emit_report_and_figures(result.report, args)
    return EXIT_OK


def cmd_search(args) -> int:
    import numpy as np

    from .normalize import column_stats, zscore
    from .report import PerturbationReport
    from .search import search_optimal

    dataset = _load(args, args.input)
    normalized = zscore(dataset.matrix, column_stats(dataset.matrix))
    grid = search_optimal(np.cov(normalized, rowvar=False))
    print(
        f"theta_optimal={grid.theta_optimal} rif_optimal={grid.rif_optimal} "
        f"phi_optimal={grid.phi_optimal:.6f}"
    )
    report = PerturbationReport(
        row_count=dataset.matrix.shape[0],
        column_count=dataset.matrix.shape[1],
        column_names=dataset.column_names,
        class_column=args.class_column,
        grid=grid,
    )
    _emit_report_and_figures(report, args)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    import numpy as np

    from . import evaluate as ev
    from .errors import DataShapeError, ParameterError
    from .report import PerturbationReport

    attacks = [a.strip() for a in args.attacks.split(",") if a.strip()]
    unknown = [a for a in attacks if a not in _ATTACKS]
    if unknown:
        raise ParameterError(
            f"unknown attack(s) {unknown}; choose from {', '.join(_ATTACKS)}"
        )
    original = _load(args, args.original)
    perturbed = _load(args, args.perturbed)
    if original.matrix.shape != perturbed.matrix.shape:
        raise DataShapeError(
            f"original {original.matrix.shape} and perturbed {perturbed.matrix.shape} "
            f"must have the same shape"
        )

    pert_matrix = perturbed.matrix
    pert_class = perturbed.class_values
    if args.unshuffle_seed is not None:
        from .pipeline import derive_streams

        perm = derive_streams(args.unshuffle_seed)[2].permutation(pert_matrix.shape[0])
        aligned = np.empty_like(pert_matrix)
        aligned[perm] = pert_matrix
        pert_matrix = aligned
        if pert_class is not None:
            restored = np.empty_like(pert_class)
            restored[perm] = pert_class
            pert_class = restored

    seed = _env_seed(args.seed)
    rng = np.random.default_rng(seed)
    metrics: dict = {"aligned_rows_assumed": args.unshuffle_seed is None}
    if "ni" in attacks:
        res = ev.naive_inference_resistance(original.matrix, pert_matrix)
        metrics["naive_inference"] = res.to_dict()
        print(f"naive inference resistance: min={res.minimum:.4f} avg={res.average:.4f}")
    if "io" in attacks:
        res = ev.known_io_attack(original.matrix, pert_matrix,
                                 known_fraction=args.known_fraction, rng=rng)
        metrics["known_io"] = {**res.to_dict(), "known_fraction": args.known_fraction}
        print(f"known I/O resistance: min={res.minimum:.4f} avg={res.average:.4f}")
    if "ks" in attacks:
        bias = ev.ks_record_bias(original.matrix, pert_matrix, alpha=args.alpha)
        rejections = ev.ks_attribute_rejections(original.matrix, pert_matrix,
                                                alpha=args.alpha)
        metrics["ks_record_bias"] = {**bias.to_dict(), "alpha": args.alpha}
        metrics["ks_attribute_rejections"] = rejections
        print(
            f"ks record bias: {bias.similar_record_count} similar records "
            f"({100.0 * bias.percentage:.2f}%), {rejections} attribute rejection(s)"
        )
    if "entropy" in attacks:
        gain = ev.entropy_increase(original.matrix, pert_matrix, bins=args.bins)
        metrics["entropy"] = {"average_information_gain": gain, "bins": args.bins}
        print(f"average information gain: {gain:.4f} bits")
    if "knn" in attacks:
        if original.class_values is None or pert_class is None:
            raise ParameterError("knn needs --class-column present in both files")
        acc_orig = ev.knn_utility(original.matrix, original.class_values,
                                  rng=np.random.default_rng(seed))
        acc_pert = ev.knn_utility(pert_matrix, pert_class,
                                  rng=np.random.default_rng(seed))
        metrics["knn"] = {
            "original_accuracy": acc_orig,
            "perturbed_accuracy": acc_pert,
            "k": 1,
            "folds": 10,
        }
        print(f"1-NN accuracy: original={acc_orig:.4f} perturbed={acc_pert:.4f}")

    if args.report:
        from .report import emit_report

        report = PerturbationReport(
            row_count=original.matrix.shape[0],
            column_count=original.matrix.shape[1],
            column_names=original.column_names,
            class_column=args.class_column,
            seed=seed,
            metrics=metrics,
        )
        emit_report(report, args.report)
        print(f"report written to {args.report}")
        if not args.no_figures:
            series = {}
            if "naive_inference" in metrics:
                series["naive inference"] = np.array(metrics["naive_inference"]["per_column_std"])
            if "known_io" in metrics:
                series["known I/O"] = np.array(metrics["known_io"]["per_column_std"])
            if series:
                from .plots import save_resistance_bars

                base, _ = os.path.splitext(args.report)
                path = save_resistance_bars(series, base + ".resistance.png",
                                            column_names=original.column_names)
                print(f"figure written to {path}")
    return EXIT_OK


def cmd_bench(args) -> int:
    import numpy as np

    from .errors import ParameterError
    from .pipeline import PerturbationConfig, perturb

    try:
        rows = [int(r) for r in args.rows.split(",") if r.strip()]
    except ValueError:
        raise ParameterError(f"--rows must be comma-separated integers, got {args.rows!r}") from None
    if not rows or min(rows) < 2:
        raise ParameterError(f"--rows must be integers >= 2, got {args.rows!r}")
    if args.cols < 2:
        raise ParameterError(f"--cols must be >= 2, got {args.cols}")

    seed = _env_seed(args.seed)
    timings = []
    print(f"{'rows':>10} {'cols':>6} {'seconds':>10}")
    for m in rows:
        data = np.random.default_rng(seed).standard_normal((m, args.cols))
        result = perturb(data, PerturbationConfig(sigma=args.sigma, seed=seed))
        timings.append((m, args.cols, result.report.wall_time_seconds))
        print(f"{m:>10} {args.cols:>6} {result.report.wall_time_seconds:>10.3f}")

    if args.out:
        import csv

        parent = os.path.dirname(args.out)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["rows", "cols", "seconds"])
            writer.writerows(timings)
        print(f"timing table written to {args.out}")
        if not args.no_figures:
            from .plots import save_scaling_curve

            base, _ = os.path.splitext(args.out)
            path = save_scaling_curve(
                np.array([t[0] for t in timings]),
                np.array([t[2] for t in timings]),
                base + ".scaling.png",
            )
            print(f"figure written to {path}")
    return EXIT_OK


def _add_io_options(sub, with_class=True):
    sub.add_argument("--no-header", action="store_true",
                     help="treat the first row as data, not column names")
    sub.add_argument("--on-missing", choices=("error", "drop"), default="error",
                     help="reject or drop rows with missing/non-numeric cells")
    sub.add_argument("--drop-constant", action="store_true",
                     help="drop zero-variance columns instead of failing")
    if with_class:
        sub.add_argument("--class-column", default=None,
                         help="label column: name, or 0-based index with --no-header")


def _add_report_options(sub):
    sub.add_argument("--report", default=None, help="write a JSON run report here")
    sub.add_argument("--no-figures", action="store_true",
                     help="skip rendering figures next to the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pabidot",
        description="Privacy-preserving perturbation of numeric tabular data "
                    "via optimal geometric transformations.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("perturb", help="perturb a dataset and write the release")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--sigma", type=float, default=0.3,
                   help="expansion noise std (default 0.3; 0 disables)")
    p.add_argument("--seed", type=int, default=None,
                   help="root seed (default: PABIDOT_SEED or 0)")
    _add_io_options(p)
    _add_report_options(p)
    p.set_defaults(func=cmd_perturb)

    s = commands.add_parser("search", help="grid-search parameters without writing data")
    s.add_argument("input")
    _add_io_options(s)
    _add_report_options(s)
    s.set_defaults(func=cmd_search)

    e = commands.add_parser("evaluate", help="attack/bias/utility metrics for a release")
    e.add_argument("original")
    e.add_argument("perturbed")
    e.add_argument("--attacks", default="ni,io,ks,entropy",
                   help=f"comma-separated subset of {','.join(_ATTACKS)}")
    e.add_argument("--known-fraction", type=float, default=0.1,
                   help="fraction of rows known to the I/O adversary")
    e.add_argument("--alpha", type=float, default=0.05, help="KS significance level")
    e.add_argument("--bins", type=int, default=100, help="entropy histogram bins")
    e.add_argument("--seed", type=int, default=None,
                   help="seed for attack sampling (default: PABIDOT_SEED or 0)")
    e.add_argument("--unshuffle-seed", type=int, default=None,
                   help="release seed; undoes the row shuffle to restore alignment")
    _add_io_options(e)
    _add_report_options(e)
    e.set_defaults(func=cmd_evaluate)

    b = commands.add_parser("bench", help="synthetic scaling run with a timing table")
    b.add_argument("--rows", default="100000,200000,400000,800000",
                   help="comma-separated row counts")
    b.add_argument("--cols", type=int, default=28, help="column count")
    b.add_argument("--sigma", type=float, default=0.3)
    b.add_argument("--seed", type=int, default=None)
    b.add_argument("--out", default=None, help="write the timing table as CSV here")
    b.add_argument("--no-figures", action="store_true",
                   help="skip the scaling figure next to --out")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    _apply_thread_cap()
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)

    from .errors import (
        AttackSetupError,
        ConstantColumnError,
        DataFormatError,
        DataShapeError,
        ParameterError,
    )

    def fail(category: str, code: int, exc: BaseException) -> int:
        print(f"pabidot: [{category}] {exc}", file=sys.stderr)
        return code

    try:
        return args.func(args)
    except FileNotFoundError as exc:
        return fail("file", EXIT_FILE, exc)
    except IsADirectoryError as exc:
        return fail("file", EXIT_FILE, exc)
    except PermissionError as exc:
        return fail("file", EXIT_FILE, exc)
    except (DataFormatError, ConstantColumnError) as exc:
        return fail("format", EXIT_FORMAT, exc)
    except (ParameterError, AttackSetupError) as exc:
        return fail("parameter", EXIT_PARAMETER, exc)
    except DataShapeError as exc:
        return fail("shape", EXIT_SHAPE, exc)
    except Exception as exc:  # pragma: no cover - last resort
        return fail("unexpected", EXIT_UNEXPECTED, exc)


if __name__ == "__main__":
    sys.exit(main())
