"""
AGC Groebner - Command-Line Driver

Entry point that runs the signature-based engine on ideal files or
benchmark families and prints one run record per configuration.

Usage:
    python app.py --bench katsura:5 --verify
    python app.py --input ideal.txt --module-order pot --rewrite-order f5
    python app.py --bench cyclic:6 --strategy all --stats-format table
    python app.py --history 10
    python app.py --history 10 --history-label katsura5

Exit status: 0 complete (and verified), 1 usage or parse error,
2 a safety cap stopped a run, 3 verification or admissibility failure.
"""

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import config
from algebra import make_field
from engine import EngineConfig, Outcome, agc_run
from errors import AdmissibilityError, ConfigurationError, InputError, ParseError, UsageError
from ideals import parse_bench, parse_ideal_file, read_ideal_file, render_ideal_file
from models import RunRecord, init_database
from templates import render_history, render_kv, render_table
from verify import buchberger, check_labeled_gb, check_principal_syzygies, is_groebner, reduce_basis

logger = logging.getLogger("app")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPPED = 2
EXIT_VERIFY = 3

# ============================================
# Arguments
# ============================================

class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; route that to UsageError instead."""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(description="Signature-based Groebner bases with the generalized rewritable criterion.")
    source = p.add_argument_group("input")
    source.add_argument("--input", action="append", default=[], metavar="FILE",
                        help="Ideal file (repeatable)")
    source.add_argument("--bench", action="append", default=[], metavar="FAMILY:N",
                        help="katsura:N or cyclic:N (repeatable)")

    engine = p.add_argument_group("engine")
    engine.add_argument("--char", type=int, default=config.DEFAULT_CHARACTERISTIC,
                        help=f"Field characteristic, 0 for rationals (default {config.DEFAULT_CHARACTERISTIC})")
    engine.add_argument("--order", choices=config.TERM_ORDERS, default=None,
                        help="Term order (default: the file's, or grevlex for benchmarks)")
    engine.add_argument("--module-order", choices=config.MODULE_ORDERS, default=config.DEFAULT_MODULE_ORDER)
    engine.add_argument("--rewrite-order", choices=config.REWRITE_ORDERS, default=config.DEFAULT_REWRITE_ORDER)
    engine.add_argument("--strategy", choices=config.STRATEGIES + ("all",), default=config.DEFAULT_STRATEGY,
                        help="Pair selection; 'all' runs sig and degree side by side")
    engine.add_argument("--max-pairs", type=int, default=config.MAX_PAIRS)
    engine.add_argument("--max-degree", type=int, default=config.MAX_DEGREE)
    engine.add_argument("--debug", action="store_true", default=config.DEBUG,
                        help="Structural checks after every reduction step")

    check = p.add_argument_group("verification")
    check.add_argument("--verify", action="store_true",
                       help="is_groebner, Buchberger oracle (small rings) and labeled-GB sampling")
    check.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    check.add_argument("--samples", type=int, default=config.LABELED_SAMPLES)

    out = p.add_argument_group("output")
    out.add_argument("--stats-format", choices=("kv", "table"), default="kv")
    out.add_argument("--jobs", type=int, default=1, help="Run configurations in N worker processes")
    out.add_argument("--log-level", default=config.LOG_LEVEL)
    out.add_argument("--log-file", default=config.LOG_FILE)
    out.add_argument("--record", action="store_true", help="Store run records in the history database")
    out.add_argument("--history", type=int, metavar="N", help="Print the last N recorded runs and exit")
    out.add_argument("--history-label", metavar="LABEL", help="With --history, only runs of this input")
    return p


def setup_logging(level: str, log_file: str | None = None):
    """Log to stderr so stdout only carries run records."""
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
        force=True,
    )
    if log_file:
        handler = logging.FileHandler(log_file)
        handler.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
        logging.getLogger().addHandler(handler)

# ============================================
# Runs
# ============================================

@dataclass
class RunJob:
    """
    One configuration to run.

    The ideal travels as text so jobs can cross process boundaries.
    """

    label: str
    ideal_text: str
    engine: EngineConfig
    seed: int = config.DEFAULT_SEED
    verify: bool = False
    samples: int = config.LABELED_SAMPLES


@dataclass
class RunResult:
    record: RunRecord
    verify_items: list
    exit_code: int
    error: str = ""


def verify_run(result, inputs, seed: int, samples: int) -> list:
    """
    Run every applicable check on a finished run.

    Returns:
        (key, value) pairs; values are "pass", "fail" or "skipped"
    """
    polys = result.nonzero_polynomials()
    ring = polys[0].ring
    items = [("verify_groebner", "pass" if is_groebner(polys) else "fail")]

    if ring.nvars <= config.ORACLE_MAX_VARIABLES:
        engine_inputs = [f.to_ring(ring) for f in inputs]
        same = reduce_basis(polys) == reduce_basis(buchberger(engine_inputs))
        items.append(("verify_oracle", "pass" if same else "fail"))
    else:
        items.append(("verify_oracle", "skipped"))

    syz = check_principal_syzygies(result.basis)
    items.append(("verify_syzygies", "pass" if syz.ok else "fail"))

    report = check_labeled_gb(result.basis, samples=samples, seed=seed)
    for line in report.failures[:5]:
        logger.warning(f"labeled GB failure: {line}")
    items.append(("verify_labeled", f"{report.passed}/{report.attempted}"))
    items.append(("verify", "pass" if all(v != "fail" for _, v in items) and report.ok else "fail"))
    return items


def run_job(job: RunJob) -> RunResult:
    """Parse, run and (optionally) verify one configuration."""
    ideal = parse_ideal_file(job.ideal_text, label=job.label)
    cfg = job.engine
    record = RunRecord(
        label=job.label,
        characteristic=cfg.characteristic,
        term_order=cfg.order,
        module_order=cfg.module_order,
        rewrite_order=cfg.rewrite_order,
        strategy=cfg.strategy,
        seed=job.seed,
        input_count=len(ideal),
    )

    try:
        result = agc_run(ideal.polynomials, cfg)
    except AdmissibilityError as e:
        record.outcome = Outcome.FAILED.value
        return RunResult(record, [], EXIT_VERIFY, str(e))
    except (InputError, ConfigurationError) as e:
        record.outcome = Outcome.FAILED.value
        return RunResult(record, [], EXIT_USAGE, str(e))

    basis, stats = result
    record.all_pairs = stats.generated
    record.reduced_pairs = stats.really_reduced
    record.nonzero_generators = len(basis.nonzero_members)
    record.syzygy_signatures = len(basis.syzygy_sigs)
    record.time_ms = round(result.elapsed_ms, 1)
    record.outcome = result.outcome.value

    if result.outcome is Outcome.CAPPED:
        return RunResult(record, [], EXIT_CAPPED, result.cap_reason or "")

    record.reduced_gb_size = len(reduce_basis(result.nonzero_polynomials()))
    items = []
    code = EXIT_OK
    if job.verify:
        items = verify_run(result, ideal.polynomials, job.seed, job.samples)
        record.verified = dict(items)["verify"]
        if record.verified != "pass":
            code = EXIT_VERIFY
    return RunResult(record, items, code)


def collect_ideals(args) -> list:
    """Read every --input and --bench into IdealFiles (with the engine order applied)."""
    ideals = []
    for path in args.input:
        ideals.append(read_ideal_file(path))
    for bench in args.bench:
        ideals.append(parse_bench(bench, args.char, args.order or config.DEFAULT_TERM_ORDER))
    if not ideals:
        raise UsageError("nothing to run: give --input FILE or --bench FAMILY:N")
    return ideals


def build_jobs(args, ideals) -> list:
    strategies = ("sig", "degree") if args.strategy == "all" else (args.strategy,)
    jobs = []
    for ideal in ideals:
        text = render_ideal_file(ideal)
        for strategy in strategies:
            cfg = EngineConfig(
                order=args.order or ideal.order,
                module_order=args.module_order,
                rewrite_order=args.rewrite_order,
                strategy=strategy,
                characteristic=args.char,
                max_pairs=args.max_pairs,
                max_degree=args.max_degree,
                debug=args.debug,
            )
            jobs.append(RunJob(ideal.label, text, cfg, args.seed, args.verify, args.samples))
    return jobs


def execute(jobs, workers: int = 1) -> list:
    """Run jobs in order; with workers > 1 they run in a process pool."""
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run_job, jobs))
    return [run_job(job) for job in jobs]

# ============================================
# Main
# ============================================

def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(args.log_level, args.log_file)

    try:
        config.validate_config()
        if args.history is not None:
            init_database()
            if args.history_label:
                records = RunRecord.by_input(args.history_label, args.history)
            else:
                records = RunRecord.recent(args.history)
            print(render_history(records))
            return EXIT_OK
        make_field(args.char)
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        jobs = build_jobs(args, collect_ideals(args))
    except (UsageError, ParseError, InputError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    results = execute(jobs, args.jobs)

    if args.record:
        init_database()
        for r in results:
            r.record.save()

    if args.stats_format == "table":
        print(render_table([r.record for r in results]))
    else:
        print("\n\n".join(render_kv(r.record, r.verify_items) for r in results))

    for r in results:
        if r.error:
            print(f"{r.record.label}: {r.error}", file=sys.stderr)

    codes = {r.exit_code for r in results}
    for code in (EXIT_USAGE, EXIT_VERIFY, EXIT_CAPPED):
        if code in codes:
            return code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
