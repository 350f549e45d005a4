import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

# Add src/main to Python path so local modules can be imported
_script_dir = Path(__file__).parent.parent  # Go up from cli/ to main/
if str(_script_dir) not in sys.path:
    sys.path.insert(0, str(_script_dir))

from pydantic import ValidationError

import betti
import exactdims
import horacesched
import maxrank
from cli.RunConfig import RunConfig
from cli.config_manager import ConfigManager

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def setup_logging(config_manager):
    """Setup logging based on configuration. Records go to stderr."""
    log_level_str = config_manager.get_log_level()

    level_map = {
        'debug': logging.DEBUG,
        'info': logging.INFO,
        'warning': logging.WARNING,
        'error': logging.ERROR
    }
    log_level = level_map.get(log_level_str, logging.WARNING)

    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    logger = logging.getLogger(__name__)
    logger.info(f"Logging initialized at level: {log_level_str.upper()}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=None, help="modulus of the prime field (default 2147483647)")
    common.add_argument("--seed", type=int, default=None, help="master seed of all sampling (default 0)")
    common.add_argument("--trials", type=int, default=None, help="independent trials per rank check (default 5)")
    common.add_argument("--format", default=None, help="json, csv or text (default json)")
    common.add_argument("--out", default=None, help="write the report to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="horacecheck", description="Maximal rank checks for bundles on P^n.")
    parser.add_argument("-p", "--properties", default="config.ini", help="configuration file")
    subparsers = parser.add_subparsers(dest="command", required=True)

    dims = subparsers.add_parser("dims", parents=[common], help="exact dimension formulas")
    dims.add_argument("--n", type=int, required=True)
    dims.add_argument("--ell", type=int, default=None)
    dims.add_argument("--omega", type=int, nargs=2, metavar=("P", "K"), default=None)
    dims.add_argument("--q", type=int, default=None, help="cohomology degree for --omega (default 0)")
    dims.set_defaults(handler=cmd_dims)

    rank = subparsers.add_parser("maxrank", parents=[common], help="randomized maximal-rank certification")
    rank.add_argument("mode", choices=["tangent", "tau", "omega"])
    rank.add_argument("--n", type=int, default=None)
    rank.add_argument("--ell", type=int, default=None)
    rank.add_argument("--p", type=int, default=None)
    rank.add_argument("--k", type=int, default=None)
    rank.add_argument("--points", type=int, default=None)
    rank.set_defaults(handler=cmd_maxrank)

    table = subparsers.add_parser("betti", parents=[common], help="Betti numbers of random points")
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--points", type=int, required=True)
    table.set_defaults(handler=cmd_betti)

    horace = subparsers.add_parser("horace", parents=[common], help="symbolic replay of the induction")
    horace.add_argument("--n", type=int, required=True)
    horace.add_argument("--ell", type=int, required=True)
    horace.add_argument("--json", default=None, help="also write the full trace to this file")
    horace.set_defaults(handler=cmd_horace)

    return parser


def _require(args, *names):
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise ValueError(f"maxrank {args.mode} needs {', '.join(missing)}")


def _csv_text(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if value is None else value for value in row])
    return buffer.getvalue()


def _emit(payload: dict, run_config: RunConfig, csv_table: tuple[list[str], list[list]], text_lines: list[str]):
    if run_config.format == "json":
        content = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif run_config.format == "csv":
        content = _csv_text(*csv_table)
    else:
        lines = [f"{payload['command']}: {payload['verdict']}"]
        lines += [f"  {key} = {value}" for key, value in sorted(payload["params"].items())]
        lines += text_lines
        lines += [f"warning: {message}" for message in payload["warnings"]]
        content = "\n".join(lines) + "\n"

    if run_config.out:
        Path(run_config.out).write_text(content, encoding="utf-8")
        logging.info(f"Report written to {run_config.out}")
    else:
        sys.stdout.write(content)


def _payload(command: str, params: dict, result, warnings: list[str], verdict: str) -> dict:
    return {"command": command, "params": params, "result": result, "warnings": warnings, "verdict": verdict}


def cmd_dims(args, run_config: RunConfig) -> int:
    """o, t and the split of t for --ell; a Bott number for --omega."""
    if args.n < 1:
        raise ValueError(f"Ambient dimension must be >= 1, got n={args.n}")
    if args.ell is None and args.omega is None:
        raise ValueError("dims needs --ell or --omega P K")
    if args.q is not None and args.omega is None:
        raise ValueError("--q only applies to --omega")

    params = {"n": args.n}
    result = {}
    if args.ell is not None:
        split = exactdims.qr_split(args.n, args.ell)
        params["ell"] = args.ell
        result.update({"o": exactdims.o(args.n, args.ell), "t": split.t, "q": split.q, "r": split.r})
    if args.omega is not None:
        p, k = args.omega
        q = args.q if args.q is not None else 0
        params.update({"p": p, "k": k, "q": q})
        result["bott"] = exactdims.bott(args.n, p, k, q)

    rows = [[key, value] for key, value in result.items()]
    _emit(_payload("dims", params, result, [], "ok"), run_config, (["quantity", "value"], rows),
          [f"{key} = {value}" for key, value in result.items()])
    return EXIT_OK


def cmd_maxrank(args, run_config: RunConfig) -> int:
    """Exit 0 when a trial reaches the expected rank, 1 otherwise."""
    cfg = run_config.trial_config()
    if args.mode == "tangent":
        _require(args, "n", "ell", "points")
        params = {"n": args.n, "ell": args.ell, "points": args.points}
        report = maxrank.verify_sigma(args.n, args.ell, args.points, cfg)
    elif args.mode == "tau":
        _require(args, "n", "ell")
        params = {"n": args.n, "ell": args.ell}
        report = maxrank.verify_tau(args.n, args.ell, cfg)
    else:
        _require(args, "n", "p", "k", "points")
        params = {"n": args.n, "p": args.p, "k": args.k, "points": args.points}
        report = maxrank.verify_omega(args.n, args.p, args.k, args.points, cfg)
    params.update({"mode": args.mode, "prime": cfg.prime, "seed": cfg.master_seed, "trials": cfg.trials})

    result = report.to_dict()
    warnings = [report.note] if report.note else []
    rows = [[key, " ".join(map(str, value)) if isinstance(value, list) else value]
            for key, value in result.items() if key != "params"]
    text = [f"{report.label}: rank {max(report.achieved, default=0)}/{report.expected} "
            f"({report.space_dim} -> {report.target_dim})"]
    _emit(_payload("maxrank", params, result, warnings, report.verdict.value), run_config,
          (["field", "value"], rows), text)
    return EXIT_OK if report.certified else EXIT_FAILED


def cmd_betti(args, run_config: RunConfig) -> int:
    """Exit 0 iff the two entries settled by the theorem match; other MRC differences only warn."""
    cfg = run_config.trial_config()
    table = betti.betti_table(args.n, args.points, cfg)
    predicted = exactdims.mrc_prediction(args.n, args.points)
    diff = betti.compare_mrc(table, predicted)
    theorem = betti.theorem1_check(args.n, args.points, cfg, table=table)

    warnings = [f"MRC prediction differs at p={e.p}: {e.which}_p computed {e.computed}, predicted {e.predicted}"
                for e in diff.mismatches]
    for message in warnings:
        logging.warning(message)
    params = {"n": args.n, "points": args.points, "prime": cfg.prime, "seed": cfg.master_seed, "trials": cfg.trials}
    result = {
        "computed": table.to_dict(),
        "predicted": predicted.to_dict(),
        "diff": diff.to_dict(),
        "theorem": theorem.to_dict(),
        "known_values": betti.known_values_check(table),
    }

    rows = []
    text = [f"d = {table.d}", "p  a_p  b_p  pred_a_p  pred_b_p  match"]
    for p in range(table.n + 1):
        a_entry, b_entry = diff.row(p)
        match = a_entry.equal and b_entry.equal
        rows.append([p, a_entry.computed, b_entry.computed, a_entry.predicted, b_entry.predicted,
                     "true" if match else "false"])
        text.append(f"{p}  {a_entry.computed}  {b_entry.computed}  {a_entry.predicted}  {b_entry.predicted}  "
                    f"{'yes' if match else 'no'}")

    verdict = "match" if theorem.match else "mismatch"
    _emit(_payload("betti", params, result, warnings, verdict), run_config,
          (["p", "a_p", "b_p", "pred_a_p", "pred_b_p", "match"], rows), text)
    return EXIT_OK if theorem.match else EXIT_FAILED


def cmd_horace(args, run_config: RunConfig) -> int:
    """Exit 0 iff the trace is certified; reconciliation warnings do not count."""
    trace = horacesched.schedule(args.n, args.ell)
    result = trace.to_dict()
    if args.json:
        Path(args.json).write_text(json.dumps(result, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        logging.info(f"Trace written to {args.json}")

    rows = []
    text = []
    for node in trace.nodes:
        failed = "; ".join(str(c) for c in node.conditions if not c.passed)
        rows.append([node.index, node.parent, node.level, node.rule, node.statement.describe(), failed,
                     len(node.warnings)])
        text.append(f"{'  ' * node.level}[{node.rule}] {node.statement}")

    _emit(_payload("horace", {"n": args.n, "ell": args.ell}, result, trace.warnings, trace.verdict.value),
          run_config, (["index", "parent", "level", "rule", "statement", "failed", "warnings"], rows), text)
    return EXIT_OK if trace.certified else EXIT_FAILED


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    config_manager = ConfigManager(argv)
    setup_logging(config_manager)

    try:
        run_config = RunConfig.resolve(args, config_manager)
        return args.handler(args, run_config)
    except (ValidationError, ValueError) as e:
        logging.error(f"{args.command}: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as e:
        logging.error(f"{args.command}: internal inconsistency: {e}")
        print(f"Error: internal inconsistency: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
