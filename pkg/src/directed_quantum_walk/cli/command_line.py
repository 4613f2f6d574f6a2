"""Command line front end: single walks, sweeps, the coin dimension grid, verification and graph checks.

Exit codes: 0 success, 1 runtime failure or failed check, 2 usage error.
"""
import argparse
import os
import sys
import warnings
from pathlib import Path

from directed_quantum_walk.__about__ import __version__
from directed_quantum_walk.cli.Run_Options import Run_Options
from directed_quantum_walk.cli.csv_output import format_float, write_distribution_csv, write_distribution_grid_csv, write_sweep_csv
from directed_quantum_walk.cli.verification import Verification_Depth, run_verification
from directed_quantum_walk.line_graph.Line_With_Loops_Specification import Line_With_Loops_Specification, build_line_with_loops, interior_vertices
from directed_quantum_walk.line_graph.Realizability_Report import check_unitary_realizable
from directed_quantum_walk.line_graph.edge_list_format import read_edge_list, render_edge_list, write_edge_list
from directed_quantum_walk.walk_analysis.Sweep_Record import Sweep_Record, Walk_Mode
from directed_quantum_walk.walk_analysis.parameter_sweep import FULL_MODE_LIMIT, Sweep_Job, run_job, sweep
from directed_quantum_walk.walk_engine.Edge_Pairing import Pairing_Mode
from directed_quantum_walk.walk_exceptions.Quantum_Walk_Exception import Quantum_Walk_Exception
from directed_quantum_walk.walk_exceptions.cli_exceptions import Usage_Exception
from directed_quantum_walk.walk_warnings.walk_warnings import Unbalanced_Vertex_Warning

THREADS_ENVIRONMENT_VARIABLE = "DQWALK_THREADS"
DEFAULT_T = 100
DEFAULT_N_LIST = "2,4,8,16,32"


def thread_cap() -> int:
    """
    :return: Worker pool size from DQWALK_THREADS, or min(8, cpu count) when unset.
    """
    value = os.environ.get(THREADS_ENVIRONMENT_VARIABLE, "").strip()
    if value == "":
        return min(8, os.cpu_count() or 1)
    if not value.isdigit() or int(value) < 1:
        raise Usage_Exception(f"{THREADS_ENVIRONMENT_VARIABLE} must be a positive integer, got {value!r}")
    return int(value)


def parse_int_list(text: str, flag: str) -> list[int]:
    """
    :param text: Comma separated integers.
    :param flag: The flag the text came from, for error messages.
    :return: The integers in the given order.
    """
    items = [item.strip() for item in text.split(",")]
    if len(items) == 0 or any(item == "" for item in items):
        raise Usage_Exception(f"{flag} expects a non-empty comma separated list of integers, got {text!r}")
    try:
        return [int(item) for item in items]
    except ValueError:
        raise Usage_Exception(f"{flag} expects a comma separated list of integers, got {text!r}")


def parse_modes(text: str) -> list[Walk_Mode]:
    """
    :param text: Comma separated walk modes.
    :return: The walk modes in the given order.
    """
    try:
        return [Walk_Mode.from_string(item) for item in text.split(",")]
    except ValueError:
        raise Usage_Exception(f"--modes expects a comma separated list of quantum, classical, reduced; got {text!r}")


def _pairing(text: str) -> Pairing_Mode:
    try:
        return Pairing_Mode.from_string(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"pairing must be natural or random, got {text!r}")


def _walk_mode(text: str) -> Walk_Mode:
    try:
        return Walk_Mode.from_string(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"mode must be quantum, classical or reduced, got {text!r}")


def _output_directory(path: Path) -> Path:
    path.mkdir(parents=True, exist_ok=True)
    return path


def stats_line(record: Sweep_Record) -> str:
    """
    :param record: Summary of a walk.
    :return: One line of key=value statistics. Interval and tail are omitted where they do not apply.
    """
    fields = [f"mean={format_float(record.mean)}", f"variance={format_float(record.variance)}"]
    if record.interval_lo is not None:
        fields.append(f"interval_lo={format_float(record.interval_lo)}")
        fields.append(f"interval_hi={format_float(record.interval_hi)}")
        fields.append(f"tail_mass={format_float(record.tail_mass)}")
    return " ".join(fields)


def _record_file_stem(record: Sweep_Record) -> str:
    options = Run_Options(mode=record.mode, n=record.n, t=record.t, pairing=record.pairing or Pairing_Mode.Natural,
                          seed=record.seed, loop_length=record.loop_length)
    return options.file_stem


def cmd_run(args: argparse.Namespace) -> int:
    """
    Runs one walk, writes its distribution CSV and prints its statistics.
    """
    options = Run_Options(mode=args.mode, n=args.n, t=args.t, pairing=args.pairing, seed=args.seed,
                          loop_length=args.loop_length, rerandomize_pairing=args.rerandomize, out_dir=args.out)
    options.validate()
    pairing = options.pairing if options.mode is Walk_Mode.Quantum else None
    job = Sweep_Job(options.n, options.t, options.mode, pairing, options.seed, options.loop_length,
                    rerandomize_pairing=options.rerandomize_pairing)
    record = run_job(job, keep_distribution=True)
    _output_directory(options.out_dir)
    write_distribution_csv(options.output_path, record.distribution)
    print(stats_line(record))
    return 0


def _sweep_records(args: argparse.Namespace, modes: list[Walk_Mode], keep_distributions: bool) -> list[Sweep_Record]:
    n_list = parse_int_list(args.n, "--n")
    seeds = parse_int_list(args.seeds, "--seeds") if args.seeds else []
    if args.pairing is Pairing_Mode.Random and len(seeds) == 0:
        raise Usage_Exception("--pairing random requires --seeds")
    if args.loop_length < 1:
        raise Usage_Exception(f"--loop-length must be at least 1, got {args.loop_length}")
    if args.t < 0:
        raise Usage_Exception(f"--t must be non-negative, got {args.t}")
    return sweep(n_list, args.t, modes, args.pairing, seeds, args.loop_length, args.full_mode_limit,
                 max_workers=thread_cap(), keep_distributions=keep_distributions)


def cmd_sweep(args: argparse.Namespace) -> int:
    """
    Runs a sweep and writes sweep.csv, plus one distribution CSV per record when requested.
    """
    modes = parse_modes(args.modes)
    records = _sweep_records(args, modes, keep_distributions=args.distributions)
    out_dir = _output_directory(args.out)
    write_sweep_csv(out_dir / "sweep.csv", records)
    if args.distributions:
        for record in records:
            write_distribution_csv(out_dir / f"{_record_file_stem(record)}.csv", record.distribution)
    for record in records:
        print(f"n={record.n} mode={record.mode} {stats_line(record)}")
    return 0


def cmd_reproduce(args: argparse.Namespace) -> int:
    """
    Writes the classical and quantum distributions over the coin dimensions as one grid per mode, plus sweep.csv.
    """
    modes = [Walk_Mode.Classical, Walk_Mode.Quantum]
    args.pairing, args.seeds, args.loop_length = Pairing_Mode.Natural, "", 1
    records = _sweep_records(args, modes, keep_distributions=True)
    out_dir = _output_directory(args.out)
    write_sweep_csv(out_dir / "sweep.csv", records)
    for mode in modes:
        write_distribution_grid_csv(out_dir / f"grid_{mode}.csv", [r for r in records if r.mode is mode])
    for record in records:
        print(f"n={record.n} mode={record.mode} {stats_line(record)}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    """
    Runs the verification suite and prints each check.
    """
    report = run_verification(Verification_Depth.from_string(args.depth))
    print(report)
    return 0 if report.passed else 1


def _line_specification(args: argparse.Namespace) -> Line_With_Loops_Specification:
    return Line_With_Loops_Specification(n=args.n, x_max=args.x_max, loop_length=args.loop_length)


def cmd_realizable(args: argparse.Namespace) -> int:
    """
    Checks the in/out degree balance of an edge list file or a generated line with loops.
    """
    vertices = None
    if args.graph is not None:
        if args.interior:
            raise Usage_Exception("--interior only applies to generated lines, not --graph")
        graph = read_edge_list(args.graph)
    else:
        spec = _line_specification(args)
        graph = build_line_with_loops(spec)
        if args.interior:
            vertices = interior_vertices(spec)
    report = check_unitary_realizable(graph, vertices)
    if args.warn:
        for degree in report.unbalanced:
            warnings.warn(Unbalanced_Vertex_Warning(*degree))
    print(report)
    return 0 if report.is_realizable else 1


def cmd_graph(args: argparse.Namespace) -> int:
    """
    Writes the generated line with loops in the edge list format.
    """
    graph = build_line_with_loops(_line_specification(args))
    if args.out is None:
        sys.stdout.write(render_edge_list(graph))
    else:
        write_edge_list(args.out, graph)
    return 0


def _add_line_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--n", type=int, default=2, help="coin dimension, one forward edge and n-1 loops")
    parser.add_argument("--x-max", type=int, default=10, help="number of forward edges")
    parser.add_argument("--loop-length", type=int, default=1, help="edges per loop cycle")


def _add_sweep_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--n", default=DEFAULT_N_LIST, help="comma separated coin dimensions")
    parser.add_argument("--t", type=int, default=DEFAULT_T, help="number of steps")
    parser.add_argument("--full-mode-limit", type=int, default=FULL_MODE_LIMIT,
                        help="largest n simulated in full; larger natural pairing walks run reduced")
    parser.add_argument("--out", type=Path, default=Path("."), help="output directory")


def build_parser() -> argparse.ArgumentParser:
    """
    :return: The argument parser with one sub-command per operation.
    """
    parser = argparse.ArgumentParser(prog="dqwalk", description="Directed quantum walk on the line with self-loops.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run a single walk and write its distribution")
    run.add_argument("--mode", type=_walk_mode, default=Walk_Mode.Quantum)
    run.add_argument("--n", type=int, default=4)
    run.add_argument("--t", type=int, default=DEFAULT_T)
    run.add_argument("--pairing", type=_pairing, default=Pairing_Mode.Natural)
    run.add_argument("--seed", type=int, default=None)
    run.add_argument("--loop-length", type=int, default=1)
    run.add_argument("--rerandomize", action="store_true", help="draw a new random pairing at every step")
    run.add_argument("--out", type=Path, default=Path("."), help="output directory")
    run.set_defaults(handler=cmd_run)

    sweep_parser = commands.add_parser("sweep", help="run many walks and write sweep.csv")
    _add_sweep_arguments(sweep_parser)
    sweep_parser.add_argument("--modes", default="classical,quantum")
    sweep_parser.add_argument("--pairing", type=_pairing, default=Pairing_Mode.Natural)
    sweep_parser.add_argument("--seeds", default="", help="comma separated seeds of random pairings")
    sweep_parser.add_argument("--loop-length", type=int, default=1)
    sweep_parser.add_argument("--distributions", action="store_true", help="also write every distribution")
    sweep_parser.set_defaults(handler=cmd_sweep)

    reproduce = commands.add_parser("reproduce", help="write classical and quantum distribution grids over coin dimensions")
    _add_sweep_arguments(reproduce)
    reproduce.set_defaults(handler=cmd_reproduce)

    verify = commands.add_parser("verify", help="run the verification suite")
    verify.add_argument("--depth", choices=[str(d) for d in Verification_Depth], default=str(Verification_Depth.Quick))
    verify.set_defaults(handler=cmd_verify)

    realizable = commands.add_parser("realizable", help="check in/out degree balance")
    realizable.add_argument("--graph", type=Path, default=None, help="edge list file; a generated line is used if omitted")
    _add_line_arguments(realizable)
    realizable.add_argument("--interior", action="store_true", help="skip the line endpoints of a generated line")
    realizable.add_argument("--warn", action="store_true", help="emit a warning per unbalanced vertex")
    realizable.set_defaults(handler=cmd_realizable)

    graph = commands.add_parser("graph", help="write a generated line with loops as an edge list")
    _add_line_arguments(graph)
    graph.add_argument("--out", type=Path, default=None, help="output file; stdout if omitted")
    graph.set_defaults(handler=cmd_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    """
    :param argv: Arguments without the program name. sys.argv is used when None.
    :return: The process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return int(exit_request.code or 0)
    try:
        return args.handler(args)
    except Usage_Exception as usage_error:
        parser.print_usage(sys.stderr)
        print(usage_error.message, file=sys.stderr)
        return 2
    except Quantum_Walk_Exception as walk_error:
        print(walk_error.message, file=sys.stderr)
        return 1
    except (OSError, UnicodeDecodeError) as io_error:
        print(f"{args.command}: {io_error}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
