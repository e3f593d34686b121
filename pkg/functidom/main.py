"""Command-line entry point: ``python -m functidom <command> [flags]``.

Commands:
    gamma      exact domination number of a graph or functigraph
    verify     check one registered statement over its instance range
    construct  print the witness of one constructive procedure
    report     run the whole acceptance suite into a CSV/JSON artifact
"""
from __future__ import annotations

import argparse
import io
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from . import config
from .constructions import (
    Witness,
    avg_degree_dominating_set,
    consecutive5_dominating_set,
    distance_3k2_dominating_set,
    ex1_case_witness,
    final_3k2_dispatch,
    identity_dominating_set,
    max_degree_dominating_set,
    mod1_dominating_set,
    nonperm_3k2_dominating_set,
    realization_instance,
)
from .domsolve import SolveBudget, gamma_exact
from .enumeration import MODES, SeededGenerator
from .errors import (
    ConfigurationError,
    FunctidomError,
    InvalidParameterError,
    PreconditionError,
    ReportWriteError,
    ResourceLimitError,
)
from .functigraph import (
    ThreeTranslate,
    VertexMap,
    build_functigraph,
    constant_map,
    cycle_functigraph,
    distance_violation,
    from_permutation,
    identity_map,
    read_map,
    three_translate_expand,
)
from .graphcore import Graph, build_cycle, is_dominating, read_graph
from .labels import format_labels
from .registry import REGISTRY, VerifyOptions, acceptance_suite, run_verify
from .reporting import FORMATS, render, write_report
from .theorems import TheoremVerdict, describe_map

_LOG = logging.getLogger(__name__)

COMMANDS = ("gamma", "verify", "construct", "report")


@dataclass(frozen=True)
class RunConfig:
    """Parsed command line plus environment defaults."""

    command: str
    parameters: Dict[str, object]
    output_format: str
    seed: int = 0
    budget: SolveBudget = field(default_factory=SolveBudget)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        if args.command not in COMMANDS:
            raise ConfigurationError(f"exactly one command is required, choose from {COMMANDS}")
        budget = SolveBudget(
            max_vertices=args.max_vertices if args.max_vertices is not None else config.budget_max_vertices(),
            node_limit=args.node_limit if args.node_limit is not None else config.budget_node_limit(),
        )
        output_format = args.format or ("csv" if args.command == "report" else "text")
        params = {k: v for k, v in vars(args).items() if k not in ("command", "format", "seed", "node_limit", "max_vertices")}
        return cls(args.command, params, output_format, args.seed, budget)

    def get(self, name: str, default: object = None) -> object:
        value = self.parameters.get(name)
        return default if value is None else value


# ---------- Flag parsing ----------

def parse_range(text: str) -> Tuple[int, ...]:
    """``"1..4"`` -> (1, 2, 3, 4); ``"3,5"`` -> (3, 5); the two forms combine."""
    values: List[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo_i, hi_i = int(lo), int(hi)
                if hi_i < lo_i:
                    raise argparse.ArgumentTypeError(f"empty range {part!r}")
                values.extend(range(lo_i, hi_i + 1))
            else:
                values.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse range {text!r}; use forms like 1..4 or 3,5")
    return tuple(values)


def _label_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.replace(" ", ",").split(",") if p)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse label list {text!r}")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default=None, help="output format (default: text, csv for report)")
    p.add_argument("--output", type=Path, default=None, help="write output to this file instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="seed of the sampling generator (default: 0)")
    p.add_argument("--workers", type=int, default=None, help="enumeration worker processes")
    p.add_argument("--node-limit", type=int, default=None, help=f"solver node budget (env {config.ENV_BUDGET_NODES})")
    p.add_argument("--max-vertices", type=int, default=None, help="largest graph the exact solver accepts")
    p.add_argument("--quiet", action="store_true", help="no progress bars, warnings only on stderr")
    p.add_argument("--verbose", action="store_true", help="debug logging on stderr")


def _add_map_flags(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--map", type=Path, help="map file in 'f <n> : t0 ... t(n-1)' format")
    group.add_argument("--tilde", type=ThreeTranslate.parse, help="three-translate a1,a2,a3 (use with --k)")
    group.add_argument("--id", action="store_true", help="identity map")
    group.add_argument("--const", type=int, help="constant map onto v_t' (1-based)")
    group.add_argument("--perm", type=_label_list, help="permutation images in 1-based labels, e.g. 2,3,1")
    group.add_argument("--map-random", action="store_true", help="uniform random map drawn from --seed")


def _parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="functidom", description="Domination in functigraphs: solve, construct, verify")
    sub = parser.add_subparsers(dest="command", metavar="command")

    gamma = sub.add_parser("gamma", help="exact domination number")
    _add_common(gamma)
    base = gamma.add_mutually_exclusive_group()
    base.add_argument("--graph", type=Path, help="base graph file (plain graph when no map flag is given)")
    base.add_argument("--cycle", type=int, help="base cycle C_n")
    gamma.add_argument("--k", type=int, help="number of blocks for --tilde")
    _add_map_flags(gamma)

    verify = sub.add_parser("verify", help="verify one statement over its instance range")
    _add_common(verify)
    verify.add_argument("theorem_id", help="one of: " + ", ".join(REGISTRY))
    verify.add_argument("--n", type=parse_range, help="cycle lengths, e.g. 5..8")
    verify.add_argument("--k", type=parse_range, help="block counts, e.g. 1..4")
    verify.add_argument("--a", type=parse_range, help="star-chain sizes, e.g. 1..4")
    verify.add_argument("--mode", choices=MODES, help="map family")
    verify.add_argument("--count", type=int, help="sample size for --mode sample")
    verify.add_argument("--tilde", type=ThreeTranslate.parse, help="restrict to one three-translate")
    verify.add_argument("--per-instance", action="store_true", help="one verdict per map")
    verify.add_argument("--quick", action="store_true", help="reduced default ranges")

    construct = sub.add_parser("construct", help="print a construction's witness")
    _add_common(construct)
    construct.add_argument("construction", help="one of: " + ", ".join(CONSTRUCTIONS))
    construct.add_argument("--n", "--cycle", dest="n", type=int, help="cycle length")
    construct.add_argument("--k", type=int, help="number of blocks for --tilde")
    construct.add_argument("--a", type=int, help="star-chain size for realization")
    construct.add_argument("--i", type=int, help="collapsed stars for realization")
    construct.add_argument("--class", dest="residue", type=int, help="residue class 1..3 for avg-degree")
    _add_map_flags(construct)

    report = sub.add_parser("report", help="run the acceptance suite into a report file")
    _add_common(report)
    report.add_argument("--quick", action="store_true", help="reduced default ranges")

    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        parser.exit(2)
    return args


# ---------- Instance resolution ----------

def _resolve_map(cfg: RunConfig, n: Optional[int]) -> Optional[VertexMap]:
    """The map selected by the map flags, or ``None`` when none was given."""
    if cfg.get("map") is not None:
        f = read_map(cfg.get("map"))
        if n is not None and f.domain_size != n:
            raise InvalidParameterError(f"map has {f.domain_size} entries but the base has order {n}")
        return f
    if cfg.get("tilde") is not None:
        k = cfg.get("k")
        if k is None:
            if n is None or n % 3:
                raise ConfigurationError("--tilde needs --k (or a cycle length divisible by 3)")
            k = n // 3
        if n is not None and n != 3 * k:
            raise InvalidParameterError(f"--tilde with --k {k} needs C_{3 * k}, got n={n}")
        return three_translate_expand(cfg.get("tilde"), k)
    if n is None:
        if any(cfg.get(flag) for flag in ("id", "const", "perm", "map_random")):
            raise ConfigurationError("map flags need a base size (--cycle/--n or --graph)")
        return None
    if cfg.get("id"):
        return identity_map(n)
    if cfg.get("const") is not None:
        t = cfg.get("const")
        if not 1 <= t <= n:
            raise InvalidParameterError(f"--const {t} outside 1..{n}")
        return constant_map(n, t - 1)
    if cfg.get("perm") is not None:
        perm = cfg.get("perm")
        if len(perm) != n:
            raise InvalidParameterError(f"--perm lists {len(perm)} images for n={n}")
        return from_permutation([x - 1 for x in perm])
    if cfg.get("map_random"):
        return SeededGenerator(cfg.seed).random_map(n)
    return None


def _gamma_instance(cfg: RunConfig) -> Tuple[str, Graph, Optional[int]]:
    """(description, graph to solve, base order for labels)."""
    if cfg.get("graph") is not None:
        base = read_graph(cfg.get("graph"))
        f = _resolve_map(cfg, base.order)
        name = Path(cfg.get("graph")).name
        if f is None:
            return f"graph {name}", base, None
        return f"{name} {describe_map(f)}", build_functigraph(base, f).graph, base.order
    n = cfg.get("cycle")
    f = _resolve_map(cfg, n)
    if f is None:
        if n is None:
            raise ConfigurationError("gamma needs --graph FILE or --cycle n with a map flag")
        return f"C{n}", build_cycle(n), None
    return f"C{f.domain_size} {describe_map(f)}", cycle_functigraph(f).graph, f.domain_size


# ---------- Output ----------

def _emit(content: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(content)
        sys.stdout.flush()
        return
    try:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(content, encoding="utf-8")
    except OSError as e:
        raise ReportWriteError(f"cannot write {output}: {e}") from e
    _LOG.info("Output saved to %s", output)


def _render_record(record: Dict[str, object], fmt: str, text_lines: List[str]) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        row = {k: " ".join(str(i) for i in v) if isinstance(v, list) else v for k, v in record.items()}
        buffer = io.StringIO()
        pd.DataFrame([row], columns=list(record)).to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()
    return "\n".join(text_lines) + "\n"


# ---------- Commands ----------

def cmd_gamma(cfg: RunConfig) -> int:
    instance, graph, base_order = _gamma_instance(cfg)
    _LOG.info("Solving %s (%d vertices)", instance, graph.order)
    result = gamma_exact(graph, cfg.budget)
    record = {
        "instance": instance,
        "gamma": result.gamma,
        "witness": list(result.witness),
        "nodes_explored": result.nodes_explored,
    }
    lines = [
        f"instance: {instance}",
        f"gamma: {result.gamma}",
        f"witness: {format_labels(result.witness, base_order)}",
        f"nodes explored: {result.nodes_explored}",
    ]
    _emit(_render_record(record, cfg.output_format, lines), cfg.get("output"))
    return 0


def _verdict_exit(verdicts: List[TheoremVerdict]) -> int:
    return 0 if all(v.passed for v in verdicts) else 1


def _verify_options(cfg: RunConfig) -> VerifyOptions:
    return VerifyOptions(
        n=cfg.get("n"),
        k=cfg.get("k"),
        a=cfg.get("a"),
        mode=cfg.get("mode"),
        seed=cfg.seed,
        count=cfg.get("count"),
        tilde=cfg.get("tilde"),
        per_instance=bool(cfg.get("per_instance", False)),
        quick=bool(cfg.get("quick", False)),
        workers=cfg.get("workers"),
        quiet=bool(cfg.get("quiet", False)),
        budget=cfg.budget,
    )


def cmd_verify(cfg: RunConfig) -> int:
    theorem_id = cfg.get("theorem_id")
    verdicts = list(run_verify(theorem_id, _verify_options(cfg)))
    _emit(render(verdicts, cfg.output_format), cfg.get("output"))
    failed = sum(1 for v in verdicts if not v.passed)
    _LOG.info("%s: %d verdicts, %d failed", theorem_id, len(verdicts), failed)
    return _verdict_exit(verdicts)


def _require_map(cfg: RunConfig) -> VertexMap:
    f = _resolve_map(cfg, cfg.get("n"))
    if f is None:
        raise ConfigurationError("this construction needs --n with a map flag (--id, --const, --perm, --map-random) or --map/--tilde")
    return f


def _build_distance(cfg: RunConfig) -> Witness:
    f = _require_map(cfg)
    pair = distance_violation(f)
    if pair is None:
        raise PreconditionError("every pair at distance ≡ 1 (mod 3) keeps its images at distance ≡ 1 (mod 3)")
    return distance_3k2_dominating_set(f, *pair)


def _build_realization(cfg: RunConfig) -> Witness:
    a, i = cfg.get("a"), cfg.get("i")
    if a is None or i is None:
        raise ConfigurationError("realization needs --a and --i")
    return realization_instance(a, i)[2]


def _build_avg_degree(cfg: RunConfig) -> Witness:
    if cfg.get("residue") is None:
        raise ConfigurationError("avg-degree needs --class 1..3")
    return avg_degree_dominating_set(_require_map(cfg), cfg.get("residue"))


def _build_identity(cfg: RunConfig) -> Witness:
    if cfg.get("n") is None:
        raise ConfigurationError("identity needs --n")
    return identity_dominating_set(cfg.get("n"))


CONSTRUCTIONS: Dict[str, Callable[[RunConfig], Witness]] = {
    "identity": _build_identity,
    "realization": _build_realization,
    "mod1": lambda cfg: mod1_dominating_set(_require_map(cfg)),
    "3k2-nonperm": lambda cfg: nonperm_3k2_dominating_set(_require_map(cfg)),
    "3k2-distance": _build_distance,
    "consecutive5": lambda cfg: consecutive5_dominating_set(_require_map(cfg)),
    "final-3k2": lambda cfg: final_3k2_dispatch(_require_map(cfg), cfg.budget),
    "max-degree": lambda cfg: max_degree_dominating_set(_require_map(cfg)),
    "avg-degree": _build_avg_degree,
    "c5-case": lambda cfg: ex1_case_witness(_require_map(cfg)),
}


def cmd_construct(cfg: RunConfig) -> int:
    name = cfg.get("construction")
    try:
        build = CONSTRUCTIONS[name]
    except KeyError:
        raise InvalidParameterError(f"unknown construction {name!r}; known: {', '.join(CONSTRUCTIONS)}")
    w = build(cfg)
    fg = w.functigraph
    dominating = is_dominating(fg.graph, w.vertices)
    if name == "realization":
        instance = f"star chain a={cfg.get('a')} i={cfg.get('i')}"
    else:
        instance = f"C{fg.base_order} {describe_map(fg.map)}"
    record = {
        "construction": w.theorem_id,
        "instance": instance,
        "witness": list(w.vertices),
        "size": len(w.vertices),
        "claimed_size": w.claimed_size,
        "dominating": dominating,
    }
    lines = [
        f"construction: {w.theorem_id}",
        f"instance: {instance}",
        f"witness: {w.labels()}",
        f"size: {len(w.vertices)} (claimed {w.claimed_size})",
        f"dominating: {'yes' if dominating else 'no'}",
    ]
    _emit(_render_record(record, cfg.output_format, lines), cfg.get("output"))
    return 0 if dominating else 1


def cmd_report(cfg: RunConfig) -> int:
    output = cfg.get("output") or config.DEFAULT_REPORT_PATH.with_suffix("." + ("txt" if cfg.output_format == "text" else cfg.output_format))
    verdicts: List[TheoremVerdict] = []
    started = time.time()
    try:
        for verdict in acceptance_suite(_verify_options(cfg)):
            verdicts.append(verdict)
    except ResourceLimitError:
        write_report(verdicts, output, cfg.output_format)
        _LOG.error("Suite stopped by the node budget after %d verdicts; partial report in %s", len(verdicts), output)
        raise
    write_report(verdicts, output, cfg.output_format)
    failed = sum(1 for v in verdicts if not v.passed)
    _LOG.info("Suite finished in %.1fs: %d verdicts, %d failed", time.time() - started, len(verdicts), failed)
    return _verdict_exit(verdicts)


_HANDLERS: Dict[str, Callable[[RunConfig], int]] = {
    "gamma": cmd_gamma,
    "verify": cmd_verify,
    "construct": cmd_construct,
    "report": cmd_report,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run the command, and return its exit status."""
    args = _parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    try:
        config.setup_logging(level)
        cfg = RunConfig.from_args(args)
        return _HANDLERS[cfg.command](cfg)
    except ResourceLimitError as e:
        print(f"[ERROR] {e} (lower bound {e.lower_bound}, best found {e.best_size})", file=sys.stderr)
        return e.exit_code
    except FunctidomError as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return e.exit_code
    except KeyboardInterrupt:
        print("\n[INTERRUPTED] Stopped by user.", file=sys.stderr)
        return 130


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
