"""
Command-line controls: argument parser and RunConfig from parsed arguments
"""
import argparse
import os
from typing import Any, Dict, Mapping, Optional, Sequence

from config.run_config import RunConfig
from config.settings import Config
from data.atlas_provider import ATLAS_MAX_VERTICES
from dichotomy.golden import GOLDEN_CHECKS
from identities.identity_factory import get_available_systems
from utils.errors import HomtopError


class UsageError(HomtopError):
    """Bad command line"""


class HomtopArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so usage errors map to their own exit code"""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    common = HomtopArgumentParser(add_help=False)
    common.add_argument("--format", choices=Config.GRAPH_CONFIG["formats"], help="graph input format")
    common.add_argument("--max-elements", type=int, help="mhom element budget")
    common.add_argument("--max-faces", type=int, help="order complex face budget")
    common.add_argument("--max-hom-dim", type=int, help="highest homology dimension computed")
    common.add_argument("--max-core-vertices", type=int, help="core computation size guard")
    common.add_argument("--identity", help=f"identity preset ({', '.join(get_available_systems())}) or JSON file")
    common.add_argument("--idempotent", action=argparse.BooleanOptionalAction, default=None,
                        help="require t(x,...,x) = x")
    common.add_argument("--budget-ms", type=int, help="search time budget per graph")
    common.add_argument("--max-nodes", type=int, help="search node budget per graph")
    common.add_argument("--max-classes", type=int, help="search tuple-class guard")
    common.add_argument("--samples", type=int, help="sample budget for sub-Taylor verification")
    common.add_argument("--seed", type=int, help="random seed")
    common.add_argument("--jobs", type=int, help="parallel corpus workers")
    common.add_argument("--json", action="store_true", default=None, help="machine-readable output")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="log level")
    return common


def build_parser() -> HomtopArgumentParser:
    common = _common_options()
    parser = HomtopArgumentParser(
        prog=Config.APP_CONFIG["name"],
        description="Multihomomorphism posets, homology and polymorphism search for graph colouring",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {Config.APP_CONFIG['version']}")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    p = commands.add_parser("classify", parents=[common], help="classify H-colouring as P or NP-complete")
    p.add_argument("inputs", nargs="+", metavar="GRAPH")

    p = commands.add_parser("complex", parents=[common], help="mhom(K2, H), its homology and the flip")
    p.add_argument("inputs", nargs="+", metavar="GRAPH")

    p = commands.add_parser("poly", parents=[common], help="search for a polymorphism satisfying identities")
    p.add_argument("inputs", nargs="+", metavar="GRAPH")

    p = commands.add_parser("poset", parents=[common], help="dismantling and homology of a poset file")
    p.add_argument("inputs", nargs="+", metavar="POSET")

    p = commands.add_parser("corpus", parents=[common], help="cross-validate a corpus of graphs")
    p.add_argument("inputs", nargs="*", metavar="FILE", help="corpus files; the graph atlas when omitted")
    p.add_argument("--atlas-max-vertices", type=int, default=Config.RUN_CONFIG["atlas_max_vertices"])
    p.add_argument("--connected-only", action="store_true")

    p = commands.add_parser("verify-paper", parents=[common], help="run the golden checks")
    p.add_argument("--check", action="append", choices=list(GOLDEN_CHECKS), dest="checks",
                   help="run only the named check (repeatable)")
    p.set_defaults(inputs=[])
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def run_config_from_args(args: argparse.Namespace, environ: Optional[Mapping[str, str]] = None) -> RunConfig:
    """Flags override HOMTOP_* variables, which override defaults"""
    overrides: Dict[str, Any] = {
        "inputs": tuple(args.inputs),
        "format": args.format,
        "max_elements": args.max_elements,
        "max_faces": args.max_faces,
        "max_hom_dim": args.max_hom_dim,
        "max_core_vertices": args.max_core_vertices,
        "identity": args.identity,
        "idempotent": args.idempotent,
        "budget_ms": args.budget_ms,
        "max_nodes": args.max_nodes,
        "max_classes": args.max_classes,
        "samples": args.samples,
        "seed": args.seed,
        "jobs": args.jobs,
        "json": args.json,
    }
    if args.command == "corpus":
        if not 1 <= args.atlas_max_vertices <= ATLAS_MAX_VERTICES:
            raise UsageError(f"--atlas-max-vertices must be in 1..{ATLAS_MAX_VERTICES}")
        overrides["extra"] = (("atlas_max_vertices", args.atlas_max_vertices),
                              ("connected_only", args.connected_only))
    if args.identity and args.identity not in get_available_systems() and not os.path.isfile(args.identity):
        raise UsageError(f"--identity: no preset or file named {args.identity!r}")
    try:
        return RunConfig.build(overrides, environ)
    except ValueError as e:
        raise UsageError(str(e)) from e
