"""
homtop - multihomomorphism posets, homology and polymorphism search
Command-line entry point
"""

import logging
import os
import sys
from typing import Callable, Dict, List, Optional, Sequence

# Add project root to Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from config.run_config import RunConfig  # noqa: E402
from config.settings import Config  # noqa: E402
from data.connector import CorpusProviderFactory  # noqa: E402
from data.graph_io import load_graph  # noqa: E402
from data.poset_io import load_poset  # noqa: E402
from dichotomy.corpus import corpus_run  # noqa: E402
from dichotomy.golden import run_golden_checks  # noqa: E402
from dichotomy.reports import classify_report, complex_report, poly_report, poset_report  # noqa: E402
from polysearch.search import SearchStatus  # noqa: E402
from ui.components import CorpusTable, GoldenTable, GraphReport, PolymorphismReport, PosetReport  # noqa: E402
from ui.controls import UsageError, parse_args, run_config_from_args  # noqa: E402
from utils.errors import BudgetExceeded, InputError  # noqa: E402
from utils.helpers import dump_json, report_envelope, setup_logging  # noqa: E402

logger = logging.getLogger(__name__)

EXIT = Config.EXIT_CODES

# command -> (report kind, loader, report builder, renderer)
INPUT_COMMANDS: Dict[str, tuple] = {
    "classify": ("classification", "graph", classify_report, GraphReport.classification),
    "complex": ("mhom-complex", "graph", complex_report, GraphReport.mhom_complex),
    "poly": ("polymorphism", "graph", poly_report, PolymorphismReport.render),
    "poset": ("poset", "poset", poset_report, PosetReport.render),
}


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def run_inputs(command: str, config: RunConfig) -> int:
    kind, loader, build, render = INPUT_COMMANDS[command]
    code = EXIT["ok"]
    indent = 2 if len(config.inputs) == 1 else None
    for path in config.inputs:
        if loader == "graph":
            item = load_graph(path, config.format)
        else:
            item = load_poset(path)
        report = build(item, path, config)
        if command == "poly" and report["search"]["status"] == SearchStatus.TIMEOUT.value:
            code = EXIT["budget"]
        if config.json:
            _emit(dump_json(report_envelope(kind, config.to_dict(), report), indent=indent))
        else:
            _emit(render(report))
    return code


def run_corpus(config: RunConfig) -> int:
    extra = dict(config.extra)
    provider = CorpusProviderFactory.create_provider(
        config.inputs, config.format, extra.get("atlas_max_vertices"), extra.get("connected_only", False)
    )
    logger.info(f"corpus source: {provider.describe()}")
    report = corpus_run(provider.iter_entries(), config)
    if config.json:
        for row in report.rows:
            _emit(dump_json(row, indent=None))
        _emit(dump_json(report_envelope("corpus-summary", config.to_dict(), report.summary), indent=None))
    else:
        _emit(CorpusTable.render(report.rows, report.summary))
    return report.exit_code


def run_verify_paper(config: RunConfig, names: Optional[List[str]]) -> int:
    checks = [c.to_dict() for c in run_golden_checks(config, names)]
    passed = all(c["passed"] for c in checks)
    if config.json:
        payload = {"checks": checks, "passed": passed}
        _emit(dump_json(report_envelope("verify-paper", config.to_dict(), payload)))
    else:
        _emit(GoldenTable.render(checks))
    return EXIT["ok"] if passed else EXIT["inconsistent"]


def main(argv: Optional[Sequence[str]] = None, environ=None) -> int:
    """Main application entry point"""
    environ = os.environ if environ is None else environ
    try:
        args = parse_args(argv)
        settings = Config.logging_settings(environ)
        if args.log_level:
            settings["level"] = args.log_level
        setup_logging(settings)
        config = run_config_from_args(args, environ)
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT["usage"]

    handlers: Dict[str, Callable[[], int]] = {
        "corpus": lambda: run_corpus(config),
        "verify-paper": lambda: run_verify_paper(config, args.checks),
    }
    try:
        if args.command in INPUT_COMMANDS:
            return run_inputs(args.command, config)
        return handlers[args.command]()
    except UsageError as e:
        logger.error(str(e))
        return EXIT["usage"]
    except (InputError, OSError) as e:
        logger.error(f"input error: {e}")
        return EXIT["input"]
    except BudgetExceeded as e:
        logger.error(f"budget exhausted: {e}")
        return EXIT["budget"]
    except ValueError as e:
        logger.error(f"input error: {e}")
        return EXIT["input"]


if __name__ == "__main__":
    sys.exit(main())
