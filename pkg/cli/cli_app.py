"""
WorkbenchCLI - Command-line Interface
Main CLI Application implementing the Observer pattern over the workbench controller

Exit codes: 0 pass, 1 validation failure, 2 usage error.
"""

import argparse
import os
import sys
from typing import Any, Dict, List, Optional

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from domain.channel_file import dumps_channel, write_text
from cli.cli_views import CLIViewManager
from cli.resource_loader import ResourceLoaderContext, load_game
from command.command_manager import CommandManager
from command.criterion_commands import acceptance_commands
from domain.channel import Channel
from domain.channel_factory import ChannelFactory
from domain.conversion_factory import ConversionFactory
from domain.conversion_map import conversion_path
from domain.errors import (
    ChannelValidationError,
    FileFormatError,
    InvalidTypeError,
    ParameterError,
    TypeMismatchError,
    WorkbenchError,
)
from domain.system_types import Party
from domain.workbench_controller import CHECKS, DEFAULT_CHECKS, WorkbenchController
from event.observer import Observer

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

USAGE_ERRORS = (ParameterError, FileFormatError, InvalidTypeError, OSError)


def parse_params(items: Optional[List[str]]) -> Dict[str, str]:
    """['k=v', ...] -> {'k': 'v'}"""
    params = {}
    for item in items or []:
        if "=" not in item:
            raise ParameterError(f"Parameters are key=value, got {item!r}")
        key, value = item.split("=", 1)
        params[key.strip()] = value.strip()
    return params


class WorkbenchCLI(Observer):
    """
    Main CLI Application implementing Observer pattern

    Design Patterns:
    - Observer: renders workbench events when verbose
    - Singleton: uses the WorkbenchController settings
    - Factory: ChannelFactory / ConversionFactory behind the controller
    - Strategy: ResourceLoaderContext resolves sources
    - Command: acceptance criteria run by the CommandManager
    """

    def __init__(self, verbose: bool = False, out=None, err=None):
        self.controller = WorkbenchController()
        self.view_manager = CLIViewManager(out)
        self.event_view = CLIViewManager(err or sys.stderr)
        self.loader = ResourceLoaderContext()
        self.verbose = verbose
        self.controller.subject.attach(self)

    def close(self) -> None:
        self.controller.subject.detach(self)

    def update(self, data: Dict[str, Any]):
        """
        Observer pattern update method

        Args:
            data: Dictionary containing event type and associated data
        """
        if not self.verbose:
            return
        event_type = data.get('type', 'unknown')
        if event_type == "channel_built":
            self.event_view.show_info(f"Built {data['name']} {data['gtype']} {data.get('params') or ''}")
        elif event_type == "channel_loaded":
            self.event_view.show_info(f"Loaded {data['source']} {data['gtype']}")
        elif event_type == "conversion":
            self.event_view.show_info(
                f"Applied {data['construction']} to {data['source']} -> {data['gtype']} {data.get('params') or ''}"
            )
        elif event_type == "validation":
            verdict = "passed" if data['passed'] else "failed"
            self.event_view.show_info(f"Validation of {data['name']} {verdict}")
        elif event_type == "score":
            self.event_view.show_info(f"Score {data['game']} = {data['value']:.12f}")
        elif event_type == "criterion":
            self.event_view.show_info(f"Criterion {data['number']} finished: {'pass' if data['passed'] else 'fail'}")
        elif event_type == "error":
            self.event_view.show_error(data['message'])

    def _emit_channel(self, ch: Channel, out: Optional[str]) -> None:
        text = dumps_channel(ch)
        if out:
            path = self.controller.resolve_output(out)
            write_text(path, text)
            self.view_manager.show_success(f"Wrote {path}")
        else:
            self.view_manager.show_text(text)

    def cmd_zoo(self, args) -> int:
        if args.action == "list":
            names = ChannelFactory.get_available_channels()
            self.view_manager.display_zoo_list(names, {n: ChannelFactory.get_default_params(n) for n in names})
            return EXIT_OK
        if not args.name:
            raise ParameterError("zoo show needs a channel name")
        ch = self.controller.build_channel(args.name, parse_params(args.param))
        self._emit_channel(ch, args.out)
        return EXIT_OK

    def cmd_check(self, args) -> int:
        selected = tuple(c for c in CHECKS if getattr(args, c)) or DEFAULT_CHECKS
        ch = self.loader.load_channel(args.file, validate=False)
        results = self.controller.check(ch, selected)
        self.view_manager.display_check_report(args.file, str(ch.gtype), results)
        return EXIT_OK if all(r["passed"] for r in results.values()) else EXIT_FAIL

    def cmd_convert(self, args) -> int:
        source = self.loader.load_channel(args.source)
        result = self.controller.convert(
            source, args.construction, parse_params(args.param), party=Party.parse(args.party)
        )
        self._emit_channel(result, args.out)
        return EXIT_OK

    def cmd_score(self, args) -> int:
        game = load_game(args.game)
        ch = self.loader.load_channel(args.file)
        self.view_manager.show_text(f"{self.controller.score(game, ch):.12f}")
        return EXIT_OK

    def cmd_lhv(self, args) -> int:
        self.view_manager.show_text(f"{self.controller.lhv(load_game(args.game)):.12f}")
        return EXIT_OK

    def cmd_verify_paper(self, args) -> int:
        params = parse_params(args.param)
        unknown = set(params) - {"bgnp-ub"}
        if unknown:
            raise ParameterError(f"verify-paper takes only bgnp-ub, got {sorted(unknown)}")
        manager = CommandManager(self.controller.subject, n_jobs=self.controller.n_jobs)
        commands = acceptance_commands(self.controller.seed, params.get("bgnp-ub", "hadamard"))
        results = manager.run(commands)
        self.view_manager.display_criteria(results)
        return EXIT_OK if manager.all_passed() else EXIT_FAIL

    def cmd_types(self, args) -> int:
        self.view_manager.display_encoding_table()
        return EXIT_OK

    def cmd_conversions(self, args) -> int:
        if args.source is None:
            self.view_manager.display_conversion_map()
            return EXIT_OK
        if args.target is None:
            raise ParameterError("conversions takes no arguments or both a source and a target")
        path = conversion_path(args.source, args.target)
        self.view_manager.display_conversion_path(args.source, args.target, path)
        return EXIT_OK if path is not None else EXIT_FAIL

    def run(self, args) -> int:
        """Dispatch a parsed command line and map errors to exit codes"""
        handler = getattr(self, "cmd_" + args.command.replace("-", "_"))
        try:
            return handler(args)
        except (ChannelValidationError, TypeMismatchError) as e:
            self.controller.subject.notify_error(str(e))
            self.view_manager.show_error(str(e))
            return EXIT_FAIL
        except USAGE_ERRORS as e:
            self.controller.subject.notify_error(str(e))
            self.view_manager.show_error(str(e))
            return EXIT_USAGE
        except WorkbenchError as e:
            self.controller.subject.notify_error(str(e))
            self.view_manager.show_error(str(e))
            return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lose-workbench",
        description="Nonsignaling bipartite channels as resources under local operations and shared entanglement",
    )
    parser.add_argument("--tol", type=float, default=None, help="validator tolerance (default 1e-9)")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized steps")
    parser.add_argument("--jobs", type=int, default=None, help="parallel workers for verify-paper")
    parser.add_argument("--verbose", action="store_true", help="report workbench events on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    zoo = sub.add_parser("zoo", help="list or materialize named channels")
    zoo.add_argument("action", choices=["list", "show"])
    zoo.add_argument("name", nargs="?")
    zoo.add_argument("--param", action="append", metavar="K=V")
    zoo.add_argument("--out")

    check = sub.add_parser("check", help="run validators on a channel file")
    check.add_argument("file")
    for name in CHECKS:
        check.add_argument(f"--{name}", action="store_true")

    convert = sub.add_parser("convert", help="apply a named construction")
    convert.add_argument("source")
    convert.add_argument("construction", choices=ConversionFactory.get_available_conversions())
    convert.add_argument("--party", default="alice", choices=["alice", "bob"])
    convert.add_argument("--param", action="append", metavar="K=V")
    convert.add_argument("--out")

    score = sub.add_parser("score", help="score a strategy in a game")
    score.add_argument("game")
    score.add_argument("file")

    lhv = sub.add_parser("lhv", help="classical bound of a game")
    lhv.add_argument("game")

    verify = sub.add_parser("verify-paper", help="run every acceptance criterion")
    verify.add_argument("--param", action="append", metavar="K=V")

    sub.add_parser("types", help="print the partition-type encoding table")

    conversions = sub.add_parser("conversions", help="print the known LOSE conversions and their closure")
    conversions.add_argument("source", nargs="?")
    conversions.add_argument("target", nargs="?")
    return parser


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    """Main entry point for CLI application"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    controller = WorkbenchController()
    controller.configure(tolerance=args.tol, seed=args.seed, n_jobs=args.jobs)
    app = WorkbenchCLI(verbose=args.verbose, out=out, err=err)
    try:
        return app.run(args)
    finally:
        app.close()


if __name__ == "__main__":
    sys.exit(main())
