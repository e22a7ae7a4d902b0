"""
CLIViewManager - View Layer for Terminal Interface
Handles all terminal output formatting for the workbench
"""

import sys
from typing import Any, Dict, Iterable, List, Optional, TextIO

from command.command import CommandResult
from domain.conversion_map import KNOWN_CONVERSIONS, KnownConversion, closure, known_equivalent, map_resources
from domain.partition_table import EncodingVerdict, PARTITION_ORDER, encoding_table


class CLIViewManager:
    """
    View layer for CLI application

    Responsibilities:
    - Format terminal output
    - Show status messages
    - Render reports (checks, criteria, encoding table)
    """

    def __init__(self, stream: Optional[TextIO] = None):
        self.width = 60
        self.stream = stream or sys.stdout
        use_color = hasattr(self.stream, "isatty") and self.stream.isatty()
        codes = {
            'header': '\033[95m',
            'blue': '\033[94m',
            'cyan': '\033[96m',
            'green': '\033[92m',
            'yellow': '\033[93m',
            'red': '\033[91m',
            'bold': '\033[1m',
            'end': '\033[0m'
        }
        self.colors = codes if use_color else {k: '' for k in codes}

    def _print(self, text: str = "") -> None:
        print(text, file=self.stream)

    def show_section_header(self, title: str):
        self._print("-" * self.width)
        self._print(f"{self.colors['bold']}{self.colors['header']}▶ {title}{self.colors['end']}")
        self._print("-" * self.width)

    def show_success(self, message: str):
        self._print(f"{self.colors['green']}✓ {message}{self.colors['end']}")

    def show_error(self, message: str):
        self._print(f"{self.colors['red']}✗ Error: {message}{self.colors['end']}")

    def show_warning(self, message: str):
        self._print(f"{self.colors['yellow']}⚠ {message}{self.colors['end']}")

    def show_info(self, message: str):
        self._print(f"{self.colors['cyan']}ℹ {message}{self.colors['end']}")

    def show_text(self, text: str):
        """Raw text (channel files, numbers) without decoration"""
        self.stream.write(text if text.endswith("\n") else text + "\n")

    def _verdict(self, passed: bool) -> str:
        if passed:
            return f"{self.colors['green']}PASS{self.colors['end']}"
        return f"{self.colors['red']}FAIL{self.colors['end']}"

    def display_zoo_list(self, names: Iterable[str], defaults: Dict[str, Dict[str, Any]]):
        self.show_section_header("ZOO")
        for name in names:
            params = ", ".join(f"{k}={v}" for k, v in defaults.get(name, {}).items())
            self._print(f"  {name:12s} {params}")

    def display_check_report(self, source: str, gtype: str, results: Dict[str, Dict[str, Any]]):
        """
        Args:
            results: check name -> {'passed': bool, measured quantities...}
        """
        self.show_section_header(f"CHECK {source}  {gtype}")
        for check, values in results.items():
            measured = ", ".join(
                f"{k}={v:.3e}" if isinstance(v, float) else f"{k}={v}"
                for k, v in values.items()
                if k != "passed"
            )
            self._print(f"  {check:14s} {self._verdict(values['passed'])}  {measured}")

    def display_criteria(self, results: List[CommandResult]):
        self.show_section_header("ACCEPTANCE CRITERIA")
        for r in results:
            self._print(f"  {r.number:2d}. {self._verdict(r.passed)}  {r.title}")
            self._print(f"        {r.measured}")
        passed = sum(r.passed for r in results)
        self._print("")
        summary = f"{passed}/{len(results)} criteria passed"
        if passed == len(results):
            self.show_success(summary)
        else:
            self.show_error(summary)

    def display_encoding_table(self):
        """9x9 table, rows encode columns: Y yes, ? unknown, . no (derived)"""
        marks = {EncodingVerdict.YES: "Y", EncodingVerdict.UNKNOWN: "?", EncodingVerdict.NO: "."}
        table = encoding_table()
        self.show_section_header("PARTITION-TYPE ENCODINGS (row encodes column)")
        self._print("       " + " ".join(f"{c:>3s}" for c in PARTITION_ORDER))
        for row in PARTITION_ORDER:
            cells = " ".join(f"{marks[table[(row, col)].verdict]:>3s}" for col in PARTITION_ORDER)
            self._print(f"  {row:>3s}  {cells}")
        links = sorted({cell.link for cell in table.values() if cell.link})
        if links:
            self._print("")
            for link in links:
                members = [f"({r},{c})" for (r, c), cell in table.items() if cell.link == link]
                self._print(f"  linked unknowns [{link}]: {' '.join(members)}")
        self._print("")
        self._print("  Y  proven encoding")
        self._print("  ?  open question")
        self._print("  .  no: derived, a type with a trivial side cannot encode one without")

    def display_conversion_map(self):
        """Proven edges, then the reachability closure (row converts to column)"""
        self.show_section_header("KNOWN LOSE CONVERSIONS")
        for edge in KNOWN_CONVERSIONS:
            self._print(f"  {edge.source:>5s} -> {edge.target:<5s} {edge.construction}")
        names = map_resources()
        known = closure()
        self._print("")
        self._print("        " + " ".join(f"{n:>5s}" for n in names))
        for row in names:
            cells = " ".join(f"{'Y' if known[(row, col)] else '?':>5s}" for col in names)
            self._print(f"  {row:>5s} {cells}")
        classes = sorted({tuple(n for n in names if known_equivalent(row, n)) for row in names}, key=len, reverse=True)
        self._print("")
        for members in classes:
            if len(members) > 1:
                self._print(f"  equally postquantum: {', '.join(members)}")
        self._print("  ?  no known conversion; the question is open")

    def display_conversion_path(self, source: str, target: str, path: Optional[List[KnownConversion]]):
        if path is None:
            self.show_warning(f"No known LOSE conversion from {source} to {target}")
            return
        steps = " then ".join(e.construction for e in path) or "identity"
        self.show_success(f"{source} -> {target}: {steps}")
