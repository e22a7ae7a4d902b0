"""
WorkbenchController - Singleton Pattern Implementation
Holds the runtime settings and fronts the domain operations used by the CLI
"""

import os
from typing import Any, Dict, Mapping, Optional

from event.workbench_subject import WorkbenchSubject

from .channel import Channel
from .channel_factory import ChannelFactory
from .constants import CLASSICAL_TOL, DEFAULT_SEED, DEFAULT_TOL, OUTPUT_DIR_ENV
from .conversion_factory import ConversionFactory
from .games import Game, lhv_bound, score
from .system_types import Party, Wire, WireKind
from .validators import Direction, classicality_deviation, is_cptp, is_nonsignaling
from .witnesses import ppt_min_eigenvalue

CHECKS = ("cptp", "nonsignaling", "classical", "ppt")
DEFAULT_CHECKS = ("cptp", "nonsignaling", "classical")


class WorkbenchController:
    """
    Singleton Pattern: one set of runtime settings for the whole process.

    Responsibilities:
    - Hold tolerance, seed, worker count and output directory
    - Build, convert, check and score channels
    - Report every step through the WorkbenchSubject
    """

    _instance = None

    def __new__(cls):
        """Singleton implementation - ensure only one instance exists"""
        if cls._instance is None:
            cls._instance = super(WorkbenchController, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return
        self.tolerance: float = DEFAULT_TOL
        self.seed: int = DEFAULT_SEED
        self.n_jobs: int = 1
        self.output_dir: Optional[str] = os.environ.get(OUTPUT_DIR_ENV) or None
        self.subject = WorkbenchSubject()
        self._initialized = True

    @classmethod
    def reset(cls) -> None:
        """Forget the instance; the next call builds fresh settings"""
        cls._instance = None

    def configure(self, tolerance: Optional[float] = None, seed: Optional[int] = None, n_jobs: Optional[int] = None) -> None:
        if tolerance is not None:
            self.tolerance = float(tolerance)
        if seed is not None:
            self.seed = int(seed)
        if n_jobs is not None:
            self.n_jobs = int(n_jobs)

    def resolve_output(self, path: str) -> str:
        """Relative paths land in the configured output directory"""
        if self.output_dir and not os.path.isabs(path):
            return os.path.join(self.output_dir, path)
        return path

    def build_channel(self, name: str, params: Optional[Mapping[str, Any]] = None) -> Channel:
        ch = ChannelFactory.create(name, params)
        self.subject.notify_channel_built(name, str(ch.gtype), dict(params or {}))
        return ch

    def convert(
        self,
        ch: Channel,
        construction: str,
        params: Optional[Mapping[str, Any]] = None,
        party: Party = Party.ALICE,
    ) -> Channel:
        """
        Apply a named construction and publish a conversion event

        Args:
            ch: Source channel
            construction: Name from ConversionFactory.get_available_conversions()
            params: Construction parameters, e.g. alpha
            party: Party for the teleportation constructions

        Returns:
            The converted channel, validated at the controller tolerance
        """
        strategy = ConversionFactory.create(construction, params, party=party, seed=self.seed)
        result = strategy.convert(ch, tol=self.tolerance)
        info = strategy.describe()
        self.subject.notify_conversion(info["name"], ch.metadata.get("name", "channel"), str(result.gtype), info["params"])
        return result

    def check(self, ch: Channel, checks=DEFAULT_CHECKS) -> Dict[str, Dict[str, Any]]:
        """
        Run the selected diagnostics

        Returns:
            Mapping check name -> {'passed': bool, plus measured quantities}
        """
        tol = self.tolerance
        results: Dict[str, Dict[str, Any]] = {}
        if "cptp" in checks:
            r = is_cptp(ch, tol)
            results["cptp"] = {
                "passed": r.passed,
                "min_eigenvalue": r.min_eigenvalue,
                "trace_deviation": r.trace_deviation,
            }
        if "nonsignaling" in checks:
            reports = [is_nonsignaling(ch, d, tol) for d in Direction]
            results["nonsignaling"] = {"passed": all(r.passed for r in reports)}
            results["nonsignaling"].update({r.direction.value: r.deviation for r in reports})
        if "classical" in checks:
            deviations = {
                w.name: classicality_deviation(ch, w)
                for w in Wire
                if ch.gtype.wire(w).kind is WireKind.CLASSICAL
            }
            results["classical"] = {"passed": all(d <= CLASSICAL_TOL for d in deviations.values()), **deviations}
        if "ppt" in checks:
            lam = ppt_min_eigenvalue(ch)
            results["ppt"] = {"passed": lam >= -tol, "min_eigenvalue": lam}
        passed = all(r["passed"] for r in results.values())
        self.subject.notify_validation(ch.metadata.get("name", "channel"), passed, results)
        return results

    def score(self, game: Game, ch: Channel) -> float:
        value = score(game, ch)
        self.subject.notify_score(game.name, value)
        return value

    def lhv(self, game: Game) -> float:
        value = lhv_bound(game)
        self.subject.notify_score(f"lhv:{game.name}", value)
        return value
