"""
Ordering Spot-Checks
Compare two resources game by game over the strategies each can reach with
the implemented constructions

A reversal (r2 beating r1 on some game) refutes r1 >= r2. Agreement on every
game proves nothing: the strategy set is a small subset of LOSE.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .channel import Channel
from .chsh_strategies import optimize_branch_chsh, tsirelson_box
from .constants import DEFAULT_SEED, DEFAULT_TOL
from .errors import WorkbenchError
from .games import Game, best_deterministic_strategy, score
from .lose_transforms import dephase_outputs_to_box
from .system_types import GlobalType

ONE_SIDED_NOTE = (
    "One-sided check: a reversal refutes convertibility of r1 into r2; "
    "equal or better scores for r1 do not prove it."
)

Strategy = Tuple[str, Channel]


class StrategyProvider(ABC):
    """
    Strategy Pattern Interface: derives game-typed strategies from a resource.

    Responsibilities:
    - Decide whether it applies to (resource, game)
    - Return labelled strategies of exactly the game's type
    """

    @abstractmethod
    def strategies(self, resource: Channel, game: Game) -> List[Strategy]:
        pass


class DirectProvider(StrategyProvider):
    """The resource itself, when it already has the game's type"""

    def strategies(self, resource: Channel, game: Game) -> List[Strategy]:
        return [("direct", resource)] if resource.gtype == game.gtype else []


class DephasingProvider(StrategyProvider):
    """Computational-basis readout of both outputs"""

    def strategies(self, resource: Channel, game: Game) -> List[Strategy]:
        if resource.gtype == game.gtype or resource.gtype.choi_dims != game.gtype.choi_dims:
            return []
        try:
            box = dephase_outputs_to_box(resource)
        except WorkbenchError:
            return []
        return [("dephase", box)] if box.gtype == game.gtype else []


class BranchDephasingProvider(StrategyProvider):
    """Control-qubit branch strategy for channels with (control, data) outputs"""

    def __init__(self, seed: int = DEFAULT_SEED):
        self.seed = seed

    def strategies(self, resource: Channel, game: Game) -> List[Strategy]:
        g = resource.gtype
        if game.payoff is None or game.gtype != GlobalType.box(2, 2, 2, 2):
            return []
        if (g.x.dim, g.y.dim, g.a.dim, g.b.dim) != (2, 2, 4, 4):
            return []
        return [("chsh_branch", optimize_branch_chsh(resource, game, seed=self.seed).box)]


class FreeProvider(StrategyProvider):
    """Strategies every resource reaches by discarding itself"""

    def strategies(self, resource: Channel, game: Game) -> List[Strategy]:
        if game.payoff is None:
            return []
        dA, dB, dX, dY = game.gtype.choi_dims
        found = [("free:deterministic", best_deterministic_strategy(game).box(dA, dB))]
        if game.gtype == GlobalType.box(2, 2, 2, 2):
            found.append(("free:tsirelson", tsirelson_box()))
        return found


def default_providers(seed: int = DEFAULT_SEED) -> List[StrategyProvider]:
    return [DirectProvider(), DephasingProvider(), BranchDephasingProvider(seed), FreeProvider()]


@dataclass
class GameComparison:
    game: str
    best_r1: Optional[float]
    label_r1: Optional[str]
    best_r2: Optional[float]
    label_r2: Optional[str]
    reversal: bool


@dataclass
class OrderingReport:
    comparisons: List[GameComparison] = field(default_factory=list)
    note: str = ONE_SIDED_NOTE

    @property
    def refuted(self) -> bool:
        """True when some game shows r2 strictly ahead of r1"""
        return any(c.reversal for c in self.comparisons)


def best_strategy(
    resource: Channel, game: Game, providers: Sequence[StrategyProvider]
) -> Tuple[Optional[float], Optional[str]]:
    best: Tuple[Optional[float], Optional[str]] = (None, None)
    for provider in providers:
        for label, strategy in provider.strategies(resource, game):
            value = score(game, strategy)
            if best[0] is None or value > best[0]:
                best = (value, label)
    return best


def ordering_spotcheck(
    r1: Channel,
    r2: Channel,
    games: Sequence[Game],
    providers: Optional[Sequence[StrategyProvider]] = None,
    tol: float = DEFAULT_TOL,
) -> OrderingReport:
    """
    Per-game best scores of r1 and r2 over the provided strategies

    Args:
        r1: Resource expected to be at least as strong
        r2: Resource compared against it
        games: Games to score both resources in
        providers: Strategy providers; default_providers() when omitted
        tol: Slack before a higher r2 score counts as a reversal

    Returns:
        OrderingReport; a comparison is a reversal when r2's best exceeds
        r1's best by more than tol
    """
    providers = list(providers) if providers is not None else default_providers()
    report = OrderingReport()
    for game in games:
        s1, l1 = best_strategy(r1, game, providers)
        s2, l2 = best_strategy(r2, game, providers)
        reversal = s1 is not None and s2 is not None and s2 > s1 + tol
        report.comparisons.append(GameComparison(game.name, s1, l1, s2, l2, reversal))
    return report
