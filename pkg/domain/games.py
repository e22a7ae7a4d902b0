"""
Distributed Games
Linear scoring functionals on resources of a fixed type
"""

import itertools
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .box_distribution import BoxDistribution, box_from_distribution, distribution_from_box
from .channel import Channel
from .constants import BOX_TOL, LHV_STRATEGY_LIMIT
from .errors import DimensionMismatchError, InvalidTypeError, MalformedTypeError, StrategyLimitError, TypeMismatchError
from .linalg_core import as_matrix
from .system_types import GlobalType, WireKind


class Game:
    """
    A game of a fixed global type, in one of two forms:

    - witness: Hermitian W on Choi space, score Re tr(W J)
    - payoff: input distribution mu[x, y] and payoff F[a, b, x, y],
      score sum mu F p
    """

    def __init__(
        self,
        gtype: GlobalType,
        witness=None,
        input_dist=None,
        payoff=None,
        name: str = "game",
    ):
        if (witness is None) == (payoff is None):
            raise InvalidTypeError("A game has either a witness or a payoff table, not both")
        self.gtype = gtype
        self.name = name
        self.witness: Optional[np.ndarray] = None
        self.input_dist: Optional[np.ndarray] = None
        self.payoff: Optional[np.ndarray] = None

        if witness is not None:
            w = as_matrix(witness)
            if w.shape != (gtype.choi_dim, gtype.choi_dim):
                raise DimensionMismatchError(f"Witness of shape {w.shape} does not fit type {gtype}")
            if np.max(np.abs(w - w.conj().T), initial=0.0) >= 1e-12:
                raise InvalidTypeError("Witness must be Hermitian")
            self.witness = w
            return

        if any(st.kind is WireKind.QUANTUM for _, st in gtype.wires()):
            raise MalformedTypeError(f"Payoff games need a classical type, got {gtype}")
        dA, dB, dX, dY = gtype.choi_dims
        mu = np.asarray(input_dist, dtype=float) if input_dist is not None else np.full((dX, dY), 1.0 / (dX * dY))
        f = np.asarray(payoff, dtype=float)
        if mu.shape != (dX, dY) or f.shape != (dA, dB, dX, dY):
            raise DimensionMismatchError(f"Input distribution {mu.shape} / payoff {f.shape} do not fit {gtype}")
        if np.min(mu) < 0 or abs(mu.sum() - 1.0) > BOX_TOL:
            raise InvalidTypeError("Input distribution must be a probability distribution")
        self.input_dist = mu
        self.payoff = f

    @property
    def form(self) -> str:
        return "witness" if self.witness is not None else "payoff"

    def __repr__(self) -> str:
        return f"Game({self.name}, {self.form}, {self.gtype})"


def score(g: Game, strategy: Channel) -> float:
    """
    Score of a strategy

    Args:
        g: Witness game or payoff game
        strategy: Channel of exactly the game's type

    Returns:
        tr(W J) for witness games, the expected payoff for payoff games

    Raises:
        TypeMismatchError: If the strategy's type differs from the game's
    """
    if strategy.gtype != g.gtype:
        raise TypeMismatchError(f"Game {g.name} expects {g.gtype}, strategy has {strategy.gtype}")
    if g.witness is not None:
        return float(np.real(np.trace(g.witness @ strategy.choi)))
    return payoff_score(g, distribution_from_box(strategy))


def payoff_score(g: Game, box: BoxDistribution) -> float:
    """sum_{abxy} mu(x, y) F(a, b, x, y) p(ab|xy)"""
    if g.payoff is None:
        raise MalformedTypeError(f"Game {g.name} has no payoff table")
    return float(np.einsum("xy,abxy,abxy->", g.input_dist, g.payoff, box.table))


def chsh_game() -> Game:
    """
    Uniform inputs, payoff 4 * (-1)^(a xor b xor xy): PR scores 4, local
    strategies at most 2
    """
    payoff = np.zeros((2, 2, 2, 2))
    for a, b, x, y in itertools.product(range(2), repeat=4):
        payoff[a, b, x, y] = 4.0 * (-1) ** (a ^ b ^ (x & y))
    return Game(GlobalType.box(2, 2, 2, 2), input_dist=np.full((2, 2), 0.25), payoff=payoff, name="chsh")


@dataclass(frozen=True)
class DeterministicStrategy:
    value: float
    alice: Tuple[int, ...]
    bob: Tuple[int, ...]

    def box(self, na: int, nb: int) -> Channel:
        return box_from_distribution(
            BoxDistribution.deterministic(self.alice, self.bob, na, nb),
            {"name": "deterministic", "params": {"f": list(self.alice), "g": list(self.bob)}},
        )


def best_deterministic_strategy(g: Game, limit: int = LHV_STRATEGY_LIMIT) -> DeterministicStrategy:
    """
    Exhaustive search over a = f(x), b = g(y)

    Alice's assignments are enumerated; for each, Bob's best response is
    taken input by input, which reaches the same maximum as enumerating
    Bob's assignments too.

    Raises:
        StrategyLimitError: If |A|^|X| * |B|^|Y| exceeds limit
    """
    if g.payoff is None:
        raise MalformedTypeError("The classical bound needs a payoff game")
    dA, dB, dX, dY = g.payoff.shape
    count = dA ** dX * dB ** dY
    if count > limit:
        raise StrategyLimitError(f"{count} deterministic strategies exceed the limit of {limit}")

    weighted = g.input_dist[None, None, :, :] * g.payoff  # [a, b, x, y]
    best = None
    for f in itertools.product(range(dA), repeat=dX):
        # per_bob[b, y] = sum_x weighted[f(x), b, x, y]
        per_bob = sum(weighted[f[x], :, x, :] for x in range(dX))
        response = tuple(int(b) for b in np.argmax(per_bob, axis=0))
        value = float(sum(per_bob[response[y], y] for y in range(dY)))
        if best is None or value > best.value:
            best = DeterministicStrategy(value, tuple(f), response)
    return best


def lhv_bound(g: Game, limit: int = LHV_STRATEGY_LIMIT) -> float:
    """Maximum score over deterministic local strategies"""
    return best_deterministic_strategy(g, limit).value
