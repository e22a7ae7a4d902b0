"""
BoxDistribution - conditional probability tables p(ab|xy)
"""

from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .channel import Channel
from .constants import BOX_TOL
from .errors import InvalidTypeError, MalformedTypeError
from .system_types import GlobalType, WireKind


class BoxDistribution:
    """
    Nonsignaling box stored as an array indexed [a, b, x, y].

    Responsibilities:
    - Validate nonnegativity, normalization and nonsignaling
    - Convert to and from classical-type Channels
    """

    def __init__(self, table, tol: float = BOX_TOL):
        table = np.array(table, dtype=float)
        if table.ndim != 4:
            raise InvalidTypeError(f"Box table must be indexed [a, b, x, y], got shape {table.shape}")
        if np.min(table) < -tol:
            raise InvalidTypeError(f"Negative probability {np.min(table):.3e}")
        norms = table.sum(axis=(0, 1))
        if np.max(np.abs(norms - 1.0)) > tol:
            raise InvalidTypeError("Every p(.|xy) must sum to 1")
        alice = table.sum(axis=1)  # [a, x, y]
        bob = table.sum(axis=0)  # [b, x, y]
        if np.max(np.abs(alice - alice[:, :, :1])) > tol:
            raise InvalidTypeError("Alice's marginal depends on Bob's input")
        if np.max(np.abs(bob - bob[:, :1, :])) > tol:
            raise InvalidTypeError("Bob's marginal depends on Alice's input")
        table.flags.writeable = False
        self._table = table

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def sizes(self) -> Tuple[int, int, int, int]:
        """(|X|, |Y|, |A|, |B|)"""
        na, nb, nx, ny = self._table.shape
        return (nx, ny, na, nb)

    def probability(self, a: int, b: int, x: int, y: int) -> float:
        return float(self._table[a, b, x, y])

    def gtype(self) -> GlobalType:
        nx, ny, na, nb = self.sizes
        return GlobalType.box(nx, ny, na, nb)

    def chsh_correlators(self) -> np.ndarray:
        """E[x, y] = p(a = b|xy) - p(a != b|xy) for binary outputs"""
        if self._table.shape[:2] != (2, 2):
            raise MalformedTypeError("Correlators need binary outputs")
        t = self._table
        return t[0, 0] + t[1, 1] - t[0, 1] - t[1, 0]

    def mix(self, other: "BoxDistribution", weight: float) -> "BoxDistribution":
        """weight * self + (1 - weight) * other"""
        return BoxDistribution(weight * self._table + (1.0 - weight) * other._table)

    @classmethod
    def from_function(cls, sizes: Sequence[int], fn: Callable[[int, int, int, int], float]) -> "BoxDistribution":
        nx, ny, na, nb = sizes
        table = np.zeros((na, nb, nx, ny))
        for a in range(na):
            for b in range(nb):
                for x in range(nx):
                    for y in range(ny):
                        table[a, b, x, y] = fn(a, b, x, y)
        return cls(table)

    @classmethod
    def uniform(cls, nx: int = 2, ny: int = 2, na: int = 2, nb: int = 2) -> "BoxDistribution":
        return cls(np.full((na, nb, nx, ny), 1.0 / (na * nb)))

    @classmethod
    def pr(cls) -> "BoxDistribution":
        return cls.from_function((2, 2, 2, 2), lambda a, b, x, y: 0.5 if (a ^ b) == (x & y) else 0.0)

    @classmethod
    def isotropic(cls, visibility: float) -> "BoxDistribution":
        """PR box mixed with white noise"""
        if not 0.0 <= visibility <= 1.0:
            raise InvalidTypeError(f"Visibility must lie in [0, 1], got {visibility}")
        return cls.pr().mix(cls.uniform(), visibility)

    @classmethod
    def deterministic(cls, f: Sequence[int], g: Sequence[int], na: int = 2, nb: int = 2) -> "BoxDistribution":
        """Local deterministic box a = f[x], b = g[y]"""
        nx, ny = len(f), len(g)
        return cls.from_function((nx, ny, na, nb), lambda a, b, x, y: float(a == f[x] and b == g[y]))


def box_from_distribution(d: BoxDistribution, metadata: Optional[dict] = None) -> Channel:
    """Classical channel with diagonal Choi matrix p(ab|xy)"""
    # Choi factor order (A, B, X, Y) matches the table's index order
    return Channel(d.gtype(), np.diag(d.table.reshape(-1)).astype(complex), metadata)


def distribution_from_box(ch: Channel) -> BoxDistribution:
    """
    Read p(ab|xy) off the Choi diagonal

    Raises:
        MalformedTypeError: If a wire is quantum
    """
    for wire, st in ch.gtype.wires():
        if st.kind is WireKind.QUANTUM:
            raise MalformedTypeError(f"Wire {wire.name} is quantum; not a box")
    dA, dB, dX, dY = ch.gtype.choi_dims
    return BoxDistribution(np.real(np.diag(ch.choi)).reshape(dA, dB, dX, dY))
