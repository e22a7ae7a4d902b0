"""
CHSH Strategies
Quantum boxes from local measurements, the Tsirelson strategy, and a
branch-dephasing LOSE strategy for coherently controlled channels
"""

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize

from .box_distribution import BoxDistribution, box_from_distribution
from .channel import Channel, apply
from .constants import DEFAULT_SEED
from .errors import DimensionMismatchError, TypeMismatchError
from .games import Game, chsh_game, score
from .linalg_core import basis_ket, bell_ket, permute_systems, projector
from .lose_transforms import CombFragment, LocalComb, LoseOp, apply_lose
from .system_types import SystemType

_BIT = SystemType.classical(2)

# Alice (x = 0, 1) then Bob (y = 0, 1)
TSIRELSON_ANGLES = (0.0, np.pi / 4, np.pi / 8, -np.pi / 8)

GRID_POINTS = 6
N_RESTARTS = 2


def rotation(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rotation_povm(theta: float) -> List[np.ndarray]:
    """Projective qubit measurement onto R(theta)|0>, R(theta)|1>"""
    r = rotation(theta)
    return [projector(r @ basis_ket(2, a)) for a in range(2)]


def quantum_box(state, povms_a: Sequence[Sequence], povms_b: Sequence[Sequence]) -> Channel:
    """
    Box p(ab|xy) = tr[(M_{a|x} (x) N_{b|y}) rho]

    Args:
        state: Ket or density matrix on Alice (x) Bob
        povms_a: Alice's measurements, indexed [x][a]
        povms_b: Bob's measurements, indexed [y][b]
    """
    rho = np.asarray(state, dtype=complex)
    if rho.ndim == 1:
        rho = projector(rho)
    da, db = np.asarray(povms_a[0][0]).shape[0], np.asarray(povms_b[0][0]).shape[0]
    if rho.shape != (da * db, da * db):
        raise DimensionMismatchError(f"State of shape {rho.shape} does not fit local dims {da} x {db}")
    nx, ny = len(povms_a), len(povms_b)
    na, nb = len(povms_a[0]), len(povms_b[0])
    table = np.zeros((na, nb, nx, ny))
    for x, y in itertools.product(range(nx), range(ny)):
        for a, b in itertools.product(range(na), range(nb)):
            table[a, b, x, y] = np.real(np.trace(np.kron(povms_a[x][a], povms_b[y][b]) @ rho))
    return box_from_distribution(BoxDistribution(np.clip(table, 0.0, None)), {"name": "quantum_box"})


def tsirelson_box() -> Channel:
    """phi+ measured at the angles reaching 2 sqrt(2)"""
    ta0, ta1, tb0, tb1 = TSIRELSON_ANGLES
    box = quantum_box(
        bell_ket("phi+"),
        [rotation_povm(ta0), rotation_povm(ta1)],
        [rotation_povm(tb0), rotation_povm(tb1)],
    )
    return box.with_metadata(name="tsirelson")


def _branch_effect(a: int, theta: float) -> np.ndarray:
    """
    Effect on (control, data, aux) for outcome a: control 1 reads the data
    qubit, control 0 measures the auxiliary qubit at angle theta
    """
    ctrl0, ctrl1 = projector(basis_ket(2, 0)), projector(basis_ket(2, 1))
    data = projector(basis_ket(2, a))
    aux = rotation_povm(theta)[a]
    return np.kron(ctrl1, np.kron(data, np.eye(2))) + np.kron(ctrl0, np.kron(np.eye(2), aux))


def _branch_comb(thetas: Tuple[float, float]) -> LocalComb:
    # |x>|e> -> |x>_resource |x, e>_memory
    pre = CombFragment.from_kraus(
        [np.kron(np.outer(np.kron(basis_ket(2, x), basis_ket(2, x)), basis_ket(2, x)), np.eye(2)) for x in range(2)],
        (2, 2),
        (2, 4),
    )
    # memory (x, e) with x read out classically; resource output (control, data)
    povm = []
    for a in range(2):
        effect = np.zeros((16, 16), dtype=complex)
        for x in range(2):
            branch = _branch_effect(a, thetas[x]).reshape(2, 2, 2, 2, 2, 2)  # (c, d, e, c', d', e')
            px = projector(basis_ket(2, x))
            effect += np.einsum("cdeCDE,xX->cdxeCDXE", branch, px).reshape(16, 16)
        povm.append(effect)
    post = CombFragment.from_povm(povm, (4, 4))
    return LocalComb(pre, post, _BIT, _BIT)


def branch_chsh_op(angles: Sequence[float]) -> LoseOp:
    """
    LOSE strategy turning a controlled channel with 4-dim outputs into a
    CHSH box; the parties share phi+ as auxiliary pair

    Args:
        angles: (Alice x=0, Alice x=1, Bob y=0, Bob y=1) measurement angles
    """
    ta0, ta1, tb0, tb1 = (float(t) for t in angles)
    return LoseOp(
        _branch_comb((ta0, ta1)),
        _branch_comb((tb0, tb1)),
        projector(bell_ket("phi+")),
        name="chsh_branch",
    )


def _check_branch_type(ch: Channel) -> None:
    g = ch.gtype
    if (g.x.dim, g.y.dim, g.a.dim, g.b.dim) != (2, 2, 4, 4):
        raise TypeMismatchError(f"Branch strategy needs qubit inputs and (control, data) outputs, got {g}")


def branch_output_states(ch: Channel) -> np.ndarray:
    """
    Resource outputs for every (x, y) together with the auxiliary pair,
    regrouped per party as (control, data, aux); shape [x, y, 64, 64]
    """
    _check_branch_type(ch)
    phi = projector(bell_ket("phi+"))
    states = np.zeros((2, 2, 64, 64), dtype=complex)
    for x, y in itertools.product(range(2), range(2)):
        inp = projector(np.kron(basis_ket(2, x), basis_ket(2, y)))
        out = np.kron(apply(ch, inp), phi)
        states[x, y] = permute_systems(out, [2] * 6, [0, 1, 4, 2, 3, 5])
    return states


def branch_box_table(states: np.ndarray, angles: Sequence[float]) -> np.ndarray:
    """p(ab|xy) of the branch strategy, indexed [a, b, x, y]"""
    table = np.zeros((2, 2, 2, 2))
    for x, y in itertools.product(range(2), range(2)):
        sigma = states[x, y].reshape(8, 8, 8, 8)
        for a, b in itertools.product(range(2), range(2)):
            m = _branch_effect(a, angles[x])
            n = _branch_effect(b, angles[2 + y])
            table[a, b, x, y] = np.real(np.einsum("ac,bd,cdab->", m, n, sigma))
    return table


@dataclass
class BranchStrategyResult:
    angles: Tuple[float, float, float, float]
    score: float
    box: Channel


def optimize_branch_chsh(
    ch: Channel,
    game: Optional[Game] = None,
    seed: int = DEFAULT_SEED,
    restarts: int = N_RESTARTS,
) -> BranchStrategyResult:
    """
    Best measurement angles for the branch strategy

    Coarse grid over [0, pi) per angle, then Nelder-Mead from the best grid
    point and from seeded perturbations of it. The winning angles are
    turned into a LoseOp and scored on the resulting box.

    Raises:
        TypeMismatchError: If the channel does not have the controlled shape
    """
    game = game or chsh_game()
    states = branch_output_states(ch)

    def objective(angles: np.ndarray) -> float:
        return -float(np.einsum("xy,abxy,abxy->", game.input_dist, game.payoff, branch_box_table(states, angles)))

    grid = np.linspace(0.0, np.pi, GRID_POINTS, endpoint=False)
    start = min((np.array(p) for p in itertools.product(grid, repeat=4)), key=objective)

    rng = np.random.default_rng(seed)
    starts = [start] + [start + rng.normal(scale=0.3, size=4) for _ in range(restarts)]
    best = min(
        (minimize(objective, s, method="Nelder-Mead", options={"xatol": 1e-8, "fatol": 1e-12, "maxiter": 2000}) for s in starts),
        key=lambda r: r.fun,
    )
    angles = tuple(float(t) for t in best.x)
    box = apply_lose(
        branch_chsh_op(angles),
        ch,
        {"params": {"angles": list(angles)}},
    )
    return BranchStrategyResult(angles=angles, score=score(game, box), box=box)

