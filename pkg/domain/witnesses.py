"""
Postquantumness Witnesses
PPT test on the Choi matrix, fixed-point (eigenstate) condition, Schmidt rank
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Sequence

import numpy as np

from .channel import Channel, apply
from .constants import CONDITION_NUMBER_LIMIT, FIXED_POINT_TOL, SCHMIDT_TOL
from .errors import DimensionMismatchError, InvalidStateError, ParameterError, SingularOperatorError
from .linalg_core import is_normalized, min_eigenvalue, partial_transpose, projector


# factors transposed for each bipartite cut of the Choi matrix
PPT_CUTS = {"io": (2, 3), "ab": (1, 3)}


def ppt_min_eigenvalue(ch: Channel, cut: str = "io") -> float:
    """
    Minimum eigenvalue of the partially transposed Choi matrix

    Args:
        ch: Channel to test
        cut: "io" transposes the input factors (outputs | inputs), so a
            negative value means the channel is not entanglement-breaking;
            "ab" transposes Bob's output and input (Alice | Bob)
    """
    if cut not in PPT_CUTS:
        raise ParameterError(f"Unknown cut {cut!r}. Valid cuts: {sorted(PPT_CUTS)}")
    return min_eigenvalue(partial_transpose(ch.choi, list(ch.gtype.choi_dims), PPT_CUTS[cut]))


def _check_ket(ch: Channel, psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if not is_normalized(psi):
        raise InvalidStateError("psi must be normalized")
    if psi.shape[0] != ch.gtype.input_dim or ch.gtype.input_dim != ch.gtype.output_dim:
        raise DimensionMismatchError(
            f"psi of dim {psi.shape[0]} does not fit {ch.gtype} as both input and output"
        )
    return psi


def fixed_point_fidelity(ch: Channel, psi) -> float:
    """<psi| E(|psi><psi|) |psi>"""
    psi = _check_ket(ch, psi)
    return float(np.real(np.vdot(psi, apply(ch, projector(psi)) @ psi)))


def is_fixed_point(ch: Channel, psi, tol: float = FIXED_POINT_TOL) -> bool:
    return fixed_point_fidelity(ch, psi) > 1.0 - tol


class Verdict(Enum):
    CONSISTENT = "consistent"
    VIOLATION = "violation"


@dataclass
class EigenstateReport:
    verdict: Verdict
    premise_holds: bool
    fidelities: Dict[str, float] = field(default_factory=dict)


def _normalized(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


def eigenstate_condition_check(
    ch: Channel, psi, a_op, b_op, tol: float = FIXED_POINT_TOL
) -> EigenstateReport:
    """
    Necessary condition for LOSE-free channels: if psi, (A (x) I)psi and
    (I (x) B)psi are fixed points, (A (x) B)psi must be one as well

    Raises:
        SingularOperatorError: If A or B is numerically singular
    """
    a_op = np.asarray(a_op, dtype=complex)
    b_op = np.asarray(b_op, dtype=complex)
    for label, op in (("A", a_op), ("B", b_op)):
        if np.linalg.cond(op) > CONDITION_NUMBER_LIMIT:
            raise SingularOperatorError(f"Operator {label} is singular")
    psi = _check_ket(ch, psi)
    dx, dy = ch.gtype.x.dim, ch.gtype.y.dim
    if a_op.shape != (dx, dx) or b_op.shape != (dy, dy):
        raise DimensionMismatchError(f"Operators must act on dims {dx} and {dy}")

    states = {
        "psi": psi,
        "A": _normalized(np.kron(a_op, np.eye(dy)) @ psi),
        "B": _normalized(np.kron(np.eye(dx), b_op) @ psi),
        "AB": _normalized(np.kron(a_op, b_op) @ psi),
    }
    fidelities = {label: fixed_point_fidelity(ch, s) for label, s in states.items()}
    fixed = {label: f > 1.0 - tol for label, f in fidelities.items()}
    premise = fixed["psi"] and fixed["A"] and fixed["B"]
    verdict = Verdict.VIOLATION if premise and not fixed["AB"] else Verdict.CONSISTENT
    return EigenstateReport(verdict=verdict, premise_holds=premise, fidelities=fidelities)


def schmidt_rank(psi, dims: Sequence[int]) -> int:
    """Number of singular values above 1e-10 of the reshaped amplitudes"""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if len(dims) != 2 or dims[0] * dims[1] != psi.shape[0]:
        raise DimensionMismatchError(f"Bipartition {tuple(dims)} does not fit a ket of dim {psi.shape[0]}")
    if not is_normalized(psi):
        raise InvalidStateError("psi must be normalized")
    singular = np.linalg.svd(psi.reshape(dims[0], dims[1]), compute_uv=False)
    return int(np.sum(singular > SCHMIDT_TOL))


def beckman_condition(ch: Channel, psi, tol: float = FIXED_POINT_TOL) -> bool:
    """
    Sufficient-condition check: psi is a fixed point whose Schmidt rank
    equals Alice's input dimension
    """
    psi = _check_ket(ch, psi)
    dims = (ch.gtype.x.dim, ch.gtype.y.dim)
    return is_fixed_point(ch, psi, tol) and schmidt_rank(psi, dims) == dims[0]


def subspace_swap() -> np.ndarray:
    """Exchange the f and s qubit subspaces of a 4-dim system"""
    return np.eye(4, dtype=complex)[[2, 3, 0, 1]]


def phi_plus_ff() -> np.ndarray:
    """(|00> + |11>)/sqrt(2) inside the ff subspace of 4 (x) 4"""
    psi = np.zeros(16, dtype=complex)
    psi[0] = psi[5] = 1.0 / np.sqrt(2.0)
    return psi
