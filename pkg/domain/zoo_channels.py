"""
Zoo - named example resources

Every constructor returns a validated Channel, except bennett(), which is
CPTP but signaling (see SIGNALING_ZOO).
"""

from typing import Dict, List, Optional, Sequence

import numpy as np

from .box_distribution import BoxDistribution, box_from_distribution
from .channel import Channel, choi_from_kraus
from .constants import DFP_DEFAULT_ALPHA
from .errors import ChannelValidationError, NonUnitaryError, ParameterError
from .linalg_core import (
    CNOT,
    CSWAP,
    HADAMARD,
    IDENTITY_2,
    PAULIS,
    SIGMA_1,
    apply_to_factors,
    basis_ket,
    bell_ket,
    controlled,
    is_unitary,
    ket,
    projector,
    tensor_all,
)
from .system_types import GlobalType, SystemType
from .validators import is_cptp

_QUBIT = SystemType.quantum(2)
_BIT = SystemType.classical(2)

# dephasing in the Bennett basis signals in both directions
SIGNALING_ZOO = frozenset({"bennett"})

BELL_KINDS = ("phi+", "phi-", "psi+", "psi-")

# unnormalized product basis (alpha_i, beta_i)
BENNETT_STATES = (
    ((0, 1, 0), (0, 1, 0)),
    ((1, 0, 0), (1, 1, 0)),
    ((1, 0, 0), (1, -1, 0)),
    ((0, 0, 1), (0, 1, 1)),
    ((0, 0, 1), (0, 1, -1)),
    ((0, 1, 1), (1, 0, 0)),
    ((0, 1, -1), (1, 0, 0)),
    ((1, 1, 0), (0, 0, 1)),
    ((1, -1, 0), (0, 0, 1)),
)


def pr_box() -> Channel:
    """PR box: p(ab|xy) = 1/2 iff a xor b = xy"""
    return box_from_distribution(BoxDistribution.pr(), {"name": "pr"})


def uniform_box(nx: int = 2, ny: int = 2, na: int = 2, nb: int = 2) -> Channel:
    return box_from_distribution(
        BoxDistribution.uniform(nx, ny, na, nb), {"name": "uniform", "params": {"nx": nx, "ny": ny, "na": na, "nb": nb}}
    )


def isotropic_box(visibility: float) -> Channel:
    return box_from_distribution(
        BoxDistribution.isotropic(visibility), {"name": "isotropic", "params": {"v": float(visibility)}}
    )


def identity_channel(d: int = 2) -> Channel:
    q = SystemType.quantum(d)
    return Channel.identity(GlobalType(x=q, y=q, a=q, b=q), {"name": "identity", "params": {"d": int(d)}})


def phhh() -> Channel:
    """Inputs (x, y) prepare phi+ when xy = 0 and psi+ when xy = 1"""
    states = {
        (x, y): projector(bell_ket("psi+" if x * y == 1 else "phi+"))
        for x in range(2)
        for y in range(2)
    }
    gtype = GlobalType(x=_BIT, y=_BIT, a=_QUBIT, b=_QUBIT)
    return Channel.from_preparations(gtype, states, {"name": "phhh"})


def shsa_state(a: int, x: int, y: int) -> np.ndarray:
    """
    Subnormalized steered state 1/4 (I + (-1)^a sigma_{x+1}), transposed when y = 1
    """
    rho = (IDENTITY_2 + (-1) ** a * PAULIS[x]) / 4.0
    return rho.T if y == 1 else rho


def shsa() -> Channel:
    """Assemblage with Alice's classical outcome and Bob's steered qubit"""
    states = {}
    for x in range(3):
        for y in range(2):
            states[(x, y)] = sum(np.kron(projector(basis_ket(2, a)), shsa_state(a, x, y)) for a in range(2))
    gtype = GlobalType(x=SystemType.classical(3), y=_BIT, a=_BIT, b=_QUBIT)
    return Channel.from_preparations(gtype, states, {"name": "shsa"})


def bgnp_basis(u_b: np.ndarray) -> List[np.ndarray]:
    """
    Sixteen orthonormal kets on 4 (x) 4

    Each party's 4-dim system is (subspace qubit f/s) (x) (data qubit), so
    f = span{|0>, |1>} and s = span{|2>, |3>}. Bell states on the data qubits
    for each subspace pair; on ss Bob's data qubit is rotated by u_b.
    """
    basis = []
    for sa in range(2):
        for sb in range(2):
            for kind in BELL_KINDS:
                coeff = bell_ket(kind).reshape(2, 2)
                if sa == 1 and sb == 1:
                    coeff = coeff @ u_b.T
                psi = np.zeros((2, 2, 2, 2), dtype=complex)
                psi[sa, :, sb, :] = coeff
                basis.append(psi.reshape(16))
    return basis


def bgnp(u_b: Optional[np.ndarray] = None) -> Channel:
    """Full dephasing in the twisted Bell basis"""
    u_b = HADAMARD if u_b is None else np.asarray(u_b, dtype=complex)
    if u_b.shape != (2, 2) or not is_unitary(u_b):
        raise NonUnitaryError("u_b must be a 2x2 unitary")
    q4 = SystemType.quantum(4)
    kraus = [projector(v) for v in bgnp_basis(u_b)]
    return Channel.from_kraus(
        GlobalType(x=q4, y=q4, a=q4, b=q4),
        kraus,
        {"name": "bgnp", "params": {"ub": [[[float(z.real), float(z.imag)] for z in row] for row in u_b]}},
    )


# qubit registers of the DFP circuit
_DFP_REGISTERS = ("A_in", "B_in", "cA", "cB", "zA", "zB", "rA", "rB", "pA", "pB")
_DFP_OUTPUTS = ("cA", "A_in", "cB", "B_in")


def control_state(alpha: float) -> np.ndarray:
    """sqrt(1 - alpha)|00> + sqrt(alpha)|11> on the two control qubits"""
    return ket([np.sqrt(1.0 - alpha), 0, 0, np.sqrt(alpha)])


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ParameterError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def dfp_kraus(alpha: float) -> List[np.ndarray]:
    """
    Kraus operators (16 x 4) of the coherently controlled circuit

    Control 00 passes both data qubits through. Control 11 swaps each data
    qubit into a fresh register, measures it in the computational basis
    (coherent copy into a record qubit), flips Alice's half of a phi+ pair
    when both records and Alice's control are 1, and swaps the pair into the
    data slots. Output per party is (control, data).
    """
    alpha = check_alpha(alpha)
    reg = {name: i for i, name in enumerate(_DFP_REGISTERS)}
    dims = [2] * len(_DFP_REGISTERS)
    zero = basis_ket(2, 0)
    columns = []
    for a in range(2):
        for b in range(2):
            psi = tensor_all(
                basis_ket(2, a)[:, None],
                basis_ket(2, b)[:, None],
                control_state(alpha)[:, None],
                zero[:, None], zero[:, None], zero[:, None], zero[:, None],
                bell_ket("phi+")[:, None],
            ).reshape(-1)
            psi = apply_to_factors(psi, dims, CSWAP, [reg["cA"], reg["A_in"], reg["zA"]])
            psi = apply_to_factors(psi, dims, CSWAP, [reg["cB"], reg["B_in"], reg["zB"]])
            psi = apply_to_factors(psi, dims, CNOT, [reg["zA"], reg["rA"]])
            psi = apply_to_factors(psi, dims, CNOT, [reg["zB"], reg["rB"]])
            psi = apply_to_factors(psi, dims, controlled(SIGMA_1, 3), [reg["rA"], reg["rB"], reg["cA"], reg["pA"]])
            psi = apply_to_factors(psi, dims, CSWAP, [reg["cA"], reg["A_in"], reg["pA"]])
            psi = apply_to_factors(psi, dims, CSWAP, [reg["cB"], reg["B_in"], reg["pB"]])
            columns.append(psi)

    order = [reg[n] for n in _DFP_OUTPUTS] + [reg[n] for n in _DFP_REGISTERS if n not in _DFP_OUTPUTS]
    isometry = np.stack(
        [c.reshape(dims).transpose(order).reshape(16, 64) for c in columns], axis=-1
    )  # [out, env, in]
    kraus = [isometry[:, e, :] for e in range(isometry.shape[1])]
    return [k for k in kraus if np.linalg.norm(k) > 1e-14]


def dfp(alpha: float = DFP_DEFAULT_ALPHA) -> Channel:
    """Coherent mixture of bipartite identity and the PHHH preparation"""
    q2, q4 = SystemType.quantum(2), SystemType.quantum(4)
    return Channel.from_kraus(
        GlobalType(x=q2, y=q2, a=q4, b=q4), dfp_kraus(alpha), {"name": "dfp", "params": {"alpha": float(alpha)}}
    )


def bennett_basis() -> List[np.ndarray]:
    """The nine normalized product states alpha_i (x) beta_i"""
    return [np.kron(ket(al, normalize=True), ket(be, normalize=True)) for al, be in BENNETT_STATES]


def bennett() -> Channel:
    """
    Dephasing in the nine-state product basis.

    The only zoo entry outside the nonsignaling set: for Alice's input |1>,
    Bob's |0> projects onto alpha_6 / alpha_7 (Alice's output spread over
    |1>, |2>) while Bob's |1> hits the fixed point alpha_1 beta_1. Built
    with the CPTP check only and tagged ``signaling`` in its metadata.

    Raises:
        ChannelValidationError: If the projectors do not form a CPTP map
    """
    q3 = SystemType.quantum(3)
    choi = choi_from_kraus([projector(v) for v in bennett_basis()], 9, 9)
    ch = Channel(GlobalType(x=q3, y=q3, a=q3, b=q3), choi, {"name": "bennett", "signaling": True}, validate=False)
    report = is_cptp(ch)
    if not report.passed:
        raise ChannelValidationError(f"Bennett projectors are not CPTP: {report}", report)
    return ch


def zoo_names() -> Sequence[str]:
    return ("pr", "phhh", "shsa", "bgnp", "dfp", "bennett")


def nonsignaling_zoo_names() -> Sequence[str]:
    return tuple(n for n in zoo_names() if n not in SIGNALING_ZOO)


def gram_matrix(kets: Sequence[np.ndarray]) -> np.ndarray:
    m = np.stack(kets, axis=1)
    return m.conj().T @ m


def named_unitaries() -> Dict[str, np.ndarray]:
    """2x2 unitaries selectable by name for the bgnp twist"""
    s = np.array([[1, 0], [0, 1j]], dtype=complex)
    return {
        "hadamard": HADAMARD,
        "identity": IDENTITY_2,
        "x": PAULIS[0],
        "y": PAULIS[1],
        "z": PAULIS[2],
        "s": s,
    }
