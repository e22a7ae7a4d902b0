"""
Named LOSE Constructions
Explicit combs converting one zoo resource into another, and the
teleportation-based encoding of quantum outputs into classical ones
"""

import math
from typing import List, Tuple

import numpy as np

from .channel import Channel
from .constants import CLASSICAL_TOL, DEFAULT_TOL
from .errors import MalformedTypeError
from .lose_transforms import CombFragment, LocalComb, LoseOp, apply_lose
from .linalg_core import (
    IDENTITY_2,
    PAULIS,
    SIGMA_1,
    basis_ket,
    bell_ket,
    dephase,
    frobenius_distance,
    heisenberg_weyl,
    maximally_entangled_ket,
    projector,
)
from .system_types import Party, SystemType, WireKind
from .zoo_channels import check_alpha, control_state

_BIT = SystemType.classical(2)
_QUBIT = SystemType.quantum(2)


def pr_to_phhh() -> LoseOp:
    """
    Shared phi+; each party flips its half with sigma_1 when its box output is 1
    """
    pre = CombFragment.identity((2, 2), (2, 2))
    # |a>|e> -> sigma_1^a |e>
    post = CombFragment.from_kraus(
        [np.kron(basis_ket(2, a)[None, :], np.linalg.matrix_power(SIGMA_1, a)) for a in range(2)],
        (2, 2),
        (2,),
    )
    comb = LocalComb(pre, post, _BIT, _QUBIT)
    return LoseOp(comb, comb, projector(bell_ket("phi+")), name="pr_to_phhh")


def shsa_observable_povm() -> List[np.ndarray]:
    """
    POVM on (qubit, stored x) measuring (-1)^x sigma_{x+1}; outcome 0 is eigenvalue +1
    """
    povm = []
    for a in range(2):
        element = np.zeros((6, 6), dtype=complex)
        for x in range(3):
            proj = (IDENTITY_2 + (-1) ** (a + x) * PAULIS[x]) / 2.0
            element += np.kron(proj, projector(basis_ket(3, x)))
        povm.append(element)
    return povm


def phhh_to_shsa() -> LoseOp:
    """
    Alice feeds x mod 2 to the box, keeps x, and measures (-1)^x sigma_{x+1}.
    Bob passes his wires straight through.
    """
    # |x> -> |x mod 2>_resource |x>_memory, one Kraus operator per x
    kraus = []
    for x in range(3):
        k = np.zeros((6, 3), dtype=complex)
        k[(x % 2) * 3 + x, x] = 1.0
        kraus.append(k)
    pre = CombFragment.from_kraus(kraus, (3, 1), (2, 3))
    post = CombFragment.from_povm(shsa_observable_povm(), (2, 3))
    alice = LocalComb(pre, post, SystemType.classical(3), _BIT)
    bob = LocalComb.identity(_BIT, _QUBIT)
    return LoseOp(alice, bob, name="phhh_to_shsa")


def _controlled_split_kraus() -> List[np.ndarray]:
    """
    (data, control) -> (resource, memory = (control, kept data))

    Control 0 keeps the data and sends |0>; control 1 sends the data and
    keeps |0>. The sent register is then read in the computational basis.
    """
    v = np.zeros((8, 4), dtype=complex)
    for a in range(2):
        v[0 * 4 + 0 * 2 + a, a * 2 + 0] = 1.0
        v[a * 4 + 1 * 2 + 0, a * 2 + 1] = 1.0
    return [np.kron(projector(basis_ket(2, k)), np.eye(4)) @ v for k in range(2)]


def _controlled_merge_kraus() -> List[np.ndarray]:
    """
    (resource output, memory = (control, kept data)) -> (control, data)

    Control 1 swaps the resource output into the data slot; the other
    register is discarded.
    """
    u = np.zeros((8, 8), dtype=complex)
    for p in range(2):
        for m in range(2):
            u[p * 4 + 0 * 2 + m, p * 4 + 0 * 2 + m] = 1.0
            u[m * 4 + 1 * 2 + p, p * 4 + 1 * 2 + m] = 1.0
    return [u[k * 4:(k + 1) * 4, :] for k in range(2)]


def phhh_to_dfp(alpha: float) -> LoseOp:
    """
    Controlled swaps decide coherently between passing the data through and
    measuring it into the PHHH box, with the control state shared
    """
    alpha = check_alpha(alpha)
    pre = CombFragment.from_kraus(_controlled_split_kraus(), (2, 2), (2, 4))
    post = CombFragment.from_kraus(_controlled_merge_kraus(), (2, 4), (4,))
    comb = LocalComb(pre, post, _QUBIT, SystemType.quantum(4))
    return LoseOp(comb, comb, projector(control_state(alpha)), name="phhh_to_dfp")


def bell_basis_povm(d: int) -> List[np.ndarray]:
    """Projectors onto (I (x) W_k)|Omega_d>/sqrt(d), k = d*p + q"""
    omega = maximally_entangled_ket(d) / math.sqrt(d)
    return [projector(np.kron(np.eye(d), heisenberg_weyl(d, k)) @ omega) for k in range(d * d)]


def _other_comb(ch: Channel, party: Party) -> LocalComb:
    g = ch.gtype
    if party is Party.ALICE:
        return LocalComb.identity(g.y, g.b)
    return LocalComb.identity(g.x, g.a)


def _with_combs(party: Party, mine: LocalComb, other: LocalComb) -> Tuple[LocalComb, LocalComb]:
    return (mine, other) if party is Party.ALICE else (other, mine)


def q_output_to_classical(ch: Channel, party: Party, tol: float = DEFAULT_TOL) -> Channel:
    """
    Replace a quantum output of dim d by a Bell measurement against a new
    quantum input of dim d; the output becomes the classical outcome k

    Raises:
        MalformedTypeError: If the party's output is not quantum
    """
    g = ch.gtype
    inp, out = g.wire(party.input_wire), g.wire(party.output_wire)
    if out.kind is not WireKind.QUANTUM:
        raise MalformedTypeError(f"{party.value}'s output is {out}, not quantum")
    d = out.dim
    new_in = inp.combine(SystemType.quantum(d))
    pre = CombFragment.identity((inp.dim * d, 1), (inp.dim, d))
    post = CombFragment.from_povm(bell_basis_povm(d), (d, d))
    mine = LocalComb(pre, post, new_in, SystemType.classical(d * d))
    comb_a, comb_b = _with_combs(party, mine, _other_comb(ch, party))
    op = LoseOp(comb_a, comb_b, name=f"q_out_to_classical[{party.value}]")
    meta = dict(ch.metadata)
    meta["teleport"] = {"party": party.value, "input": inp.to_dict(), "d": d}
    meta["name"] = f"q_out_to_classical({ch.metadata.get('name', 'channel')})"
    return apply_lose(op, ch, tol=tol).with_metadata(**meta)


def _infer_original_input(ch: Channel, party: Party) -> Tuple[SystemType, int]:
    g = ch.gtype
    inp, out = g.wire(party.input_wire), g.wire(party.output_wire)
    info = ch.metadata.get("teleport")
    if info is not None and info.get("party") == party.value:
        original, d = SystemType.from_dict(info["input"]), int(info["d"])
        if out.dim != d * d or inp.dim != original.dim * d:
            raise MalformedTypeError(f"Recorded teleport data does not match type {g}")
        return original, d

    d = math.isqrt(out.dim)
    if d < 2 or d * d != out.dim or inp.dim % d != 0:
        raise MalformedTypeError(f"{party.value}'s wires {inp} -> {out} are not a Bell-measurement encoding")
    dx = inp.dim // d
    if dx == 1:
        return SystemType.trivial(), d
    # split the input wire into (original, new quantum) and test the original part
    dA, dB, dX, dY = g.choi_dims
    if party is Party.ALICE:
        dims, factor = [dA, dB, dx, d, dY], 2
    else:
        dims, factor = [dA, dB, dX, dx, d], 3
    deviation = frobenius_distance(ch.choi, dephase(ch.choi, dims, factor))
    kind = WireKind.CLASSICAL if deviation <= CLASSICAL_TOL else WireKind.QUANTUM
    return SystemType(kind, dx), d


def teleport_left_inverse(ch_converted: Channel, party: Party, tol: float = DEFAULT_TOL) -> Channel:
    """
    Undo q_output_to_classical: prepare Phi_max locally, feed one half into
    the Bell-measurement input, and correct the other half with W_k^T

    Raises:
        MalformedTypeError: If the party's wires are not a Bell-measurement encoding
    """
    original, d = _infer_original_input(ch_converted, party)
    dx = original.dim
    omega = maximally_entangled_ket(d)[:, None] / math.sqrt(d)
    pre = CombFragment.from_kraus([np.kron(np.eye(dx), omega)], (dx, 1), (dx * d, d))
    post = CombFragment.from_kraus(
        [np.kron(basis_ket(d * d, k)[None, :], heisenberg_weyl(d, k).T) for k in range(d * d)],
        (d * d, d),
        (d,),
    )
    mine = LocalComb(pre, post, original, SystemType.quantum(d))
    comb_a, comb_b = _with_combs(party, mine, _other_comb(ch_converted, party))
    op = LoseOp(comb_a, comb_b, name=f"teleport_inverse[{party.value}]")
    meta = {k: v for k, v in ch_converted.metadata.items() if k != "teleport"}
    meta["name"] = f"teleport_inverse({ch_converted.metadata.get('name', 'channel')})"
    return apply_lose(op, ch_converted, tol=tol).with_metadata(**meta)
