"""
LOSE Transformations
Local combs around a bipartite resource, fed by a shared entangled state

A LocalComb is a pre-processing fragment
    (party input, entanglement share) -> (resource input, side memory)
and a post-processing fragment
    (resource output, side memory) -> party output,
each stored as a Choi matrix with its output ports before its input ports.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .channel import Channel, choi_from_kraus
from .constants import COMB_TOL, DEFAULT_TOL, STATE_TOL
from .errors import CombValidationError, DimensionMismatchError, NonUnitaryError
from .link_product import RegisterNetwork
from .linalg_core import adjoint, dephase, is_unitary, min_eigenvalue, partial_trace, permute_systems, tensor, tensor_all
from .system_types import GlobalType, SystemType, WireKind


@dataclass(frozen=True, eq=False)
class CombFragment:
    """CPTP map with declared input and output ports"""

    choi: np.ndarray
    in_dims: Tuple[int, ...]
    out_dims: Tuple[int, ...]

    def __post_init__(self):
        d_in = int(np.prod(self.in_dims))
        d_out = int(np.prod(self.out_dims))
        if self.choi.shape != (d_in * d_out, d_in * d_out):
            raise DimensionMismatchError(
                f"Fragment Choi of shape {self.choi.shape} does not fit ports {self.out_dims} <- {self.in_dims}"
            )
        if min_eigenvalue(self.choi) < -COMB_TOL:
            raise CombValidationError("Comb fragment is not completely positive")
        marginal = partial_trace(self.choi, [d_out, d_in], keep=[1])
        if np.max(np.abs(marginal - np.eye(d_in)), initial=0.0) > COMB_TOL:
            raise CombValidationError("Comb fragment is not trace preserving")

    @property
    def in_dim(self) -> int:
        return int(np.prod(self.in_dims))

    @property
    def out_dim(self) -> int:
        return int(np.prod(self.out_dims))

    @classmethod
    def from_kraus(cls, kraus: Sequence, in_dims: Sequence[int], out_dims: Sequence[int]) -> "CombFragment":
        in_dims, out_dims = tuple(int(d) for d in in_dims), tuple(int(d) for d in out_dims)
        try:
            choi = choi_from_kraus(kraus, int(np.prod(in_dims)), int(np.prod(out_dims)))
        except ValueError as e:
            raise CombValidationError(str(e))
        return cls(choi, in_dims, out_dims)

    @classmethod
    def from_povm(cls, povm: Sequence, in_dims: Sequence[int]) -> "CombFragment":
        """Measurement with a classical outcome: rho -> sum_k tr(M_k rho)|k><k|"""
        choi = sum(
            tensor(np.diag(np.eye(len(povm))[k]), np.asarray(m, dtype=complex).T) for k, m in enumerate(povm)
        )
        return cls(np.asarray(choi, dtype=complex), tuple(int(d) for d in in_dims), (len(povm),))

    @classmethod
    def identity(cls, in_dims: Sequence[int], out_dims: Sequence[int]) -> "CombFragment":
        """Relabel ports without touching the state"""
        d = int(np.prod(in_dims))
        if d != int(np.prod(out_dims)):
            raise DimensionMismatchError(f"Cannot relabel {tuple(in_dims)} as {tuple(out_dims)}")
        return cls.from_kraus([np.eye(d)], in_dims, out_dims)


class LocalComb:
    """
    One party's free pre/post-processing pair

    Responsibilities:
    - Hold the two fragments and the outer wire types
    - Check that the side memory of pre and post agree
    """

    def __init__(self, pre: CombFragment, post: CombFragment, in_type: SystemType, out_type: SystemType):
        if len(pre.in_dims) != 2 or len(pre.out_dims) != 2 or len(post.in_dims) != 2 or len(post.out_dims) != 1:
            raise CombValidationError("pre must map (input, share) -> (resource, memory); post (resource, memory) -> output")
        if pre.in_dims[0] != in_type.dim or post.out_dims[0] != out_type.dim:
            raise DimensionMismatchError(f"Outer wires {in_type}, {out_type} do not match the fragment ports")
        if pre.out_dims[1] != post.in_dims[1]:
            raise CombValidationError(
                f"Side memory mismatch: pre produces dim {pre.out_dims[1]}, post expects {post.in_dims[1]}"
            )
        self.pre = pre
        self.post = post
        self.in_type = in_type
        self.out_type = out_type

    @property
    def share_dim(self) -> int:
        return self.pre.in_dims[1]

    @property
    def resource_in_dim(self) -> int:
        return self.pre.out_dims[0]

    @property
    def memory_dim(self) -> int:
        return self.pre.out_dims[1]

    @property
    def resource_out_dim(self) -> int:
        return self.post.in_dims[0]

    @classmethod
    def identity(cls, in_type: SystemType, out_type: SystemType) -> "LocalComb":
        """Pass inputs to the resource and its outputs back unchanged"""
        return cls(
            CombFragment.identity((in_type.dim, 1), (in_type.dim, 1)),
            CombFragment.identity((out_type.dim, 1), (out_type.dim,)),
            in_type,
            out_type,
        )


class LoseOp:
    """Two local combs and the shared state feeding them"""

    def __init__(self, comb_a: LocalComb, comb_b: LocalComb, shared: Optional[np.ndarray] = None, name: str = "lose"):
        shared = np.ones((1, 1), dtype=complex) if shared is None else np.asarray(shared, dtype=complex)
        expected = comb_a.share_dim * comb_b.share_dim
        if shared.shape != (expected, expected):
            raise DimensionMismatchError(f"Shared state of shape {shared.shape}, combs expect dim {expected}")
        if abs(np.trace(shared) - 1.0) > STATE_TOL or min_eigenvalue(shared) < -STATE_TOL:
            raise CombValidationError("Shared state must be PSD with unit trace")
        self.comb_a = comb_a
        self.comb_b = comb_b
        self.shared = shared
        self.name = name

    def outer_type(self) -> GlobalType:
        return GlobalType(x=self.comb_a.in_type, y=self.comb_b.in_type, a=self.comb_a.out_type, b=self.comb_b.out_type)

    def __repr__(self) -> str:
        return f"LoseOp({self.name}, {self.outer_type()})"


def _check_boundary(op: LoseOp, gtype: GlobalType) -> None:
    expected = (
        op.comb_a.resource_in_dim,
        op.comb_b.resource_in_dim,
        op.comb_a.resource_out_dim,
        op.comb_b.resource_out_dim,
    )
    actual = (gtype.x.dim, gtype.y.dim, gtype.a.dim, gtype.b.dim)
    if expected != actual:
        raise DimensionMismatchError(f"LoseOp {op.name} expects resource dims {expected}, got {actual} from {gtype}")


def compose_choi(op: LoseOp, choi: np.ndarray) -> np.ndarray:
    """Choi matrix of the resource with the combs wrapped around it"""
    ca, cb = op.comb_a, op.comb_b
    net = RegisterNetwork()
    net.add_identity_link("X", "X_ref", ca.in_type.dim)
    net.add_identity_link("Y", "Y_ref", cb.in_type.dim)
    net.add([("sA", ca.share_dim), ("sB", cb.share_dim)], op.shared)
    net.apply(ca.pre.choi, ["X", "sA"], [("rA", ca.resource_in_dim), ("mA", ca.memory_dim)])
    net.apply(cb.pre.choi, ["Y", "sB"], [("rB", cb.resource_in_dim), ("mB", cb.memory_dim)])
    net.apply(choi, ["rA", "rB"], [("oA", ca.resource_out_dim), ("oB", cb.resource_out_dim)])
    net.apply(ca.post.choi, ["oA", "mA"], [("A", ca.out_type.dim)])
    net.apply(cb.post.choi, ["oB", "mB"], [("B", cb.out_type.dim)])
    return net.matrix(["A", "B", "X_ref", "Y_ref"])


def apply_lose(op: LoseOp, ch: Channel, metadata: Optional[dict] = None, tol: float = DEFAULT_TOL) -> Channel:
    """
    Wrap a channel in the combs of op

    Args:
        op: Combs and shared state; its resource boundary must match ch
        ch: Resource channel
        metadata: Extra metadata merged over the generated name and source
        tol: Validation tolerance for the composed channel

    Returns:
        The composed channel of op's outer type, re-validated

    Raises:
        DimensionMismatchError: If the resource boundary does not match
        ChannelValidationError: If the result is not a valid channel
    """
    _check_boundary(op, ch.gtype)
    meta = {"name": f"{op.name}({ch.metadata.get('name', 'channel')})", "source": ch.metadata}
    meta.update(metadata or {})
    return Channel(op.outer_type(), compose_choi(op, ch.choi), meta, tol=tol)


def _compose_pre(outer: LocalComb, inner: LocalComb) -> CombFragment:
    net = RegisterNetwork()
    net.add_identity_link("P", "P_ref", outer.in_type.dim)
    net.add_identity_link("S2", "S2_ref", outer.share_dim)
    net.add_identity_link("S1", "S1_ref", inner.share_dim)
    net.apply(outer.pre.choi, ["P", "S2"], [("R2", outer.resource_in_dim), ("M2", outer.memory_dim)])
    net.apply(inner.pre.choi, ["R2", "S1"], [("R1", inner.resource_in_dim), ("M1", inner.memory_dim)])
    choi = net.matrix(["R1", "M1", "M2", "P_ref", "S2_ref", "S1_ref"])
    return CombFragment(
        choi,
        (outer.in_type.dim, outer.share_dim * inner.share_dim),
        (inner.resource_in_dim, inner.memory_dim * outer.memory_dim),
    )


def _compose_post(outer: LocalComb, inner: LocalComb) -> CombFragment:
    net = RegisterNetwork()
    net.add_identity_link("O1", "O1_ref", inner.resource_out_dim)
    net.add_identity_link("M1", "M1_ref", inner.memory_dim)
    net.add_identity_link("M2", "M2_ref", outer.memory_dim)
    net.apply(inner.post.choi, ["O1", "M1"], [("O2", inner.out_type.dim)])
    net.apply(outer.post.choi, ["O2", "M2"], [("OUT", outer.out_type.dim)])
    choi = net.matrix(["OUT", "O1_ref", "M1_ref", "M2_ref"])
    return CombFragment(choi, (inner.resource_out_dim, inner.memory_dim * outer.memory_dim), (outer.out_type.dim,))


def compose_lose(outer: LoseOp, inner: LoseOp) -> LoseOp:
    """
    Single LoseOp equal to applying inner first and outer second
    """
    inner_type = inner.outer_type()
    _check_boundary(outer, inner_type)
    combs = []
    for o, i in ((outer.comb_a, inner.comb_a), (outer.comb_b, inner.comb_b)):
        combs.append(LocalComb(_compose_pre(o, i), _compose_post(o, i), o.in_type, o.out_type))
    # shares ordered (outer_A, inner_A, outer_B, inner_B)
    dims = [outer.comb_a.share_dim, outer.comb_b.share_dim, inner.comb_a.share_dim, inner.comb_b.share_dim]
    shared = permute_systems(tensor(outer.shared, inner.shared), dims, [0, 2, 1, 3])
    return LoseOp(combs[0], combs[1], shared, name=f"{outer.name}∘{inner.name}")


def dephase_outputs_to_box(
    ch: Channel,
    bases: Optional[Tuple[np.ndarray, np.ndarray]] = None,
    tol: float = DEFAULT_TOL,
) -> Channel:
    """
    Measure both outputs in the given product basis and re-type them classical

    Args:
        ch: Channel whose outputs are to be read out
        bases: (U_A, U_B); the columns of each unitary are the measurement
            basis. Computational basis by default.

    Raises:
        NonUnitaryError: If a basis matrix is not unitary
    """
    dA, dB, dX, dY = ch.gtype.choi_dims
    u_a, u_b = bases if bases is not None else (np.eye(dA), np.eye(dB))
    u_a, u_b = np.asarray(u_a, dtype=complex), np.asarray(u_b, dtype=complex)
    if u_a.shape != (dA, dA) or u_b.shape != (dB, dB) or not (is_unitary(u_a) and is_unitary(u_b)):
        raise NonUnitaryError(f"Measurement bases must be unitaries of dims {dA} and {dB}")
    rotation = tensor_all(adjoint(u_a), adjoint(u_b), np.eye(dX * dY))
    choi = rotation @ ch.choi @ adjoint(rotation)
    dims = [dA, dB, dX, dY]
    choi = dephase(dephase(choi, dims, 0), dims, 1)
    gtype = GlobalType(
        x=ch.gtype.x,
        y=ch.gtype.y,
        a=SystemType.of_kind(WireKind.CLASSICAL, dA),
        b=SystemType.of_kind(WireKind.CLASSICAL, dB),
    )
    name = ch.metadata.get("name", "channel")
    return Channel(gtype, choi, {"name": f"dephase({name})", "source": ch.metadata}, tol=tol)
