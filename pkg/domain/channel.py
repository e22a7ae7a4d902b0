"""
Channel - typed bipartite nonsignaling channel

A Channel is an unnormalized Choi matrix
    J(E) = sum_ij E(|i><j|) (x) |i><j|
with factor order (A_out, B_out, X_in, Y_in), together with its GlobalType.
"""

from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from .constants import DEFAULT_TOL, KRAUS_TOL, STATE_TOL
from .errors import ChannelValidationError, DimensionMismatchError, FactorizationError, InvalidStateError, MalformedTypeError
from .linalg_core import adjoint, as_matrix, frobenius_distance, min_eigenvalue, partial_trace, permute_systems, tensor
from .system_types import GlobalType, Party, SystemType, WireKind
from .validators import ValidationReport, validate_channel


class Channel:
    """
    Immutable typed channel.

    Validators run at construction unless validate=False, which is reserved
    for diagnostics on untrusted data.
    """

    def __init__(
        self,
        gtype: GlobalType,
        choi,
        metadata: Optional[Mapping[str, Any]] = None,
        validate: bool = True,
        tol: float = DEFAULT_TOL,
    ):
        choi = np.array(choi, dtype=complex)
        if choi.shape != (gtype.choi_dim, gtype.choi_dim):
            raise DimensionMismatchError(
                f"Choi matrix of shape {choi.shape} does not fit type {gtype} "
                f"(expected {gtype.choi_dim}x{gtype.choi_dim})"
            )
        choi.flags.writeable = False
        self._gtype = gtype
        self._choi = choi
        self._metadata = dict(metadata or {})

        if validate:
            report = self.validate(tol)
            if not report.passed:
                raise ChannelValidationError(
                    f"Channel of type {gtype} is invalid: " + "; ".join(report.violations()),
                    report,
                )

    @property
    def gtype(self) -> GlobalType:
        return self._gtype

    @property
    def choi(self) -> np.ndarray:
        return self._choi

    @property
    def metadata(self) -> Dict[str, Any]:
        return dict(self._metadata)

    def validate(self, tol: float = DEFAULT_TOL) -> ValidationReport:
        """Re-run all structural validators"""
        return validate_channel(self, tol)

    def with_metadata(self, **entries: Any) -> "Channel":
        """Copy with extra provenance entries; skips re-validation"""
        merged = dict(self._metadata)
        merged.update(entries)
        return Channel(self._gtype, self._choi, merged, validate=False)

    def __repr__(self) -> str:
        name = self._metadata.get("name", "channel")
        return f"Channel({name}, {self._gtype})"

    @classmethod
    def from_kraus(
        cls,
        gtype: GlobalType,
        kraus: Sequence,
        metadata: Optional[Mapping[str, Any]] = None,
        tol: float = DEFAULT_TOL,
    ) -> "Channel":
        """
        Build a channel from Kraus operators mapping X (x) Y to A (x) B

        Raises:
            ChannelValidationError: If the Kraus set is not complete or the
                resulting channel violates an invariant
        """
        return cls(gtype, choi_from_kraus(kraus, gtype.input_dim, gtype.output_dim), metadata, tol=tol)

    @classmethod
    def from_preparations(
        cls,
        gtype: GlobalType,
        states: Mapping[Tuple[int, int], Any],
        metadata: Optional[Mapping[str, Any]] = None,
    ) -> "Channel":
        """
        Channel that reads classical inputs (x, y) and prepares states[(x, y)]
        on the outputs.
        """
        if gtype.x.kind is WireKind.QUANTUM or gtype.y.kind is WireKind.QUANTUM:
            raise MalformedTypeError("Ensemble preparations need classical or trivial inputs")
        dX, dY = gtype.x.dim, gtype.y.dim
        choi = np.zeros((gtype.choi_dim, gtype.choi_dim), dtype=complex)
        for x in range(dX):
            for y in range(dY):
                if (x, y) not in states:
                    raise DimensionMismatchError(f"No prepared state for input {(x, y)}")
                rho = as_matrix(states[(x, y)])
                if rho.shape != (gtype.output_dim, gtype.output_dim):
                    raise DimensionMismatchError(f"State for input {(x, y)} has shape {rho.shape}")
                selector = np.zeros((dX * dY, dX * dY))
                selector[x * dY + y, x * dY + y] = 1.0
                choi += tensor(rho, selector)
        return cls(gtype, choi, metadata)

    @classmethod
    def identity(cls, gtype: GlobalType, metadata: Optional[Mapping[str, Any]] = None) -> "Channel":
        """Identity channel; requires X = A and Y = B dimensionally"""
        if (gtype.x.dim, gtype.y.dim) != (gtype.a.dim, gtype.b.dim):
            raise DimensionMismatchError(f"Identity channel needs matching input/output dims, got {gtype}")
        return cls.from_kraus(gtype, [np.eye(gtype.input_dim)], metadata)

    @classmethod
    def local(cls, party: Party, inp: SystemType, out: SystemType, choi, validate: bool = True) -> "Channel":
        """Single-party channel with Choi on (out, in)"""
        return cls(GlobalType.single_party(party, inp, out), choi, validate=validate)

    @classmethod
    def product(cls, alice: "Channel", bob: "Channel", metadata: Optional[Mapping[str, Any]] = None) -> "Channel":
        """E_A (x) E_B for single-party channels acting on Alice and Bob"""
        ga, gb = alice.gtype, bob.gtype
        if not (ga.y.is_trivial and ga.b.is_trivial and gb.x.is_trivial and gb.a.is_trivial):
            raise MalformedTypeError("product() expects an Alice-only and a Bob-only channel")
        gtype = GlobalType(x=ga.x, y=gb.y, a=ga.a, b=gb.b)
        choi = permute_systems(
            tensor(alice.choi, bob.choi), [ga.a.dim, ga.x.dim, gb.b.dim, gb.y.dim], [0, 2, 1, 3]
        )
        return cls(gtype, choi, metadata)


def choi_from_kraus(kraus: Sequence, d_in: int, d_out: int, tol: float = KRAUS_TOL) -> np.ndarray:
    """
    sum_k (K_k (x) I)|Omega><Omega|(K_k (x) I)^dagger for K_k : d_in -> d_out
    """
    ops = [as_matrix(k) for k in kraus]
    if not ops:
        raise ChannelValidationError("Empty Kraus set")
    for k in ops:
        if k.shape != (d_out, d_in):
            raise DimensionMismatchError(f"Kraus operator of shape {k.shape}, expected {(d_out, d_in)}")
    completeness = sum(adjoint(k) @ k for k in ops)
    deviation = float(np.max(np.abs(completeness - np.eye(d_in))))
    if deviation >= tol:
        raise ChannelValidationError(f"Kraus completeness fails: max|sum K^dagger K - I| = {deviation:.3e}")
    vecs = np.stack([k.reshape(-1) for k in ops])
    return vecs.T @ np.conj(vecs)


def apply(ch: Channel, state) -> np.ndarray:
    """
    Output density operator E(state) on A (x) B

    E(rho)_{o,o'} = sum_ij rho_ij J_{(o,i),(o',j)}
    """
    rho = as_matrix(state)
    d_in, d_out = ch.gtype.input_dim, ch.gtype.output_dim
    if rho.shape != (d_in, d_in):
        raise DimensionMismatchError(f"State of shape {rho.shape} does not fit input dimension {d_in}")
    if abs(np.trace(rho) - 1.0) > STATE_TOL or min_eigenvalue(rho) < -STATE_TOL:
        raise InvalidStateError("Input must be positive semidefinite with unit trace")
    j4 = ch.choi.reshape(d_out, d_in, d_out, d_in)
    return np.einsum("aibj,ij->ab", j4, rho)


def choi_distance(ch1: Channel, ch2: Channel) -> float:
    """Frobenius distance between Choi matrices of equally dimensioned channels"""
    if ch1.gtype.choi_dims != ch2.gtype.choi_dims:
        raise DimensionMismatchError(f"Cannot compare {ch1.gtype} with {ch2.gtype}")
    return frobenius_distance(ch1.choi, ch2.choi)


def factorize_trivial_output(ch: Channel, tol: float = DEFAULT_TOL) -> Tuple[Channel, Channel]:
    """
    Split a channel with a trivial output into trace (x) marginal channel

    If Alice's output is trivial the channel must be Tr_X (x) E_B; if Bob's
    is, E_A (x) Tr_Y.

    Returns:
        (alice_part, bob_part) as single-party channels

    Raises:
        MalformedTypeError: If neither output is trivial
        FactorizationError: If the reconstruction misses by more than tol
    """
    dA, dB, dX, dY = ch.gtype.choi_dims
    dims = [dA, dB, dX, dY]
    g = ch.gtype
    if g.a.is_trivial:
        marginal = partial_trace(ch.choi, dims, keep=[1, 3]) / dX
        expected = permute_systems(tensor(marginal, np.eye(dX)), [dB, dY, dX], [0, 2, 1])
        alice = Channel.local(Party.ALICE, g.x, g.a, np.eye(dX))
        bob = Channel.local(Party.BOB, g.y, g.b, marginal)
    elif g.b.is_trivial:
        marginal = partial_trace(ch.choi, dims, keep=[0, 2]) / dY
        expected = tensor(marginal, np.eye(dY))
        alice = Channel.local(Party.ALICE, g.x, g.a, marginal)
        bob = Channel.local(Party.BOB, g.y, g.b, np.eye(dY))
    else:
        raise MalformedTypeError(f"No trivial output in {g}")

    error = frobenius_distance(ch.choi, expected)
    if error > tol:
        raise FactorizationError(f"Reconstruction error {error:.3e} exceeds {tol:g}")
    return alice, bob
