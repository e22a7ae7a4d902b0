"""
Channel Validators
Structural checks on Choi matrices: CPTP, nonsignaling, classical wires

Every check returns a report carrying the violated quantity, not just a
boolean, so callers can show how far a channel is from passing.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, List, Optional

import numpy as np

from .constants import CLASSICAL_TOL, DEFAULT_TOL
from .linalg_core import dephase, frobenius_distance, is_hermitian, min_eigenvalue, partial_trace, permute_systems, tensor
from .system_types import Wire, WireKind

if TYPE_CHECKING:
    from .channel import Channel


class Direction(Enum):
    """ALICE_TO_BOB holds when Bob cannot learn Alice's input"""

    ALICE_TO_BOB = "alice->bob"
    BOB_TO_ALICE = "bob->alice"


@dataclass(frozen=True)
class CptpReport:
    min_eigenvalue: float
    trace_deviation: float
    hermitian: bool
    tol: float

    @property
    def completely_positive(self) -> bool:
        return self.hermitian and self.min_eigenvalue >= -self.tol

    @property
    def trace_preserving(self) -> bool:
        return self.trace_deviation <= self.tol

    @property
    def passed(self) -> bool:
        return self.completely_positive and self.trace_preserving


@dataclass(frozen=True)
class NonsignalingReport:
    direction: Direction
    deviation: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tol


@dataclass(frozen=True)
class ClassicalityReport:
    wire: Wire
    deviation: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tol


@dataclass
class ValidationReport:
    """All structural checks of one channel"""

    cptp: Optional[CptpReport] = None
    nonsignaling: List[NonsignalingReport] = field(default_factory=list)
    classical: List[ClassicalityReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        checks = [r.passed for r in self.nonsignaling] + [r.passed for r in self.classical]
        if self.cptp is not None:
            checks.append(self.cptp.passed)
        return all(checks)

    def violations(self) -> List[str]:
        """Human-readable description of every failed check"""
        out = []
        if self.cptp is not None:
            if not self.cptp.hermitian:
                out.append("choi matrix is not Hermitian")
            elif not self.cptp.completely_positive:
                out.append(f"min eigenvalue {self.cptp.min_eigenvalue:.3e} < -{self.cptp.tol:g}")
            if not self.cptp.trace_preserving:
                out.append(f"trace deviation {self.cptp.trace_deviation:.3e} > {self.cptp.tol:g}")
        for r in self.nonsignaling:
            if not r.passed:
                out.append(f"signaling {r.direction.value}: deviation {r.deviation:.3e}")
        for r in self.classical:
            if not r.passed:
                out.append(f"wire {r.wire.name} declared classical: dephasing deviation {r.deviation:.3e}")
        return out


def is_cptp(ch: "Channel", tol: float = DEFAULT_TOL) -> CptpReport:
    """
    Complete positivity via the Choi spectrum, trace preservation via the
    partial trace over the outputs.
    """
    dims = list(ch.gtype.choi_dims)
    hermitian = is_hermitian(ch.choi, max(tol, 1e-12))
    lam = min_eigenvalue(ch.choi)
    marginal = partial_trace(ch.choi, dims, keep=[2, 3])
    deviation = frobenius_distance(marginal, np.eye(ch.gtype.input_dim))
    return CptpReport(min_eigenvalue=lam, trace_deviation=deviation, hermitian=hermitian, tol=tol)


def nonsignaling_deviation(ch: "Channel", direction: Direction) -> float:
    dA, dB, dX, dY = ch.gtype.choi_dims
    dims = [dA, dB, dX, dY]
    if direction is Direction.ALICE_TO_BOB:
        marginal = partial_trace(ch.choi, dims, keep=[1, 2, 3])
        reduced = partial_trace(ch.choi, dims, keep=[1, 3])
        # reduced (x) I_X / dX is ordered (B, Y, X); move X to the middle
        expected = permute_systems(tensor(reduced, np.eye(dX) / dX), [dB, dY, dX], [0, 2, 1])
    else:
        marginal = partial_trace(ch.choi, dims, keep=[0, 2, 3])
        reduced = partial_trace(ch.choi, dims, keep=[0, 2])
        expected = tensor(reduced, np.eye(dY) / dY)
    return frobenius_distance(marginal, expected)


def is_nonsignaling(ch: "Channel", direction: Direction, tol: float = DEFAULT_TOL) -> NonsignalingReport:
    """Compare the party's marginal with the input-averaged marginal"""
    return NonsignalingReport(direction=direction, deviation=nonsignaling_deviation(ch, direction), tol=tol)


def classicality_deviation(ch: "Channel", wire: Wire) -> float:
    dims = list(ch.gtype.choi_dims)
    if dims[wire.value] == 1:
        return 0.0
    return frobenius_distance(ch.choi, dephase(ch.choi, dims, wire.value))


def is_classical_on_wire(ch: "Channel", wire: Wire, tol: float = CLASSICAL_TOL) -> bool:
    """True iff the Choi matrix is invariant under dephasing that wire"""
    return classicality_deviation(ch, wire) <= tol


def validate_channel(ch: "Channel", tol: float = DEFAULT_TOL) -> ValidationReport:
    """Run every invariant a Channel must satisfy"""
    report = ValidationReport(cptp=is_cptp(ch, tol))
    for direction in Direction:
        report.nonsignaling.append(is_nonsignaling(ch, direction, tol))
    for wire, st in ch.gtype.wires():
        if st.kind is WireKind.CLASSICAL:
            report.classical.append(
                ClassicalityReport(wire=wire, deviation=classicality_deviation(ch, wire), tol=CLASSICAL_TOL)
            )
    return report
