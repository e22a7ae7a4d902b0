"""
Conversion Strategy Pattern
Each named construction as an interchangeable strategy: Channel in, Channel out
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from .channel import Channel
from .chsh_strategies import optimize_branch_chsh
from .constants import DEFAULT_SEED, DEFAULT_TOL, DFP_DEFAULT_ALPHA
from .conversion_map import chained_op, uses_alpha
from .conversions import phhh_to_dfp, phhh_to_shsa, pr_to_phhh, q_output_to_classical, teleport_left_inverse
from .errors import TypeMismatchError
from .lose_transforms import LoseOp, apply_lose, dephase_outputs_to_box
from .system_types import GlobalType, Party, SystemType


class ConversionStrategy(ABC):
    """
    Strategy Interface: contract for every named conversion

    Responsibilities:
    - Check the source channel's type
    - Produce the converted, re-validated channel
    """

    name: str = "conversion"
    params: Dict[str, Any] = {}

    @abstractmethod
    def convert(self, ch: Channel, tol: float = DEFAULT_TOL) -> Channel:
        pass

    def get_name(self) -> str:
        return self.name

    def describe(self) -> Dict[str, Any]:
        """Name and parameters, as reported with the conversion event"""
        return {"name": self.name, "params": dict(self.params)}


class LoseOpConversion(ConversionStrategy):
    """Fixed LoseOp whose resource boundary must equal a given type"""

    def __init__(self, name: str, op: LoseOp, source_type: GlobalType, params: Optional[Dict[str, Any]] = None):
        self.name = name
        self.params = dict(params or {})
        self.op = op
        self.source_type = source_type

    def convert(self, ch: Channel, tol: float = DEFAULT_TOL) -> Channel:
        if ch.gtype != self.source_type:
            raise TypeMismatchError(f"{self.name} expects a resource of type {self.source_type}, got {ch.gtype}")
        return apply_lose(self.op, ch, tol=tol)


_BIT, _QUBIT = SystemType.classical(2), SystemType.quantum(2)
PR_TYPE = GlobalType.box(2, 2, 2, 2)
PHHH_TYPE = GlobalType(x=_BIT, y=_BIT, a=_QUBIT, b=_QUBIT)


def pr_to_phhh_conversion() -> ConversionStrategy:
    return LoseOpConversion("pr_to_phhh", pr_to_phhh(), PR_TYPE)


def phhh_to_shsa_conversion() -> ConversionStrategy:
    return LoseOpConversion("phhh_to_shsa", phhh_to_shsa(), PHHH_TYPE)


def phhh_to_dfp_conversion(alpha: float = DFP_DEFAULT_ALPHA) -> ConversionStrategy:
    return LoseOpConversion("phhh_to_dfp", phhh_to_dfp(alpha), PHHH_TYPE, {"alpha": alpha})


SOURCE_TYPES = {"pr": PR_TYPE, "phhh": PHHH_TYPE}


def chained_conversion(source: str, target: str, alpha: float = DFP_DEFAULT_ALPHA) -> ConversionStrategy:
    """Known chain source -> target folded into one LoseOp by compose_lose"""
    params = {"alpha": alpha} if uses_alpha(source, target) else {}
    return LoseOpConversion(f"{source}_to_{target}", chained_op(source, target, alpha), SOURCE_TYPES[source], params)


class DephaseConversion(ConversionStrategy):
    """Computational-basis readout of both outputs"""

    name = "dephase"

    def convert(self, ch: Channel, tol: float = DEFAULT_TOL) -> Channel:
        return dephase_outputs_to_box(ch, tol=tol)


class QuantumOutputConversion(ConversionStrategy):
    """Bell measurement replacing one party's quantum output"""

    name = "q_out_to_classical"

    def __init__(self, party: Party = Party.ALICE):
        self.party = party
        self.params = {"party": party.value}

    def convert(self, ch: Channel, tol: float = DEFAULT_TOL) -> Channel:
        return q_output_to_classical(ch, self.party, tol=tol)


class TeleportInverseConversion(ConversionStrategy):
    """Teleportation undoing QuantumOutputConversion"""

    name = "teleport_inverse"

    def __init__(self, party: Party = Party.ALICE):
        self.party = party
        self.params = {"party": party.value}

    def convert(self, ch: Channel, tol: float = DEFAULT_TOL) -> Channel:
        return teleport_left_inverse(ch, self.party, tol=tol)


class BranchChshConversion(ConversionStrategy):
    """Optimized branch-dephasing box for (control, data) output channels"""

    name = "chsh_branch"

    def __init__(self, seed: int = DEFAULT_SEED):
        self.seed = seed
        self.params = {"seed": seed}

    def convert(self, ch: Channel, tol: float = DEFAULT_TOL) -> Channel:
        result = optimize_branch_chsh(ch, seed=self.seed)
        return result.box.with_metadata(score=result.score)

