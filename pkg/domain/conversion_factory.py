"""
ConversionFactory - Factory Method Pattern Implementation
Selects the conversion strategy for a construction name
"""

from typing import Any, Mapping, Optional

from .channel_factory import parse_real
from .constants import DEFAULT_SEED, DFP_DEFAULT_ALPHA
from .conversion_map import chained_constructions, uses_alpha
from .conversion_strategies import (
    BranchChshConversion,
    ConversionStrategy,
    DephaseConversion,
    QuantumOutputConversion,
    TeleportInverseConversion,
    chained_conversion,
    phhh_to_dfp_conversion,
    phhh_to_shsa_conversion,
    pr_to_phhh_conversion,
)
from .errors import ParameterError
from .system_types import Party


class ConversionFactory:
    """
    Factory Method Pattern: Returns the conversion strategy for a construction name.

    Responsibilities:
    - Map construction names to strategies
    - Fold multi-step chains of the known-conversion map into one construction
    - Parse construction parameters
    """

    CONSTRUCTIONS = (
        "pr_to_phhh",
        "phhh_to_shsa",
        "phhh_to_dfp",
        "dephase",
        "q_out_to_classical",
        "teleport_inverse",
        "chsh_branch",
    )
    CHAINED = {f"{s}_to_{t}": (s, t) for s, t in chained_constructions()}

    @staticmethod
    def create(
        name: str,
        params: Optional[Mapping[str, Any]] = None,
        party: Party = Party.ALICE,
        seed: int = DEFAULT_SEED,
    ) -> ConversionStrategy:
        """
        Create a conversion strategy

        Args:
            name: One of CONSTRUCTIONS or a key of CHAINED
            params: Construction parameters (alpha, for phhh_to_dfp and chains through it)
            party: Party for the teleportation constructions
            seed: Seed for the branch optimizer

        Raises:
            ParameterError: Unknown name or parameter
        """
        key = name.strip().lower()
        params = dict(params or {})
        chain = ConversionFactory.CHAINED.get(key)
        takes_alpha = key == "phhh_to_dfp" or (chain is not None and uses_alpha(*chain))
        allowed = {"alpha"} if takes_alpha else set()
        unknown = set(params) - allowed
        if unknown:
            raise ParameterError(f"Construction {key} takes no parameter(s) {sorted(unknown)}")

        if key == "pr_to_phhh":
            return pr_to_phhh_conversion()
        if key == "phhh_to_shsa":
            return phhh_to_shsa_conversion()
        if key == "phhh_to_dfp":
            return phhh_to_dfp_conversion(parse_real(params.get("alpha", DFP_DEFAULT_ALPHA), "alpha"))
        if key == "dephase":
            return DephaseConversion()
        if key == "q_out_to_classical":
            return QuantumOutputConversion(party)
        if key == "teleport_inverse":
            return TeleportInverseConversion(party)
        if key == "chsh_branch":
            return BranchChshConversion(seed)
        if chain is not None:
            return chained_conversion(*chain, alpha=parse_real(params.get("alpha", DFP_DEFAULT_ALPHA), "alpha"))
        raise ParameterError(
            f"Unknown construction: {name}. Valid constructions: {', '.join(ConversionFactory.get_available_conversions())}"
        )

    @staticmethod
    def get_available_conversions():
        return list(ConversionFactory.CONSTRUCTIONS) + sorted(ConversionFactory.CHAINED)
