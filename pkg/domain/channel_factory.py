"""
ChannelFactory - Factory Method Pattern Implementation
Builds zoo channels from their stable identifiers and string parameters
"""

from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional

import numpy as np

from .channel import Channel
from .errors import ParameterError
from . import zoo_channels as zoo


def parse_real(value: Any, name: str) -> float:
    """Accept floats, ints and fractions such as '1/6'"""
    if isinstance(value, (int, float)):
        return float(value)
    try:
        return float(Fraction(str(value).strip()))
    except (ValueError, ZeroDivisionError):
        raise ParameterError(f"Parameter {name} must be a real number, got {value!r}")


def parse_int(value: Any, name: str) -> int:
    try:
        return int(str(value).strip())
    except ValueError:
        raise ParameterError(f"Parameter {name} must be an integer, got {value!r}")


def parse_unitary(value: Any, name: str = "ub") -> np.ndarray:
    """A named 2x2 unitary or an explicit matrix"""
    if isinstance(value, np.ndarray):
        return value
    unitaries = zoo.named_unitaries()
    key = str(value).strip().lower()
    if key in unitaries:
        return unitaries[key]
    raise ParameterError(f"Unknown unitary for {name}: {value!r}. Valid names: {sorted(unitaries)}")


class ChannelFactory:
    """
    Factory Method Pattern: Returns a validated Channel for a zoo identifier.

    Responsibilities:
    - Map identifiers to constructors
    - Parse and check parameters
    - Report the available identifiers
    """

    _BUILDERS: Dict[str, Dict[str, Any]] = {
        "pr": {"params": {}, "build": lambda p: zoo.pr_box()},
        "phhh": {"params": {}, "build": lambda p: zoo.phhh()},
        "shsa": {"params": {}, "build": lambda p: zoo.shsa()},
        "bgnp": {
            "params": {"ub": "hadamard"},
            "build": lambda p: zoo.bgnp(parse_unitary(p["ub"])),
        },
        "dfp": {
            "params": {"alpha": "1/6"},
            "build": lambda p: zoo.dfp(parse_real(p["alpha"], "alpha")),
        },
        "bennett": {"params": {}, "build": lambda p: zoo.bennett()},
        "uniform": {"params": {}, "build": lambda p: zoo.uniform_box()},
        "isotropic": {
            "params": {"v": "1"},
            "build": lambda p: zoo.isotropic_box(parse_real(p["v"], "v")),
        },
        "identity": {
            "params": {"d": "2"},
            "build": lambda p: zoo.identity_channel(parse_int(p["d"], "d")),
        },
    }

    @staticmethod
    def create(name: str, params: Optional[Mapping[str, Any]] = None) -> Channel:
        """
        Create a zoo channel

        Args:
            name: Zoo identifier (see get_available_channels)
            params: Optional parameters; unknown keys are rejected

        Returns:
            Validated Channel

        Raises:
            ParameterError: Unknown name or bad parameters
        """
        key = name.strip().lower()
        if key not in ChannelFactory._BUILDERS:
            raise ParameterError(
                f"Unknown channel: {name}. Valid channels: {', '.join(ChannelFactory.get_available_channels())}"
            )
        entry = ChannelFactory._BUILDERS[key]
        merged = dict(entry["params"])
        for k, v in (params or {}).items():
            if k not in merged:
                raise ParameterError(f"Channel {key} takes no parameter {k!r}. Valid: {sorted(merged) or 'none'}")
            merged[k] = v
        return entry["build"](merged)

    @staticmethod
    def get_available_channels() -> List[str]:
        return list(ChannelFactory._BUILDERS)

    @staticmethod
    def get_default_params(name: str) -> Dict[str, Any]:
        return dict(ChannelFactory._BUILDERS[name]["params"])
