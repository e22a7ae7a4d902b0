"""
Known Conversion Map
Proven LOSE conversions between zoo resources, closed under composition

Only PR <-> PHHH, PHHH -> SHSA and PHHH -> DFP are established. Every
other pair is open; a missing path means "unknown", never "impossible".
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .constants import DFP_DEFAULT_ALPHA
from .conversions import phhh_to_dfp, phhh_to_shsa, pr_to_phhh
from .errors import ParameterError
from .linalg_core import basis_ket, projector
from .lose_transforms import CombFragment, LocalComb, LoseOp, compose_lose
from .system_types import SystemType, WireKind


@dataclass(frozen=True)
class KnownConversion:
    """One proven edge: source resource, target resource, construction name"""

    source: str
    target: str
    construction: str


KNOWN_CONVERSIONS: Tuple[KnownConversion, ...] = (
    KnownConversion("pr", "phhh", "pr_to_phhh"),
    KnownConversion("phhh", "pr", "dephase"),
    KnownConversion("phhh", "shsa", "phhh_to_shsa"),
    KnownConversion("phhh", "dfp", "phhh_to_dfp"),
)


def _adjacency() -> Dict[str, List[KnownConversion]]:
    adj: Dict[str, List[KnownConversion]] = {}
    for edge in KNOWN_CONVERSIONS:
        adj.setdefault(edge.source, []).append(edge)
        adj.setdefault(edge.target, [])
    return adj


def map_resources() -> List[str]:
    return sorted(_adjacency())


def conversion_path(source: str, target: str) -> Optional[List[KnownConversion]]:
    """
    Shortest chain of known conversions from source to target

    Returns:
        The edges in application order, [] when source == target, or None
        when no known chain exists

    Raises:
        ParameterError: If either name is not on the map
    """
    adj = _adjacency()
    for name in (source, target):
        if name not in adj:
            raise ParameterError(f"{name} is not on the conversion map ({', '.join(sorted(adj))})")
    previous: Dict[str, Optional[KnownConversion]] = {source: None}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        if node == target:
            break
        for edge in adj[node]:
            if edge.target not in previous:
                previous[edge.target] = edge
                queue.append(edge.target)
    if target not in previous:
        return None
    path = []
    node = target
    while previous[node] is not None:
        path.append(previous[node])
        node = previous[node].source
    return path[::-1]


def reachable(source: str) -> List[str]:
    """Targets with a known chain from source, source included"""
    return [t for t in map_resources() if conversion_path(source, t) is not None]


def known_equivalent(r1: str, r2: str) -> bool:
    """Both directions known, i.e. provably equally postquantum"""
    return conversion_path(r1, r2) is not None and conversion_path(r2, r1) is not None


def closure() -> Dict[Tuple[str, str], bool]:
    names = map_resources()
    return {(s, t): conversion_path(s, t) is not None for s in names for t in names}


def computational_readout(in_type: SystemType, out_dim: int) -> LocalComb:
    """Pass the input through and measure the resource output in the computational basis"""
    pre = CombFragment.identity((in_type.dim, 1), (in_type.dim, 1))
    post = CombFragment.from_povm([projector(basis_ket(out_dim, k)) for k in range(out_dim)], (out_dim, 1))
    return LocalComb(pre, post, in_type, SystemType.of_kind(WireKind.CLASSICAL, out_dim))


def dephase_op() -> LoseOp:
    """Readout of PHHH's qubit outputs as a LoseOp, so it composes like the other edges"""
    comb = computational_readout(SystemType.classical(2), 2)
    return LoseOp(comb, comb, name="dephase")


def edge_op(edge: KnownConversion, alpha: float = DFP_DEFAULT_ALPHA) -> LoseOp:
    if edge.construction == "pr_to_phhh":
        return pr_to_phhh()
    if edge.construction == "phhh_to_shsa":
        return phhh_to_shsa()
    if edge.construction == "phhh_to_dfp":
        return phhh_to_dfp(alpha)
    if edge.construction == "dephase":
        return dephase_op()
    raise ParameterError(f"No LoseOp for construction {edge.construction}")


def chained_op(source: str, target: str, alpha: float = DFP_DEFAULT_ALPHA) -> LoseOp:
    """
    Single LoseOp realizing the known chain from source to target

    Args:
        source: Map resource the op consumes
        target: Map resource the op produces
        alpha: DFP control weight, used when the chain ends in phhh_to_dfp

    Returns:
        compose_lose of the chain's edges, renamed source_to_target

    Raises:
        ParameterError: If no known chain exists or source == target
    """
    path = conversion_path(source, target)
    if not path:
        raise ParameterError(f"No known LOSE conversion from {source} to {target}")
    op = edge_op(path[0], alpha)
    for edge in path[1:]:
        op = compose_lose(edge_op(edge, alpha), op)
    return LoseOp(op.comb_a, op.comb_b, op.shared, name=f"{source}_to_{target}")


def chained_constructions() -> List[Tuple[str, str]]:
    """(source, target) pairs reachable only through two or more edges"""
    pairs = []
    for (s, t), known in closure().items():
        path = conversion_path(s, t) if known and s != t else None
        if path and len(path) > 1:
            pairs.append((s, t))
    return pairs


def uses_alpha(source: str, target: str) -> bool:
    return any(e.construction == "phhh_to_dfp" for e in conversion_path(source, target) or [])

