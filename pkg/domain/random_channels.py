"""
Seeded random generators for states, local channels and nonsignaling channels
"""

from typing import List, Optional

import numpy as np
from scipy.stats import unitary_group

from .channel import Channel, choi_from_kraus
from .linalg_core import adjoint, dephase
from .system_types import GlobalType, Party, SystemType, WireKind


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary"""
    if d == 1:
        return np.ones((1, 1), dtype=complex)
    return unitary_group.rvs(d, random_state=rng)


def random_density_matrix(d: int, rng: np.random.Generator, rank: Optional[int] = None) -> np.ndarray:
    """Random mixed state from a Ginibre matrix"""
    rank = rank or d
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    rho = g @ adjoint(g)
    return rho / np.trace(rho).real


def random_kraus(d_in: int, d_out: int, rng: np.random.Generator, rank: Optional[int] = None) -> List[np.ndarray]:
    """Kraus operators of a random CPTP map from a Haar-random isometry"""
    rank = rank or d_in
    while d_out * rank < d_in:
        rank += 1
    isometry = random_unitary(d_out * rank, rng)[:, :d_in]
    blocks = isometry.reshape(d_out, rank, d_in)
    return [blocks[:, k, :] for k in range(rank)]


def random_local_choi(inp: SystemType, out: SystemType, rng: np.random.Generator) -> np.ndarray:
    """
    Choi matrix on (out, in) of a random CPTP map respecting classical wires
    """
    choi = choi_from_kraus(random_kraus(inp.dim, out.dim, rng), inp.dim, out.dim)
    dims = [out.dim, inp.dim]
    if out.kind is WireKind.CLASSICAL:
        choi = dephase(choi, dims, 0)
    if inp.kind is WireKind.CLASSICAL:
        choi = dephase(choi, dims, 1)
    return choi


def random_local_channel(party: Party, inp: SystemType, out: SystemType, rng: np.random.Generator) -> Channel:
    return Channel.local(party, inp, out, random_local_choi(inp, out, rng))


def random_nonsignaling_channel(gtype: GlobalType, rng: np.random.Generator, n_terms: int = 3) -> Channel:
    """
    Shared-randomness mixture of random product channels of the given type
    """
    weights = rng.dirichlet(np.ones(n_terms))
    choi = np.zeros((gtype.choi_dim, gtype.choi_dim), dtype=complex)
    for w in weights:
        alice = random_local_channel(Party.ALICE, gtype.x, gtype.a, rng)
        bob = random_local_channel(Party.BOB, gtype.y, gtype.b, rng)
        choi += w * Channel.product(alice, bob).choi
    return Channel(gtype, choi, {"name": "random", "terms": int(n_terms)})


def random_system_type(rng: np.random.Generator, max_dim: int = 3, kinds=None) -> SystemType:
    kinds = list(kinds or WireKind)
    kind = kinds[rng.integers(len(kinds))]
    if kind is WireKind.TRIVIAL:
        return SystemType.trivial()
    return SystemType(kind, int(rng.integers(2, max_dim + 1)))


def random_global_type(rng: np.random.Generator, max_dim: int = 3, quantum_output: Optional[Party] = None) -> GlobalType:
    """Random type; optionally force one party's output to be quantum"""
    x = random_system_type(rng, max_dim)
    y = random_system_type(rng, max_dim)
    a = random_system_type(rng, max_dim)
    b = random_system_type(rng, max_dim)
    if quantum_output is Party.ALICE:
        a = random_system_type(rng, max_dim, kinds=[WireKind.QUANTUM])
    elif quantum_output is Party.BOB:
        b = random_system_type(rng, max_dim, kinds=[WireKind.QUANTUM])
    return GlobalType(x=x, y=y, a=a, b=b)
