"""
Linear Algebra Kernel
Dense complex matrix and ket operations every other module builds on

Conventions:
- Matrices are numpy complex arrays in row-major order.
- In a tensor product the left factor is the slow index, so a composite
  index over factors (d0, d1, ...) is i0 * d1 * d2 ... + i1 * d2 ... + ...
- Multi-factor operators are reshaped to (d0, d1, ..., d0, d1, ...) with the
  ket axes first and the bra axes second.
"""

from functools import reduce
from typing import Iterable, List, Sequence, Tuple, Union
import math

import numpy as np

from .constants import HERMITIAN_TOL, UNITARY_TOL
from .errors import DimensionMismatchError, InvalidStateError, NonHermitianError

CMatrix = np.ndarray
Ket = np.ndarray

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2.0)
PAULIS = (SIGMA_1, SIGMA_2, SIGMA_3)


def as_matrix(m) -> CMatrix:
    """Return m as a 2-D complex array"""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise DimensionMismatchError(f"Expected a matrix, got an array of shape {arr.shape}")
    return arr


def tensor(m1, m2) -> CMatrix:
    """Kronecker product with m1 as the left (slow) factor"""
    return np.kron(np.asarray(m1, dtype=complex), np.asarray(m2, dtype=complex))


def tensor_all(*ms) -> CMatrix:
    """Kronecker product of any number of factors, left to right"""
    if not ms:
        return np.ones((1, 1), dtype=complex)
    return reduce(tensor, ms)


def adjoint(m) -> CMatrix:
    """Conjugate transpose"""
    return np.conj(np.asarray(m, dtype=complex)).T


def frobenius_distance(m1, m2) -> float:
    """Frobenius norm of m1 - m2"""
    a = np.asarray(m1, dtype=complex)
    b = np.asarray(m2, dtype=complex)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"Cannot compare shapes {a.shape} and {b.shape}")
    return float(np.linalg.norm(a - b))


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    """True iff max|m - m^dagger| < tol"""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        return False
    return bool(np.max(np.abs(a - adjoint(a)), initial=0.0) < tol)


def is_unitary(m, tol: float = UNITARY_TOL) -> bool:
    """True iff m is square and m^dagger m = I within tol"""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        return False
    return bool(np.max(np.abs(adjoint(a) @ a - np.eye(a.shape[0])), initial=0.0) < tol)


def _check_dims(m: CMatrix, dims: Sequence[int]) -> List[int]:
    dims = [int(d) for d in dims]
    total = int(np.prod(dims)) if dims else 1
    if m.shape != (total, total):
        raise DimensionMismatchError(
            f"Matrix of shape {m.shape} does not match factor dimensions {dims}"
        )
    return dims


def partial_trace(m, dims: Sequence[int], keep: Iterable[int]) -> CMatrix:
    """
    Trace out every factor not listed in keep

    Args:
        m: Square matrix on the tensor product of the factors
        dims: Dimension of each factor
        keep: Indices of the factors to keep

    Returns:
        Reduced matrix with the kept factors in their original order
    """
    a = as_matrix(m)
    dims = _check_dims(a, dims)
    n = len(dims)
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= n for k in keep):
        raise DimensionMismatchError(f"Factor indices {keep} out of range for {n} factors")

    ket_axes = list(range(n))
    bra_axes = [i if i not in keep else n + i for i in range(n)]
    out_axes = keep + [n + k for k in keep]
    reduced = np.einsum(a.reshape(dims + dims), ket_axes + bra_axes, out_axes)
    dk = int(np.prod([dims[k] for k in keep])) if keep else 1
    return reduced.reshape(dk, dk)


def partial_transpose(m, dims: Sequence[int], factor: Union[int, Sequence[int]]) -> CMatrix:
    """Transpose in the computational basis of the named factor(s) only"""
    a = as_matrix(m)
    dims = _check_dims(a, dims)
    n = len(dims)
    factors = [factor] if isinstance(factor, (int, np.integer)) else list(factor)
    axes = list(range(2 * n))
    for f in factors:
        if f < 0 or f >= n:
            raise DimensionMismatchError(f"Factor index {f} out of range for {n} factors")
        axes[f], axes[n + f] = axes[n + f], axes[f]
    total = a.shape[0]
    return a.reshape(dims + dims).transpose(axes).reshape(total, total)


def permute_systems(m, dims: Sequence[int], perm: Sequence[int]) -> CMatrix:
    """
    Reorder tensor factors: factor i of the result is factor perm[i] of m
    """
    a = as_matrix(m)
    dims = _check_dims(a, dims)
    n = len(dims)
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(n)):
        raise DimensionMismatchError(f"{perm} is not a permutation of {n} factors")
    total = a.shape[0]
    axes = perm + [n + p for p in perm]
    return a.reshape(dims + dims).transpose(axes).reshape(total, total)


def dephase(m, dims: Sequence[int], factor: int) -> CMatrix:
    """Computational-basis dephasing conjugation on one factor"""
    a = as_matrix(m)
    dims = _check_dims(a, dims)
    n = len(dims)
    d = dims[factor]
    t = np.moveaxis(a.reshape(dims + dims), [factor, n + factor], [-2, -1])
    t = t * np.eye(d)
    t = np.moveaxis(t, [-2, -1], [factor, n + factor])
    return t.reshape(a.shape)


def eigh(m, tol: float = HERMITIAN_TOL) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigendecomposition of a Hermitian matrix

    Returns:
        (eigenvalues ascending, eigenvectors as the columns of a unitary)

    Raises:
        NonHermitianError: If m is not Hermitian within tol
    """
    a = as_matrix(m)
    if not is_hermitian(a, tol):
        raise NonHermitianError("eigh requires a Hermitian matrix")
    vals, vecs = np.linalg.eigh((a + adjoint(a)) / 2.0)
    return vals, vecs


def min_eigenvalue(m) -> float:
    """Smallest eigenvalue of the Hermitian part of m"""
    a = as_matrix(m)
    return float(np.linalg.eigvalsh((a + adjoint(a)) / 2.0)[0])


def trace_distance(rho, sigma) -> float:
    """Half the trace norm of rho - sigma"""
    diff = as_matrix(rho) - as_matrix(sigma)
    return float(0.5 * np.sum(np.abs(np.linalg.eigvalsh((diff + adjoint(diff)) / 2.0))))


def ket(amplitudes, normalize: bool = False) -> Ket:
    """Build a ket from amplitudes, optionally normalizing it"""
    psi = np.asarray(amplitudes, dtype=complex).reshape(-1)
    if normalize:
        norm = np.linalg.norm(psi)
        if norm == 0:
            raise InvalidStateError("Cannot normalize the zero vector")
        psi = psi / norm
    return psi


def basis_ket(d: int, i: int) -> Ket:
    """Computational basis vector |i> of dimension d"""
    psi = np.zeros(d, dtype=complex)
    psi[i] = 1.0
    return psi


def is_normalized(psi, tol: float = 1e-12) -> bool:
    return bool(abs(np.vdot(psi, psi).real - 1.0) < tol)


def projector(psi) -> CMatrix:
    """|psi><psi|"""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(psi, np.conj(psi))


def maximally_entangled_ket(d: int) -> Ket:
    """Unnormalized |Omega_d> = sum_i |ii>"""
    return np.eye(d, dtype=complex).reshape(d * d)


def bell_ket(kind: str = "phi+") -> Ket:
    """Two-qubit Bell states phi+, phi-, psi+, psi-"""
    s = 1.0 / math.sqrt(2.0)
    table = {
        "phi+": [s, 0, 0, s],
        "phi-": [s, 0, 0, -s],
        "psi+": [0, s, s, 0],
        "psi-": [0, s, -s, 0],
    }
    if kind not in table:
        raise ValueError(f"Unknown Bell state: {kind}. Valid: {sorted(table)}")
    return np.asarray(table[kind], dtype=complex)


def shift_operator(d: int) -> CMatrix:
    """X|j> = |j+1 mod d>"""
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def clock_operator(d: int) -> CMatrix:
    """Z|j> = omega^j |j>"""
    omega = np.exp(2j * np.pi / d)
    return np.diag(omega ** np.arange(d))


def heisenberg_weyl(d: int, k: int) -> CMatrix:
    """W_k = X^p Z^q with k = d*p + q"""
    if not 0 <= k < d * d:
        raise DimensionMismatchError(f"Heisenberg-Weyl index {k} out of range for d={d}")
    p, q = divmod(k, d)
    return np.linalg.matrix_power(shift_operator(d), p) @ np.linalg.matrix_power(clock_operator(d), q)


def apply_to_factors(psi, dims: Sequence[int], op, factors: Sequence[int]) -> Ket:
    """
    Apply op to the listed factors of a multi-factor ket

    op acts on the factors in the order given, left factor slow.
    """
    dims = [int(d) for d in dims]
    factors = list(factors)
    t = np.asarray(psi, dtype=complex).reshape(dims)
    t = np.moveaxis(t, factors, list(range(len(factors))))
    shape = t.shape
    sub = int(np.prod([dims[f] for f in factors]))
    t = (np.asarray(op, dtype=complex) @ t.reshape(sub, -1)).reshape(shape)
    t = np.moveaxis(t, list(range(len(factors))), factors)
    return t.reshape(-1)


def controlled(op, n_controls: int = 1) -> CMatrix:
    """Apply op on the target iff all qubit controls (leading factors) are |1>"""
    op = np.asarray(op, dtype=complex)
    d = op.shape[0]
    dc = 2 ** n_controls
    gate = np.eye(dc * d, dtype=complex)
    gate[(dc - 1) * d:, (dc - 1) * d:] = op
    return gate


SWAP = np.eye(4, dtype=complex)[[0, 2, 1, 3]]
CNOT = controlled(SIGMA_1)
CSWAP = controlled(SWAP)
