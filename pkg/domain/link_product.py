"""
RegisterNetwork - link-product contraction over named registers

An operator on a list of named registers is threaded through Choi
matrices of maps; each map consumes some registers and produces new ones.
Starting from |Omega><Omega| between an input and a reference copy, the
final operator is the Choi matrix of the composed map.
"""

from typing import List, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatchError
from .linalg_core import as_matrix, maximally_entangled_ket, projector


class RegisterNetwork:
    """
    Operator over named registers, stored as a tensor (d0, d1, ..., d0, d1, ...)
    """

    def __init__(self):
        self._names: List[str] = []
        self._dims: List[int] = []
        self._tensor = np.ones((), dtype=complex)

    @property
    def names(self) -> List[str]:
        return list(self._names)

    def dim(self, name: str) -> int:
        return self._dims[self._index(name)]

    def _index(self, name: str) -> int:
        try:
            return self._names.index(name)
        except ValueError:
            raise DimensionMismatchError(f"No register named {name!r}; have {self._names}")

    def add(self, registers: Sequence[Tuple[str, int]], operator) -> "RegisterNetwork":
        """Tensor a new operator on fresh registers onto the network"""
        names = [n for n, _ in registers]
        dims = [int(d) for _, d in registers]
        clash = set(names) & set(self._names)
        if clash or len(set(names)) != len(names):
            raise DimensionMismatchError(f"Register names already in use: {sorted(clash) or names}")
        op = as_matrix(operator)
        total = int(np.prod(dims)) if dims else 1
        if op.shape != (total, total):
            raise DimensionMismatchError(f"Operator of shape {op.shape} does not fit registers {registers}")

        n_old, n_new = len(self._names), len(names)
        joined = np.multiply.outer(self._tensor, op.reshape(dims + dims))
        # axes are now old kets, old bras, new kets, new bras
        order = (
            list(range(n_old))
            + list(range(2 * n_old, 2 * n_old + n_new))
            + list(range(n_old, 2 * n_old))
            + list(range(2 * n_old + n_new, 2 * n_old + 2 * n_new))
        )
        self._tensor = joined.transpose(order)
        self._names += names
        self._dims += dims
        return self

    def add_identity_link(self, name: str, ref: str, d: int) -> "RegisterNetwork":
        """Unnormalized |Omega><Omega| between register name and reference ref"""
        return self.add([(name, d), (ref, d)], projector(maximally_entangled_ket(d)))

    def apply(self, choi, inputs: Sequence[str], outputs: Sequence[Tuple[str, int]]) -> "RegisterNetwork":
        """
        Apply the map with the given Choi matrix (factor order outputs, inputs)
        to the named input registers; they are replaced by the outputs.
        """
        n = len(self._names)
        in_idx = [self._index(name) for name in inputs]
        rest = [i for i in range(n) if i not in in_idx]
        d_in = int(np.prod([self._dims[i] for i in in_idx])) if in_idx else 1
        d_rest = int(np.prod([self._dims[i] for i in rest])) if rest else 1
        out_names = [nm for nm, _ in outputs]
        out_dims = [int(d) for _, d in outputs]
        d_out = int(np.prod(out_dims)) if out_dims else 1

        j = as_matrix(choi)
        if j.shape != (d_out * d_in, d_out * d_in):
            raise DimensionMismatchError(
                f"Choi of shape {j.shape} does not map {list(inputs)} (dim {d_in}) to {out_names} (dim {d_out})"
            )
        remaining = [self._names[i] for i in rest]
        if set(out_names) & set(remaining) or len(set(out_names)) != len(out_names):
            raise DimensionMismatchError(f"Output register names {out_names} clash with {remaining}")

        perm = in_idx + rest + [n + i for i in in_idx] + [n + i for i in rest]
        t = self._tensor.transpose(perm).reshape(d_in, d_rest, d_in, d_rest)
        j4 = j.reshape(d_out, d_in, d_out, d_in)
        result = np.einsum("aibj,irjs->arbs", j4, t, optimize=True)

        rest_dims = [self._dims[i] for i in rest]
        new_dims = out_dims + rest_dims
        self._names = out_names + remaining
        self._dims = new_dims
        self._tensor = result.reshape(new_dims + new_dims)
        return self

    def trace_out(self, names: Sequence[str]) -> "RegisterNetwork":
        """Discard registers"""
        for name in names:
            self.apply(np.eye(self.dim(name)), [name], [])
        return self

    def matrix(self, order: Sequence[str]) -> np.ndarray:
        """The operator as a matrix with registers in the given order"""
        if sorted(order) != sorted(self._names):
            raise DimensionMismatchError(f"Order {list(order)} must list exactly the registers {self._names}")
        n = len(self._names)
        idx = [self._index(name) for name in order]
        total = int(np.prod(self._dims)) if self._dims else 1
        return self._tensor.transpose(idx + [n + i for i in idx]).reshape(total, total)
