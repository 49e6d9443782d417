#Exact chain-level topology functions.
#
#License: MIT

"""
Smith normal form of integer matrices.

The module implements two reductions.  'elementary_divisors' eliminates a
sparse copy of the matrix without tracking transforms and is used for ranks
and homology groups.  'smith_normal_form' works on a dense copy and returns
the unimodular transforms with their inverses, which are needed to compute
homology representatives and induced maps.
"""
import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Set

from .int_matrix import IntMatrix, LinearError

__all__ = (
    'SmithForm',
    'smith_normal_form',
    'elementary_divisors',
    'invariant_factors'
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithForm:
    """
    Result of the Smith reduction, U * M * V = D.

    Attributes
    - D: diagonal matrix, d_1 | d_2 | ... with positive entries.
    - U, V: unimodular transforms.
    - U_inv, V_inv: their inverses.
    """

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    @property
    def diagonal(self) -> List[int]:
        """Return the nonzero diagonal entries."""
        size = min(self.D.rows, self.D.cols)
        return [self.D[i, i] for i in range(size) if self.D[i, i]]

    @property
    def rank(self) -> int:
        """Return the rank of the reduced matrix."""
        return len(self.diagonal)


def invariant_factors(values: List[int]) -> List[int]:
    """
    Normalize a list of nonzero diagonal entries to a divisibility chain.

    Parameters
    - values: nonzero integers (signs are ignored).

    Return: the same diagonal up to equivalence, d_1 | d_2 | ... in
    increasing order.
    """
    work = sorted(abs(value) for value in values)
    size = len(work)
    for i in range(size):
        for j in range(i + 1, size):
            common = gcd(work[i], work[j])
            if common != work[i]:
                work[i], work[j] = common, work[i] * work[j] // common
    return work


class _SparseEliminator:
    """Sparse row/column elimination computing elementary divisors only."""

    def __init__(self, matrix: IntMatrix) -> None:
        self._rows: Dict[int, Dict[int, int]] = matrix.rows_dict()
        self._cols: Dict[int, Set[int]] = {}
        for i, row in self._rows.items():
            for j in row:
                self._cols.setdefault(j, set()).add(i)

    def _pivot(self):
        # minimal absolute value, then shortest column, then shortest row
        best = None
        best_key = None
        for j, col in self._cols.items():
            col_len = len(col)
            for i in col:
                value = abs(self._rows[i][j])
                key = (value, col_len, len(self._rows[i]), i, j)
                if best_key is None or key < best_key:
                    best_key = key
                    best = (i, j)
                    if value == 1 and col_len == 1:
                        return best
        return best

    def _set(self, i: int, j: int, value: int) -> None:
        row = self._rows.setdefault(i, {})
        if value:
            row[j] = value
            self._cols.setdefault(j, set()).add(i)
        else:
            row.pop(j, None)
            col = self._cols.get(j)
            if col is not None:
                col.discard(i)
                if not col:
                    del self._cols[j]
            if not row:
                del self._rows[i]

    def _row_reduce(self, i: int, j: int) -> bool:
        # row ops clearing column j against pivot row i
        pivot = self._rows[i][j]
        pivot_row = dict(self._rows[i])
        clean = True
        for k in list(self._cols[j]):
            if k == i:
                continue
            factor = self._rows[k][j] // pivot
            if factor:
                for col, value in pivot_row.items():
                    self._set(k, col, self._rows.get(k, {}).get(col, 0) - factor * value)
            if self._rows.get(k, {}).get(j, 0):
                clean = False
        return clean

    def _col_reduce(self, i: int, j: int) -> bool:
        # column j is zero outside row i, so column ops touch row i only
        pivot = self._rows[i][j]
        clean = True
        for col in list(self._rows[i]):
            if col == j:
                continue
            rem = self._rows[i][col] % pivot
            self._set(i, col, rem)
            if rem:
                clean = False
        return clean

    def run(self) -> List[int]:
        divisors = []
        while self._rows:
            i, j = self._pivot()
            if not self._row_reduce(i, j):
                continue
            if not self._col_reduce(i, j):
                continue
            divisors.append(abs(self._rows[i][j]))
            self._set(i, j, 0)
        return divisors


def elementary_divisors(matrix: IntMatrix) -> List[int]:
    """
    Return the nonzero invariant factors of an integer matrix.

    Parameters
    - matrix: the matrix to reduce.

    Return: d_1 | d_2 | ... | d_r, r the rank of the matrix.
    """
    if matrix.is_zero():
        return []
    divisors = _SparseEliminator(matrix).run()
    _LOGGER.debug('sparse reduction %dx%d nnz=%d rank=%d',
                  matrix.rows, matrix.cols, matrix.nnz, len(divisors))
    return invariant_factors(divisors)


class _DenseReduction:
    """Dense Smith reduction tracking U, V and their inverses."""

    def __init__(self, matrix: IntMatrix) -> None:
        self.m, self.n = matrix.shape
        self.a = matrix.to_dense()
        self.u = IntMatrix.identity(self.m).to_dense()
        self.u_inv = IntMatrix.identity(self.m).to_dense()
        self.v = IntMatrix.identity(self.n).to_dense()
        self.v_inv = IntMatrix.identity(self.n).to_dense()

    def add_row(self, i: int, j: int, k: int) -> None:
        # row_i += k * row_j
        for mat in (self.a, self.u):
            mat[i] = [x + k * y for x, y in zip(mat[i], mat[j])]
        for row in self.u_inv:
            row[j] -= k * row[i]

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        for mat in (self.a, self.u):
            mat[i], mat[j] = mat[j], mat[i]
        for row in self.u_inv:
            row[i], row[j] = row[j], row[i]

    def negate_row(self, i: int) -> None:
        for mat in (self.a, self.u):
            mat[i] = [-x for x in mat[i]]
        for row in self.u_inv:
            row[i] = -row[i]

    def add_col(self, j: int, i: int, k: int) -> None:
        # col_j += k * col_i
        for mat in (self.a, self.v):
            for row in mat:
                row[j] += k * row[i]
        self.v_inv[i] = [x - k * y for x, y in zip(self.v_inv[i], self.v_inv[j])]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for mat in (self.a, self.v):
            for row in mat:
                row[i], row[j] = row[j], row[i]
        self.v_inv[i], self.v_inv[j] = self.v_inv[j], self.v_inv[i]

    def _min_entry(self, t: int):
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                value = abs(self.a[i][j])
                if value and (best is None or value < best[0]):
                    best = (value, i, j)
                    if value == 1:
                        return best
        return best

    def _settle_pivot(self, t: int) -> None:
        a = self.a
        while True:
            clean = True
            for i in range(t + 1, self.m):
                if a[i][t]:
                    self.add_row(i, t, -(a[i][t] // a[t][t]))
                    clean = clean and not a[i][t]
            for j in range(t + 1, self.n):
                if a[t][j]:
                    self.add_col(j, t, -(a[t][j] // a[t][t]))
                    clean = clean and not a[t][j]
            if not clean:
                best = min(((abs(a[i][t]), i, t) for i in range(t, self.m) if a[i][t]),
                           default=None)
                best_row = min(((abs(a[t][j]), t, j) for j in range(t, self.n) if a[t][j]),
                               default=None)
                if best is None or (best_row is not None and best_row < best):
                    best = best_row
                self.swap_rows(t, best[1])
                self.swap_cols(t, best[2])
                continue
            bad = next(((i, j) for i in range(t + 1, self.m) for j in range(t + 1, self.n)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                return
            self.add_row(t, bad[0], 1)

    def run(self) -> SmithForm:
        for t in range(min(self.m, self.n)):
            best = self._min_entry(t)
            if best is None:
                break
            self.swap_rows(t, best[1])
            self.swap_cols(t, best[2])
            self._settle_pivot(t)
            if self.a[t][t] < 0:
                self.negate_row(t)
        return SmithForm(
            IntMatrix.from_dense(self.a, self.n),
            IntMatrix.from_dense(self.u, self.m),
            IntMatrix.from_dense(self.v, self.n),
            IntMatrix.from_dense(self.u_inv, self.m),
            IntMatrix.from_dense(self.v_inv, self.n))


def smith_normal_form(matrix: IntMatrix) -> SmithForm:
    """
    Compute the Smith normal form with its transforms.

    Parameters
    - matrix: the matrix M to reduce.

    Return: SmithForm with U * M * V = D, D diagonal with positive entries
    forming a divisibility chain, U and V unimodular.
    """
    _LOGGER.debug('dense reduction %dx%d', matrix.rows, matrix.cols)
    return _DenseReduction(matrix).run()
