#Exact chain-level topology functions.
#
#License: MIT

"""
Sparse integer matrices.

The module implements an immutable sparse matrix over the integers stored as a
dictionary of nonzero rows, each row a dictionary from column index to a
nonzero Python integer.  Entries have arbitrary precision.
"""
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from topochains.utils import FormatError

__all__ = (
    'IntMatrix',
    'LinearError'
)

RowsDict = Dict[int, Dict[int, int]]


class IntMatrix:
    """
    Class that implements a sparse integer matrix.

    Methods
    - from_dense(): builds a matrix from a list of rows.
    - from_entries(): builds a matrix from (row, col, value) triples.
    - zeros(), identity(): standard matrices.
    - to_dense(): returns the list of rows.
    - entries(): iterates over the nonzero entries in row-major order.
    - apply(): multiplies a vector.
    - kron(), transpose(), hstack(), vstack(), select(): constructions.
    - determinant(), inverse(): for square matrices.
    - to_json(), from_json(): serialization.

    Attributes
    - rows: number of rows.
    - cols: number of columns.
    - shape: the pair (rows, cols).
    - nnz: number of stored entries.
    """

    __slots__ = ('_rows', '_cols', '_data')

    def __init__(self, rows: int, cols: int, data: RowsDict = None) -> None:
        """Initialize the matrix; zero entries of 'data' are dropped."""
        if rows < 0 or cols < 0:
            raise LinearError('invalid matrix shape')
        self._rows = rows
        self._cols = cols
        self._data: RowsDict = {}
        for i, row in (data or {}).items():
            if not 0 <= i < rows:
                raise LinearError('row index out of range: ' + str(i))
            clean = {}
            for j, value in row.items():
                if not 0 <= j < cols:
                    raise LinearError('column index out of range: ' + str(j))
                if value:
                    clean[j] = int(value)
            if clean:
                self._data[i] = clean

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]],
                   cols: int = None) -> 'IntMatrix':
        """
        Build a matrix from a list of rows.

        Parameters
        - rows: list of equally long integer lists.
        - cols: number of columns, needed only when 'rows' is empty.
        """
        num_cols = len(rows[0]) if rows else (cols or 0)
        data = {}
        for i, row in enumerate(rows):
            if len(row) != num_cols:
                raise LinearError('ragged dense matrix')
            data[i] = {j: value for j, value in enumerate(row) if value}
        return cls(len(rows), num_cols, data)

    @classmethod
    def from_entries(cls, rows: int, cols: int,
                     entries: Iterable[Tuple[int, int, int]]) -> 'IntMatrix':
        """Build a matrix from (row, col, value) triples; repeated cells add up."""
        data: RowsDict = {}
        for i, j, value in entries:
            row = data.setdefault(i, {})
            row[j] = row.get(j, 0) + value
        return cls(rows, cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'IntMatrix':
        """Return the zero matrix of the given shape."""
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> 'IntMatrix':
        """Return the identity matrix of the given size."""
        return cls(size, size, {i: {i: 1} for i in range(size)})

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int = None,
                 cols: int = None) -> 'IntMatrix':
        """Return a matrix with the given diagonal."""
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        return cls(rows, cols, {i: {i: value} for i, value in enumerate(values)})

    @property
    def rows(self) -> int:
        """Return the number of rows."""
        return self._rows

    @property
    def cols(self) -> int:
        """Return the number of columns."""
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        """Return the pair (rows, cols)."""
        return self._rows, self._cols

    @property
    def nnz(self) -> int:
        """Return the number of stored nonzero entries."""
        return sum(len(row) for row in self._data.values())

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self._data.get(i, {}).get(j, 0)

    def row(self, i: int) -> Dict[int, int]:
        """Return a copy of the nonzero part of row 'i'."""
        return dict(self._data.get(i, {}))

    def rows_dict(self) -> RowsDict:
        """Return a deep copy of the row dictionary."""
        return {i: dict(row) for i, row in self._data.items()}

    def entries(self) -> Iterator[Tuple[int, int, int]]:
        """Iterate over (row, col, value) in row-major order."""
        for i in sorted(self._data):
            row = self._data[i]
            for j in sorted(row):
                yield i, j, row[j]

    def to_dense(self) -> List[List[int]]:
        """Return the matrix as a list of rows."""
        dense = [[0] * self._cols for _ in range(self._rows)]
        for i, row in self._data.items():
            for j, value in row.items():
                dense[i][j] = value
        return dense

    def is_zero(self) -> bool:
        """Return True for the zero matrix."""
        return not self._data

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self.entries())))

    def __repr__(self) -> str:
        return 'IntMatrix({0}, {1}, {2})'.format(
            self._rows, self._cols, list(self.entries()))

    def __neg__(self) -> 'IntMatrix':
        return IntMatrix(self._rows, self._cols, {
            i: {j: -value for j, value in row.items()}
            for i, row in self._data.items()})

    def __add__(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.shape != other.shape:
            raise LinearError('shape mismatch in addition')
        data = self.rows_dict()
        for i, row in other._data.items():
            target = data.setdefault(i, {})
            for j, value in row.items():
                target[j] = target.get(j, 0) + value
        return IntMatrix(self._rows, self._cols, data)

    def __sub__(self, other: 'IntMatrix') -> 'IntMatrix':
        return self + (-other)

    def scale(self, factor: int) -> 'IntMatrix':
        """Return the matrix multiplied by an integer."""
        return IntMatrix(self._rows, self._cols, {
            i: {j: factor * value for j, value in row.items()}
            for i, row in self._data.items()})

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        if self._cols != other._rows:
            raise LinearError('shape mismatch in product')
        data: RowsDict = {}
        other_data = other._data
        for i, row in self._data.items():
            target: Dict[int, int] = {}
            for k, value in row.items():
                other_row = other_data.get(k)
                if other_row is None:
                    continue
                for j, other_value in other_row.items():
                    target[j] = target.get(j, 0) + value * other_value
            data[i] = target
        return IntMatrix(self._rows, other._cols, data)

    def apply(self, vector: Sequence[int]) -> List[int]:
        """Return the product of the matrix with a column vector."""
        if len(vector) != self._cols:
            raise LinearError('shape mismatch in product')
        result = [0] * self._rows
        for i, row in self._data.items():
            result[i] = sum(value * vector[j] for j, value in row.items())
        return result

    def transpose(self) -> 'IntMatrix':
        """Return the transposed matrix."""
        data: RowsDict = {}
        for i, row in self._data.items():
            for j, value in row.items():
                data.setdefault(j, {})[i] = value
        return IntMatrix(self._cols, self._rows, data)

    def kron(self, other: 'IntMatrix') -> 'IntMatrix':
        """
        Return the Kronecker product.

        Row (i, k) of the result has index i * other.rows + k, matching the
        lexicographic order of tensor bases with the left factor major.
        """
        data: RowsDict = {}
        for i, row in self._data.items():
            for k, other_row in other._data.items():
                target = data.setdefault(i * other._rows + k, {})
                for j, value in row.items():
                    for l, other_value in other_row.items():
                        target[j * other._cols + l] = value * other_value
        return IntMatrix(self._rows * other._rows, self._cols * other._cols, data)

    def hstack(self, other: 'IntMatrix') -> 'IntMatrix':
        """Return the matrix [self | other]."""
        if self._rows != other._rows:
            raise LinearError('shape mismatch in hstack')
        data = self.rows_dict()
        for i, row in other._data.items():
            target = data.setdefault(i, {})
            for j, value in row.items():
                target[self._cols + j] = value
        return IntMatrix(self._rows, self._cols + other._cols, data)

    def vstack(self, other: 'IntMatrix') -> 'IntMatrix':
        """Return the matrix with the rows of 'other' appended."""
        if self._cols != other._cols:
            raise LinearError('shape mismatch in vstack')
        data = self.rows_dict()
        for i, row in other._data.items():
            data[self._rows + i] = dict(row)
        return IntMatrix(self._rows + other._rows, self._cols, data)

    def select(self, rows: Sequence[int] = None,
               cols: Sequence[int] = None) -> 'IntMatrix':
        """Return the submatrix on the given row and column index lists."""
        rows = list(range(self._rows)) if rows is None else list(rows)
        cols = list(range(self._cols)) if cols is None else list(cols)
        col_pos = {j: pos for pos, j in enumerate(cols)}
        data: RowsDict = {}
        for pos, i in enumerate(rows):
            row = self._data.get(i)
            if row:
                data[pos] = {col_pos[j]: v for j, v in row.items() if j in col_pos}
        return IntMatrix(len(rows), len(cols), data)

    def determinant(self) -> int:
        """Return the determinant (fraction-free Bareiss elimination)."""
        if self._rows != self._cols:
            raise LinearError('determinant of a non-square matrix')
        size = self._rows
        if size == 0:
            return 1
        work = self.to_dense()
        sign = 1
        prev = 1
        for k in range(size - 1):
            if work[k][k] == 0:
                swap = next((i for i in range(k + 1, size) if work[i][k]), None)
                if swap is None:
                    return 0
                work[k], work[swap] = work[swap], work[k]
                sign = -sign
            for i in range(k + 1, size):
                for j in range(k + 1, size):
                    work[i][j] = (work[i][j] * work[k][k]
                                  - work[i][k] * work[k][j]) // prev
            prev = work[k][k]
        return sign * work[size - 1][size - 1]

    def is_signed_permutation(self) -> bool:
        """Return True if every row and column holds exactly one entry +1 or -1."""
        if self._rows != self._cols or len(self._data) != self._rows:
            return False
        seen = set()
        for row in self._data.values():
            if len(row) != 1:
                return False
            (j, value), = row.items()
            if value not in (1, -1) or j in seen:
                return False
            seen.add(j)
        return True

    def inverse(self) -> 'IntMatrix':
        """
        Return the inverse of a unimodular matrix.

        Exception
        - LinearError('matrix is not unimodular'): if the inverse is not integral.
        """
        if self._rows != self._cols:
            raise LinearError('matrix is not unimodular')
        if self.is_signed_permutation():
            return self.transpose()
        size = self._rows
        work =[[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(size)]
                for i, row in enumerate(self.to_dense())]
        for k in range(size):
            pivot = next((i for i in range(k, size) if work[i][k] != 0), None)
            if pivot is None:
                raise LinearError('matrix is not unimodular')
            work[k], work[pivot] = work[pivot], work[k]
            lead = work[k][k]
            work[k] = [value / lead for value in work[k]]
            for i in range(size):
                if i != k and work[i][k] != 0:
                    factor = work[i][k]
                    work[i] = [a - factor * b for a, b in zip(work[i], work[k])]
        result = []
        for row in work:
            tail = row[size:]
            if any(value.denominator != 1 for value in tail):
                raise LinearError('matrix is not unimodular')
            result.append([int(value) for value in tail])
        return IntMatrix.from_dense(result, size)

    def to_json(self) -> dict:
        """Return the JSON form {"rows", "cols", "entries"} with string entries."""
        return {
            'rows': self._rows,
            'cols': self._cols,
            'entries': [[i, j, str(value)] for i, j, value in self.entries()],
        }

    @classmethod
    def from_json(cls, value: dict) -> 'IntMatrix':
        """
        Build a matrix from its JSON form.

        Exception
        - FormatError('malformed matrix'): in case of a malformed value.
        """
        try:
            return cls.from_entries(int(value['rows']), int(value['cols']), (
                (int(i), int(j), int(v)) for i, j, v in value['entries']))
        except (KeyError, TypeError, ValueError, LinearError):
            raise FormatError('malformed matrix') from None


class LinearError(Exception):
    """
    The class that implements exceptions of the exact linear algebra.

    Exceptions
    - invalid matrix shape.
    - shape mismatch.
    - matrix is not unimodular.
    - boundary squares to nonzero.
    - not a chain map.
    """

    def __init__(self, msg: str) -> None:
        """
        Initialize exception.

        Parameters
        - msg: message to output when an exception occurs.
        """
        super().__init__(msg)
        self.msg = msg
