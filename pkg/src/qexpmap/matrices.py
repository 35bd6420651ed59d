"""Small dense matrices over exact scalars or algebra elements.

Entries only need +, -, * among themselves; inversion additionally needs
field division and is provided for FracScalar entries via Gauss-Jordan
elimination with exact arithmetic (pivot = first entry in column order
that is nonzero under cross-multiplication equality).
"""

from __future__ import annotations

from .scalars import FracScalar, scalar_is_zero


class MatrixError(ArithmeticError):
    pass


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise MatrixError("matrix rows must be nonempty and rectangular")
        self.rows = rows

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    @staticmethod
    def identity(n, one, zero):
        return Matrix([[one if i == j else zero for j in range(n)]
                       for i in range(n)])

    @staticmethod
    def build(nrows, ncols, fn):
        return Matrix([[fn(i, j) for j in range(ncols)] for i in range(nrows)])

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in row] for row in self.rows])

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise MatrixError("shape mismatch in add")
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise MatrixError("shape mismatch in sub")
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise MatrixError("shape mismatch in mul")
            out = []
            for i in range(self.nrows):
                row = []
                for j in range(other.ncols):
                    acc = self.rows[i][0] * other.rows[0][j]
                    for k in range(1, self.ncols):
                        acc = acc + self.rows[i][k] * other.rows[k][j]
                    row.append(acc)
                out.append(row)
            return Matrix(out)
        return self.map(lambda x: x * other)

    def __rmul__(self, other):
        # scalar * matrix; scalars commute with entries
        return self.map(lambda x: other * x)

    def scale_rows_cols(self, row_factors, col_factors) -> "Matrix":
        """Entrywise d_i * M_ij * e_j (diagonal conjugations and scalings)."""
        return Matrix.build(
            self.nrows, self.ncols,
            lambda i, j: row_factors[i] * self.rows[i][j] * col_factors[j])

    def transpose(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.nrows)]
                       for j in range(self.ncols)])

    def kron(self, other) -> "Matrix":
        return Matrix.build(
            self.nrows * other.nrows, self.ncols * other.ncols,
            lambda i, j: self.rows[i // other.nrows][j // other.ncols]
            * other.rows[i % other.nrows][j % other.ncols])

    def flip_legs(self, d1: int, d2: int) -> "Matrix":
        """Conjugate by the leg-swap permutation of a d1*d2 tensor index."""
        if self.nrows != d1 * d2 or self.ncols != d1 * d2:
            raise MatrixError("flip_legs needs a square d1*d2 matrix")

        def swap(i):
            a, b = divmod(i, d2)
            return b * d1 + a

        return Matrix.build(self.nrows, self.ncols,
                            lambda i, j: self.rows[swap(i)][swap(j)])

    def is_zero(self) -> bool:
        return all(scalar_is_zero(x) for row in self.rows for x in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def inverse(self) -> "Matrix":
        """Exact inverse over the FracScalar field."""
        n = self.nrows
        if n != self.ncols:
            raise MatrixError("inverse of non-square matrix")
        work = [[x if isinstance(x, FracScalar) else FracScalar(x)
                 for x in row] for row in self.rows]
        result = [[FracScalar.one() if i == j else FracScalar.zero()
                   for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n)
                          if not work[r][col].is_zero()), None)
            if pivot is None:
                raise MatrixError(f"singular matrix (column {col})")
            work[col], work[pivot] = work[pivot], work[col]
            result[col], result[pivot] = result[pivot], result[col]
            inv = work[col][col].inverse()
            work[col] = [x * inv for x in work[col]]
            result[col] = [x * inv for x in result[col]]
            for r in range(n):
                if r == col or work[r][col].is_zero():
                    continue
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
                result[r] = [a - f * b for a, b in zip(result[r], result[col])]
        return Matrix(result)

    def to_json(self, entry_fn):
        return [[entry_fn(x) for x in row] for row in self.rows]

    def __repr__(self):
        body = "\n ".join("[" + ", ".join(str(x) for x in row) + "]"
                          for row in self.rows)
        return f"Matrix(\n {body}\n)"
