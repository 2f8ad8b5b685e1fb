"""Dense exact matrices over cyclotomic scalars.

Everything downstream (morphisms, actions, projectors) is a Matrix.  The
class is immutable; all factorizations are exact, so rank statements and
idempotent splittings are decisions, not numerics.  Zero-dimensional
shapes are legal: cokernels of surjections and hom spaces of dimension
zero show up constantly.
"""

from __future__ import annotations

from .scalars import CyclotomicScalar, ONE, ZERO, integer

__all__ = ["Matrix", "LinAlgError"]


class LinAlgError(ValueError):
    pass


def _as_scalar(x) -> CyclotomicScalar:
    if isinstance(x, CyclotomicScalar):
        return x
    if isinstance(x, int):
        return integer(x)
    raise LinAlgError(f"matrix entries must be scalars, got {type(x).__name__}")


class Matrix:
    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows, ncols: int | None = None):
        self.rows = tuple(tuple(_as_scalar(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        if self.rows:
            self.ncols = len(self.rows[0])
            if ncols is not None and ncols != self.ncols:
                raise LinAlgError("explicit ncols contradicts rows")
        else:
            if ncols is None:
                ncols = 0
            self.ncols = ncols
        if any(len(r) != self.ncols for r in self.rows):
            raise LinAlgError("ragged rows")
        self._hash = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "Matrix":
        return Matrix([[ZERO] * ncols for _ in range(nrows)], ncols=ncols)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], ncols=n)

    @staticmethod
    def column(entries) -> "Matrix":
        entries = list(entries)
        return Matrix([[x] for x in entries], ncols=1)

    @staticmethod
    def from_function(nrows: int, ncols: int, fn) -> "Matrix":
        return Matrix([[fn(i, j) for j in range(ncols)] for i in range(nrows)], ncols=ncols)

    @staticmethod
    def from_columns(cols, nrows: int) -> "Matrix":
        cols = [list(c) for c in cols]
        return Matrix([[col[i] for col in cols] for i in range(nrows)], ncols=len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def column_list(self, j: int) -> list:
        return [self.rows[i][j] for i in range(self.nrows)]

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise LinAlgError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
                      ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise LinAlgError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
                      ncols=self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.rows], ncols=self.ncols)

    def scale(self, c) -> "Matrix":
        c = _as_scalar(c)
        return Matrix([[c * a for a in row] for row in self.rows], ncols=self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise LinAlgError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.ncols
        out = [[ZERO] * ocols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            oi = out[i]
            for k, a in enumerate(row):
                if not a.is_zero():
                    orow = other.rows[k]
                    for j in range(ocols):
                        b = orow[j]
                        if not b.is_zero():
                            oi[j] = oi[j] + a * b
        return Matrix(out, ncols=ocols)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product in lexicographic (left-major) basis order."""
        out = []
        for r1 in self.rows:
            for r2 in other.rows:
                row = []
                for a in r1:
                    if a.is_zero():
                        row.extend([ZERO] * other.ncols)
                    else:
                        row.extend([a * b for b in r2])
                out.append(row)
        return Matrix(out, ncols=self.ncols * other.ncols)

    def transpose(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
                      ncols=self.nrows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.rows for a in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.rows))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in row) for row in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}: {body}]"

    # -- elimination -------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int], "Matrix"]:
        """Reduced row echelon form R with pivot columns and E, E @ self = R."""
        m = [list(row) for row in self.rows]
        e = [[ONE if i == j else ZERO for j in range(self.nrows)] for i in range(self.nrows)]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            if r == self.nrows:
                break
            pr = next((i for i in range(r, self.nrows) if not m[i][c].is_zero()), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            e[r], e[pr] = e[pr], e[r]
            inv = m[r][c].inverse()
            m[r] = [inv * x for x in m[r]]
            e[r] = [inv * x for x in e[r]]
            for i in range(self.nrows):
                if i != r and not m[i][c].is_zero():
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
                    e[i] = [x - f * y for x, y in zip(e[i], e[r])]
            pivots.append(c)
            r += 1
        return Matrix(m, ncols=self.ncols), pivots, Matrix(e, ncols=self.nrows)

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise LinAlgError("only square matrices invert")
        _, pivots, e = self.rref()
        if len(pivots) != self.nrows:
            raise LinAlgError("singular matrix")
        return e

    def solve_right(self, rhs: "Matrix") -> "Matrix | None":
        """A particular X with self @ X = rhs, or None if inconsistent."""
        if rhs.nrows != self.nrows:
            raise LinAlgError("shape mismatch in solve")
        _, pivots, e = self.rref()
        y = e @ rhs
        rank = len(pivots)
        for i in range(rank, self.nrows):
            if any(not x.is_zero() for x in y.rows[i]):
                return None
        out = [[ZERO] * rhs.ncols for _ in range(self.ncols)]
        for r, c in enumerate(pivots):
            out[c] = list(y.rows[r])
        return Matrix(out, ncols=rhs.ncols)

    def nullspace(self) -> "Matrix":
        """Columns form a basis of {v : self @ v = 0}; shape ncols x nullity."""
        red, pivots, _ = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        cols = []
        for fc in free:
            v = [ZERO] * self.ncols
            v[fc] = ONE
            for r, pc in enumerate(pivots):
                v[pc] = -red.rows[r][fc]
            cols.append(v)
        return Matrix.from_columns(cols, self.ncols)

    # -- subspace splittings ------------------------------------------------

    def column_space_basis(self) -> "Matrix":
        """Pivot columns of self; shape nrows x rank."""
        _, pivots, _ = self.rref()
        return Matrix.from_columns([self.column_list(c) for c in pivots], self.nrows)

    def split_idempotent(self) -> tuple["Matrix", "Matrix"]:
        """For idempotent p, a splitting p = e @ r with r @ e = identity."""
        if self.nrows != self.ncols:
            raise LinAlgError("idempotents are square")
        if self @ self != self:
            raise LinAlgError("matrix is not idempotent")
        e = self.column_space_basis()
        r = e.solve_right(self)
        assert r is not None
        return e, r

    def cokernel(self) -> tuple["Matrix", "Matrix", list[int]]:
        """A projection q with q @ self = 0 and a section s with q @ s = id.

        The quotient basis is the set of standard basis vectors at the
        non-pivot positions of the image, so graded inputs yield graded
        quotients.  Returns (q, s, kept) where kept lists those positions.
        """
        img = self.column_space_basis()
        _, pivots, _ = img.T.rref()
        free = [i for i in range(self.nrows) if i not in pivots]
        cols = [img.column_list(j) for j in range(img.ncols)]
        for i in free:
            v = [ZERO] * self.nrows
            v[i] = ONE
            cols.append(v)
        basis = Matrix.from_columns(cols, self.nrows)
        binv = basis.inverse()
        q = Matrix([binv.rows[img.ncols + k] for k in range(len(free))], ncols=self.nrows)
        s = Matrix.from_columns([[ONE if i == fi else ZERO for i in range(self.nrows)] for fi in free],
                                self.nrows)
        return q, s, free

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise LinAlgError("row mismatch in hstack")
        return Matrix([list(r1) + list(r2) for r1, r2 in zip(self.rows, other.rows)],
                      ncols=self.ncols + other.ncols)

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        row_idx, col_idx = list(row_idx), list(col_idx)
        return Matrix([[self.rows[i][j] for j in col_idx] for i in row_idx], ncols=len(col_idx))
