"""Dense exact matrices and the linear-algebra core.

Everything downstream (validation, differentials, witness searches,
obstruction solves) reduces to the operations here: reduced row-echelon
form, rank, kernel bases, and affine solves. All arithmetic is exact; the
canonical solution of a linear system is the one with every free variable
of the echelon form set to zero, which makes all emitted witnesses and
representatives deterministic.
"""

from dataclasses import dataclass

from ._backend import kernel
from .errors import InputError
from .fields import PrimeField


class Matrix:
    """Immutable-by-convention dense matrix over a fixed field.

    data is a list of rows; rows are lists of field scalars.
    """

    __slots__ = ("field", "nrows", "ncols", "data", "_rref")

    def __init__(self, field, data, ncols=None):
        self.field = field
        self.nrows = len(data)
        if self.nrows:
            ncols = len(data[0]) if ncols is None else ncols
        elif ncols is None:
            raise InputError("empty matrix needs an explicit column count")
        for row in data:
            if len(row) != ncols:
                raise InputError("ragged matrix rows")
        self.ncols = ncols
        self.data = data
        self._rref = None

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    @classmethod
    def from_rows(cls, field, rows, ncols=None):
        return cls(field, [list(r) for r in rows], ncols)

    def copy(self):
        return Matrix(self.field, [row[:] for row in self.data], self.ncols)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.data == other.data
        )

    def __repr__(self):
        return f"Matrix({self.field.name}, {self.nrows}x{self.ncols})"

    def is_zero(self):
        z = self.field.zero
        return all(x == z for row in self.data for x in row)

    def __add__(self, other):
        self._check_same_shape(other)
        add = self.field.add
        return Matrix(
            self.field,
            [[add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            self.ncols,
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        sub = self.field.sub
        return Matrix(
            self.field,
            [[sub(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            self.ncols,
        )

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in row] for row in self.data], self.ncols)

    def scale(self, c):
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, a) for a in row] for row in self.data], self.ncols)

    def __matmul__(self, other):
        if self.field != other.field:
            raise InputError("cannot multiply matrices over different fields")
        if self.ncols != other.nrows:
            raise InputError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        F = self.field
        add, mul, zero = F.add, F.mul, F.zero
        out = [[zero] * other.ncols for _ in range(self.nrows)]
        for i in range(self.nrows):
            arow = self.data[i]
            orow = out[i]
            for k in range(self.ncols):
                a = arow[k]
                if a == zero:
                    continue
                brow = other.data[k]
                for j in range(other.ncols):
                    b = brow[j]
                    if b != zero:
                        orow[j] = add(orow[j], mul(a, b))
        return Matrix(F, out, other.ncols)

    def matvec(self, v):
        if len(v) != self.ncols:
            raise InputError("vector length does not match column count")
        F = self.field
        add, mul, zero = F.add, F.mul, F.zero
        out = []
        for row in self.data:
            s = zero
            for a, x in zip(row, v):
                if a != zero and x != zero:
                    s = add(s, mul(a, x))
            out.append(s)
        return out

    def transpose(self):
        return Matrix(
            self.field,
            [[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
        )

    def kron(self, other):
        F = self.field
        mul = F.mul
        out = []
        for arow in self.data:
            for brow in other.data:
                out.append([mul(a, b) for a in arow for b in brow])
        return Matrix(F, out, self.ncols * other.ncols)

    def _check_same_shape(self, other):
        if self.field != other.field:
            raise InputError("cannot combine matrices over different fields")
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise InputError("matrix shape mismatch")

    # -- elimination ------------------------------------------------------

    def rref(self):
        """Reduced row-echelon form and pivot columns (cached)."""
        if self._rref is None:
            rows = [row[:] for row in self.data]
            if isinstance(self.field, PrimeField):
                reduced, pivots = kernel.rref_mod(rows, self.ncols, self.field.p)
            else:
                reduced, pivots = kernel.rref_rational(rows, self.ncols)
            self._rref = (Matrix(self.field, reduced, self.ncols), pivots)
        return self._rref

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Canonical null-space basis: one vector per free column, that
        column's entry set to one, pivot entries back-filled."""
        reduced, pivots = self.rref()
        F = self.field
        pivot_set = set(pivots)
        basis = []
        for j in range(self.ncols):
            if j in pivot_set:
                continue
            v = [F.zero] * self.ncols
            v[j] = F.one
            for r, pc in enumerate(pivots):
                coef = reduced.data[r][j]
                if coef != F.zero:
                    v[pc] = F.neg(coef)
            basis.append(v)
        return basis


@dataclass
class SolveResult:
    """particular is None exactly when b is outside the column span; the
    kernel basis describes the full solution set either way."""

    particular: list | None
    kernel_basis: list


def rref(m: Matrix):
    return m.rref()


def rank(m: Matrix) -> int:
    return m.rank()


def kernel_basis(m: Matrix):
    return m.kernel_basis()


def solve(a: Matrix, b: list) -> SolveResult:
    """Solve a x = b exactly. One elimination of the augmented matrix gives
    both the consistency verdict and a's echelon data."""
    if len(b) != a.nrows:
        raise InputError(f"right-hand side length {len(b)} != row count {a.nrows}")
    F = a.field
    n = a.ncols
    aug = Matrix(F, [row[:] + [bv] for row, bv in zip(a.data, b)], n + 1)
    reduced, pivots = aug.rref()
    if pivots and pivots[-1] == n:
        particular = None
    else:
        particular = [F.zero] * n
        for r, pc in enumerate(pivots):
            particular[pc] = reduced.data[r][n]
    # kernel of a, read off the same elimination (pivots all lie left of b)
    pivot_set = {pc for pc in pivots if pc < n}
    basis = []
    for j in range(n):
        if j in pivot_set:
            continue
        v = [F.zero] * n
        v[j] = F.one
        for r, pc in enumerate(pivots):
            if pc < n:
                coef = reduced.data[r][j]
                if coef != F.zero:
                    v[pc] = F.neg(coef)
        basis.append(v)
    return SolveResult(particular, basis)
