"""The graded complex of multilinear operator-valued cochains.

A degree-n cochain assigns an operator on the module to every n-tuple of
algebra basis elements (degree 0 is a single operator) and extends
linearly. Entries are stored sparsely: an absent tuple means the zero
operator.

The differential of a degree-n cochain f evaluates on (a0, ..., an) as

    a0 . f(a1, ..., an)
      + sum_{i=1..n} (-1)^i f(a0, ..., a_{i-1} a_i, ..., an)
      + (-1)^{n+1} f(a0, ..., a_{n-1}) . an

where the dot is the module action on either side and basis products
expand through the structure constants. Cocycles in degree 1 are exactly
the directions in which the module structure can move to first order;
degree-2 classes carry the obstructions.

Flattening convention, fixed for reproducibility: coordinates are indexed
by basis tuples in lexicographic order (tuple-major), then operator
entries in row-major order. Cohomology representatives and witnesses are
canonical with respect to this order.
"""

from dataclasses import dataclass
from itertools import product

from .algebra import Module
from .errors import InputError, ResourceError
from .linalg import Matrix, solve

DEFAULT_DEGREE_CAP = 3


class Cochain:
    """Sparse degree-n cochain with operator values."""

    def __init__(self, module: Module, degree: int, entries=None):
        if degree < 0:
            raise InputError("cochain degree must be >= 0")
        self.module = module
        self.degree = degree
        self.entries = {}
        if entries:
            d_r = module.algebra.dim
            for key, mat in entries.items():
                key = tuple(key)
                if len(key) != degree:
                    raise InputError(f"tuple {key} has arity {len(key)}, expected {degree}")
                if any(i < 0 or i >= d_r for i in key):
                    raise InputError(f"tuple {key} has an index outside the basis")
                if mat.nrows != module.dim or mat.ncols != module.dim:
                    raise InputError(
                        f"value at {key} is {mat.nrows}x{mat.ncols}, expected "
                        f"{module.dim}x{module.dim}"
                    )
                if not mat.is_zero():
                    self.entries[key] = mat

    @classmethod
    def zero(cls, module, degree):
        return cls(module, degree)

    @classmethod
    def of_operator(cls, module, mat):
        """Degree-0 cochain from a single operator."""
        return cls(module, 0, {(): mat})

    def value(self, key) -> Matrix:
        key = tuple(key)
        got = self.entries.get(key)
        return got if got is not None else self.module.zero_operator()

    def support(self):
        return sorted(self.entries)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.module == other.module
            and self.degree == other.degree
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"Cochain(degree={self.degree}, support={len(self.entries)})"

    def _check_compatible(self, other):
        if self.module != other.module:
            raise InputError("cochains live over different modules")
        if self.degree != other.degree:
            raise InputError("cochain degrees differ")

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.entries)
        for key, mat in other.entries.items():
            cur = out.get(key)
            out[key] = mat if cur is None else cur + mat
        return Cochain(self.module, self.degree, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Cochain(self.module, self.degree, {k: -m for k, m in self.entries.items()})

    def scale(self, c):
        return Cochain(
            self.module, self.degree, {k: m.scale(c) for k, m in self.entries.items()}
        )

    def first_nonzero(self):
        """(tuple, row, col, value) of the first entry in coordinate order,
        or None for the zero cochain."""
        zero = self.module.field.zero
        for key in self.support():
            mat = self.entries[key]
            for r in range(mat.nrows):
                for c in range(mat.ncols):
                    if mat.data[r][c] != zero:
                        return key, r, c, mat.data[r][c]
        return None

    def flatten(self):
        """Coordinate vector in the documented order."""
        d_r = self.module.algebra.dim
        d_m = self.module.dim
        out = [self.module.field.zero] * (d_r**self.degree * d_m * d_m)
        for key, mat in self.entries.items():
            base = _tuple_index(key, d_r) * d_m * d_m
            for r in range(d_m):
                row = mat.data[r]
                for c in range(d_m):
                    out[base + r * d_m + c] = row[c]
        return out

    @classmethod
    def unflatten(cls, module, degree, vec):
        d_r = module.algebra.dim
        d_m = module.dim
        expected = d_r**degree * d_m * d_m
        if len(vec) != expected:
            raise InputError(f"vector length {len(vec)} != {expected}")
        entries = {}
        for t, key in enumerate(product(range(d_r), repeat=degree)):
            base = t * d_m * d_m
            block = [
                [vec[base + r * d_m + c] for c in range(d_m)] for r in range(d_m)
            ]
            entries[key] = Matrix(module.field, block, d_m)
        return cls(module, degree, entries)


def _tuple_index(key, d_r):
    idx = 0
    for t in key:
        idx = idx * d_r + t
    return idx


def cochain_space_dim(module, degree):
    return module.algebra.dim**degree * module.dim * module.dim


def differential(f: Cochain) -> Cochain:
    """Degree n -> n+1, assembled sparsely from the stored entries."""
    mod = f.module
    alg = mod.algebra
    F = mod.field
    n = f.degree
    support = alg.product_support
    last_negative = (n + 1) % 2 == 1
    acc: dict = {}

    def add_to(key, mat):
        cur = acc.get(key)
        acc[key] = mat if cur is None else cur + mat

    for key, mat in f.entries.items():
        for a in range(alg.dim):
            add_to((a,) + key, mod.action[a] @ mat)
            tail = mat @ mod.action[a]
            add_to(key + (a,), -tail if last_negative else tail)
        for i in range(1, n + 1):
            negative = i % 2 == 1
            u = key[i - 1]
            head, rest = key[: i - 1], key[i:]
            for a, b, coef in support[u]:
                scaled = mat.scale(F.neg(coef) if negative else coef)
                add_to(head + (a, b) + rest, scaled)
    return Cochain(mod, n + 1, acc)


def is_cocycle(f: Cochain) -> bool:
    return differential(f).is_zero()


def differential_matrix(module, degree, degree_cap=DEFAULT_DEGREE_CAP) -> Matrix:
    """The degree-n differential as a matrix in the flattening order,
    mapping degree-n coordinates to degree-(n+1) coordinates."""
    if degree < 0:
        raise InputError("degree must be >= 0")
    d_r = module.algebra.dim
    d_m = module.dim
    nrows = d_r ** (degree + 1) * d_m * d_m
    ncols = d_r**degree * d_m * d_m
    if degree > degree_cap:
        raise ResourceError(
            f"degree {degree} exceeds the cap {degree_cap}; the differential "
            f"matrix would be {nrows}x{ncols}"
        )
    out = Matrix.zeros(module.field, nrows, ncols)
    col = 0
    one = module.field.one
    zero = module.field.zero
    for key in product(range(d_r), repeat=degree):
        for r in range(d_m):
            for c in range(d_m):
                block = Matrix.zeros(module.field, d_m, d_m)
                block.data[r][c] = one
                image = differential(Cochain(module, degree, {key: block}))
                for ikey, mat in image.entries.items():
                    base = _tuple_index(ikey, d_r) * d_m * d_m
                    for rr in range(d_m):
                        irow = mat.data[rr]
                        for cc in range(d_m):
                            if irow[cc] != zero:
                                out.data[base + rr * d_m + cc][col] = irow[cc]
                col += 1
    return out


def coboundary_witness(f: Cochain, degree_cap=DEFAULT_DEGREE_CAP):
    """The canonical g one degree down with differential(g) = f, or None.
    Free variables of the underlying linear system are set to zero."""
    if f.degree < 1:
        raise InputError("coboundary witnesses exist in degree >= 1 only")
    d = differential_matrix(f.module, f.degree - 1, degree_cap)
    res = solve(d, f.flatten())
    if res.particular is None:
        return None
    return Cochain.unflatten(f.module, f.degree - 1, res.particular)


def cokernel_certificate(f: Cochain, degree_cap=DEFAULT_DEGREE_CAP):
    """When f has no coboundary witness, a functional annihilating the
    image of the differential but not f: returns (vector y, y . f) with
    y orthogonal to every column of the differential matrix and pairing
    nonzero. Returns None when a witness exists."""
    d = differential_matrix(f.module, f.degree - 1, degree_cap)
    b = f.flatten()
    F = f.module.field
    for y in d.transpose().kernel_basis():
        s = F.zero
        for yv, bv in zip(y, b):
            if yv != F.zero and bv != F.zero:
                s = F.add(s, F.mul(yv, bv))
        if s != F.zero:
            return y, s
    return None


@dataclass
class CohomologyReport:
    degree: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int
    representatives: list


def cohomology(module, degree, degree_cap=DEFAULT_DEGREE_CAP) -> CohomologyReport:
    """Dimensions by rank-nullity on the differential matrices, plus a
    canonical list of representative cocycles spanning a complement of the
    coboundaries inside the cocycles.

    The representatives are the canonical kernel-basis vectors whose
    columns become pivots after the coboundary columns, so the output is
    reproducible byte for byte."""
    if degree < 0:
        raise InputError("degree must be >= 0")
    F = module.field
    d_n = differential_matrix(module, degree, degree_cap)
    kernel = d_n.kernel_basis()
    dim_z = len(kernel)
    if degree == 0:
        boundary_cols = []
        dim_b = 0
    else:
        d_prev = differential_matrix(module, degree - 1, degree_cap)
        dim_b = d_prev.rank()
        cols = d_prev.transpose().data  # columns of d_prev as rows
        boundary_cols = list(cols)
    dim_h = dim_z - dim_b
    reps = []
    if dim_h > 0:
        width = len(boundary_cols) + len(kernel)
        stacked = Matrix(
            F,
            [
                [
                    (boundary_cols[j][i] if j < len(boundary_cols) else kernel[j - len(boundary_cols)][i])
                    for j in range(width)
                ]
                for i in range(cochain_space_dim(module, degree))
            ],
            width,
        )
        _, pivots = stacked.rref()
        for p in pivots:
            if p >= len(boundary_cols):
                reps.append(Cochain.unflatten(module, degree, kernel[p - len(boundary_cols)]))
    return CohomologyReport(degree, dim_z, dim_b, dim_h, reps)
