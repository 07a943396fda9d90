"""Structure-constant algebras and finite-dimensional module actions.

An algebra is a basis together with the coordinate vectors of all pairwise
basis products and of the unit; a module is one action matrix per basis
element. Validation checks the defining axioms exactly and reports every
violation with the indices that witness it. Nothing downstream accepts an
algebra or module that has not passed validation.

Basis labels are decorative; indices are authoritative.
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import InputError
from .linalg import Matrix


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple
    message: str


class Algebra:
    """Associative unital algebra given by structure constants.

    structure[i][j] is the coordinate vector of the product of basis
    elements i and j; unit is the coordinate vector of 1.
    """

    def __init__(self, field, structure, unit, labels=None):
        dim = len(structure)
        if dim == 0:
            raise InputError("algebra dimension must be positive")
        for i, row in enumerate(structure):
            if len(row) != dim:
                raise InputError(f"structure row {i} has length {len(row)}, expected {dim}")
            for j, coords in enumerate(row):
                if len(coords) != dim:
                    raise InputError(
                        f"structure[{i}][{j}] has length {len(coords)}, expected {dim}"
                    )
        if len(unit) != dim:
            raise InputError(f"unit vector has length {len(unit)}, expected {dim}")
        if labels is not None and len(labels) != dim:
            raise InputError("label count does not match dimension")
        self.field = field
        self.dim = dim
        self.structure = structure
        self.unit = unit
        self.labels = tuple(labels) if labels is not None else None

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.structure == other.structure
            and self.unit == other.unit
        )

    def __repr__(self):
        return f"Algebra({self.field.name}, dim={self.dim})"

    def multiply(self, u, v):
        """Bilinear extension of the structure constants to coordinates."""
        if len(u) != self.dim or len(v) != self.dim:
            raise InputError("coordinate length does not match algebra dimension")
        F = self.field
        out = [F.zero] * self.dim
        for i, ui in enumerate(u):
            if ui == F.zero:
                continue
            row = self.structure[i]
            for j, vj in enumerate(v):
                if vj == F.zero:
                    continue
                c = F.mul(ui, vj)
                for k, w in enumerate(row[j]):
                    if w != F.zero:
                        out[k] = F.add(out[k], F.mul(c, w))
        return out

    def basis_vector(self, i):
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    @cached_property
    def product_support(self):
        """For each basis index k: tuple of (i, j, c) with nonzero
        coefficient c of basis element k in the product e_i e_j."""
        F = self.field
        support = [[] for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in enumerate(self.structure[i][j]):
                    if c != F.zero:
                        support[k].append((i, j, c))
        return tuple(tuple(s) for s in support)

    @cached_property
    def violations(self):
        return validate_algebra(self)

    def is_valid(self):
        return not self.violations


class Module:
    """Left module over an algebra: one action matrix per basis element."""

    def __init__(self, algebra: Algebra, action):
        if len(action) != algebra.dim:
            raise InputError(
                f"need {algebra.dim} action matrices, got {len(action)}"
            )
        dims = {(m.nrows, m.ncols) for m in action}
        if len(dims) != 1:
            raise InputError("action matrices have mixed shapes")
        ((r, c),) = dims
        if r != c:
            raise InputError(f"action matrices must be square, got {r}x{c}")
        if r == 0:
            raise InputError("module dimension must be positive")
        for m in action:
            if m.field != algebra.field:
                raise InputError("action matrix field differs from algebra field")
        self.algebra = algebra
        self.field = algebra.field
        self.dim = r
        self.action = list(action)

    def __eq__(self, other):
        return (
            isinstance(other, Module)
            and self.algebra == other.algebra
            and self.action == other.action
        )

    def __repr__(self):
        return f"Module(dim={self.dim} over {self.algebra!r})"

    def act(self, coords):
        """Matrix of the algebra element with the given coordinates."""
        if len(coords) != self.algebra.dim:
            raise InputError("coordinate length does not match algebra dimension")
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for c, m in zip(coords, self.action):
            if c != self.field.zero:
                out = out + m.scale(c)
        return out

    def zero_operator(self):
        return Matrix.zeros(self.field, self.dim, self.dim)

    def identity_operator(self):
        return Matrix.identity(self.field, self.dim)

    @cached_property
    def violations(self):
        return validate_module(self)

    def is_valid(self):
        return not self.violations


def validate_algebra(a: Algebra) -> list[Violation]:
    """Check associativity on all basis triples and both unit laws.
    Returns every violation; an empty list means the algebra is valid."""
    out = []
    for i in range(a.dim):
        for j in range(a.dim):
            ij = a.structure[i][j]
            for k in range(a.dim):
                left = a.multiply(ij, a.basis_vector(k))
                right = a.multiply(a.basis_vector(i), a.structure[j][k])
                if left != right:
                    out.append(
                        Violation(
                            "associativity",
                            (i, j, k),
                            f"(e{i} e{j}) e{k} != e{i} (e{j} e{k}): {left} vs {right}",
                        )
                    )
    for i in range(a.dim):
        e = a.basis_vector(i)
        if a.multiply(a.unit, e) != e:
            out.append(Violation("unit-left", (i,), f"1*e{i} != e{i}"))
        if a.multiply(e, a.unit) != e:
            out.append(Violation("unit-right", (i,), f"e{i}*1 != e{i}"))
    return out


def validate_module(m: Module) -> list[Violation]:
    """Check multiplicativity of the action on all basis pairs and that the
    unit acts as the identity."""
    out = []
    for i in range(m.algebra.dim):
        for j in range(m.algebra.dim):
            composed = m.action[i] @ m.action[j]
            expanded = m.act(m.algebra.structure[i][j])
            if composed != expanded:
                out.append(
                    Violation(
                        "multiplicativity",
                        (i, j),
                        f"action(e{i}) action(e{j}) != action(e{i} e{j})",
                    )
                )
    if m.act(m.algebra.unit) != m.identity_operator():
        out.append(Violation("unit", (), "unit does not act as the identity"))
    return out


def multiply(a: Algebra, u, v):
    return a.multiply(u, v)


class EndBimodule:
    """Two-sided action of an algebra on the operators of one of its
    modules: (left of i)(g) composes the action of e_i after g, (right
    of j)(g) composes it before g."""

    def __init__(self, module: Module):
        self.module = module

    def left(self, i, g: Matrix) -> Matrix:
        return self.module.action[i] @ g

    def right(self, i, g: Matrix) -> Matrix:
        return g @ self.module.action[i]

    def left_operator(self, i) -> Matrix:
        """The left action as a matrix on row-major flattened operators."""
        d = self.module.dim
        return self.module.action[i].kron(Matrix.identity(self.module.field, d))

    def right_operator(self, i) -> Matrix:
        d = self.module.dim
        return Matrix.identity(self.module.field, d).kron(self.module.action[i].transpose())

    def action_data(self):
        a = self.module.algebra
        return BimoduleAction(
            a,
            self.module.dim * self.module.dim,
            [self.left_operator(i) for i in range(a.dim)],
            [self.right_operator(i) for i in range(a.dim)],
        )


@dataclass
class BimoduleAction:
    """A two-sided action of an algebra on a finite-dimensional space,
    both sides given as matrices acting on column vectors."""

    algebra: Algebra
    dim: int
    left: list
    right: list


def validate_bimodule(b: BimoduleAction) -> list[Violation]:
    a = b.algebra
    F = a.field
    out = []
    if len(b.left) != a.dim or len(b.right) != a.dim:
        raise InputError("need one left and one right matrix per basis element")
    for m in list(b.left) + list(b.right):
        if m.nrows != b.dim or m.ncols != b.dim:
            raise InputError("bimodule matrix shape does not match the space dimension")
    ident = Matrix.identity(F, b.dim)

    def combine(mats, coords):
        out_m = Matrix.zeros(F, b.dim, b.dim)
        for c, m in zip(coords, mats):
            if c != F.zero:
                out_m = out_m + m.scale(c)
        return out_m

    for i in range(a.dim):
        for j in range(a.dim):
            if b.left[i] @ b.left[j] != combine(b.left, a.structure[i][j]):
                out.append(Violation("left-multiplicativity", (i, j), "left action is not multiplicative"))
            # right actions compose in the opposite order
            if b.right[j] @ b.right[i] != combine(b.right, a.structure[i][j]):
                out.append(Violation("right-multiplicativity", (i, j), "right action is not anti-multiplicative"))
            if b.left[i] @ b.right[j] != b.right[j] @ b.left[i]:
                out.append(Violation("commutation", (i, j), "left and right actions do not commute"))
    if combine(b.left, a.unit) != ident:
        out.append(Violation("left-unit", (), "unit does not act as identity on the left"))
    if combine(b.right, a.unit) != ident:
        out.append(Violation("right-unit", (), "unit does not act as identity on the right"))
    return out


def enveloping_left_module(a: Algebra, bimodule: BimoduleAction):
    """Convert a two-sided action into a left module over the algebra
    tensored with its own opposite: the pair (i, p) acts by the left
    action of i composed with the right action of p.

    Pair indices flatten as i * dim + p. Returns (algebra, module)."""
    if bimodule.algebra != a:
        raise InputError("bimodule is over a different algebra")
    issues = validate_bimodule(bimodule)
    if issues:
        raise InputError(f"invalid bimodule action: {issues[0].message}")
    F = a.field
    d = a.dim
    dim2 = d * d
    zero = [F.zero] * dim2

    def pair(i, p):
        return i * d + p

    structure = [[None] * dim2 for _ in range(dim2)]
    for i in range(d):
        for p in range(d):
            for j in range(d):
                for q in range(d):
                    coords = zero[:]
                    left = a.structure[i][j]
                    right = a.structure[q][p]
                    for k, ck in enumerate(left):
                        if ck == F.zero:
                            continue
                        for r, cr in enumerate(right):
                            if cr != F.zero:
                                coords[pair(k, r)] = F.mul(ck, cr)
                    structure[pair(i, p)][pair(j, q)] = coords
    unit = zero[:]
    for i, ui in enumerate(a.unit):
        if ui == F.zero:
            continue
        for p, up in enumerate(a.unit):
            if up != F.zero:
                unit[pair(i, p)] = F.mul(ui, up)
    labels = None
    if a.labels is not None:
        labels = [f"{a.labels[i]}(*){a.labels[p]}" for i in range(d) for p in range(d)]
    env = Algebra(F, structure, unit, labels)
    action = [bimodule.left[i] @ bimodule.right[p] for i in range(d) for p in range(d)]
    return env, Module(env, action)
