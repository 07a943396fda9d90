"""Truncated deformations of a module structure and their calculus.

A deformation of order m perturbs the action map by degree-1 cochain terms
xi_1, ..., xi_m subject to the multiplicativity relations

    xi_n(r s) = sum_{i+j=n} xi_i(r) xi_j(s)   for n <= m,

with xi_0 the undeformed action. The order-(m+1) obstruction of a valid
deformation is the degree-2 cochain

    (a, b) |-> sum_{i=1..m} xi_i(a) xi_{m+1-i}(b),

always a cocycle; the deformation extends one order further exactly when
that cocycle is a coboundary, and the appended term is the canonical
solution of  d(xi_{m+1}) = -obstruction.

Automorphisms are truncated series 1 + t phi_1 + ... of operators, stored
as their term lists and treated as exact polynomials; conjugating a
deformation by an automorphism truncates at the deformation's order.
"""

from dataclasses import dataclass

from .algebra import Module
from .cochain import (
    DEFAULT_DEGREE_CAP,
    Cochain,
    CohomologyReport,
    coboundary_witness,
    cohomology,
    differential,
    is_cocycle,
)
from .errors import InputError
from .linalg import Matrix


class ApproximateDeformation:
    """Order-m deformation: degree-1 terms xi_1..xi_m over a module."""

    def __init__(self, module: Module, terms):
        for i, t in enumerate(terms):
            if not isinstance(t, Cochain) or t.degree != 1:
                raise InputError(f"term {i + 1} is not a degree-1 cochain")
            if t.module != module:
                raise InputError(f"term {i + 1} lives over a different module")
        self.module = module
        self.terms = list(terms)
        self.order = len(self.terms)

    @classmethod
    def trivial(cls, module, order=0):
        return cls(module, [Cochain.zero(module, 1) for _ in range(order)])

    def term_value(self, i, basis_index) -> Matrix:
        """Coefficient operator of t^i applied to a basis element; i = 0 is
        the undeformed action."""
        if i == 0:
            return self.module.action[basis_index]
        if i <= self.order:
            return self.terms[i - 1].value((basis_index,))
        return self.module.zero_operator()

    def truncate(self, order):
        if order > self.order:
            raise InputError("cannot truncate upward")
        return ApproximateDeformation(self.module, self.terms[:order])

    def extended_with(self, term: Cochain):
        return ApproximateDeformation(self.module, self.terms + [term])

    def is_trivial(self):
        return all(t.is_zero() for t in self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, ApproximateDeformation)
            and self.module == other.module
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"ApproximateDeformation(order={self.order})"


class FormalAutomorphism:
    """Truncated automorphism 1 + t phi_1 + ... + t^m phi_m of a module."""

    def __init__(self, module: Module, terms):
        for i, t in enumerate(terms):
            if not isinstance(t, Matrix) or t.nrows != module.dim or t.ncols != module.dim:
                raise InputError(f"automorphism term {i + 1} is not a {module.dim}x{module.dim} matrix")
        self.module = module
        self.terms = list(terms)
        self.order = len(self.terms)

    @classmethod
    def identity(cls, module, order=0):
        return cls(module, [Matrix.zeros(module.field, module.dim, module.dim)] * order)

    def term(self, i) -> Matrix:
        if i == 0:
            return self.module.identity_operator()
        if i <= self.order:
            return self.terms[i - 1]
        return self.module.zero_operator()

    def invert(self, order=None):
        """Truncated inverse by the recursion psi_n = -sum phi_i psi_{n-i}."""
        if order is None:
            order = self.order
        psi = [self.module.identity_operator()]
        for n in range(1, order + 1):
            acc = Matrix.zeros(self.module.field, self.module.dim, self.module.dim)
            for i in range(1, n + 1):
                t = self.term(i)
                if not t.is_zero():
                    acc = acc + t @ psi[n - i]
            psi.append(-acc)
        return FormalAutomorphism(self.module, psi[1:])

    def compose(self, other, order=None):
        """Truncated product; term n of the result is sum phi_i chi_{n-i}."""
        if self.module != other.module:
            raise InputError("automorphisms live over different modules")
        if order is None:
            order = max(self.order, other.order)
        terms = []
        for n in range(1, order + 1):
            acc = Matrix.zeros(self.module.field, self.module.dim, self.module.dim)
            for i in range(n + 1):
                a = self.term(i)
                if a.is_zero():
                    continue
                b = other.term(n - i)
                if not b.is_zero():
                    acc = acc + a @ b
            terms.append(acc)
        return FormalAutomorphism(self.module, terms)

    def is_identity(self):
        return all(t.is_zero() for t in self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, FormalAutomorphism)
            and self.module == other.module
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"FormalAutomorphism(order={self.order})"


@dataclass
class DeformationViolation:
    order: int
    left: int
    right: int

    def __str__(self):
        return (
            f"multiplicativity fails at order {self.order} on basis pair "
            f"({self.left}, {self.right})"
        )


def check_deformation(d: ApproximateDeformation):
    """Verify the multiplicativity relations for every order up to the
    truncation; returns None when valid, else the first violation."""
    mod = d.module
    alg = mod.algebra
    F = mod.field
    for n in range(d.order + 1):
        for i in range(alg.dim):
            for j in range(alg.dim):
                lhs = Matrix.zeros(F, mod.dim, mod.dim)
                for k, c in enumerate(alg.structure[i][j]):
                    if c != F.zero:
                        lhs = lhs + d.term_value(n, k).scale(c)
                rhs = Matrix.zeros(F, mod.dim, mod.dim)
                for p in range(n + 1):
                    a = d.term_value(p, i)
                    if a.is_zero():
                        continue
                    b = d.term_value(n - p, j)
                    if not b.is_zero():
                        rhs = rhs + a @ b
                if lhs != rhs:
                    return DeformationViolation(n, i, j)
    return None


def infinitesimal(d: ApproximateDeformation):
    """The leading nonzero term (index, cochain), or None when every term
    vanishes. For a valid deformation the returned cochain is a cocycle."""
    for i, t in enumerate(d.terms):
        if not t.is_zero():
            return i + 1, t
    return None


def obstruction(d: ApproximateDeformation) -> Cochain:
    """Degree-2 cochain blocking the next-order extension; the empty sum at
    order 0 gives the zero cochain."""
    mod = d.module
    entries = {}
    d_r = mod.algebra.dim
    for a in range(d_r):
        for b in range(d_r):
            acc = Matrix.zeros(mod.field, mod.dim, mod.dim)
            for i in range(1, d.order + 1):
                left = d.term_value(i, a)
                if left.is_zero():
                    continue
                right = d.term_value(d.order + 1 - i, b)
                if not right.is_zero():
                    acc = acc + left @ right
            if not acc.is_zero():
                entries[(a, b)] = acc
    return Cochain(mod, 2, entries)


@dataclass
class ObstructionOutcome:
    """witness (when present) is the canonical solution of
    differential(witness) = -obstruction, i.e. the next term itself."""

    obstruction: Cochain
    witness: Cochain | None
    class_is_zero: bool


def obstruction_outcome(d: ApproximateDeformation, degree_cap=DEFAULT_DEGREE_CAP) -> ObstructionOutcome:
    obs = obstruction(d)
    witness = coboundary_witness(-obs, degree_cap)
    return ObstructionOutcome(obs, witness, witness is not None)


def extend_once(d: ApproximateDeformation, degree_cap=DEFAULT_DEGREE_CAP):
    """One order higher when the obstruction class vanishes; otherwise the
    obstruction outcome with an absent witness."""
    outcome = obstruction_outcome(d, degree_cap)
    if outcome.witness is None:
        return outcome
    return d.extended_with(outcome.witness)


def integrate(sigma: Cochain, target_order: int, degree_cap=DEFAULT_DEGREE_CAP):
    """Extend the first-order deformation along sigma to the target order.

    Returns the order-N deformation on success, else (reached_order,
    ObstructionOutcome) at the first order whose obstruction class is
    nonzero. Success certifies integrability through the target order
    only."""
    if target_order < 1:
        raise InputError("target order must be >= 1")
    if sigma.degree != 1:
        raise InputError("seed must be a degree-1 cochain")
    if not is_cocycle(sigma):
        raise InputError("seed is not a cocycle")
    d = ApproximateDeformation(sigma.module, [sigma])
    while d.order < target_order:
        step = extend_once(d, degree_cap)
        if isinstance(step, ObstructionOutcome):
            return d.order, step
        d = step
    return d


def conjugate(phi: FormalAutomorphism, d: ApproximateDeformation) -> ApproximateDeformation:
    """The deformation with terms sum_{i+j+k=n} psi_i xi_j(-) phi_k, where
    psi is the truncated inverse of phi; truncated at the order of d."""
    if phi.module != d.module:
        raise InputError("automorphism and deformation live over different modules")
    mod = d.module
    m = d.order
    psi = phi.invert(m)
    terms = []
    d_r = mod.algebra.dim
    for n in range(1, m + 1):
        entries = {}
        for a in range(d_r):
            acc = Matrix.zeros(mod.field, mod.dim, mod.dim)
            for i in range(n + 1):
                left = psi.term(i)
                if left.is_zero():
                    continue
                for j in range(n - i + 1):
                    mid = d.term_value(j, a)
                    if mid.is_zero():
                        continue
                    right = phi.term(n - i - j)
                    if not right.is_zero():
                        acc = acc + left @ mid @ right
            if not acc.is_zero():
                entries[(a,)] = acc
        terms.append(Cochain(mod, 1, entries))
    return ApproximateDeformation(mod, terms)


def normalize(d: ApproximateDeformation, degree_cap=DEFAULT_DEGREE_CAP):
    """Strip leading terms that are coboundaries by conjugating, one order
    at a time.

    Returns (deformation, automorphism, leading) where leading is the
    index of the first term whose class is nonzero, or None when every
    term through the truncation order was eliminated. Conjugating the
    input by the returned automorphism reproduces the output exactly."""
    current = d
    composite = FormalAutomorphism.identity(d.module)
    while True:
        lead = infinitesimal(current)
        if lead is None:
            return current, composite, None
        l, xi = lead
        witness = coboundary_witness(xi, degree_cap)
        if witness is None:
            return current, composite, l
        phi_l = witness.value(())
        step_terms = [Matrix.zeros(d.module.field, d.module.dim, d.module.dim)] * (l - 1)
        step = FormalAutomorphism(d.module, step_terms + [-phi_l])
        current = conjugate(step, current)
        composite = composite.compose(step, d.order)


def equivalent_one_step(d1: ApproximateDeformation, d2: ApproximateDeformation):
    """For two one-order extensions of a common deformation, an automorphism
    1 + t^{m+1} phi conjugating the first onto the second, or None when the
    difference of their last terms is not a coboundary. Only this
    sufficient criterion is decided."""
    if d1.module != d2.module:
        raise InputError("deformations live over different modules")
    if d1.order != d2.order or d1.order < 1:
        raise InputError("expected two extensions of equal order >= 1")
    if d1.terms[:-1] != d2.terms[:-1]:
        raise InputError("deformations do not extend a common lower-order deformation")
    delta = d2.terms[-1] - d1.terms[-1]
    witness = coboundary_witness(delta)
    if witness is None:
        return None
    phi = witness.value(())
    zeros = [Matrix.zeros(d1.module.field, d1.module.dim, d1.module.dim)] * (d1.order - 1)
    return FormalAutomorphism(d1.module, zeros + [phi])


@dataclass
class RigidityResult:
    certified: bool
    h1: CohomologyReport


def rigidity_check(module: Module, degree_cap=DEFAULT_DEGREE_CAP) -> RigidityResult:
    """Certified rigid when the degree-1 cohomology vanishes; inconclusive
    otherwise (a nonzero class need not integrate to a deformation)."""
    h1 = cohomology(module, 1, degree_cap)
    return RigidityResult(h1.dim_cohomology == 0, h1)
