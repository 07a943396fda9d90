"""Shared oracles and generators.

The oracles are deliberately independent of the library paths they check:
fraction-free (Bareiss) elimination instead of the library's Gauss-Jordan
kernel, direct expansion of defining formulas instead of the assembled
operators, and truncated polynomial arithmetic for series identities.

Random algebra/module pairs come from a catalog of known-valid examples
pushed through random unimodular basis changes, so validity is exact by
construction while the raw data looks nothing like the catalog entry.
"""

import math
import random
from fractions import Fraction

from moddef.algebra import Algebra, Module
from moddef.cochain import Cochain, differential_matrix
from moddef.deformation import ApproximateDeformation, FormalAutomorphism
from moddef.fields import PrimeField, QQ
from moddef.linalg import Matrix

# ---------------------------------------------------------------------------
# fraction-free echelon oracle


def oracle_rref(mat: Matrix):
    """Reduced echelon form over Q computed from scratch: integer-scaled
    rows, Bareiss forward elimination (exact divisions asserted), then
    plain back-substitution. Returns (Matrix, pivot tuple)."""
    m, n = mat.nrows, mat.ncols
    rows = []
    for row in mat.data:
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        rows.append([x.numerator * (den // x.denominator) for x in row])
    prev = 1
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        pr = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                num = rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j]
                assert num % prev == 0, "Bareiss division must be exact"
                rows[i][j] = num // prev
            rows[i][c] = 0
        prev = rows[r][c]
        pivots.append(c)
        r += 1
    # back-substitute with plain rational arithmetic
    frac = [[Fraction(x) for x in row] for row in rows]
    for k in reversed(range(len(pivots))):
        c = pivots[k]
        pv = frac[k][c]
        frac[k] = [x / pv for x in frac[k]]
        for i in range(k):
            f = frac[i][c]
            if f:
                frac[i] = [a - f * b for a, b in zip(frac[i], frac[k])]
    for i in range(len(pivots), m):
        frac[i] = [Fraction(0)] * n
    return Matrix(QQ, frac, n), tuple(pivots)


# ---------------------------------------------------------------------------
# matrices and scalars


def frac_mat(rows):
    return Matrix(QQ, [[Fraction(x) for x in row] for row in rows])


def random_fraction(rng, scale=4):
    num = rng.randint(-scale, scale)
    den = rng.choice((1, 1, 1, 2, 3))
    return Fraction(num, den)


def random_matrix(rng, nrows, ncols, density=0.7, scale=4):
    data = [
        [
            random_fraction(rng, scale) if rng.random() < density else Fraction(0)
            for _ in range(ncols)
        ]
        for _ in range(nrows)
    ]
    return Matrix(QQ, data, ncols)


def random_mod_matrix(rng, nrows, ncols, p, density=0.8):
    data = [
        [rng.randrange(p) if rng.random() < density else 0 for _ in range(ncols)]
        for _ in range(nrows)
    ]
    return Matrix(PrimeField(p), data, ncols)


# ---------------------------------------------------------------------------
# catalog of exactly-valid algebra/module pairs


def truncated_poly_algebra(n):
    """Q[x]/(x^n), basis 1, x, ..., x^(n-1)."""
    zero, one = Fraction(0), Fraction(1)
    structure = [
        [
            [one if k == i + j else zero for k in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]
    unit = [one] + [zero] * (n - 1)
    return Algebra(QQ, structure, unit)


def shift_matrix(d):
    rows = [[Fraction(1) if c == r + 1 else Fraction(0) for c in range(d)] for r in range(d)]
    return Matrix(QQ, rows, d)


def jordan_module(n, d):
    """Q[x]/(x^n) acting on Q^d with x as the shift block (needs d <= n)."""
    assert d <= n
    alg = truncated_poly_algebra(n)
    s = shift_matrix(d)
    action = [Matrix.identity(QQ, d)]
    cur = Matrix.identity(QQ, d)
    for _ in range(1, n):
        cur = cur @ s
        action.append(cur)
    return alg, Module(alg, action)


def split_field_algebra(n):
    """Q x ... x Q with idempotent basis vectors."""
    zero, one = Fraction(0), Fraction(1)
    structure = [
        [
            [one if i == j == k else zero for k in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return Algebra(QQ, structure, [one] * n)


def projector_module(n, sizes):
    """Split field acting on Q^sum(sizes) by coordinate projectors."""
    assert len(sizes) == n
    alg = split_field_algebra(n)
    d = sum(sizes)
    action = []
    offset = 0
    for s in sizes:
        m = Matrix.zeros(QQ, d, d)
        for i in range(offset, offset + s):
            m.data[i][i] = Fraction(1)
        action.append(m)
        offset += s
    return alg, Module(alg, action)


def upper_triangular_pair():
    """Upper-triangular 2x2 matrices (dim 3) on their column space."""
    zero, one = Fraction(0), Fraction(1)
    # basis order: e11, e22, e12
    prods = {
        (0, 0): 0, (0, 2): 2,
        (1, 1): 1,
        (2, 1): 2,
    }
    structure = [[[zero] * 3 for _ in range(3)] for _ in range(3)]
    for (i, j), k in prods.items():
        structure[i][j][k] = one
    alg = Algebra(QQ, structure, [one, one, zero])
    action = [
        frac_mat([[1, 0], [0, 0]]),
        frac_mat([[0, 0], [0, 1]]),
        frac_mat([[0, 1], [0, 0]]),
    ]
    return alg, Module(alg, action)


def matrix_units_pair():
    from moddef.fixtures import fixture_b

    return fixture_b()


def catalog_pairs():
    from moddef.fixtures import fixture_a, fixture_c

    return [
        fixture_a(),
        fixture_c(),
        jordan_module(2, 2),
        jordan_module(3, 3),
        jordan_module(3, 2),
        jordan_module(4, 3),
        projector_module(2, (1, 1)),
        projector_module(2, (2, 1)),
        projector_module(3, (1, 1, 1)),
        upper_triangular_pair(),
        matrix_units_pair(),
    ]


# ---------------------------------------------------------------------------
# random basis changes (unimodular, exact inverses)


def random_unimodular(rng, n, shears=4):
    """Product of elementary shears; returns (P, P_inverse) exactly."""
    p = Matrix.identity(QQ, n)
    pinv = Matrix.identity(QQ, n)
    for _ in range(shears):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = Fraction(rng.choice((-2, -1, 1, 2)))
        shear = Matrix.identity(QQ, n)
        shear.data[i][j] = c
        unshear = Matrix.identity(QQ, n)
        unshear.data[i][j] = -c
        p = p @ shear
        pinv = unshear @ pinv
    return p, pinv


def change_basis(alg: Algebra, mod: Module, rng):
    """Conjugate structure constants and action matrices by random
    unimodular matrices; validity is preserved exactly."""
    n = alg.dim
    p, pinv = random_unimodular(rng, n)
    zero = Fraction(0)
    structure = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            # old coordinates of the product of new basis vectors a and b
            old = [zero] * n
            for i in range(n):
                pia = p.data[i][a]
                if not pia:
                    continue
                for j in range(n):
                    pjb = p.data[j][b]
                    if not pjb:
                        continue
                    coef = pia * pjb
                    for k, c in enumerate(alg.structure[i][j]):
                        if c:
                            old[k] += coef * c
            structure[a][b] = pinv.matvec(old)
    unit = pinv.matvec(alg.unit)
    new_alg = Algebra(QQ, structure, unit)
    q, qinv = random_unimodular(rng, mod.dim)
    action = []
    for a in range(n):
        acc = Matrix.zeros(QQ, mod.dim, mod.dim)
        for i in range(n):
            pia = p.data[i][a]
            if pia:
                acc = acc + mod.action[i].scale(pia)
        action.append(qinv @ acc @ q)
    return new_alg, Module(new_alg, action)


def random_pair(rng, max_dim_r=4, max_dim_m=3):
    """A random exactly-valid (algebra, module) pair within the bounds."""
    pool = [
        (a, m) for a, m in catalog_pairs() if a.dim <= max_dim_r and m.dim <= max_dim_m
    ]
    alg, mod = pool[rng.randrange(len(pool))]
    return change_basis(alg, mod, rng)


# ---------------------------------------------------------------------------
# random cochains, cocycles, deformations, automorphisms


def random_cochain(mod, degree, rng, density=0.4, scale=3):
    d_r = mod.algebra.dim
    entries = {}
    from itertools import product

    for key in product(range(d_r), repeat=degree):
        if rng.random() < density:
            m = random_matrix(rng, mod.dim, mod.dim, density=0.6, scale=scale)
            entries[key] = m
    return Cochain(mod, degree, entries)


def random_cocycle(mod, rng, scale=3):
    """Random element of the degree-1 kernel via the assembled operator."""
    basis = differential_matrix(mod, 1).kernel_basis()
    n = len(basis)
    vec = [Fraction(0)] * (mod.algebra.dim * mod.dim * mod.dim)
    for b in basis:
        c = Fraction(rng.randint(-scale, scale))
        if c:
            vec = [v + c * x for v, x in zip(vec, b)]
    return Cochain.unflatten(mod, 1, vec)


def random_coboundary(mod, rng, scale=3):
    from moddef.cochain import differential

    phi = random_matrix(rng, mod.dim, mod.dim, density=0.8, scale=scale)
    return differential(Cochain.of_operator(mod, phi))


def random_automorphism(mod, order, rng, scale=2):
    return FormalAutomorphism(
        mod,
        [random_matrix(rng, mod.dim, mod.dim, density=0.6, scale=scale) for _ in range(order)],
    )


# ---------------------------------------------------------------------------
# truncated polynomial arithmetic with matrix coefficients


def poly_mat_mul(a, b, order):
    """Coefficient list of the product of two matrix polynomials, truncated."""
    dim = a[0].nrows
    out = [Matrix.zeros(QQ, dim, dim) for _ in range(order + 1)]
    for i, ai in enumerate(a):
        if i > order:
            break
        for j, bj in enumerate(b):
            if i + j > order:
                break
            out[i + j] = out[i + j] + ai @ bj
    return out


def deformation_value_series(d: ApproximateDeformation, basis_index):
    """Coefficient list of the deformed action of a basis element."""
    return [d.term_value(i, basis_index) for i in range(d.order + 1)]
