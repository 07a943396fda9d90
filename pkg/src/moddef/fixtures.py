"""Built-in example problems.

Three hand-checkable fixtures double as documentation and test inputs:

  A: the algebra of dual numbers acting on a line (nilpotent generator
     acts by zero). Small enough to compute everything by hand; carries a
     first-order direction that cannot be extended past order 1.
  B: the full 2x2 matrix algebra on column vectors. Semisimple, so both
     relevant cohomology groups vanish and every deformation flattens.
  C: dual numbers on a plane with the generator acting by the nilpotent
     Jordan block. The diagonal first-order direction integrates to all
     orders.

Each document bundles the payloads its commands need (seed cochain,
deformations, an automorphism) plus truncation options.
"""

from fractions import Fraction

from .algebra import Algebra, Module
from .documents import (
    encode_algebra,
    encode_automorphism,
    encode_cochain,
    encode_deformation,
    encode_module,
)
from .cochain import Cochain
from .deformation import ApproximateDeformation, FormalAutomorphism
from .fields import QQ
from .linalg import Matrix


def _mat(rows):
    return Matrix(QQ, [[Fraction(x) for x in row] for row in rows])


def dual_numbers():
    """Basis {1, x} with x^2 = 0."""
    q0, q1 = Fraction(0), Fraction(1)
    structure = [
        [[q1, q0], [q0, q1]],
        [[q0, q1], [q0, q0]],
    ]
    return Algebra(QQ, structure, [q1, q0], labels=["1", "x"])


def matrix_algebra_2():
    """Basis of matrix units e11, e12, e21, e22; e_pq e_rs = [q=r] e_ps."""
    dim = 4
    q0, q1 = Fraction(0), Fraction(1)

    def unit_index(p, q):
        return (p - 1) * 2 + (q - 1)

    structure = [[[q0] * dim for _ in range(dim)] for _ in range(dim)]
    for p in (1, 2):
        for q in (1, 2):
            for r in (1, 2):
                for s in (1, 2):
                    if q == r:
                        structure[unit_index(p, q)][unit_index(r, s)][unit_index(p, s)] = q1
    unit = [q0] * dim
    unit[unit_index(1, 1)] = q1
    unit[unit_index(2, 2)] = q1
    return Algebra(QQ, structure, unit, labels=["e11", "e12", "e21", "e22"])


def fixture_a():
    """Dual numbers on a line: x acts by zero."""
    alg = dual_numbers()
    return alg, Module(alg, [_mat([[1]]), _mat([[0]])])


def fixture_b():
    """2x2 matrix algebra acting on columns: e_pq acts by the matrix unit."""
    alg = matrix_algebra_2()
    action = [
        _mat([[1, 0], [0, 0]]),
        _mat([[0, 1], [0, 0]]),
        _mat([[0, 0], [1, 0]]),
        _mat([[0, 0], [0, 1]]),
    ]
    return alg, Module(alg, action)


def fixture_c():
    """Dual numbers on a plane: x acts by the nilpotent Jordan block."""
    alg = dual_numbers()
    return alg, Module(alg, [_mat([[1, 0], [0, 1]]), _mat([[0, 1], [0, 0]])])


def _document(algebra, module, order, degree, cochain, deformation, deformation2, automorphism):
    return {
        "field": "Q",
        "algebra": encode_algebra(algebra),
        "module": encode_module(module),
        "options": {"order": order, "degree": degree},
        "cochain": encode_cochain(cochain),
        "deformation": encode_deformation(deformation),
        "deformation2": encode_deformation(deformation2),
        "automorphism": encode_automorphism(automorphism),
    }


def document_a():
    alg, mod = fixture_a()
    sigma = Cochain(mod, 1, {(1,): _mat([[1]])})
    d1 = ApproximateDeformation(mod, [sigma])
    d2 = ApproximateDeformation(mod, [Cochain(mod, 1, {(1,): _mat([[2]])})])
    phi = FormalAutomorphism(mod, [_mat([[1]])])
    return _document(alg, mod, 5, 2, sigma, d1, d2, phi)


def document_b():
    alg, mod = fixture_b()
    # seed = boundary of the projection onto the first coordinate
    sigma = Cochain(
        mod, 1, {(1,): _mat([[0, -1], [0, 0]]), (2,): _mat([[0, 0], [1, 0]])}
    )
    # second extension differs by the boundary of e12
    shift = Cochain(
        mod,
        1,
        {
            (0,): _mat([[0, 1], [0, 0]]),
            (2,): _mat([[-1, 0], [0, 1]]),
            (3,): _mat([[0, -1], [0, 0]]),
        },
    )
    d1 = ApproximateDeformation(mod, [sigma])
    d2 = ApproximateDeformation(mod, [sigma + shift])
    phi = FormalAutomorphism(mod, [_mat([[0, 0], [1, 0]])])
    return _document(alg, mod, 4, 2, sigma, d1, d2, phi)


def document_c():
    alg, mod = fixture_c()
    sigma = Cochain(mod, 1, {(1,): _mat([[1, 0], [0, -1]])})
    second = Cochain(mod, 1, {(1,): _mat([[0, 0], [-1, 0]])})
    d1 = ApproximateDeformation(mod, [sigma, second])
    # second extension shifted by the boundary of e11
    d2 = ApproximateDeformation(
        mod, [sigma, Cochain(mod, 1, {(1,): _mat([[0, -1], [-1, 0]])})]
    )
    phi = FormalAutomorphism(mod, [_mat([[0, 0], [-1, 0]])])
    return _document(alg, mod, 10, 2, sigma, d1, d2, phi)


def fixture_documents():
    return {"A": document_a(), "B": document_b(), "C": document_c()}
