import itertools
import logging
from dataclasses import dataclass, field as dataclass_field

from lie_sdit.analyzer import Analyzer
from lie_sdit.exceptions import *
from lie_sdit.lie import MatrixSpace, structure_constants
from lie_sdit.linalg import Matrix, Subspace, kernel

log = logging.getLogger()

LEFT = 'left'
RIGHT = 'right'
DEFAULT_MAX_DEGREE = 4


def normalize_side(side):
    text = str(side).lower()
    if text in ('l', 'left'):
        return LEFT
    if text in ('r', 'right'):
        return RIGHT
    raise ValueError("side must be 'left' or 'right', got '{0}'".format(side))


def monomials(m, degree):
    """Exponent tuples of the degree-``degree`` monomials in m variables,
    graded lexicographic (x1 > x2 > ... > xm)."""
    result = []
    for indices in itertools.combinations_with_replacement(range(m), degree):
        exponents = [0] * m
        for i in indices:
            exponents[i] += 1
        result.append(tuple(exponents))
    return result


def _shift(exponents, i):
    shifted = list(exponents)
    shifted[i] += 1
    return tuple(shifted)


@dataclass
class KernelCertificate:
    """A vector v of degree-d forms with v^T B(x) = 0 (left) or
    B(x) v = 0 (right), B(x) = sum x_i B_i."""
    side: str
    degree: int
    m: int
    n: int
    field: object
    coeffs: dict = dataclass_field(default_factory=dict)

    @property
    def monomials(self):
        return monomials(self.m, self.degree)

    def is_zero(self):
        return not any(any(v) for v in self.coeffs.values())

    def linear_vectors(self):
        """v_1, ..., v_m of a degree-1 certificate v = sum x_i v_i."""
        if self.degree != 1:
            raise ValueError('only degree-1 certificates are linear maps')
        zero = (self.field.zero,) * self.n
        return [self.coeffs.get(exponents, zero)
                for exponents in self.monomials]

    def to_dict(self):
        return {
            'side': self.side,
            'degree': self.degree,
            'monomials': [list(e) for e in self.monomials],
            'vectors': [[self.field.format(v) for v in
                         self.coeffs.get(e, (self.field.zero,) * self.n)]
                        for e in self.monomials],
        }


def _action(matrix, side):
    return matrix if side == RIGHT else matrix.transpose()


class CertificateFinder(Analyzer):
    """Degree-d kernel-vector certificates of singularity.

    Parameters
    ----------
    max_degree : int
        Largest degree a search may ask for.
    verbose : bool
    """

    def __init__(self, max_degree=DEFAULT_MAX_DEGREE, verbose=False):
        super(CertificateFinder, self).__init__(verbose)
        self.max_degree = max_degree

    def find_kernel_certificate(self, space, degree, side=RIGHT):
        """Solve for a nonzero degree-``degree`` kernel certificate.

        The unknowns are the n coordinates of each coefficient vector v_a, one
        per degree-d monomial a, C(m+d-1, d) * n in total. Every coefficient
        of every entry of B(x) v (or v^T B(x)) must vanish.

        Parameters
        ----------
        space : MatrixSpace
        degree : int
        side : str
            'left' or 'right' (also 'l' / 'r').

        Returns
        -------
        KernelCertificate or None
            The first basis vector of the canonical kernel, or None when the
            system has only the zero solution.
        """
        side = normalize_side(side)
        if degree < 1:
            raise ValueError('certificate degree must be at least 1')
        if degree > self.max_degree:
            raise DegreeGuardExceeded('degree {0} exceeds the cap {1}'.format(
                degree, self.max_degree))
        self._start_timer()
        field = space.field
        m, n = space.dim, space.n
        unknowns = monomials(m, degree)
        equations = monomials(m, degree + 1)
        equation_index = dict((e, i) for i, e in enumerate(equations))
        rows = [[field.zero] * (len(unknowns) * n)
                for _ in range(len(equations) * n)]
        actions = [_action(b, side) for b in space.basis]
        for a, exponents in enumerate(unknowns):
            for i, matrix in enumerate(actions):
                base = equation_index[_shift(exponents, i)] * n
                for r in range(n):
                    row = rows[base + r]
                    for t in range(n):
                        value = matrix[r, t]
                        if value:
                            row[a * n + t] = row[a * n + t] + value
        system = Matrix(rows, field, (len(rows), len(unknowns) * n))
        solutions = kernel(system)
        self._print('{0} unknowns, solution space of dimension {1}'.format(
            len(unknowns) * n, solutions.dim))
        if not solutions.dim:
            return None
        vector = solutions.basis[0]
        coeffs = dict((e, tuple(vector[a * n:(a + 1) * n]))
                      for a, e in enumerate(unknowns))
        return KernelCertificate(side, degree, m, n, field, coeffs)

    @staticmethod
    def verify_certificate(space, certificate):
        """Expand B(x) v (or v^T B(x)) and check every coefficient is zero."""
        if certificate.is_zero():
            raise IdenticallyZeroCertificate('the certificate is identically '
                                             'zero')
        if certificate.m != space.dim or certificate.n != space.n:
            raise ShapeMismatch('certificate for m={0}, n={1} against a space '
                                'with m={2}, n={3}'.format(
                                    certificate.m, certificate.n, space.dim,
                                    space.n))
        zero = [space.field.zero] * space.n
        expansion = {}
        actions = [_action(b, certificate.side) for b in space.basis]
        for exponents, vector in certificate.coeffs.items():
            for i, matrix in enumerate(actions):
                key = _shift(exponents, i)
                image = matrix.apply(vector)
                current = expansion.get(key, zero)
                expansion[key] = [a + b for a, b in zip(current, image)]
        return not any(any(v) for v in expansion.values())

    @staticmethod
    def example2_space(matrices):
        """Space of the matrices [C_1 v, ..., C_n v] over v in F^n.

        Parameters
        ----------
        matrices : list of Matrix
            n alternating n x n matrices.
        """
        matrices = list(matrices)
        n = len(matrices)
        if n == 0:
            raise NotAlternating('at least one matrix is needed')
        field = matrices[0].field
        for index, c in enumerate(matrices):
            if c.shape != (n, n):
                raise NotAlternating('matrix {0} has shape {1}, expected '
                                     '{2}x{2}'.format(index, c.shape, n))
            if any(c[i, i] for i in range(n)) or c.transpose() != -c:
                raise NotAlternating('matrix {0} is not alternating'.format(
                    index))
        basis = [Matrix([[matrices[i][r, j] for i in range(n)]
                         for r in range(n)], field, (n, n))
                 for j in range(n)]
        return MatrixSpace(basis, field, n, name='example2')

    @staticmethod
    def linker_cross_identity_check(space, certificate):
        """B_i v_i = 0 and B_i v_j + B_j v_i = 0 for i < j (transposes for
        left)."""
        if certificate.degree != 1 or certificate.is_zero():
            return False
        if certificate.m != space.dim or certificate.n != space.n:
            return False
        vectors = certificate.linear_vectors()
        actions = [_action(b, certificate.side) for b in space.basis]
        for i in range(space.dim):
            if any(actions[i].apply(vectors[i])):
                return False
            for j in range(i + 1, space.dim):
                total = [a + b for a, b in zip(actions[i].apply(vectors[j]),
                                               actions[j].apply(vectors[i]))]
                if any(total):
                    return False
        return True

    @staticmethod
    def linker_homomorphism_check(space, certificate, algebra=None):
        """psi([a_i, a_j]) - rho(a_i) psi(a_j) = 0 on all basis pairs.

        Right certificates use rho(x) = B(x); left certificates use the dual
        action -B(x)^T.
        """
        if certificate.degree != 1 or certificate.is_zero():
            return False
        algebra = algebra or structure_constants(space)
        vectors = certificate.linear_vectors()
        field = space.field
        m = space.dim
        for i in range(m):
            action = space.basis[i]
            if certificate.side == LEFT:
                action = -action.transpose()
            for j in range(m):
                bracket = [field.zero] * space.n
                for k, c in enumerate(algebra.constants[i][j]):
                    if c:
                        bracket = [a + c * b
                                   for a, b in zip(bracket, vectors[k])]
                image = action.apply(vectors[j])
                if any(a - b for a, b in zip(bracket, image)):
                    return False
        return True

    @staticmethod
    def certificate_image(space, certificate):
        """Span of the coefficient vectors of a certificate."""
        return Subspace(list(certificate.coeffs.values()), space.n,
                        space.field)

    def decide_by_certificate(self, space, max_degree=None):
        """The first certificate of degree <= max_degree, left side first.

        Returns
        -------
        KernelCertificate or None
        """
        max_degree = self.max_degree if max_degree is None else max_degree
        for degree in range(1, max_degree + 1):
            for side in (LEFT, RIGHT):
                certificate = self.find_kernel_certificate(space, degree,
                                                           side)
                if certificate is not None:
                    return certificate
        return None
