"""
Matrix spaces and the Lie structure they carry.

Subalgebras, ideals and series terms are coefficient-space ``Subspace``
values in F^m, with coordinates taken with respect to the stored basis of
the ``MatrixSpace``.
"""
import logging
from dataclasses import dataclass, field as dataclass_field

from lie_sdit.exceptions import *
from lie_sdit.linalg import (QQ_FIELD, EchelonBasis, Matrix, SpanSolver,
                             Subspace, determinant, kernel, stack)

log = logging.getLogger()


class MatrixSpace(object):
    """A linear space of n x n matrices given by a basis.

    Dependent basis elements are dropped (first occurrences win) and a
    warning is recorded in ``warnings``.

    Parameters
    ----------
    basis : iterable of Matrix
    field : ScalarField, optional
        Defaults to the field of the first basis element, or Q.
    n : int, optional
        Matrix size; required when ``basis`` is empty.
    name : str, optional
    metadata : dict, optional
        Free-form description carried into space files.
    quiet : bool
        Log dropped elements at DEBUG instead of WARNING.
    """

    def __init__(self, basis, field=None, n=None, name=None, metadata=None,
                 quiet=False):
        basis = list(basis)
        if field is None:
            field = basis[0].field if basis else QQ_FIELD
        if n is None:
            if not basis:
                raise InvalidMatrixSpace('an empty basis needs the matrix '
                                         'size n')
            n = basis[0].nrows
        self.field = field
        self.n = n
        self.name = name
        self.metadata = dict(metadata or {})
        self.warnings = []

        echelon = EchelonBasis(n * n, field)
        kept = []
        for index, matrix in enumerate(basis):
            if matrix.shape != (n, n):
                raise ShapeMismatch('basis element {0} has shape {1}, '
                                    'expected {2}x{2}'.format(index,
                                                              matrix.shape, n))
            if matrix.field != field:
                raise FieldMismatch('basis element {0} is over {1}, '
                                    'expected {2}'.format(index,
                                                          matrix.field.name,
                                                          field.name))
            if echelon.add(matrix.flatten()):
                kept.append(matrix)
                continue
            message = ('basis element {0} depends on earlier elements and '
                       'was dropped'.format(index))
            self.warnings.append(message)
            if quiet:
                log.debug(message)
            else:
                log.warning(message)
        self.basis = tuple(kept)
        self._solver = None

    @property
    def dim(self):
        return len(self.basis)

    @property
    def m(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def combination(self, coefficients):
        """The matrix ``sum(c_i * B_i)``."""
        coefficients = list(coefficients)
        if len(coefficients) != self.dim:
            raise ShapeMismatch('{0} coefficients for a {1}-dimensional '
                                'space'.format(len(coefficients), self.dim))
        result = Matrix.zeros(self.n, self.n, self.field)
        for c, matrix in zip(coefficients, self.basis):
            c = self.field(c)
            if c:
                result = result + matrix.scale(c)
        return result

    def coordinates(self, matrix):
        """Coordinates of ``matrix`` in the basis, or None if outside."""
        if matrix.shape != (self.n, self.n):
            raise ShapeMismatch('{0} matrix in a space of {1}x{1} '
                                'matrices'.format(matrix.shape, self.n))
        if self._solver is None:
            self._solver = SpanSolver([b.flatten() for b in self.basis],
                                      self.n * self.n, self.field)
        return self._solver.coordinates(matrix.flatten())

    def __contains__(self, matrix):
        return self.coordinates(matrix) is not None

    def span_subspace(self):
        """The space as a subspace of F^(n*n)."""
        return Subspace([b.flatten() for b in self.basis], self.n * self.n,
                        self.field)

    def over(self, field):
        """Reduce the space into another field (e.g. a rational space mod p).

        Elements that become dependent after reduction are dropped with a
        warning.
        """
        try:
            basis = [b.change_field(field) for b in self.basis]
        except ZeroDivisionError as ex:
            raise UnsupportedField('cannot reduce into {0}: {1}'.format(
                field.name, ex))
        return MatrixSpace(basis, field, self.n, self.name, self.metadata)

    def __eq__(self, other):
        if not isinstance(other, MatrixSpace):
            return NotImplemented
        return (self.field == other.field and self.n == other.n and
                self.basis == other.basis)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        return 'MatrixSpace(name={0!r}, n={1}, dim={2}, field={3})'.format(
            self.name, self.n, self.dim, self.field.name)


class LieStructure(object):
    """Structure constants ``[a_i, a_j] = sum_k alpha[i][j][k] a_k``."""

    def __init__(self, constants, field=QQ_FIELD, source=None):
        self.constants = tuple(tuple(tuple(row) for row in plane)
                               for plane in constants)
        self.field = field
        self.source = source
        self._ad_basis = None

    @property
    def dim(self):
        return len(self.constants)

    def zero_vector(self):
        return (self.field.zero,) * self.dim

    def basis_vector(self, i):
        vector = [self.field.zero] * self.dim
        vector[i] = self.field.one
        return tuple(vector)

    def whole(self):
        return Subspace.full(self.dim, self.field)

    def _check_vector(self, x):
        x = tuple(self.field(v) for v in x)
        if len(x) != self.dim:
            raise ShapeMismatch('coefficient vector of length {0} for a '
                                '{1}-dimensional algebra'.format(len(x),
                                                                 self.dim))
        return x

    def bracket(self, x, y):
        x = self._check_vector(x)
        y = self._check_vector(y)
        result = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                result = [r + c * a for r, a in zip(result,
                                                    self.constants[i][j])]
        return tuple(result)

    def ad_basis(self):
        """ad of every basis element, cached."""
        if self._ad_basis is None:
            m = self.dim
            self._ad_basis = tuple(
                Matrix([[self.constants[i][j][k] for j in range(m)]
                        for k in range(m)], self.field, (m, m))
                for i in range(m))
        return self._ad_basis

    def element(self, x):
        """The matrix realising ``x`` in the source space."""
        if self.source is None:
            raise InvalidMatrixSpace('structure constants carry no matrix '
                                     'realisation')
        return self.source.combination(self._check_vector(x))

    def is_antisymmetric(self):
        m = self.dim
        return all(self.constants[i][j][k] == -self.constants[j][i][k]
                   for i in range(m) for j in range(m) for k in range(m))

    def jacobi_holds(self):
        m = self.dim
        basis = [self.basis_vector(i) for i in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                for k in range(j + 1, m):
                    x, y, z = basis[i], basis[j], basis[k]
                    total = [a + b + c for a, b, c in zip(
                        self.bracket(x, self.bracket(y, z)),
                        self.bracket(y, self.bracket(z, x)),
                        self.bracket(z, self.bracket(x, y)))]
                    if any(total):
                        return False
        return True

    def __repr__(self):
        return 'LieStructure(dim={0}, field={1})'.format(self.dim,
                                                         self.field.name)


@dataclass
class SeriesReport:
    """Terms of a lower central or derived series."""
    kind: str
    terms: list = dataclass_field(default_factory=list)
    stabilized: bool = True

    @property
    def dims(self):
        return [term.dim for term in self.terms]

    @property
    def terminates_at_zero(self):
        return bool(self.terms) and self.terms[-1].dim == 0


def closure_check(space):
    """First basis pair (i, j), 0-based, whose bracket leaves the span.

    Returns
    -------
    tuple or None
        None when the space is closed under the commutator.
    """
    basis = space.basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if space.coordinates(basis[i].bracket(basis[j])) is None:
                return i, j
    return None


def structure_constants(space):
    """Structure constants of a Lie-closed matrix space.

    Raises
    ------
    NotALieAlgebra
        With the first failing pair.
    """
    m = space.dim
    zero = space.field.zero
    constants = [[[zero] * m for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            coefficients = space.coordinates(
                space.basis[i].bracket(space.basis[j]))
            if coefficients is None:
                raise NotALieAlgebra('[B_{0}, B_{1}] is not in the span'.format(
                    i + 1, j + 1), pair=(i, j))
            constants[i][j] = list(coefficients)
            constants[j][i] = [-c for c in coefficients]
    return LieStructure(constants, space.field, space)


def ad_matrix(algebra, x):
    """Matrix of ad_x in the algebra basis (column j holds [x, a_j])."""
    x = algebra._check_vector(x)
    m = algebra.dim
    result = Matrix.zeros(m, m, algebra.field)
    for c, ad in zip(x, algebra.ad_basis()):
        if c:
            result = result + ad.scale(c)
    return result


def adjoint_space(algebra):
    """The matrix space spanned by ad of the basis elements."""
    space = MatrixSpace(algebra.ad_basis(), algebra.field, algebra.dim,
                        name='ad', quiet=True)
    if space.dim < algebra.dim:
        log.info('adjoint space has dimension {0} < {1} (nonzero '
                 'center)'.format(space.dim, algebra.dim))
    return space


def killing_form(algebra):
    """Gram matrix of trace(ad_x ad_y) on the basis."""
    ads = algebra.ad_basis()
    m = algebra.dim
    return Matrix([[(ads[i] * ads[j]).trace() for j in range(m)]
                   for i in range(m)], algebra.field, (m, m))


def is_semisimple(algebra):
    if not algebra.field.is_rational:
        raise UnsupportedField('the Killing criterion needs characteristic 0')
    return bool(determinant(killing_form(algebra)))


def bracket_subspaces(algebra, first, second):
    """Span of [u, v] over basis vectors u of ``first``, v of ``second``."""
    vectors = [algebra.bracket(u, v)
               for u in first.basis for v in second.basis]
    return Subspace(vectors, algebra.dim, algebra.field)


def is_subalgebra(algebra, subspace):
    return all(algebra.bracket(u, v) in subspace
               for i, u in enumerate(subspace.basis)
               for v in subspace.basis[i + 1:])


def _require_subalgebra(algebra, subspace):
    if subspace.ambient_dim != algebra.dim:
        raise AmbientMismatch('subspace of F^{0} in a {1}-dimensional '
                              'algebra'.format(subspace.ambient_dim,
                                               algebra.dim))
    if not is_subalgebra(algebra, subspace):
        raise NotASubalgebra('subspace is not closed under the bracket')


def _series(algebra, subalgebra, kind):
    current = algebra.whole() if subalgebra is None else subalgebra
    if subalgebra is not None:
        _require_subalgebra(algebra, subalgebra)
    base = current
    terms = [current]
    for _ in range(algebra.dim + 1):
        if kind == 'lower-central':
            following = bracket_subspaces(algebra, current, base)
        else:
            following = bracket_subspaces(algebra, current, current)
        if following == current:
            return SeriesReport(kind, terms, True)
        terms.append(following)
        current = following
    return SeriesReport(kind, terms, False)


def lower_central_series(algebra, subalgebra=None):
    """Terms g, [g, g], [[g, g], g], ... until they stop shrinking.

    Parameters
    ----------
    algebra : LieStructure
    subalgebra : Subspace, optional
        Compute the series of this subalgebra instead of the whole algebra.

    Returns
    -------
    SeriesReport
    """
    return _series(algebra, subalgebra, 'lower-central')


def derived_series(algebra, subalgebra=None):
    return _series(algebra, subalgebra, 'derived')


def is_nilpotent(algebra, subalgebra=None):
    return lower_central_series(algebra, subalgebra).terminates_at_zero


def is_solvable(algebra, subalgebra=None):
    return derived_series(algebra, subalgebra).terminates_at_zero


def normalizer(algebra, subspace):
    """{x : [x, h] in H for all h in H}."""
    _require_subalgebra(algebra, subspace)
    m = algebra.dim
    functionals = subspace.annihilator().basis
    if not functionals:
        return algebra.whole()
    rows = []
    for h in subspace.basis:
        ad_h = ad_matrix(algebra, h)
        for f in functionals:
            # [x, h] = -ad_h x; f(ad_h x) = (f ad_h) x
            rows.append([sum((f[k] * ad_h[k, j] for k in range(m)),
                             algebra.field.zero) for j in range(m)])
    if not rows:
        return algebra.whole()
    return kernel(Matrix(rows, algebra.field, (len(rows), m)))


def is_self_normalizing(algebra, subspace):
    return normalizer(algebra, subspace) == subspace


def center(algebra):
    m = algebra.dim
    if m == 0:
        return algebra.whole()
    return kernel(stack(algebra.ad_basis(), m, algebra.field))


def generated_subalgebra(algebra, generators):
    """Smallest bracket-closed subspace containing ``generators``."""
    current = Subspace([algebra._check_vector(g) for g in generators],
                       algebra.dim, algebra.field)
    for _ in range(algebra.dim + 1):
        following = current + bracket_subspaces(algebra, current, current)
        if following == current:
            break
        current = following
    return current


def _two_generation_candidates(algebra):
    m = algebra.dim
    field = algebra.field
    for i in range(m):
        yield algebra.basis_vector(i)
    for alpha in range(1, 2 * m + 2):
        yield tuple(field(alpha) ** i for i in range(m))
        yield tuple(field(alpha) ** (m - 1 - i) + field(i) for i in range(m))


def two_generation_check(algebra):
    """Search deterministic candidate pairs for two generators of the algebra.

    Returns
    -------
    tuple or None
        ``(x, y)`` with ``generated_subalgebra(algebra, [x, y])`` equal to the
        whole algebra, or None if no candidate pair works.
    """
    if algebra.dim <= 2:
        return tuple(algebra.basis_vector(i) for i in range(algebra.dim))
    whole = algebra.whole()
    candidates = list(_two_generation_candidates(algebra))
    for i, x in enumerate(candidates):
        for y in candidates[i + 1:]:
            if generated_subalgebra(algebra, [x, y]) == whole:
                return x, y
    return None


def restricted_ad(algebra, y, subspace):
    """Matrix of ad_y restricted to an invariant subspace, in its basis."""
    columns = []
    for k in subspace.basis:
        coordinates = subspace.coordinates(algebra.bracket(y, k))
        if coordinates is None:
            raise NotASubalgebra('ad_y does not preserve the subspace')
        columns.append(coordinates)
    return Matrix.from_columns(columns, subspace.dim, algebra.field)


def associative_envelope(space, unital=True):
    """Span of all products of basis matrices (and I when ``unital``).

    Closure is breadth first, multiplying new elements on the left by the
    original generators; the dimension cannot exceed n**2.
    """
    n = space.n
    field = space.field
    echelon = EchelonBasis(n * n, field)
    elements = []
    seeds = list(space.basis)
    if unital:
        seeds.insert(0, Matrix.identity(n, field))
    for matrix in seeds:
        if echelon.add(matrix.flatten()):
            elements.append(matrix)
    frontier = list(elements)
    while frontier and echelon.dim < n * n:
        following = []
        for element in frontier:
            for generator in space.basis:
                product = generator * element
                if echelon.add(product.flatten()):
                    following.append(product)
                    if echelon.dim == n * n:
                        break
            if echelon.dim == n * n:
                break
        elements.extend(following)
        frontier = following
    return MatrixSpace(elements, field, n, name='envelope', quiet=True)


def common_kernel(space):
    """{v : B v = 0 for every basis matrix B}."""
    if not space.dim:
        return Subspace.full(space.n, space.field)
    return kernel(stack(space.basis, space.n, space.field))


def image_space(space, subspace):
    """The subspace B(U) spanned by B_i u over basis vectors u of U."""
    if subspace.ambient_dim != space.n:
        raise AmbientMismatch('subspace of F^{0} for {1}x{1} '
                              'matrices'.format(subspace.ambient_dim, space.n))
    vectors = [b.apply(u) for b in space.basis for u in subspace.basis]
    return Subspace(vectors, space.n, space.field)
