"""
Exact linear algebra over the rationals and prime fields.

Matrices are dense numpy object arrays of sympy domain elements (``QQ`` or
``GF(p)``). Echelon forms use fraction-free elimination followed by a
normalisation pass, so a reduced row echelon form is canonical and two
subspaces are equal exactly when their stored bases are equal.
"""
import itertools
import logging
import math
import numbers
import operator
import re
from fractions import Fraction

import numpy as np
from sympy import GF, QQ, Basic, Poly, Symbol, isprime
from sympy.polys.matrices import DomainMatrix

from lie_sdit.exceptions import *

log = logging.getLogger()

DEFAULT_SUBSPACE_GUARD = 10 ** 6


class ScalarField(object):
    """The scalar domain of a computation: ``Q`` or ``GF(p)``.

    Parameters
    ----------
    characteristic : int
        0 for the rationals, otherwise a prime p.
    """
    _ENTRY = re.compile(r'^([+-]?)([0-9]+)(?:/([0-9]+))?$')
    _NAME = re.compile(r'^GF\(?([0-9]+)\)?$')

    def __init__(self, characteristic=0):
        characteristic = int(characteristic)
        if characteristic == 0:
            domain = QQ
        elif characteristic > 1 and isprime(characteristic):
            domain = GF(characteristic, symmetric=False)
        else:
            raise InvalidField("'{0}' is neither 0 nor a prime".format(
                characteristic))
        self.characteristic = characteristic
        self.domain = domain
        self.zero = domain.zero
        self.one = domain.one

    @classmethod
    def from_name(cls, name):
        """Build a field from ``Q``, ``QQ``, ``GF(p)``, ``GFp`` or ``gfp``."""
        text = str(name).strip().upper().replace(' ', '')
        if text in ('Q', 'QQ'):
            return cls(0)
        match = cls._NAME.match(text)
        if match is None:
            raise InvalidField("'{0}' is not a valid field name".format(name))
        return cls(int(match.group(1)))

    @property
    def name(self):
        if self.characteristic == 0:
            return 'Q'
        return 'GF({0})'.format(self.characteristic)

    @property
    def is_rational(self):
        return self.characteristic == 0

    @property
    def is_finite(self):
        return self.characteristic != 0

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value, lenient=True)[0]
        if self.domain.of_type(value):
            return value
        if isinstance(value, numbers.Integral):
            return self.domain(int(value))
        if isinstance(value, Fraction):
            return self.ratio(value.numerator, value.denominator)
        if isinstance(value, Basic) and value.is_Rational:
            return self.ratio(int(value.p), int(value.q))
        if isinstance(value, numbers.Rational):
            return self.ratio(int(value.numerator), int(value.denominator))
        raise InvalidField("cannot convert {0!r} into {1}".format(
            value, self.name))

    def ratio(self, numerator, denominator=1):
        if denominator == 0:
            raise ZeroDivisionError('zero denominator')
        if self.is_rational:
            return self.domain(int(numerator), int(denominator))
        if denominator % self.characteristic == 0:
            raise ZeroDivisionError(
                'denominator {0} vanishes in {1}'.format(denominator,
                                                         self.name))
        return self.domain(int(numerator)) / self.domain(int(denominator))

    def convert_from(self, value, source):
        """Map an element of ``source`` into this field (reduction mod p)."""
        if source == self:
            return value
        numerator, denominator = source.numer_denom(value)
        return self.ratio(numerator, denominator)

    def numer_denom(self, value):
        if self.is_rational:
            return (int(self.domain.numer(value)),
                    int(self.domain.denom(value)))
        return self.domain.to_int(value), 1

    def parse(self, text, lenient=False):
        """Parse an entry string.

        Returns
        -------
        tuple
            ``(value, normalized)``; ``normalized`` is None when ``text`` was
            already canonical, otherwise the canonical spelling (only when
            ``lenient``).
        """
        match = self._ENTRY.match(text)
        if match is None:
            raise ValueError("'{0}' is not an integer or a/b".format(text))
        sign, numerator, denominator = match.groups()
        numerator = int(numerator)
        if sign == '-':
            numerator = -numerator
        denominator = 1 if denominator is None else int(denominator)
        if denominator == 0:
            raise ValueError("'{0}' has a zero denominator".format(text))
        try:
            value = self.ratio(numerator, denominator)
        except ZeroDivisionError as ex:
            raise ValueError("'{0}': {1}".format(text, ex))
        canonical = self.format(value)
        if canonical == text:
            return value, None
        if not lenient:
            raise ValueError("'{0}' is not canonical, expected '{1}'".format(
                text, canonical))
        return value, canonical

    def format(self, value):
        numerator, denominator = self.numer_denom(value)
        if denominator == 1:
            return str(numerator)
        return '{0}/{1}'.format(numerator, denominator)

    def key(self, value):
        return self.numer_denom(value)

    def to_sympy(self, value):
        return self.domain.to_sympy(value)

    def elements(self):
        if not self.is_finite:
            raise UnsupportedField('the rationals cannot be enumerated')
        return [self.domain(i) for i in range(self.characteristic)]

    def __eq__(self, other):
        return (isinstance(other, ScalarField) and
                self.characteristic == other.characteristic)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('ScalarField', self.characteristic))

    def __repr__(self):
        return 'ScalarField({0})'.format(self.name)


QQ_FIELD = ScalarField(0)


def _dot(left, right, zero):
    total = zero
    for a, b in zip(left, right):
        if a and b:
            total = total + a * b
    return total


class Matrix(object):
    """Dense immutable matrix over a ``ScalarField``.

    Parameters
    ----------
    entries : iterable of iterables
        Row-major entries; anything the field can convert.
    field : ScalarField
    shape : tuple, optional
        Needed when there are no rows.
    """

    def __init__(self, entries, field=QQ_FIELD, shape=None):
        rows = [list(row) for row in entries]
        if shape is None:
            shape = (len(rows), len(rows[0]) if rows else 0)
        nrows, ncols = shape
        if len(rows) != nrows or any(len(row) != ncols for row in rows):
            raise ShapeMismatch('entries do not form a {0}x{1} grid'.format(
                nrows, ncols))
        array = np.empty((nrows, ncols), dtype=object)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                array[i, j] = field(value)
        self._array = array
        self.field = field

    @classmethod
    def _wrap(cls, array, field):
        matrix = cls.__new__(cls)
        matrix._array = array
        matrix.field = field
        return matrix

    @classmethod
    def zeros(cls, nrows, ncols, field=QQ_FIELD):
        array = np.empty((nrows, ncols), dtype=object)
        array.fill(field.zero)
        return cls._wrap(array, field)

    @classmethod
    def identity(cls, n, field=QQ_FIELD):
        matrix = cls.zeros(n, n, field)
        for i in range(n):
            matrix._array[i, i] = field.one
        return matrix

    @classmethod
    def unit(cls, n, i, j, field=QQ_FIELD):
        """The elementary matrix E_ij (0-based indices)."""
        matrix = cls.zeros(n, n, field)
        matrix._array[i, j] = field.one
        return matrix

    @classmethod
    def from_columns(cls, columns, nrows, field=QQ_FIELD):
        columns = [list(c) for c in columns]
        return cls([[c[i] for c in columns] for i in range(nrows)], field,
                   (nrows, len(columns)))

    @property
    def shape(self):
        return self._array.shape

    @property
    def nrows(self):
        return self._array.shape[0]

    @property
    def ncols(self):
        return self._array.shape[1]

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, index):
        return self._array[index]

    def row(self, i):
        return tuple(self._array[i, :])

    def column(self, j):
        return tuple(self._array[:, j])

    def rows(self):
        return [list(row) for row in self._array]

    def flatten(self):
        return tuple(self._array.flat)

    def _check_same(self, other):
        if self.field != other.field:
            raise FieldMismatch('{0} and {1}'.format(self.field.name,
                                                     other.field.name))
        if self.shape != other.shape:
            raise ShapeMismatch('{0} and {1}'.format(self.shape, other.shape))

    def _map(self, func):
        array = np.empty(self.shape, dtype=object)
        for index, value in np.ndenumerate(self._array):
            array[index] = func(value)
        return Matrix._wrap(array, self.field)

    def __add__(self, other):
        self._check_same(other)
        return Matrix._wrap(self._array + other._array, self.field)

    def __sub__(self, other):
        self._check_same(other)
        return Matrix._wrap(self._array - other._array, self.field)

    def __neg__(self):
        return self._map(operator.neg)

    def scale(self, scalar):
        scalar = self.field(scalar)
        return self._map(lambda value: value * scalar)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.field != other.field:
            raise FieldMismatch('{0} and {1}'.format(self.field.name,
                                                     other.field.name))
        if self.ncols != other.nrows:
            raise ShapeMismatch('cannot multiply {0} by {1}'.format(
                self.shape, other.shape))
        if self.ncols == 0:
            return Matrix.zeros(self.nrows, other.ncols, self.field)
        return Matrix._wrap(self._array.dot(other._array), self.field)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def bracket(self, other):
        """The commutator ``self * other - other * self``."""
        return self * other - other * self

    def power(self, exponent):
        result = Matrix.identity(self.nrows, self.field)
        for _ in range(exponent):
            result = result * self
        return result

    def transpose(self):
        return Matrix._wrap(self._array.T.copy(), self.field)

    def trace(self):
        if not self.is_square:
            raise ShapeMismatch('trace of a non-square matrix')
        total = self.field.zero
        for i in range(self.nrows):
            total = total + self._array[i, i]
        return total

    def is_zero(self):
        return not any(self._array.flat)

    def apply(self, vector):
        """Matrix times column vector, returned as a tuple."""
        vector = tuple(vector)
        if len(vector) != self.ncols:
            raise ShapeMismatch('vector of length {0} for {1} columns'.format(
                len(vector), self.ncols))
        zero = self.field.zero
        return tuple(_dot(row, vector, zero) for row in self._array)

    def change_field(self, field):
        source = self.field
        array = np.empty(self.shape, dtype=object)
        for index, value in np.ndenumerate(self._array):
            array[index] = field.convert_from(value, source)
        return Matrix._wrap(array, field)

    def to_strings(self):
        return [[self.field.format(v) for v in row] for row in self._array]

    def to_domain_matrix(self):
        return DomainMatrix(self.rows(), self.shape, self.field.domain)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape and
                all(a == b for a, b in zip(self._array.flat,
                                           other._array.flat)))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        key = self.field.key
        return hash((self.shape, tuple(key(v) for v in self._array.flat)))

    def __repr__(self):
        return 'Matrix({0}, {1})'.format(self.to_strings(), self.field.name)


def stack(matrices, ncols, field=QQ_FIELD):
    """Stack matrices vertically; ``ncols`` fixes the width of an empty stack."""
    rows = []
    for matrix in matrices:
        if matrix.ncols != ncols:
            raise ShapeMismatch('cannot stack {0} columns onto {1}'.format(
                matrix.ncols, ncols))
        rows.extend(matrix.rows())
    return Matrix(rows, field, (len(rows), ncols))


def _integer_row(row, field):
    denominators = [field.numer_denom(v)[1] for v in row]
    scale = 1
    for d in denominators:
        scale = scale * d // math.gcd(scale, d)
    result = []
    for v in row:
        numerator, denominator = field.numer_denom(v)
        result.append(numerator * (scale // denominator))
    return result


def _echelon_rows(rows, ncols, field):
    """Reduced row echelon rows (nonzero only) and their pivot columns.

    Forward elimination is fraction free (Bareiss): over the rationals the
    rows are first scaled to integers and every division is exact. The
    back-substitution pass then normalises pivots to one.
    """
    if field.is_rational:
        work = [_integer_row(row, field) for row in rows]
        exquo = operator.floordiv
    else:
        work = [list(row) for row in rows]
        exquo = operator.truediv
    nrows = len(work)
    pivots = []
    previous = None
    top = 0
    for col in range(ncols):
        if top == nrows:
            break
        found = None
        for r in range(top, nrows):
            if work[r][col]:
                found = r
                break
        if found is None:
            continue
        work[top], work[found] = work[found], work[top]
        pivot_row = work[top]
        pivot = pivot_row[col]
        for r in range(top + 1, nrows):
            row = work[r]
            factor = row[col]
            for k in range(col, ncols):
                value = pivot * row[k] - factor * pivot_row[k]
                row[k] = value if previous is None else exquo(value, previous)
        previous = pivot
        pivots.append(col)
        top += 1

    echelon = [[field(v) for v in work[i]] for i in range(top)]
    for i in reversed(range(top)):
        col = pivots[i]
        inverse = field.one / echelon[i][col]
        echelon[i] = [v * inverse for v in echelon[i]]
        for r in range(i):
            factor = echelon[r][col]
            if factor:
                echelon[r] = [a - factor * b
                              for a, b in zip(echelon[r], echelon[i])]
    return echelon, pivots


def rref(matrix):
    """Canonical reduced row echelon form.

    Parameters
    ----------
    matrix : Matrix

    Returns
    -------
    tuple
        ``(Matrix, rank)``; zero rows are kept at the bottom so the shape
        is unchanged.
    """
    rows, pivots = _echelon_rows(matrix.rows(), matrix.ncols, matrix.field)
    zero_row = [matrix.field.zero] * matrix.ncols
    rows = rows + [list(zero_row) for _ in range(matrix.nrows - len(rows))]
    return Matrix(rows, matrix.field, matrix.shape), len(pivots)


def rank(matrix):
    return len(_echelon_rows(matrix.rows(), matrix.ncols, matrix.field)[1])


def kernel(matrix):
    """Right null space of ``matrix`` as a Subspace of F^cols."""
    field = matrix.field
    ncols = matrix.ncols
    rows, pivots = _echelon_rows(matrix.rows(), ncols, field)
    pivot_set = set(pivots)
    vectors = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [field.zero] * ncols
        vector[free] = field.one
        for row, pivot in zip(rows, pivots):
            vector[pivot] = -row[free]
        vectors.append(vector)
    return Subspace.span(vectors, ncols, field)


def determinant(matrix):
    if not matrix.is_square:
        raise ShapeMismatch('determinant of a {0} matrix'.format(matrix.shape))
    if matrix.nrows == 0:
        return matrix.field.one
    return matrix.to_domain_matrix().det()


def char_poly(matrix):
    """Monic characteristic polynomial, highest degree first."""
    if not matrix.is_square:
        raise ShapeMismatch('characteristic polynomial of a {0} '
                            'matrix'.format(matrix.shape))
    if matrix.nrows == 0:
        return [matrix.field.one]
    return [matrix.field(c) for c in matrix.to_domain_matrix().charpoly()]


def poly_eval_matrix(coeffs, matrix):
    """Evaluate a polynomial (highest degree first) at a square matrix."""
    n = matrix.nrows
    identity = Matrix.identity(n, matrix.field)
    result = Matrix.zeros(n, n, matrix.field)
    for c in coeffs:
        result = result * matrix + identity.scale(c)
    return result


def _synthetic_division(coeffs, root):
    quotient = []
    carry = None
    for c in coeffs:
        carry = c if carry is None else c + carry * root
        quotient.append(carry)
    return quotient[:-1], quotient[-1]


def rational_roots(coeffs, field=QQ_FIELD, strict=True):
    """Roots of a polynomial that lie in ``field``, with multiplicities.

    Over the rationals the polynomial is factored with sympy; a factor of
    degree above one raises ``UnsupportedSpectrum`` when ``strict``, and is
    skipped otherwise. Over GF(p) every residue is tried.

    Returns
    -------
    list of (root, multiplicity), sorted by root.
    """
    coeffs = [field(c) for c in coeffs]
    if field.is_rational:
        lam = Symbol('lambda')
        poly = Poly([field.to_sympy(c) for c in coeffs], lam, domain='QQ')
        roots = []
        for factor, multiplicity in poly.factor_list()[1]:
            if factor.degree() == 1:
                a, b = factor.all_coeffs()
                roots.append((field(-b / a), multiplicity))
            elif strict:
                raise UnsupportedSpectrum(
                    'unsupported spectrum: irreducible factor {0}'.format(
                        factor.as_expr()), factor=str(factor.as_expr()))
        return sorted(roots, key=lambda item: Fraction(*field.key(item[0])))

    roots = []
    for candidate in field.elements():
        multiplicity = 0
        current = coeffs
        while len(current) > 1:
            quotient, remainder = _synthetic_division(current, candidate)
            if remainder:
                break
            multiplicity += 1
            current = quotient
        if multiplicity:
            roots.append((candidate, multiplicity))
    return roots


def solve_in_span(targets, matrix):
    """Coefficients c with ``sum(c_i * targets[i]) == matrix``.

    Returns
    -------
    tuple or None
        None when ``matrix`` is not in the span.
    """
    targets = list(targets)
    for target in targets:
        if target.shape != matrix.shape:
            raise ShapeMismatch('target of shape {0} against {1}'.format(
                target.shape, matrix.shape))
    length = matrix.nrows * matrix.ncols
    solver = SpanSolver([t.flatten() for t in targets], length, matrix.field)
    return solver.coordinates(matrix.flatten())


class SpanSolver(object):
    """Coordinates of vectors with respect to a fixed list of vectors.

    The list may be dependent; a particular solution is returned then.
    """

    def __init__(self, vectors, length, field=QQ_FIELD):
        vectors = [list(v) for v in vectors]
        count = len(vectors)
        self.field = field
        self.length = length
        self.count = count
        augmented = []
        for i, vector in enumerate(vectors):
            if len(vector) != length:
                raise ShapeMismatch('vector of length {0}, expected {1}'.format(
                    len(vector), length))
            marker = [field.zero] * count
            marker[i] = field.one
            augmented.append(vector + marker)
        rows, pivots = _echelon_rows(augmented, length + count, field)
        self._rows = [(pivot, row[:length], row[length:])
                      for row, pivot in zip(rows, pivots) if pivot < length]

    def coordinates(self, vector):
        residual = list(vector)
        if len(residual) != self.length:
            raise ShapeMismatch('vector of length {0}, expected {1}'.format(
                len(residual), self.length))
        coefficients = [self.field.zero] * self.count
        for pivot, row, transform in self._rows:
            c = residual[pivot]
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
                coefficients = [a + c * b
                                for a, b in zip(coefficients, transform)]
        if any(residual):
            return None
        return tuple(coefficients)


class EchelonBasis(object):
    """A reduced echelon basis that grows one vector at a time."""

    def __init__(self, length, field=QQ_FIELD, vectors=()):
        self.length = length
        self.field = field
        self._rows = {}
        for vector in vectors:
            self.add(vector)

    @property
    def dim(self):
        return len(self._rows)

    def reduce(self, vector):
        residual = list(vector)
        for pivot, row in self._rows.items():
            c = residual[pivot]
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
        return residual

    def __contains__(self, vector):
        return not any(self.reduce(vector))

    def add(self, vector):
        """Add ``vector``; returns False when it is already in the span."""
        residual = self.reduce(vector)
        pivot = next((i for i, v in enumerate(residual) if v), None)
        if pivot is None:
            return False
        inverse = self.field.one / residual[pivot]
        residual = [v * inverse for v in residual]
        for key, row in list(self._rows.items()):
            c = row[pivot]
            if c:
                self._rows[key] = [a - c * b for a, b in zip(row, residual)]
        self._rows[pivot] = residual
        return True

    def subspace(self):
        rows = [self._rows[p] for p in sorted(self._rows)]
        return Subspace._from_rref(rows, sorted(self._rows), self.length,
                                   self.field)


class Subspace(object):
    """A subspace of F^n held as its canonical RREF basis.

    Build with ``Subspace.span``; equality and hashing compare the
    canonical bases.
    """

    def __init__(self, vectors, ambient_dim, field=QQ_FIELD):
        vectors = [[field(v) for v in vector] for vector in vectors]
        for vector in vectors:
            if len(vector) != ambient_dim:
                raise AmbientMismatch(
                    'vector of length {0} in F^{1}'.format(len(vector),
                                                           ambient_dim))
        rows, pivots = _echelon_rows(vectors, ambient_dim, field)
        self._set(rows, pivots, ambient_dim, field)

    def _set(self, rows, pivots, ambient_dim, field):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(row) for row in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def _from_rref(cls, rows, pivots, ambient_dim, field):
        subspace = cls.__new__(cls)
        subspace._set(rows, pivots, ambient_dim, field)
        return subspace

    @classmethod
    def span(cls, vectors, ambient_dim, field=QQ_FIELD):
        return cls(vectors, ambient_dim, field)

    @classmethod
    def zero(cls, ambient_dim, field=QQ_FIELD):
        return cls._from_rref([], [], ambient_dim, field)

    @classmethod
    def full(cls, ambient_dim, field=QQ_FIELD):
        rows = [[field.one if i == j else field.zero
                 for j in range(ambient_dim)] for i in range(ambient_dim)]
        return cls._from_rref(rows, list(range(ambient_dim)), ambient_dim,
                              field)

    @classmethod
    def coordinate(cls, ambient_dim, indices, field=QQ_FIELD):
        """Span of the standard basis vectors with the given 0-based indices."""
        indices = sorted(set(indices))
        rows = [[field.one if j == i else field.zero
                 for j in range(ambient_dim)] for i in indices]
        return cls._from_rref(rows, indices, ambient_dim, field)

    @property
    def dim(self):
        return len(self.basis)

    def matrix(self):
        return Matrix(self.basis, self.field, (self.dim, self.ambient_dim))

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch('{0} and {1}'.format(self.field.name,
                                                     other.field.name))
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch('F^{0} and F^{1}'.format(
                self.ambient_dim, other.ambient_dim))

    def coordinates(self, vector):
        """Coordinates in the canonical basis, or None if outside."""
        vector = list(vector)
        if len(vector) != self.ambient_dim:
            raise AmbientMismatch('vector of length {0} in F^{1}'.format(
                len(vector), self.ambient_dim))
        coefficients = tuple(vector[p] for p in self.pivots)
        residual = vector
        for c, row in zip(coefficients, self.basis):
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
        if any(residual):
            return None
        return coefficients

    def __contains__(self, vector):
        return self.coordinates(vector) is not None

    def contains(self, other):
        self._check(other)
        return all(v in self for v in other.basis)

    def __le__(self, other):
        return other.contains(self)

    def __ge__(self, other):
        return self.contains(other)

    def __add__(self, other):
        self._check(other)
        return Subspace(list(self.basis) + list(other.basis),
                        self.ambient_dim, self.field)

    def __and__(self, other):
        self._check(other)
        if not self.dim or not other.dim:
            return Subspace.zero(self.ambient_dim, self.field)
        rows = list(self.basis) + list(other.basis)
        relations = kernel(Matrix(rows, self.field,
                                  (len(rows), self.ambient_dim)).transpose())
        zero = [self.field.zero] * self.ambient_dim
        vectors = []
        for relation in relations.basis:
            vector = list(zero)
            for c, row in zip(relation[:self.dim], self.basis):
                if c:
                    vector = [a + c * b for a, b in zip(vector, row)]
            vectors.append(vector)
        return Subspace(vectors, self.ambient_dim, self.field)

    def sum(self, other):
        return self + other

    def intersection(self, other):
        return self & other

    def image(self, matrix):
        """The subspace ``matrix(U)``."""
        return Subspace([matrix.apply(v) for v in self.basis], matrix.nrows,
                        self.field)

    def is_invariant(self, matrices):
        return all(matrix.apply(v) in self
                   for matrix in matrices for v in self.basis)

    def annihilator(self):
        """Row functionals vanishing on the subspace."""
        return kernel(self.matrix())

    def change_field(self, field):
        return Subspace([[field.convert_from(v, self.field) for v in row]
                         for row in self.basis], self.ambient_dim, field)

    def to_strings(self):
        return [[self.field.format(v) for v in row] for row in self.basis]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and
                self.ambient_dim == other.ambient_dim and
                self.basis == other.basis)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        key = self.field.key
        return hash((self.ambient_dim,
                     tuple(tuple(key(v) for v in row) for row in self.basis)))

    def __repr__(self):
        return 'Subspace(dim={0}, ambient={1}, basis={2})'.format(
            self.dim, self.ambient_dim, self.to_strings())


def subspace_sum(first, second):
    return first + second


def subspace_intersection(first, second):
    return first & second


def gaussian_binomial(n, k, q):
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    numerator = 1
    denominator = 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


def count_subspaces(n, q):
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def enumerate_subspaces(n, field, guard=DEFAULT_SUBSPACE_GUARD):
    """Every subspace of GF(p)^n exactly once.

    Subspaces come by dimension, then pivot profile in lexicographic order,
    then free entries in lexicographic order.

    Parameters
    ----------
    n : int
    field : ScalarField or int
        A prime field, or its characteristic.
    guard : int
        Maximal number of subspaces allowed.
    """
    if not isinstance(field, ScalarField):
        field = ScalarField(field)
    if not field.is_finite:
        raise UnsupportedField('subspaces are enumerated over GF(p) only')
    total = count_subspaces(n, field.characteristic)
    if total > guard:
        raise SubspaceGuardExceeded(
            'GF({0})^{1} has {2} subspaces, guard is {3}'.format(
                field.characteristic, n, total, guard))
    return _enumerate(n, field)


def _enumerate(n, field):
    elements = field.elements()
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            pivot_set = set(pivots)
            free = [(i, j) for i, p in enumerate(pivots)
                    for j in range(p + 1, n) if j not in pivot_set]
            for values in itertools.product(elements, repeat=len(free)):
                rows = [[field.zero] * n for _ in range(k)]
                for i, p in enumerate(pivots):
                    rows[i][p] = field.one
                for (i, j), value in zip(free, values):
                    rows[i][j] = value
                yield Subspace._from_rref(rows, list(pivots), n, field)
