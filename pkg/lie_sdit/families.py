import logging
import math
from dataclasses import dataclass, field as dataclass_field

import numpy as np

from lie_sdit.certificates import CertificateFinder, monomials
from lie_sdit.exceptions import *
from lie_sdit.lie import MatrixSpace, adjoint_space, structure_constants
from lie_sdit.linalg import QQ_FIELD, Matrix

log = logging.getLogger()

DEFAULT_MODULE_GUARD = 120


def _require(condition, message):
    if not condition:
        raise InvalidExampleSpec(message)


def _unit(n, i, j, field=QQ_FIELD):
    """E_ij with 1-based indices."""
    return Matrix.unit(n, i - 1, j - 1, field)


def elementary_space(n, pairs, field=QQ_FIELD, name=None):
    """Span of E_ij for the given 1-based index pairs."""
    _require(n >= 1, 'n must be positive')
    for i, j in pairs:
        _require(1 <= i <= n and 1 <= j <= n,
                 'E_{0}{1} does not fit in {2}x{2} matrices'.format(i, j, n))
    name = name or 'span{{{0}}}'.format(
        ','.join('E{0}{1}'.format(i, j) for i, j in pairs))
    return MatrixSpace([_unit(n, i, j, field) for i, j in pairs], field, n,
                       name=name)


def lambda_space(n, field=QQ_FIELD):
    """Alternating n x n matrices, basis E_ij - E_ji for i < j."""
    _require(n >= 2, 'lambda needs n >= 2')
    basis = [_unit(n, i, j, field) - _unit(n, j, i, field)
             for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return MatrixSpace(basis, field, n, name='lambda({0})'.format(n),
                       metadata={'family': 'lambda', 'params': {'n': n}})


def sl_standard(n, field=QQ_FIELD):
    """sl(n) with basis H_1..H_(n-1), then E_ij (i < j), then E_ij (i > j).

    For n = 2 this is (h, e, f).
    """
    _require(n >= 2, 'sl needs n >= 2')
    basis = [_unit(n, i, i, field) - _unit(n, i + 1, i + 1, field)
             for i in range(1, n)]
    basis += [_unit(n, i, j, field)
              for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    basis += [_unit(n, i, j, field)
              for i in range(1, n + 1) for j in range(1, i)]
    return MatrixSpace(basis, field, n, name='sl({0})'.format(n),
                       metadata={'family': 'sl-standard', 'params': {'n': n}})


def heisenberg(n=3, field=QQ_FIELD):
    """Heisenberg algebra inside M(n): E_1j, E_jn (1 < j < n), then E_1n."""
    _require(n >= 3, 'heisenberg needs n >= 3')
    basis = [_unit(n, 1, j, field) for j in range(2, n)]
    basis += [_unit(n, j, n, field) for j in range(2, n)]
    basis.append(_unit(n, 1, n, field))
    return MatrixSpace(basis, field, n, name='heisenberg({0})'.format(n),
                       metadata={'family': 'heisenberg', 'params': {'n': n}})


def strict_upper_line(field=QQ_FIELD):
    return elementary_space(2, [(1, 2)], field, name='strict-upper')


def borel_sl2(field=QQ_FIELD):
    h = _unit(2, 1, 1, field) - _unit(2, 2, 2, field)
    return MatrixSpace([h, _unit(2, 1, 2, field)], field, 2, name='borel(sl2)')


def middle_trivial(field=QQ_FIELD):
    """span{E11, E12, E13, E23, E33}: flag 0 < <e1> < <e1,e2> < F^3 with a
    zero middle factor."""
    return elementary_space(3, [(1, 1), (1, 2), (1, 3), (2, 3), (3, 3)],
                            field, name='middle-trivial')


def sym_power_rep(n, degree, field=QQ_FIELD, guard=DEFAULT_MODULE_GUARD):
    """sl(n) acting on homogeneous polynomials of the given degree.

    E_ij acts as x_i d/dx_j on the graded-lex monomial basis; the space is
    the image of the ``sl_standard(n)`` basis.
    """
    _require(n >= 2, 'the polynomial representation needs n >= 2')
    _require(degree >= 1, 'degree must be positive')
    size = math.comb(degree + n - 1, n - 1)
    _require(size <= guard, 'module dimension {0} exceeds the guard '
                            '{1}'.format(size, guard))
    basis_monomials = monomials(n, degree)
    index = dict((e, k) for k, e in enumerate(basis_monomials))

    def rho(i, j):
        entries = [[field.zero] * size for _ in range(size)]
        for column, exponents in enumerate(basis_monomials):
            if not exponents[j]:
                continue
            image = list(exponents)
            image[j] -= 1
            image[i] += 1
            entries[index[tuple(image)]][column] = field(exponents[j])
        return Matrix(entries, field, (size, size))

    basis = [rho(i, i) - rho(i + 1, i + 1) for i in range(n - 1)]
    basis += [rho(i, j) for i in range(n) for j in range(i + 1, n)]
    basis += [rho(i, j) for i in range(n) for j in range(i)]
    return MatrixSpace(basis, field, size,
                       name='sym({0},{1})'.format(n, degree),
                       metadata={'family': 'sym-power',
                                 'params': {'n': n, 'degree': degree}})


def sl_monomial_rep(n, d, field=QQ_FIELD, guard=DEFAULT_MODULE_GUARD):
    """sl(n) on the degree d*n monomials; module dimension C(dn+n-1, n-1)."""
    _require(d >= 1, 'd must be positive')
    space = sym_power_rep(n, d * n, field, guard)
    space.name = 'sl-monomial({0},{1})'.format(n, d)
    space.metadata = {'family': 'sl-monomial', 'params': {'n': n, 'd': d}}
    return space


_ADJOINT_SOURCES = {
    'sl2': lambda field: sl_standard(2, field),
    'sl3': lambda field: sl_standard(3, field),
    'so3': lambda field: lambda_space(3, field),
    'so4': lambda field: lambda_space(4, field),
    'heisenberg': lambda field: heisenberg(3, field),
}


def adjoint_of(name, field=QQ_FIELD):
    """Adjoint space of sl2, sl3, so3, so4 or heisenberg."""
    _require(name in _ADJOINT_SOURCES, "unknown algebra '{0}' (known: "
             "{1})".format(name, ', '.join(sorted(_ADJOINT_SOURCES))))
    space = adjoint_space(structure_constants(_ADJOINT_SOURCES[name](field)))
    space.name = 'ad({0})'.format(name)
    space.metadata = {'family': 'adjoint', 'params': {'algebra': name}}
    return space


def random_alternating_family(n, seed=0, field=QQ_FIELD):
    """n seeded alternating n x n matrices with entries in [-3, 3]."""
    _require(n >= 2, 'alternating families need n >= 2')
    rng = np.random.default_rng(seed)
    family = []
    for _ in range(n):
        upper = rng.integers(-3, 4, size=(n, n))
        entries = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                entries[i][j] = int(upper[i, j])
                entries[j][i] = -int(upper[i, j])
        family.append(Matrix(entries, field, (n, n)))
    return family


def example2_random(n, seed=0, field=QQ_FIELD):
    space = CertificateFinder.example2_space(
        random_alternating_family(n, seed, field))
    space.name = 'example2({0},seed={1})'.format(n, seed)
    space.metadata = {'family': 'example2-random',
                      'params': {'n': n, 'seed': seed}}
    return space


@dataclass
class ExampleSpec:
    """A named example family with its parameters."""
    family: str
    params: dict = dataclass_field(default_factory=dict)

    _BUILDERS = {
        'lambda': (lambda p: lambda_space(p['n']), ('n',)),
        'sl-standard': (lambda p: sl_standard(p['n']), ('n',)),
        'sl-monomial': (lambda p: sl_monomial_rep(
            p['n'], p['d'], guard=p.get('guard', DEFAULT_MODULE_GUARD)),
            ('n', 'd')),
        'sym-power': (lambda p: sym_power_rep(
            p['n'], p['degree'], guard=p.get('guard', DEFAULT_MODULE_GUARD)),
            ('n', 'degree')),
        'adjoint': (lambda p: adjoint_of(p['algebra']), ('algebra',)),
        'heisenberg': (lambda p: heisenberg(p.get('n', 3)), ()),
        'strict-upper': (lambda p: strict_upper_line(), ()),
        'borel-sl2': (lambda p: borel_sl2(), ()),
        'middle-trivial': (lambda p: middle_trivial(), ()),
        'example2-random': (lambda p: example2_random(p['n'],
                                                      p.get('seed', 0)),
                            ('n',)),
    }

    @classmethod
    def families(cls):
        return sorted(cls._BUILDERS)

    def validate(self):
        if self.family not in self._BUILDERS:
            raise InvalidExampleSpec("unknown family '{0}' (known: {1})".format(
                self.family, ', '.join(self.families())))
        missing = [key for key in self._BUILDERS[self.family][1]
                   if key not in self.params]
        if missing:
            raise InvalidExampleSpec("family '{0}' needs {1}".format(
                self.family, ', '.join(missing)))

    def build(self):
        self.validate()
        return self._BUILDERS[self.family][0](self.params)
