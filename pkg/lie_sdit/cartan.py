import logging
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from pandas import DataFrame

from lie_sdit.analyzer import Analyzer
from lie_sdit.exceptions import *
from lie_sdit.lie import (MatrixSpace, ad_matrix, is_nilpotent,
                          is_self_normalizing, is_subalgebra, restricted_ad)
from lie_sdit.linalg import kernel

log = logging.getLogger()


@dataclass
class CartanConfig:
    """Trial values and retry policy of the Cartan descent.

    ``omega`` must hold at least m + 1 distinct values for an algebra of
    dimension m.
    """
    omega: list
    max_rounds: int = 4
    enlarge_factor: int = 2

    @classmethod
    def default(cls, m, size=None, max_rounds=4, enlarge_factor=2):
        size = m + 1 if size is None else int(size)
        return cls(list(range(size)), max_rounds, enlarge_factor)

    def validate(self, m):
        keys = [Fraction(str(v)) for v in self.omega]
        if len(set(keys)) != len(keys):
            raise InvalidConfiguration('omega values must be distinct')
        if len(keys) < m + 1:
            raise InvalidConfiguration(
                'omega has {0} values, an algebra of dimension {1} needs at '
                'least {2}'.format(len(keys), m, m + 1))
        if self.max_rounds < 1:
            raise InvalidConfiguration('max_rounds must be positive')
        if self.enlarge_factor < 2:
            raise InvalidConfiguration('enlarge_factor must be at least 2')


@dataclass
class CartanResult:
    subalgebra: object
    regular_element: tuple
    verified: bool
    descent_trace: list = dataclass_field(default_factory=list)
    omega: list = dataclass_field(default_factory=list)
    rounds: int = 0

    @property
    def dim(self):
        return self.subalgebra.dim

    def trace_frame(self):
        """Descent trace as a DataFrame with one row per visited element."""
        field = self.subalgebra.field
        return DataFrame({
            'step': list(range(len(self.descent_trace))),
            'element': [' '.join(field.format(v) for v in element)
                        for element, _ in self.descent_trace],
            'fitting_dim': [dim for _, dim in self.descent_trace],
        })


class CartanSolver(Analyzer):
    """Cartan subalgebras by Fitting-null-component descent.

    Parameters
    ----------
    omega_size : int, optional
        Number of trial values; defaults to dim + 1 of each algebra.
    max_rounds : int
        Omega enlargements allowed before giving up.
    enlarge_factor : int
    verbose : bool
    """

    def __init__(self, omega_size=None, max_rounds=4, enlarge_factor=2,
                 verbose=False):
        super(CartanSolver, self).__init__(verbose)
        self.omega_size = omega_size
        self.max_rounds = max_rounds
        self.enlarge_factor = enlarge_factor

    def config_for(self, algebra):
        return CartanConfig.default(algebra.dim, self.omega_size,
                                    self.max_rounds, self.enlarge_factor)

    @staticmethod
    def fitting_null(algebra, x):
        """Kernel of a high enough power of ad_x.

        Powers stop early once two consecutive kernels agree, and never go
        beyond dim(L).
        """
        m = algebra.dim
        if m == 0:
            return algebra.whole()
        ad = ad_matrix(algebra, x)
        power = ad
        current = kernel(power)
        for _ in range(m - 1):
            power = power * ad
            following = kernel(power)
            if following.dim == current.dim:
                break
            current = following
        return current

    @staticmethod
    def verify_cartan(algebra, subspace):
        """True iff ``subspace`` is nilpotent and self-normalizing."""
        if not is_subalgebra(algebra, subspace):
            raise NotASubalgebra('subspace is not closed under the bracket')
        return (is_nilpotent(algebra, subspace) and
                is_self_normalizing(algebra, subspace))

    @staticmethod
    def _acts_nilpotently(algebra, y, subspace):
        action = restricted_ad(algebra, y, subspace)
        return action.power(subspace.dim).is_zero()

    @staticmethod
    def _non_nilpotent_element(algebra, subspace):
        basis = list(subspace.basis)
        candidates = list(basis)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                candidates.append(tuple(a + b for a, b in zip(basis[i],
                                                              basis[j])))
                candidates.append(tuple(a - b for a, b in zip(basis[i],
                                                              basis[j])))
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                candidates.append(algebra.bracket(basis[i], basis[j]))
        for y in candidates:
            if not CartanSolver._acts_nilpotently(algebra, y, subspace):
                return y
        return None

    def _scan(self, algebra, x, y, omega, current_dim):
        best = None
        for c in sorted(omega, key=lambda v: Fraction(*algebra.field.key(v))):
            z = tuple(a + c * (b - a) for a, b in zip(x, y))
            dim = self.fitting_null(algebra, z).dim
            if dim < current_dim and (best is None or dim < best[1]):
                best = (z, dim)
        return best

    @staticmethod
    def _enlarge(omega, factor, field):
        keys = set(field.key(v) for v in omega)
        target = len(omega) * factor
        if field.is_finite:
            target = min(target, field.characteristic)
        enlarged = list(omega)
        candidate = 0
        while len(enlarged) < target:
            value = field(candidate)
            if field.key(value) not in keys:
                keys.add(field.key(value))
                enlarged.append(value)
            candidate += 1
        return enlarged

    def cartan_subalgebra(self, algebra, config=None):
        """A verified Cartan subalgebra of ``algebra``.

        Parameters
        ----------
        algebra : LieStructure
        config : CartanConfig, optional

        Returns
        -------
        CartanResult
            The subalgebra as a coefficient subspace, the regular element
            reached, and the trace of (element, dim F0) pairs visited.
        """
        config = config or self.config_for(algebra)
        m = algebra.dim
        config.validate(m)
        field = algebra.field
        self._start_timer()

        if is_nilpotent(algebra):
            x = algebra.basis_vector(0) if m else ()
            self._print('Algebra is nilpotent; it is its own Cartan '
                        'subalgebra.')
            return CartanResult(algebra.whole(), x, True, [(x, m)],
                                [str(v) for v in config.omega], 0)

        omega = [field(v) for v in config.omega]
        candidates = [algebra.basis_vector(i) for i in range(m)]
        candidates.append(tuple(omega[i + 1] for i in range(m)))
        best = None
        for candidate in candidates:
            dim = self.fitting_null(algebra, candidate).dim
            if best is None or dim < best[1]:
                best = (candidate, dim)
        x, dim_x = best
        trace = [best]
        rounds = 0
        while True:
            null_component = self.fitting_null(algebra, x)
            if self.verify_cartan(algebra, null_component):
                self._print('Cartan subalgebra of dimension {0} after {1} '
                            'steps.'.format(null_component.dim, len(trace)))
                self.print_elapsed_seconds('Cartan descent took')
                return CartanResult(null_component, x, True, trace,
                                    [field.format(v) for v in omega], rounds)
            y = self._non_nilpotent_element(algebra, null_component)
            step = None
            if y is not None:
                step = self._scan(algebra, x, y, omega, null_component.dim)
            if step is not None:
                x, dim_x = step
                trace.append(step)
                continue
            rounds += 1
            if rounds >= config.max_rounds:
                raise DescentStalled(
                    'no smaller Fitting null component below dimension {0} '
                    'after {1} rounds'.format(null_component.dim, rounds))
            omega = self._enlarge(omega, config.enlarge_factor, field)
            log.warning('Cartan descent stalled at dimension {0}; omega '
                        'enlarged to {1} values'.format(null_component.dim,
                                                        len(omega)))

    @staticmethod
    def cartan_as_matrix_space(algebra, subspace):
        """The n x n matrices spanning the subalgebra inside the source space."""
        source = algebra.source
        if source is None:
            raise InvalidMatrixSpace('structure constants carry no matrix '
                                     'realisation')
        return MatrixSpace([algebra.element(h) for h in subspace.basis],
                           algebra.field, source.n, name='cartan')

    def algebra_rank(self, algebra, config=None):
        """Dimension of a Cartan subalgebra."""
        return self.cartan_subalgebra(algebra, config).dim

    def is_regular(self, algebra, x, config=None):
        return (self.fitting_null(algebra, x).dim ==
                self.algebra_rank(algebra, config))
