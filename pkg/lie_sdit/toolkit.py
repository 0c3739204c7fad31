import logging
import os

from lie_sdit.analyzer import Analyzer
from lie_sdit.cartan import CartanSolver
from lie_sdit.certificates import DEFAULT_MAX_DEGREE, CertificateFinder
from lie_sdit.exceptions import *
from lie_sdit.families import DEFAULT_MODULE_GUARD, ExampleSpec
from lie_sdit.lie import closure_check, structure_constants
from lie_sdit.linalg import DEFAULT_SUBSPACE_GUARD, ScalarField
from lie_sdit.sdit import SditSolver
from lie_sdit.shrunk import ShrunkAnalyzer

log = logging.getLogger()


def _int_setting(value, name, default):
    if value is None or value == '':
        return default
    try:
        result = int(value)
    except (TypeError, ValueError):
        raise InvalidConfiguration('{0} must be an integer, got '
                                   '{1!r}'.format(name, value))
    if result < 1:
        raise InvalidConfiguration('{0} must be positive'.format(name))
    return result


class LieToolkit(Analyzer):
    """Entry point holding every lie_sdit service.

    Defaults are read from the environment when the module is imported:
    ``LIE_SDIT_OMEGA_SIZE``, ``LIE_SDIT_GUARD_SUBSPACES``,
    ``LIE_SDIT_MAX_DEGREE`` and ``LIE_SDIT_MODULE_GUARD``.

    Parameters
    ----------
    omega_size : int, optional
        Trial values of the Cartan descent; dim + 1 when unset.
    guard_subspaces : int
        Cap on exhaustive subspace enumeration.
    max_degree : int
        Largest kernel-certificate degree.
    module_guard : int
        Largest module dimension of the monomial representations.
    force : bool
        Lift the n and p limits of brute force.
    verbose : bool
    """

    def __init__(self, omega_size=os.getenv('LIE_SDIT_OMEGA_SIZE'),
                 guard_subspaces=os.getenv('LIE_SDIT_GUARD_SUBSPACES'),
                 max_degree=os.getenv('LIE_SDIT_MAX_DEGREE'),
                 module_guard=os.getenv('LIE_SDIT_MODULE_GUARD'),
                 force=False, verbose=False):
        super(LieToolkit, self).__init__(verbose)
        self.omega_size = _int_setting(omega_size, 'omega size', None)
        self.guard_subspaces = _int_setting(guard_subspaces,
                                            'subspace guard',
                                            DEFAULT_SUBSPACE_GUARD)
        self.max_degree = _int_setting(max_degree, 'max degree',
                                       DEFAULT_MAX_DEGREE)
        self.module_guard = _int_setting(module_guard, 'module guard',
                                         DEFAULT_MODULE_GUARD)
        self.force = force

        self._cartan = CartanSolver(omega_size=self.omega_size,
                                    verbose=verbose)
        self._sdit = SditSolver(self._cartan, verbose=verbose)
        self._shrunk = ShrunkAnalyzer(guard=self.guard_subspaces, force=force,
                                      verbose=verbose)
        self._certificates = CertificateFinder(max_degree=self.max_degree,
                                               verbose=verbose)

    @property
    def cartan(self):
        return self._cartan

    @property
    def sdit(self):
        return self._sdit

    @property
    def shrunk(self):
        return self._shrunk

    @property
    def certificates(self):
        return self._certificates

    def lie_structure(self, space):
        """Structure constants, or NotALieAlgebra naming the failing pair."""
        pair = closure_check(space)
        if pair is not None:
            raise NotALieAlgebra('[B_{0}, B_{1}] is not in the span'.format(
                pair[0] + 1, pair[1] + 1), pair=pair)
        return structure_constants(space)

    def cartan_subalgebra(self, space):
        """Cartan subalgebra of a matrix Lie algebra and its matrices."""
        algebra = self.lie_structure(space)
        result = self._cartan.cartan_subalgebra(algebra)
        return result, self._cartan.cartan_as_matrix_space(algebra,
                                                           result.subalgebra)

    def weights(self, space):
        result, cartan_space = self.cartan_subalgebra(space)
        return result, self._sdit.weights(space, cartan_space)

    def ncrk(self, space, field):
        """Brute-force ncrk over ``field``, reducing rational spaces first."""
        if isinstance(field, str):
            field = ScalarField.from_name(field)
        if space.field != field:
            space = space.over(field)
        return self._shrunk.ncrk_bruteforce(space)

    def generate(self, family, params=None):
        params = dict(params or {})
        if family in ('sl-monomial', 'sym-power'):
            params.setdefault('guard', self.module_guard)
        space = ExampleSpec(family, params).build()
        self._print('generated {0} ({1} matrices of size {2})'.format(
            space.name, space.dim, space.n))
        return space
