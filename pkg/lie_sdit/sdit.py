import logging
from dataclasses import dataclass, field as dataclass_field

import numpy as np
from pandas import DataFrame
from sympy import Matrix as SymbolicMatrix, symbols

from lie_sdit.analyzer import Analyzer
from lie_sdit.cartan import CartanSolver
from lie_sdit.exceptions import *
from lie_sdit.lie import closure_check, is_semisimple, structure_constants
from lie_sdit.linalg import (Matrix, Subspace, char_poly, kernel, rank,
                             rational_roots)

log = logging.getLogger()

SINGULAR = 'Singular'
NON_SINGULAR = 'NonSingular'


@dataclass
class HittingSet:
    """Points (1, a, ..., a^(k-1)) for a in {0, ..., (k-1)n}."""
    k: int
    n: int
    alphas: list
    points: list

    def __len__(self):
        return len(self.points)


@dataclass
class SditVerdict:
    verdict: str
    witness: dict
    cartan: object
    cartan_space: object
    max_rank_over_hits: int
    evaluations: DataFrame = None
    reliable: bool = True

    @property
    def is_singular(self):
        return self.verdict == SINGULAR


@dataclass
class Weight:
    value: tuple
    multiplicity: int
    space: Subspace

    @property
    def is_zero(self):
        return not any(self.value)


@dataclass
class WeightDecomposition:
    weights: list = dataclass_field(default_factory=list)
    field: object = None

    @property
    def has_zero_weight(self):
        return any(w.is_zero for w in self.weights)

    def to_frame(self):
        return DataFrame({
            'weight': [tuple(self.field.format(v) for v in w.value)
                       for w in self.weights],
            'multiplicity': [w.multiplicity for w in self.weights],
        })


class SditSolver(Analyzer):
    """Singularity of matrix Lie algebras through Cartan hitting sets.

    Parameters
    ----------
    cartan : CartanSolver, optional
    verbose : bool
    """

    def __init__(self, cartan=None, verbose=False):
        super(SditSolver, self).__init__(verbose)
        self.cartan = cartan or CartanSolver(verbose=verbose)

    @staticmethod
    def hitting_set(k, n):
        """Hitting set for nonzero products of at most n linear forms in k
        variables.

        Parameters
        ----------
        k : int
            Number of variables, at least 1.
        n : int
            Degree bound, at least 1.

        Returns
        -------
        HittingSet
            (k - 1) * n + 1 Vandermonde points.
        """
        if k < 1 or n < 1:
            raise ValueError('hitting sets need k >= 1 and n >= 1, got k={0}, '
                             'n={1}'.format(k, n))
        alphas = list(range((k - 1) * n + 1))
        points = [tuple(alpha ** i for i in range(k)) for alpha in alphas]
        return HittingSet(k, n, alphas, points)

    @staticmethod
    def points_collide(field, k, n):
        """True when {0, ..., (k-1)n} has repeated values in ``field``."""
        return field.is_finite and field.characteristic <= (k - 1) * n

    def _cartan_of(self, space, config):
        pair = closure_check(space)
        if pair is not None:
            raise NotALieAlgebra('[B_{0}, B_{1}] is not in the span; the '
                                 'hitting-set method needs a Lie '
                                 'algebra'.format(pair[0] + 1, pair[1] + 1),
                                 pair=pair)
        algebra = structure_constants(space)
        result = self.cartan.cartan_subalgebra(algebra, config)
        return algebra, result, self.cartan.cartan_as_matrix_space(
            algebra, result.subalgebra)

    def _evaluate(self, cartan_space, stop_at_full=True):
        n = cartan_space.n
        field = cartan_space.field
        if cartan_space.dim == 0:
            zero_rank = rank(Matrix.zeros(n, n, field))
            return [], zero_rank, None
        hits = self.hitting_set(cartan_space.dim, n)
        records = []
        best = 0
        witness = None
        for alpha, point in zip(hits.alphas, hits.points):
            combination = cartan_space.combination(point)
            value = rank(combination)
            records.append({'alpha': alpha, 'point': point, 'rank': value})
            best = max(best, value)
            if value == n and witness is None:
                witness = {'point': point, 'rank': value,
                           'matrix': combination}
                if stop_at_full:
                    break
        return records, best, witness

    def sdit_decide(self, space, config=None):
        """Decide whether every matrix of a matrix Lie algebra is singular.

        A Cartan subalgebra is computed, then every hitting-set combination
        of its basis is ranked; full rank anywhere means NonSingular.

        Parameters
        ----------
        space : MatrixSpace
            Must be closed under the commutator.
        config : CartanConfig, optional

        Returns
        -------
        SditVerdict
            ``reliable`` is False for a Singular verdict over GF(p) when
            p <= (k - 1) * n, since the hitting points then repeat.
        """
        self._start_timer()
        _, result, cartan_space = self._cartan_of(space, config)
        records, best, witness = self._evaluate(cartan_space)
        verdict = NON_SINGULAR if witness is not None else SINGULAR
        reliable = witness is not None or not self.points_collide(
            cartan_space.field, cartan_space.dim, space.n)
        if not reliable:
            log.warning('{0}: hitting points repeat over {1} for Cartan '
                        'dimension {2} and n={3}; the Singular verdict is '
                        'not certain'.format(space.name, space.field.name,
                                             cartan_space.dim, space.n))
        self._print('{0}: {1} (Cartan dimension {2}, {3} points '
                    'evaluated)'.format(space.name, verdict, result.dim,
                                        len(records)))
        self.print_elapsed_seconds('SDIT took')
        return SditVerdict(verdict, witness, result, cartan_space, best,
                           DataFrame(records, columns=['alpha', 'point',
                                                       'rank']),
                           reliable)

    def semisimple_max_rank(self, space, config=None):
        """Maximum rank over a semisimple matrix Lie algebra."""
        pair = closure_check(space)
        if pair is not None:
            raise NotALieAlgebra('space is not closed under the commutator',
                                 pair=pair)
        if not is_semisimple(structure_constants(space)):
            raise NotSemisimple('maximum rank is only computed for '
                                'semisimple algebras')
        _, _, cartan_space = self._cartan_of(space, config)
        return self._evaluate(cartan_space, stop_at_full=True)[1]

    @staticmethod
    def weights(space, cartan_basis):
        """Simultaneous generalized eigenspaces of commuting Cartan matrices.

        Parameters
        ----------
        space : MatrixSpace
            The representation; every Cartan matrix must lie in it.
        cartan_basis : MatrixSpace

        Returns
        -------
        WeightDecomposition
            One entry per weight, its value on each Cartan basis matrix.
        """
        field = space.field
        n = space.n
        matrices = list(cartan_basis.basis)
        for matrix in matrices:
            if matrix not in space:
                raise InvalidMatrixSpace('Cartan matrix outside the space')
        for i, a in enumerate(matrices):
            for b in matrices[i + 1:]:
                if not a.bracket(b).is_zero():
                    raise NonCommutingCartan('Cartan basis matrices do not '
                                             'commute')
        pieces = [((), Subspace.full(n, field))]
        identity = Matrix.identity(n, field)
        for matrix in matrices:
            roots = rational_roots(char_poly(matrix), field)
            split = []
            for value, piece in pieces:
                for root, _ in roots:
                    shifted = (matrix - identity.scale(root)).power(n)
                    eigenspace = piece & kernel(shifted)
                    if eigenspace.dim:
                        split.append((value + (root,), eigenspace))
            pieces = split
        weights = [Weight(value, piece.dim, piece) for value, piece in pieces]
        return WeightDecomposition(weights, field)

    @staticmethod
    def singular_via_weights(decomposition):
        if decomposition.has_zero_weight:
            return SINGULAR
        return NON_SINGULAR

    def sampled_rank(self, space, samples=500, seed=0, bound=5):
        """Maximum rank over seeded random rational points of the space.

        Coordinates are p/q with |p| <= bound and 1 <= q <= bound. Sampling
        can confirm NonSingular but never Singular.
        """
        rng = np.random.default_rng(seed)
        field = space.field
        best = 0
        for _ in range(samples):
            numerators = rng.integers(-bound, bound + 1, size=space.dim)
            denominators = rng.integers(1, bound + 1, size=space.dim)
            point = [field.ratio(int(p), int(q))
                     for p, q in zip(numerators, denominators)]
            best = max(best, rank(space.combination(point)))
            if best == space.n:
                break
        return best

    @staticmethod
    def symbolic_determinant(space):
        """det(sum x_i B_i) as an expanded sympy expression."""
        field = space.field
        if not field.is_rational:
            raise UnsupportedField('symbolic determinants are taken over Q')
        xs = symbols('x1:{0}'.format(space.dim + 1))
        entries = [[0] * space.n for _ in range(space.n)]
        for x, matrix in zip(xs, space.basis):
            for i in range(space.n):
                for j in range(space.n):
                    value = matrix[i, j]
                    if value:
                        entries[i][j] += field.to_sympy(value) * x
        return SymbolicMatrix(entries).det(method='berkowitz').expand()

    def sdit_bruteforce(self, space):
        """Singular iff the symbolic determinant is the zero polynomial."""
        if self.symbolic_determinant(space) == 0:
            return SINGULAR
        return NON_SINGULAR
