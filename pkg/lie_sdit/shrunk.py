"""
Shrunk subspaces: deficits, brute-force non-commutative rank over small
prime fields, block-triangular reductions and composition series.
"""
import logging
from dataclasses import dataclass, field as dataclass_field

from pandas import DataFrame

from lie_sdit.analyzer import Analyzer
from lie_sdit.exceptions import *
from lie_sdit.lie import (MatrixSpace, associative_envelope, closure_check,
                          common_kernel, image_space)
from lie_sdit.linalg import (DEFAULT_SUBSPACE_GUARD, EchelonBasis, Matrix,
                             SpanSolver, Subspace, char_poly, count_subspaces,
                             enumerate_subspaces, kernel, rational_roots,
                             stack)

log = logging.getLogger()

YES = 'yes'
NO = 'no'
UNDETERMINED = 'undetermined'


@dataclass
class DeficitReport:
    subspace: Subspace
    image: Subspace
    deficit: int

    @property
    def is_shrunk(self):
        return self.deficit > 0


@dataclass
class NcrkReport:
    field: str
    n: int
    ncrk: int
    max_deficit: int
    canonical_lower: Subspace
    canonical_upper: Subspace
    all_max_deficit_count: int
    lower_attains: bool = True
    upper_attains: bool = True
    maximizers: list = dataclass_field(default_factory=list)
    histogram: DataFrame = None


@dataclass
class CompositionFactor:
    block: MatrixSpace
    dimension: int
    trivial: bool
    absolutely_irreducible: object


@dataclass
class CompositionSeries:
    chain: list
    factors: list

    @property
    def is_complete(self):
        return all(f.absolutely_irreducible is not None for f in self.factors)

    @property
    def trivial_indices(self):
        return [i for i, f in enumerate(self.factors) if f.trivial]


@dataclass
class ShrunkDecision:
    answer: str
    factor_index: int = None
    series: CompositionSeries = None


def _adapted_complement(lower, upper):
    """Basis vectors of ``upper`` completing a basis of ``lower``."""
    echelon = EchelonBasis(upper.ambient_dim, upper.field, lower.basis)
    return [v for v in upper.basis if echelon.add(v)]


def _quotient_action(space, lower, upper):
    """Induced action on upper / lower as a block MatrixSpace and the
    complement vectors used as its basis."""
    complement = _adapted_complement(lower, upper)
    k = len(complement)
    solver = SpanSolver(list(lower.basis) + complement, space.n, space.field)
    offset = lower.dim
    blocks = []
    for matrix in space.basis:
        columns = []
        for vector in complement:
            coordinates = solver.coordinates(matrix.apply(vector))
            if coordinates is None:
                raise ChainNotInvariant('the flag is not invariant under '
                                        'the space')
            columns.append(coordinates[offset:])
        blocks.append(Matrix.from_columns(columns, k, space.field))
    return MatrixSpace(blocks, space.field, k, name='block',
                       quiet=True), complement


class ShrunkAnalyzer(Analyzer):
    """Shrunk-subspace analysis of matrix spaces.

    Parameters
    ----------
    guard : int
        Maximal number of subspaces an exhaustive search may visit.
    max_n, max_p : int
        Default limits of the brute-force oracle.
    force : bool
        Ignore ``max_n`` and ``max_p`` (``guard`` still applies).
    verbose : bool
    """

    def __init__(self, guard=DEFAULT_SUBSPACE_GUARD, max_n=5, max_p=3,
                 force=False, verbose=False):
        super(ShrunkAnalyzer, self).__init__(verbose)
        self.guard = guard
        self.max_n = max_n
        self.max_p = max_p
        self.force = force

    @staticmethod
    def shrink_deficit(space, subspace):
        """dim U - dim B(U)."""
        if subspace.ambient_dim != space.n:
            raise AmbientMismatch('subspace of F^{0} for {1}x{1} '
                                  'matrices'.format(subspace.ambient_dim,
                                                    space.n))
        image = image_space(space, subspace)
        return DeficitReport(subspace, image, subspace.dim - image.dim)

    @staticmethod
    def supermodularity_check(space, first, second):
        """sd(U1 & U2) + sd(U1 + U2) >= sd(U1) + sd(U2)."""
        deficit = lambda u: ShrunkAnalyzer.shrink_deficit(space, u).deficit
        return (deficit(first & second) + deficit(first + second) >=
                deficit(first) + deficit(second))

    def _check_brute_force(self, space):
        field = space.field
        if not field.is_finite:
            raise UnsupportedField('brute force runs over GF(p); reduce the '
                                   'space first')
        if not self.force and (space.n > self.max_n or
                               field.characteristic > self.max_p):
            raise SubspaceGuardExceeded(
                'brute force is limited to n <= {0}, p <= {1} (got n={2}, '
                'p={3}); pass force to override'.format(
                    self.max_n, self.max_p, space.n, field.characteristic))
        total = count_subspaces(space.n, field.characteristic)
        if total > self.guard:
            raise SubspaceGuardExceeded(
                '{0} subspaces exceed the guard {1}'.format(total,
                                                            self.guard))

    def ncrk_bruteforce(self, space):
        """Non-commutative rank by exhaustive subspace enumeration.

        Parameters
        ----------
        space : MatrixSpace
            Over GF(p).

        Returns
        -------
        NcrkReport
            Includes the intersection (canonical_lower) and the sum
            (canonical_upper) of every subspace of maximal deficit.
        """
        self._check_brute_force(space)
        self._start_timer()
        field = space.field
        n = space.n
        best = None
        maximizers = []
        records = []
        for subspace in enumerate_subspaces(n, field, self.guard):
            deficit = self.shrink_deficit(space, subspace).deficit
            records.append((subspace.dim, deficit))
            if best is None or deficit > best:
                best = deficit
                maximizers = [subspace]
            elif deficit == best:
                maximizers.append(subspace)

        lower = maximizers[0]
        upper = maximizers[0]
        for subspace in maximizers[1:]:
            lower = lower & subspace
            upper = upper + subspace
        lower_attains = self.shrink_deficit(space, lower).deficit == best
        upper_attains = self.shrink_deficit(space, upper).deficit == best
        if not (lower_attains and upper_attains):
            log.error('canonical max-deficit subspaces do not attain the '
                      'maximal deficit {0}'.format(best))
        histogram = (DataFrame(records, columns=['dim', 'deficit'])
                     .groupby(['dim', 'deficit']).size()
                     .reset_index(name='count'))
        self._print('ncrk over {0}: {1} ({2} subspaces)'.format(
            field.name, n - best, len(records)))
        self.print_elapsed_seconds('Brute force took')
        return NcrkReport(field.name, n, n - best, best, lower, upper,
                          len(maximizers), lower_attains, upper_attains,
                          maximizers, histogram)

    @staticmethod
    def _complete_chain(space, chain):
        chain = list(chain)
        zero = Subspace.zero(space.n, space.field)
        full = Subspace.full(space.n, space.field)
        if not chain or chain[0] != zero:
            chain.insert(0, zero)
        if chain[-1] != full:
            chain.append(full)
        for lower, upper in zip(chain, chain[1:]):
            if not upper.contains(lower) or upper.dim == lower.dim:
                raise ChainNotInvariant('the flag is not strictly '
                                        'increasing')
        for subspace in chain:
            if not subspace.is_invariant(space.basis):
                raise ChainNotInvariant('subspace of dimension {0} is not '
                                        'invariant'.format(subspace.dim))
        return chain

    @staticmethod
    def diagonal_blocks(space, chain):
        """Induced block spaces on the successive quotients of a flag.

        The flag is completed with 0 and F^n when they are missing.
        """
        chain = ShrunkAnalyzer._complete_chain(space, chain)
        return [_quotient_action(space, lower, upper)[0]
                for lower, upper in zip(chain, chain[1:])]

    @staticmethod
    def assemble_block_triangular(blocks, upper=True):
        """Block upper-triangular space with the given diagonal blocks.

        With ``upper`` every elementary matrix strictly above the diagonal
        blocks is added to the basis.
        """
        field = blocks[0].field
        sizes = [b.n for b in blocks]
        n = sum(sizes)
        offsets = [sum(sizes[:i]) for i in range(len(sizes))]
        basis = []
        for block, offset in zip(blocks, offsets):
            for matrix in block.basis:
                embedded = [[field.zero] * n for _ in range(n)]
                for i in range(block.n):
                    for j in range(block.n):
                        embedded[offset + i][offset + j] = matrix[i, j]
                basis.append(Matrix(embedded, field, (n, n)))
        if upper:
            for index, offset in enumerate(offsets):
                end = offset + sizes[index]
                for i in range(offset, end):
                    for j in range(end, n):
                        basis.append(Matrix.unit(n, i, j, field))
        return MatrixSpace(basis, field, n, name='block-triangular')

    def blockd_shrunk_check(self, blocks):
        """True iff some diagonal block has a shrunk subspace."""
        return any(self.ncrk_bruteforce(block).max_deficit > 0
                   for block in blocks)

    @staticmethod
    def _eigenvectors(matrix):
        vectors = []
        n = matrix.nrows
        identity = Matrix.identity(n, matrix.field)
        roots = rational_roots(char_poly(matrix), matrix.field, strict=False)
        for root, _ in roots:
            vectors.extend(kernel(matrix - identity.scale(root)).basis)
        return vectors

    @staticmethod
    def _spin_candidates(block):
        k = block.n
        field = block.field
        for i in range(k):
            yield Subspace.coordinate(k, [i], field).basis[0]
        for matrix in block.basis:
            for vector in ShrunkAnalyzer._eigenvectors(matrix):
                yield vector
        generators = list(block.basis)
        for i in range(len(generators)):
            for j in range(i, len(generators)):
                pair = stack([generators[i], generators[j]], k, field)
                for vector in kernel(pair).basis:
                    yield vector

    @staticmethod
    def spin(block, vector):
        """Smallest subspace containing ``vector`` invariant under the block."""
        echelon = EchelonBasis(block.n, block.field, [vector])
        frontier = [tuple(vector)]
        while frontier:
            following = []
            for u in frontier:
                for matrix in block.basis:
                    image = matrix.apply(u)
                    if echelon.add(image):
                        following.append(image)
            frontier = following
        return echelon.subspace()

    def _invariant_subspace(self, block):
        """A proper nonzero invariant subspace of the block, or None."""
        k = block.n
        if k <= 1:
            return None
        if not block.dim:
            return Subspace.coordinate(k, [0], block.field)
        full = Subspace.full(k, block.field)
        for candidate in (common_kernel(block), image_space(block, full)):
            if 0 < candidate.dim < k:
                return candidate
        for vector in self._spin_candidates(block):
            spun = self.spin(block, vector)
            if spun.dim < k:
                return spun
        return None

    def composition_series(self, space):
        """An invariant flag whose factors resist further splitting.

        Splits use the common kernel, the co-image B(F^n), and invariant
        closures of candidate vectors. Factors that do not split are
        certified absolutely irreducible when their unital envelope is the
        full matrix algebra, and left undetermined (None) otherwise.
        """
        pair = closure_check(space)
        if pair is not None:
            raise NotALieAlgebra('space is not closed under the commutator',
                                 pair=pair)
        self._start_timer()
        field = space.field
        chain = [Subspace.zero(space.n, field), Subspace.full(space.n, field)]
        index = 1
        while index < len(chain):
            lower, upper = chain[index - 1], chain[index]
            block, complement = _quotient_action(space, lower, upper)
            found = self._invariant_subspace(block)
            if found is None:
                index += 1
                continue
            lifted = []
            for coordinates in found.basis:
                vector = [field.zero] * space.n
                for c, w in zip(coordinates, complement):
                    if c:
                        vector = [a + c * b for a, b in zip(vector, w)]
                lifted.append(vector)
            middle = lower + Subspace(lifted, space.n, field)
            chain.insert(index, middle)

        factors = []
        for lower, upper in zip(chain, chain[1:]):
            block = _quotient_action(space, lower, upper)[0]
            k = block.n
            trivial = k == 1 and block.dim == 0
            if k == 1:
                certified = True
            elif associative_envelope(block, unital=True).dim == k * k:
                certified = True
            else:
                certified = None
            factors.append(CompositionFactor(block, k, trivial, certified))
        self._print('composition series with factor dimensions {0}'.format(
            [f.dimension for f in factors]))
        self.print_elapsed_seconds('Composition series took')
        return CompositionSeries(chain, factors)

    def has_shrunk_subspace(self, space):
        """Shrunk-subspace existence through trivial composition factors.

        Returns
        -------
        ShrunkDecision
            ``yes`` with the first trivial factor, ``no`` when every factor is
            certified and nontrivial, ``undetermined`` otherwise.
        """
        if space.field.is_finite:
            log.warning('the composition-factor criterion is stated in '
                        'characteristic 0; answers over {0} are '
                        'heuristic'.format(space.field.name))
        series = self.composition_series(space)
        trivial = series.trivial_indices
        if trivial:
            return ShrunkDecision(YES, trivial[0], series)
        if series.is_complete:
            return ShrunkDecision(NO, None, series)
        return ShrunkDecision(UNDETERMINED, None, series)
