import numpy as np
import pytest

from lie_sdit.exceptions import *
from lie_sdit.families import (adjoint_of, elementary_space, heisenberg,
                               lambda_space, sl_monomial_rep, sl_standard,
                               sym_power_rep)
from lie_sdit.lie import MatrixSpace, is_semisimple, structure_constants
from lie_sdit.linalg import Matrix, ScalarField
from lie_sdit.sdit import NON_SINGULAR, SINGULAR, SditSolver

ALTERNATING_SIZES = [2, 3, 4, 5, 6]


def _semisimple_examples():
    return [sl_standard(2), adjoint_of('sl2'), sl_monomial_rep(2, 1),
            sl_monomial_rep(2, 2), sl_monomial_rep(3, 1), lambda_space(3),
            lambda_space(4)]


def _random_linear_form(rng, k):
    while True:
        coeffs = [int(c) for c in rng.integers(-5, 6, size=k)]
        if any(coeffs):
            return coeffs


class TestHittingSet(object):
    def test_points(self):
        hits = SditSolver.hitting_set(2, 3)
        assert hits.alphas == [0, 1, 2, 3]
        assert hits.points == [(1, 0), (1, 1), (1, 2), (1, 3)]
        assert len(SditSolver.hitting_set(3, 4)) == 9
        assert SditSolver.hitting_set(1, 5).points == [(1,)]

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            SditSolver.hitting_set(0, 2)
        with pytest.raises(ValueError):
            SditSolver.hitting_set(2, 0)

    def test_products_of_linear_forms_are_hit(self):
        rng = np.random.default_rng(2024)
        hit = 0
        for _ in range(100):
            k = int(rng.integers(1, 6))
            n = int(rng.integers(1, 6))
            count = int(rng.integers(1, n + 1))
            forms = [_random_linear_form(rng, k) for _ in range(count)]
            points = SditSolver.hitting_set(k, n).points
            for point in points:
                value = 1
                for form in forms:
                    value *= sum(c * p for c, p in zip(form, point))
                if value:
                    hit += 1
                    break
        assert hit == 100


class TestSditDecide(object):
    def setup_method(self, method):
        self.solver = SditSolver()

    @pytest.mark.parametrize('n', ALTERNATING_SIZES)
    def test_alternating_parity(self, n):
        verdict = self.solver.sdit_decide(lambda_space(n))
        expected = SINGULAR if n % 2 else NON_SINGULAR
        assert verdict.verdict == expected

    def test_sl2_standard(self):
        verdict = self.solver.sdit_decide(sl_standard(2))
        assert verdict.verdict == NON_SINGULAR
        assert verdict.witness['rank'] == 2
        assert verdict.witness['point'] == (1,)
        assert verdict.cartan.dim == 1

    def test_witness_is_in_space_and_full_rank(self):
        space = lambda_space(4)
        verdict = self.solver.sdit_decide(space)
        matrix = verdict.witness['matrix']
        assert matrix in space
        assert not verdict.is_singular
        assert verdict.max_rank_over_hits == 4

    def test_adjoint_sl2_is_singular(self):
        verdict = self.solver.sdit_decide(adjoint_of('sl2'))
        assert verdict.is_singular
        assert verdict.witness is None
        assert verdict.max_rank_over_hits == 2
        assert list(verdict.evaluations.columns) == ['alpha', 'point', 'rank']
        assert len(verdict.evaluations) == 1

    def test_odd_sl2_module_is_nonsingular(self):
        verdict = self.solver.sdit_decide(sym_power_rep(2, 3))
        assert verdict.verdict == NON_SINGULAR
        assert verdict.witness['rank'] == 4

    def test_nilpotent_algebra(self):
        verdict = self.solver.sdit_decide(heisenberg())
        assert verdict.is_singular
        assert verdict.reliable

    def test_repeated_points_flag_singular_verdict(self, caplog):
        verdict = self.solver.sdit_decide(heisenberg(3, ScalarField(2)))
        assert verdict.is_singular
        assert verdict.cartan.dim == 3
        assert not verdict.reliable
        assert any('not certain' in r.getMessage() for r in caplog.records)

    def test_large_enough_prime_is_reliable(self, caplog):
        verdict = self.solver.sdit_decide(heisenberg(3, ScalarField(7)))
        assert verdict.is_singular
        assert verdict.reliable
        assert not any('not certain' in r.getMessage()
                       for r in caplog.records)

    def test_witness_is_reliable_despite_repeats(self):
        space = elementary_space(2, [(1, 1), (2, 2)], ScalarField(2))
        verdict = self.solver.sdit_decide(space)
        assert verdict.verdict == NON_SINGULAR
        assert verdict.reliable
        assert verdict.witness['rank'] == 2

    def test_points_collide(self):
        assert self.solver.points_collide(ScalarField(5), 3, 3)
        assert not self.solver.points_collide(ScalarField(7), 3, 3)
        assert not self.solver.points_collide(ScalarField(2), 1, 4)

    def test_not_a_lie_algebra(self):
        space = MatrixSpace([Matrix.unit(2, 0, 1), Matrix.unit(2, 1, 0)])
        with pytest.raises(NotALieAlgebra):
            self.solver.sdit_decide(space)

    def test_agrees_with_weights(self):
        for space in _semisimple_examples():
            assert is_semisimple(structure_constants(space))
            verdict = self.solver.sdit_decide(space)
            try:
                weights = self.solver.weights(space, verdict.cartan_space)
            except UnsupportedSpectrum:
                # compact forms have imaginary weights over Q
                continue
            assert (self.solver.singular_via_weights(weights) ==
                    verdict.verdict), space.name

    def test_agrees_with_symbolic_determinant(self):
        for n in [2, 3, 4, 5]:
            space = lambda_space(n)
            assert (self.solver.sdit_decide(space).verdict ==
                    self.solver.sdit_bruteforce(space))


class TestMaxRank(object):
    def setup_method(self, method):
        self.solver = SditSolver()

    def test_semisimple_max_rank(self):
        assert self.solver.semisimple_max_rank(adjoint_of('sl2')) == 2
        assert self.solver.semisimple_max_rank(lambda_space(5)) == 4
        assert self.solver.semisimple_max_rank(sl_standard(3)) == 3

    def test_refused_for_non_semisimple(self):
        with pytest.raises(NotSemisimple):
            self.solver.semisimple_max_rank(heisenberg())

    def test_hits_match_random_samples(self):
        for space in _semisimple_examples():
            verdict = self.solver.sdit_decide(space)
            if verdict.witness is not None:
                hits_rank = space.n
            else:
                hits_rank = verdict.max_rank_over_hits
            sampled = self.solver.sampled_rank(space, samples=500, seed=7)
            assert hits_rank == sampled, space.name

    def test_sampled_rank_is_seeded(self):
        space = sl_monomial_rep(2, 1)
        assert (self.solver.sampled_rank(space, samples=20, seed=3) ==
                self.solver.sampled_rank(space, samples=20, seed=3))


class TestWeights(object):
    def setup_method(self, method):
        self.solver = SditSolver()

    def _cartan(self, space):
        return self.solver.sdit_decide(space).cartan_space

    def test_sl2_standard(self):
        space = sl_standard(2)
        weights = self.solver.weights(space, self._cartan(space))
        assert [tuple(int(v) for v in w.value) for w in weights.weights] == [
            (-1,), (1,)]
        assert not weights.has_zero_weight
        assert self.solver.singular_via_weights(weights) == NON_SINGULAR

    def test_even_module_has_zero_weight(self):
        space = sym_power_rep(2, 2)
        weights = self.solver.weights(space, self._cartan(space))
        assert [w.multiplicity for w in weights.weights] == [1, 1, 1]
        assert weights.has_zero_weight
        frame = weights.to_frame()
        assert list(frame.columns) == ['weight', 'multiplicity']
        assert frame['multiplicity'].sum() == 3

    def test_sl3_adjoint_zero_weight_multiplicity(self):
        space = adjoint_of('sl3')
        weights = self.solver.weights(space, self._cartan(space))
        zero = [w for w in weights.weights if w.is_zero]
        assert len(zero) == 1
        assert zero[0].multiplicity == 2
        assert sum(w.multiplicity for w in weights.weights) == 8

    def test_imaginary_spectrum(self):
        space = lambda_space(3)
        with pytest.raises(UnsupportedSpectrum):
            self.solver.weights(space, self._cartan(space))

    def test_non_commuting(self):
        space = sl_standard(2)
        with pytest.raises(NonCommutingCartan):
            self.solver.weights(space, space)

    def test_cartan_outside_space(self):
        space = sl_standard(2)
        outside = MatrixSpace([Matrix.identity(2)])
        with pytest.raises(InvalidMatrixSpace):
            self.solver.weights(space, outside)


class TestBruteForce(object):
    def test_symbolic_determinant(self):
        solver = SditSolver()
        assert solver.symbolic_determinant(lambda_space(3)) == 0
        assert solver.symbolic_determinant(sl_standard(2)) != 0
        assert solver.sdit_bruteforce(sl_standard(2)) == NON_SINGULAR

    def test_non_lie_space(self):
        space = MatrixSpace([Matrix.unit(2, 0, 1), Matrix.unit(2, 1, 0)])
        assert SditSolver().sdit_bruteforce(space) == NON_SINGULAR
