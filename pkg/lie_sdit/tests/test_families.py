import pytest

from lie_sdit.exceptions import *
from lie_sdit.families import (ExampleSpec, adjoint_of, example2_random,
                               heisenberg, lambda_space,
                               random_alternating_family, sl_monomial_rep,
                               sl_standard, sym_power_rep)
from lie_sdit.lie import closure_check, structure_constants
from lie_sdit.linalg import ScalarField


class TestFamilies(object):
    @pytest.mark.parametrize('n', [2, 3, 4, 5])
    def test_lambda_dimension(self, n):
        space = lambda_space(n)
        assert space.dim == n * (n - 1) // 2
        assert space.n == n
        assert closure_check(space) is None

    def test_sl_standard(self):
        assert sl_standard(3).dim == 8
        assert sl_standard(2, ScalarField(3)).field == ScalarField(3)
        with pytest.raises(InvalidExampleSpec):
            sl_standard(1)

    def test_heisenberg(self):
        assert heisenberg().dim == 3
        assert heisenberg(4).dim == 5

    def test_module_sizes(self):
        assert sym_power_rep(2, 3).n == 4
        assert sl_monomial_rep(2, 1).n == 3
        assert sl_monomial_rep(3, 1).n == 10
        assert sl_monomial_rep(3, 1).dim == 8

    def test_degree_one_is_standard(self):
        assert sym_power_rep(3, 1).basis == sl_standard(3).basis

    @pytest.mark.parametrize('degree', [2, 3])
    def test_polynomial_module_is_a_representation(self, degree):
        module = structure_constants(sym_power_rep(2, degree))
        assert module.constants == structure_constants(
            sl_standard(2)).constants

    def test_module_guard(self):
        with pytest.raises(InvalidExampleSpec):
            sym_power_rep(3, 4, guard=10)
        assert sym_power_rep(3, 4, guard=15).n == 15

    def test_adjoint(self):
        assert adjoint_of('sl3').n == 8
        assert adjoint_of('so4').dim == 6
        with pytest.raises(InvalidExampleSpec):
            adjoint_of('sl4')


class TestAlternatingFamily(object):
    def test_seeded(self):
        assert (random_alternating_family(4, seed=2) ==
                random_alternating_family(4, seed=2))
        assert example2_random(4, 2).basis == example2_random(4, 2).basis

    def test_alternating(self):
        for c in random_alternating_family(5, seed=9):
            assert c.transpose() == -c

    def test_metadata(self):
        space = example2_random(4, 6)
        assert space.metadata == {'family': 'example2-random',
                                  'params': {'n': 4, 'seed': 6}}


class TestExampleSpec(object):
    def test_build(self):
        assert ExampleSpec('sl-standard', {'n': 3}).build().dim == 8
        assert ExampleSpec('heisenberg').build().dim == 3
        assert ExampleSpec('adjoint', {'algebra': 'sl2'}).build().n == 3

    def test_families(self):
        families = ExampleSpec.families()
        assert 'lambda' in families
        assert families == sorted(families)

    def test_missing_params(self):
        with pytest.raises(InvalidExampleSpec):
            ExampleSpec('sl-monomial', {'n': 2}).build()

    def test_unknown_family(self):
        with pytest.raises(InvalidExampleSpec):
            ExampleSpec('gl', {'n': 2}).build()

    def test_guard_parameter(self):
        with pytest.raises(InvalidExampleSpec):
            ExampleSpec('sym-power', {'n': 3, 'degree': 3,
                                      'guard': 5}).build()
