import pytest

from lie_sdit import LieToolkit
from lie_sdit.certificates import DEFAULT_MAX_DEGREE
from lie_sdit.exceptions import *
from lie_sdit.families import elementary_space, sl_standard, strict_upper_line
from lie_sdit.linalg import DEFAULT_SUBSPACE_GUARD, ScalarField


class TestLieToolkit(object):
    def setup_method(self, method):
        self.toolkit = LieToolkit(omega_size=None, guard_subspaces=None,
                                  max_degree=None, module_guard=None)

    def test_defaults(self):
        assert self.toolkit.omega_size is None
        assert self.toolkit.guard_subspaces == DEFAULT_SUBSPACE_GUARD
        assert self.toolkit.max_degree == DEFAULT_MAX_DEGREE
        assert self.toolkit.certificates.max_degree == DEFAULT_MAX_DEGREE
        assert self.toolkit.sdit.cartan is self.toolkit.cartan

    def test_settings_from_strings(self):
        toolkit = LieToolkit(omega_size='12', guard_subspaces='500',
                             max_degree='2', module_guard='30')
        assert toolkit.omega_size == 12
        assert toolkit.cartan.omega_size == 12
        assert toolkit.shrunk.guard == 500
        assert toolkit.max_degree == 2
        assert toolkit.module_guard == 30

    @pytest.mark.parametrize('kwargs', [{'omega_size': 'many'},
                                        {'max_degree': 0},
                                        {'guard_subspaces': '-3'}])
    def test_invalid_settings(self, kwargs):
        with pytest.raises(InvalidConfiguration):
            LieToolkit(**kwargs)

    def test_lie_structure(self):
        assert self.toolkit.lie_structure(sl_standard(2)).dim == 3
        with pytest.raises(NotALieAlgebra) as excinfo:
            self.toolkit.lie_structure(
                elementary_space(2, [(1, 2), (2, 1)]))
        assert excinfo.value.pair == (0, 1)

    def test_cartan_subalgebra(self):
        result, space = self.toolkit.cartan_subalgebra(sl_standard(3))
        assert result.dim == 2
        assert space.dim == 2
        assert space.n == 3

    def test_weights(self):
        result, weights = self.toolkit.weights(sl_standard(2))
        assert result.dim == 1
        assert not weights.has_zero_weight

    def test_ncrk_reduces_field(self):
        report = self.toolkit.ncrk(strict_upper_line(), 'GF(2)')
        assert report.ncrk == 1
        report = self.toolkit.ncrk(strict_upper_line(), ScalarField(3))
        assert report.field == 'GF(3)'

    def test_generate(self):
        assert self.toolkit.generate('lambda', {'n': 4}).dim == 6
        toolkit = LieToolkit(module_guard=5)
        with pytest.raises(InvalidExampleSpec):
            toolkit.generate('sym-power', {'n': 2, 'degree': 5})
        assert toolkit.generate('sym-power', {'n': 2, 'degree': 3}).n == 4
