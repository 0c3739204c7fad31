import io
import json
import sys

import pytest

from lie_sdit.cli import (EXIT_DECIDED, EXIT_ERROR, EXIT_UNDETERMINED,
                          _gen_params, main)
from lie_sdit.exceptions import *
from lie_sdit.families import heisenberg
from lie_sdit.linalg import ScalarField
from lie_sdit.spacefile import parse_space, write_space


def _run(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


class TestCli(object):
    @pytest.fixture
    def generate(self, tmp_path, capsys):
        def _generate(*args):
            path = str(tmp_path / '{0}.json'.format('-'.join(args)))
            assert main(['gen'] + list(args) + ['-o', path]) == EXIT_DECIDED
            capsys.readouterr()
            return path
        return _generate

    def test_gen_to_stdout(self, capsys):
        assert main(['gen', 'lambda', '3']) == EXIT_DECIDED
        space = parse_space(capsys.readouterr().out)
        assert space.dim == 3
        assert space.metadata['family'] == 'lambda'

    def test_pipe_from_stdin(self, capsys, monkeypatch):
        assert main(['gen', 'lambda', '3']) == EXIT_DECIDED
        text = capsys.readouterr().out
        monkeypatch.setattr(sys, 'stdin', io.StringIO(text))
        code, report = _run(capsys, ['sdit'])
        assert code == EXIT_DECIDED
        assert report['verdict'] == 'Singular'

    def test_sdit_singular(self, capsys, generate):
        code, report = _run(capsys, ['sdit', generate('lambda', '3')])
        assert code == EXIT_DECIDED
        assert report['command'] == 'sdit'
        assert report['verdict'] == 'Singular'
        assert report['witness_rank'] is None
        assert 'seconds' in report['timing']

    def test_sdit_nonsingular(self, capsys, generate):
        code, report = _run(capsys, ['sdit', generate('sl-standard', '2')])
        assert report['verdict'] == 'NonSingular'
        assert report['witness_rank'] == 2
        assert report['cartan_dim'] == 1
        assert report['reliable']

    def test_sdit_repeated_points_undetermined(self, capsys, tmp_path):
        path = tmp_path / 'heisenberg-gf2.json'
        with open(str(path), 'w') as f:
            write_space(heisenberg(3, ScalarField(2)), f)
        code, report = _run(capsys, ['sdit', str(path)])
        assert code == EXIT_UNDETERMINED
        assert report['verdict'] == 'Singular'
        assert not report['reliable']

    def test_maxrank(self, capsys, generate):
        code, report = _run(capsys, ['maxrank', generate('lambda', '5')])
        assert report['max_rank'] == 4
        assert report['verdict'] == 'Singular'

    def test_check(self, capsys, generate):
        code, report = _run(capsys, ['check', generate('heisenberg')])
        assert report['verdict'] == 'closed'
        assert report['nilpotent'] is True
        assert report['semisimple'] is False

    def test_cartan(self, capsys, generate):
        code, report = _run(capsys, ['cartan', generate('sl-standard', '3')])
        assert report['verdict'] == 'verified'
        assert report['dim'] == 2
        assert len(report['matrices']) == 2

    def test_weights(self, capsys, generate):
        code, report = _run(capsys, ['weights',
                                     generate('sym-power', '2', '2')])
        assert report['zero_weight'] is True
        assert report['verdict'] == 'Singular'

    def test_linker(self, capsys, generate):
        path = generate('adjoint', 'sl2')
        code, report = _run(capsys, ['linker', path, '--degree', '1',
                                     '--side', 'r'])
        assert code == EXIT_DECIDED
        assert report['verdict'] == 'Singular'
        assert report['verified'] is True
        assert report['cross_identity'] is True
        assert report['homomorphism'] is True

    def test_linker_without_certificate(self, capsys, generate):
        code, report = _run(capsys, ['linker', generate('sl-standard', '2')])
        assert code == EXIT_DECIDED
        assert report['verdict'] == 'none'
        assert report['certificate'] is None

    def test_shrunk(self, capsys, generate):
        code, report = _run(capsys, ['shrunk', generate('middle-trivial')])
        assert code == EXIT_DECIDED
        assert report['verdict'] == 'yes'
        assert report['witness']['deficit'] >= 1
        assert report['chain_dims'] == [0, 1, 2, 3]

    def test_ncrk(self, capsys, generate):
        path = generate('strict-upper')
        code, report = _run(capsys, ['ncrk-bf', path, '--field', 'gf2'])
        assert report['ncrk'] == 1
        assert report['field'] == 'GF(2)'
        assert sum(row['count'] for row in report['histogram']) == 5

    def test_compseries(self, capsys, generate):
        code, report = _run(capsys, ['compseries', generate('middle-trivial')])
        assert code == EXIT_DECIDED
        assert report['trivial_factors'] == [1]

    def test_sample(self, capsys, generate):
        code, report = _run(capsys, ['sample', generate('sl-standard', '2'),
                                     '--samples', '20'])
        assert code == EXIT_DECIDED
        assert report['verdict'] == 'NonSingular'
        assert report['seed'] == 0

    def test_sample_undetermined(self, capsys, generate):
        code, report = _run(capsys, ['sample', generate('lambda', '3'),
                                     '--samples', '20', '--seed', '4'])
        assert code == EXIT_UNDETERMINED
        assert report['max_rank'] == 2

    def test_error_report(self, capsys, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text('{"format_version": "9"}')
        code, report = _run(capsys, ['sdit', str(path)])
        assert code == EXIT_ERROR
        assert report['error']['code'] == 'bad-space-file'

    def test_not_a_lie_algebra(self, capsys, tmp_path):
        path = tmp_path / 'pair.json'
        path.write_text(json.dumps({
            'format_version': '1', 'field': 'Q', 'n': 2,
            'basis': [[['0', '1'], ['0', '0']], [['0', '0'], ['1', '0']]]}))
        code, report = _run(capsys, ['sdit', str(path)])
        assert code == EXIT_ERROR
        assert report['error']['code'] == 'not-closed'

    def test_missing_file(self, capsys, tmp_path):
        code, report = _run(capsys, ['sdit', str(tmp_path / 'absent.json')])
        assert code == EXIT_ERROR
        assert report['error']['code'] == 'error'

    def test_usage_error(self, capsys):
        assert main(['transmogrify']) == EXIT_ERROR
        capsys.readouterr()


class TestGenParams(object):
    def test_positional(self):
        assert _gen_params('sl-monomial', ['3', '1']) == {'n': 3, 'd': 1}
        assert _gen_params('adjoint', ['so3']) == {'algebra': 'so3'}

    def test_keywords(self):
        assert _gen_params('sym-power', ['degree=2', '3']) == {'degree': 2,
                                                               'n': 3}

    def test_too_many(self):
        with pytest.raises(InvalidExampleSpec):
            _gen_params('lambda', ['3', '4'])
