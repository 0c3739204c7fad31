import io
import json

import pytest

from lie_sdit.exceptions import *
from lie_sdit.families import lambda_space, sl_standard
from lie_sdit.linalg import QQ_FIELD, Matrix, ScalarField
from lie_sdit.spacefile import (FORMAT_VERSION, format_space, load_space,
                                parse_space, write_space)


def _document(basis, n=2, field='Q', **extra):
    document = {'format_version': FORMAT_VERSION, 'field': field, 'n': n,
                'basis': basis}
    document.update(extra)
    return json.dumps(document)


class TestFormat(object):
    def test_round_trip(self):
        space = lambda_space(3)
        text = format_space(space)
        parsed = parse_space(text)
        assert parsed.basis == space.basis
        assert parsed.field == QQ_FIELD
        assert format_space(parsed) == text

    def test_layout(self):
        text = format_space(sl_standard(2))
        document = json.loads(text)
        assert document['format_version'] == '1'
        assert document['field'] == 'Q'
        assert document['n'] == 2
        assert document['basis'][0] == [['1', '0'], ['0', '-1']]
        assert document['metadata']['name'] == 'sl(2)'
        assert '      ["1", "0"],' in text.splitlines()

    def test_prime_field(self):
        space = sl_standard(2, ScalarField(3))
        parsed = parse_space(format_space(space))
        assert parsed.field == ScalarField(3)
        assert json.loads(format_space(space))['basis'][0][1] == ['0', '2']

    def test_write_and_load(self, tmp_path):
        path = tmp_path / 'lambda.json'
        with open(str(path), 'w') as f:
            write_space(lambda_space(4), f)
        assert load_space(str(path)).dim == 6

    def test_file_object(self):
        stream = io.StringIO(format_space(lambda_space(3)))
        assert parse_space(stream).dim == 3


class TestParseErrors(object):
    def test_non_canonical_fraction(self):
        text = _document([[['2/4', '0'], ['0', '0']]])
        with pytest.raises(SpaceFileError) as excinfo:
            parse_space(text)
        assert excinfo.value.location == 'basis[0][0][0]'
        assert str(excinfo.value).startswith('basis[0][0][0]: ')

    def test_lenient_normalizes(self):
        text = _document([[['2/4', '0'], ['0', '0']]])
        space = parse_space(text, lenient=True)
        assert space.basis[0] == Matrix([['1/2', 0], [0, 0]])
        assert any("'1/2'" in note for note in space.warnings)

    def test_prime_field_residue(self):
        text = _document([[['3', '0'], ['0', '1']]], field='GF(3)')
        with pytest.raises(SpaceFileError):
            parse_space(text)
        space = parse_space(text, lenient=True)
        assert space.basis[0] == Matrix([[0, 0], [0, 1]], ScalarField(3))

    def test_mixed_shapes(self):
        text = _document([[['1', '0'], ['0', '1']],
                          [['1', '0', '0'], ['0', '1', '0'],
                           ['0', '0', '1']]])
        with pytest.raises(SpaceFileError) as excinfo:
            parse_space(text)
        assert excinfo.value.location == 'basis[1]'

    def test_not_square(self):
        with pytest.raises(SpaceFileError):
            parse_space(_document([[['1', '0']]]))

    def test_malformed_json(self):
        with pytest.raises(SpaceFileError) as excinfo:
            parse_space('{"format_version": "1",\n  "field": }')
        assert excinfo.value.location.startswith('line 2')

    def test_version(self):
        text = _document([], format_version='2')
        with pytest.raises(SpaceFileError) as excinfo:
            parse_space(text)
        assert excinfo.value.location == 'format_version'

    def test_bad_field(self):
        with pytest.raises(SpaceFileError) as excinfo:
            parse_space(_document([], field='GF(4)'))
        assert excinfo.value.location == 'field'

    def test_bad_size(self):
        with pytest.raises(SpaceFileError):
            parse_space(_document([], n=0))

    def test_numbers_need_lenient(self):
        text = _document([[[1, 0], [0, -1]]])
        with pytest.raises(SpaceFileError):
            parse_space(text)
        assert parse_space(text, lenient=True).dim == 1

    def test_error_code(self):
        with pytest.raises(LieSditError) as excinfo:
            parse_space('[]')
        assert excinfo.value.code == 'bad-space-file'
