"""
JSON interchange format for matrix spaces.

    {
      "format_version": "1",
      "field": "Q",
      "n": 2,
      "basis": [
        [
          ["1", "0"],
          ["0", "-1"]
        ]
      ],
      "metadata": {"name": "..."}
    }

Entries are strings "a" or "a/b" in lowest terms with a positive
denominator (residues in [0, p) over GF(p)).
"""
import io
import json
import logging
import sys

from lie_sdit.exceptions import *
from lie_sdit.lie import MatrixSpace
from lie_sdit.linalg import Matrix, ScalarField

log = logging.getLogger()

FORMAT_VERSION = '1'


def _read(source):
    if hasattr(source, 'read'):
        return source.read()
    return source


def parse_space(source, lenient=False):
    """Parse a space file.

    Parameters
    ----------
    source : str or file-like
        JSON text or an open file.
    lenient : bool
        Normalize non-canonical entries (with a warning) instead of
        rejecting them.

    Returns
    -------
    MatrixSpace
    """
    text = _read(source)
    try:
        document = json.loads(text)
    except json.JSONDecodeError as ex:
        raise SpaceFileError('malformed JSON: {0}'.format(ex.msg),
                             'line {0} column {1}'.format(ex.lineno,
                                                          ex.colno))
    if not isinstance(document, dict):
        raise SpaceFileError('top level must be an object', 'document')
    version = document.get('format_version')
    if version != FORMAT_VERSION:
        raise SpaceFileError("unsupported version {0!r}, expected "
                             "'{1}'".format(version, FORMAT_VERSION),
                             'format_version')
    try:
        field = ScalarField.from_name(document.get('field'))
    except InvalidField as ex:
        raise SpaceFileError(str(ex), 'field')
    n = document.get('n')
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SpaceFileError('n must be a positive integer', 'n')
    basis = document.get('basis')
    if not isinstance(basis, list):
        raise SpaceFileError('basis must be a list of matrices', 'basis')
    metadata = document.get('metadata', {})
    if not isinstance(metadata, dict):
        raise SpaceFileError('metadata must be an object', 'metadata')

    notes = []
    matrices = []
    for index, rows in enumerate(basis):
        location = 'basis[{0}]'.format(index)
        if not isinstance(rows, list) or not all(isinstance(r, list)
                                                 for r in rows):
            raise SpaceFileError('matrix must be a list of rows', location)
        widths = set(len(r) for r in rows)
        if len(widths) > 1:
            raise SpaceFileError('rows have different lengths', location)
        width = widths.pop() if widths else 0
        if len(rows) != width:
            raise SpaceFileError('matrix is {0}x{1}, not square'.format(
                len(rows), width), location)
        if width != n:
            raise SpaceFileError('mixed shapes: {0}x{0} matrix in a file '
                                 'with n={1}'.format(width, n), location)
        entries = []
        for i, row in enumerate(rows):
            values = []
            for j, entry in enumerate(row):
                where = '{0}[{1}][{2}]'.format(location, i, j)
                if not isinstance(entry, str):
                    if not (lenient and isinstance(entry, int)):
                        raise SpaceFileError('entries must be strings', where)
                    entry = str(entry)
                try:
                    value, normalized = field.parse(entry, lenient)
                except ValueError as ex:
                    raise SpaceFileError(str(ex), where)
                if normalized is not None:
                    notes.append("{0}: '{1}' normalized to '{2}'".format(
                        where, entry, normalized))
                values.append(value)
            entries.append(values)
        matrices.append(Matrix(entries, field, (n, n)))

    for note in notes:
        log.warning(note)
    space = MatrixSpace(matrices, field, n, name=metadata.get('name'),
                        metadata=metadata)
    space.warnings = notes + space.warnings
    return space


def format_space(space):
    """Canonical text of a space file."""
    lines = ['{',
             '  "format_version": {0},'.format(json.dumps(FORMAT_VERSION)),
             '  "field": {0},'.format(json.dumps(space.field.name)),
             '  "n": {0},'.format(space.n)]
    metadata = dict(space.metadata)
    if space.name is not None:
        metadata.setdefault('name', space.name)
    if not space.basis:
        lines.append('  "basis": []' + (',' if metadata else ''))
    else:
        lines.append('  "basis": [')
        for index, matrix in enumerate(space.basis):
            rows = matrix.to_strings()
            lines.append('    [')
            for r, row in enumerate(rows):
                comma = ',' if r + 1 < len(rows) else ''
                lines.append('      {0}{1}'.format(json.dumps(row), comma))
            comma = ',' if index + 1 < len(space.basis) else ''
            lines.append('    ]' + comma)
        lines.append('  ]' + (',' if metadata else ''))
    if metadata:
        lines.append('  "metadata": {0}'.format(
            json.dumps(metadata, sort_keys=True)))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def write_space(space, target=None):
    """Write ``space`` to a file-like ``target``, or return the text."""
    text = format_space(space)
    if target is None:
        return text
    target.write(text)
    return text


def load_space(path, lenient=False):
    if path in (None, '-'):
        return parse_space(sys.stdin, lenient)
    with io.open(path, encoding='utf-8') as f:
        return parse_space(f, lenient)
