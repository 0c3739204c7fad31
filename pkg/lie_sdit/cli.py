"""
Command-line front end.

Every analysis command reads a space file (``-`` or no argument for stdin)
and prints a JSON report with ``command``, ``verdict`` and ``timing``.
Exit codes: 0 decided, 1 input or library error, 2 undetermined.
"""
import argparse
import json
import logging
import sys

from lie_sdit.certificates import normalize_side
from lie_sdit.exceptions import *
from lie_sdit.families import ExampleSpec
from lie_sdit.lie import (closure_check, is_nilpotent, is_semisimple,
                          is_solvable, structure_constants)
from lie_sdit.linalg import ScalarField
from lie_sdit.sdit import NON_SINGULAR, SINGULAR
from lie_sdit.shrunk import NO, UNDETERMINED, YES
from lie_sdit.spacefile import load_space, write_space
from lie_sdit.toolkit import LieToolkit

log = logging.getLogger()

EXIT_DECIDED = 0
EXIT_ERROR = 1
EXIT_UNDETERMINED = 2

_BRUTE_FORCE_FIELDS = {'gf2': 2, 'gf3': 3}

# positional parameters of `gen`, in order
_GEN_KEYS = {
    'lambda': ('n',),
    'sl-standard': ('n',),
    'sl-monomial': ('n', 'd'),
    'sym-power': ('n', 'degree'),
    'adjoint': ('algebra',),
    'heisenberg': ('n',),
    'example2-random': ('n', 'seed'),
}


def _vector(field, vector):
    return [field.format(v) for v in vector]


def _subspace(subspace):
    return {'dim': subspace.dim, 'basis': subspace.to_strings()}


def _check(toolkit, space, args):
    pair = closure_check(space)
    report = {'verdict': 'closed' if pair is None else 'not-closed',
              'pair': None if pair is None else [pair[0] + 1, pair[1] + 1],
              'dim': space.dim, 'n': space.n, 'field': space.field.name,
              'warnings': list(space.warnings)}
    if pair is None:
        algebra = structure_constants(space)
        report['nilpotent'] = is_nilpotent(algebra)
        report['solvable'] = is_solvable(algebra)
        report['semisimple'] = (is_semisimple(algebra)
                                if space.field.is_rational else None)
    return report, EXIT_DECIDED


def _sdit(toolkit, space, args):
    verdict = toolkit.sdit.sdit_decide(space)
    report = {'verdict': verdict.verdict,
              'cartan_dim': verdict.cartan.dim,
              'cartan_basis': [m.to_strings()
                               for m in verdict.cartan_space.basis],
              'max_rank_over_hits': verdict.max_rank_over_hits,
              'points_evaluated': len(verdict.evaluations),
              'reliable': verdict.reliable,
              'witness_rank': None, 'witness_point': None,
              'witness_matrix': None}
    if verdict.witness is not None:
        report['witness_rank'] = verdict.witness['rank']
        report['witness_point'] = list(verdict.witness['point'])
        report['witness_matrix'] = verdict.witness['matrix'].to_strings()
    return report, EXIT_DECIDED if verdict.reliable else EXIT_UNDETERMINED


def _maxrank(toolkit, space, args):
    value = toolkit.sdit.semisimple_max_rank(space)
    verdict = NON_SINGULAR if value == space.n else SINGULAR
    return {'verdict': verdict, 'max_rank': value, 'n': space.n}, EXIT_DECIDED


def _cartan(toolkit, space, args):
    result, cartan_space = toolkit.cartan_subalgebra(space)
    field = space.field
    report = {'verdict': 'verified' if result.verified else 'unverified',
              'dim': result.dim,
              'regular_element': _vector(field, result.regular_element),
              'coordinates': result.subalgebra.to_strings(),
              'matrices': [m.to_strings() for m in cartan_space.basis],
              'omega': list(result.omega),
              'rounds': result.rounds,
              'trace': [{'element': _vector(field, element),
                         'fitting_dim': dim}
                        for element, dim in result.descent_trace]}
    return report, EXIT_DECIDED


def _weights(toolkit, space, args):
    result, decomposition = toolkit.weights(space)
    field = space.field
    report = {'verdict': toolkit.sdit.singular_via_weights(decomposition),
              'cartan_dim': result.dim,
              'zero_weight': decomposition.has_zero_weight,
              'weights': [{'value': _vector(field, w.value),
                           'multiplicity': w.multiplicity}
                          for w in decomposition.weights]}
    return report, EXIT_DECIDED


def _shrunk(toolkit, space, args):
    decision = toolkit.shrunk.has_shrunk_subspace(space)
    series = decision.series
    report = {'verdict': decision.answer,
              'factor_index': decision.factor_index,
              'chain_dims': [s.dim for s in series.chain],
              'factors': [{'dimension': f.dimension, 'trivial': f.trivial,
                           'absolutely_irreducible': f.absolutely_irreducible}
                          for f in series.factors],
              'witness': None}
    if decision.answer == YES:
        # a zero factor V_(i+1) / V_i means B(V_(i+1)) lies in V_i
        subspace = series.chain[decision.factor_index + 1]
        deficit = toolkit.shrunk.shrink_deficit(space, subspace)
        report['witness'] = dict(_subspace(subspace),
                                 deficit=deficit.deficit)
    code = EXIT_UNDETERMINED if decision.answer == UNDETERMINED \
        else EXIT_DECIDED
    return report, code


def _ncrk(toolkit, space, args):
    field = ScalarField(_BRUTE_FORCE_FIELDS[args.field])
    result = toolkit.ncrk(space, field)
    report = {'verdict': YES if result.max_deficit > 0 else NO,
              'field': result.field,
              'ncrk': result.ncrk,
              'max_deficit': result.max_deficit,
              'canonical_lower': _subspace(result.canonical_lower),
              'canonical_upper': _subspace(result.canonical_upper),
              'maximizers': result.all_max_deficit_count,
              'canonical_attained': result.lower_attains and
              result.upper_attains,
              'histogram': [dict((k, int(v)) for k, v in row.items())
                            for row in result.histogram.to_dict(
                                orient='records')]}
    return report, EXIT_DECIDED


def _compseries(toolkit, space, args):
    series = toolkit.shrunk.composition_series(space)
    report = {'verdict': 'complete' if series.is_complete else UNDETERMINED,
              'chain': [_subspace(s) for s in series.chain],
              'factors': [{'dimension': f.dimension, 'trivial': f.trivial,
                           'absolutely_irreducible': f.absolutely_irreducible}
                          for f in series.factors],
              'trivial_factors': series.trivial_indices}
    code = EXIT_DECIDED if series.is_complete else EXIT_UNDETERMINED
    return report, code


def _linker(toolkit, space, args):
    finder = toolkit.certificates
    certificate = finder.find_kernel_certificate(space, args.degree,
                                                 normalize_side(args.side))
    report = {'verdict': 'none' if certificate is None else SINGULAR,
              'degree': args.degree, 'side': normalize_side(args.side),
              'certificate': None, 'verified': None,
              'cross_identity': None, 'homomorphism': None}
    if certificate is None:
        return report, EXIT_DECIDED
    report['certificate'] = certificate.to_dict()
    report['verified'] = finder.verify_certificate(space, certificate)
    if certificate.degree == 1:
        report['cross_identity'] = finder.linker_cross_identity_check(
            space, certificate)
        if closure_check(space) is None:
            report['homomorphism'] = finder.linker_homomorphism_check(
                space, certificate)
    return report, EXIT_DECIDED


def _sample(toolkit, space, args):
    value = toolkit.sdit.sampled_rank(space, samples=args.samples,
                                      seed=args.seed)
    full = value == space.n
    report = {'verdict': NON_SINGULAR if full else UNDETERMINED,
              'max_rank': value, 'n': space.n, 'samples': args.samples,
              'seed': args.seed}
    return report, EXIT_DECIDED if full else EXIT_UNDETERMINED


def _parse_value(text):
    try:
        return int(text)
    except ValueError:
        return text


def _gen_params(family, values):
    keys = list(_GEN_KEYS.get(family, ()))
    params = {}
    positional = []
    for value in values:
        if '=' in value:
            key, _, text = value.partition('=')
            params[key] = _parse_value(text)
        else:
            positional.append(_parse_value(value))
    keys = [k for k in keys if k not in params]
    if len(positional) > len(keys):
        raise InvalidExampleSpec("too many parameters for family "
                                 "'{0}'".format(family))
    params.update(zip(keys, positional))
    return params


def _gen(toolkit, args):
    params = _gen_params(args.family, args.params)
    if args.family == 'example2-random' and args.seed is not None:
        params.setdefault('seed', args.seed)
    space = toolkit.generate(args.family, params)
    if args.output in (None, '-'):
        write_space(space, sys.stdout)
    else:
        with open(args.output, 'w') as f:
            write_space(space, f)
    return EXIT_DECIDED


COMMANDS = {
    'check': _check,
    'sdit': _sdit,
    'maxrank': _maxrank,
    'cartan': _cartan,
    'weights': _weights,
    'shrunk': _shrunk,
    'ncrk-bf': _ncrk,
    'compseries': _compseries,
    'linker': _linker,
    'sample': _sample,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--omega-size', type=int, default=None,
                        help='trial values of the Cartan descent')
    common.add_argument('--guard-subspaces', type=int, default=None,
                        help='cap on exhaustive subspace enumeration')
    common.add_argument('--lenient', action='store_true',
                        help='normalize non-canonical entries')
    common.add_argument('--seed', type=int, default=None)
    common.add_argument('--force', action='store_true',
                        help='lift the n <= 5, p <= 3 brute-force limits')
    common.add_argument('-v', '--verbose', action='store_true')

    parser = argparse.ArgumentParser(
        prog='lie-sdit',
        description='Singularity, shrunk subspaces and kernel certificates '
                    'of matrix spaces.')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    helps = {
        'check': 'closure under the commutator',
        'sdit': 'singularity through Cartan hitting sets',
        'maxrank': 'maximum rank of a semisimple matrix Lie algebra',
        'cartan': 'a Cartan subalgebra',
        'weights': 'weights of the Cartan subalgebra',
        'shrunk': 'shrunk subspace through composition factors',
        'ncrk-bf': 'brute-force non-commutative rank over GF(2) or GF(3)',
        'compseries': 'a composition series',
        'linker': 'degree-d kernel certificate',
        'sample': 'maximum rank over seeded random points',
    }
    for name in COMMANDS:
        sub = commands.add_parser(name, parents=[common], help=helps[name])
        sub.add_argument('file', nargs='?', default='-',
                         help="space file, '-' for stdin")
        if name == 'ncrk-bf':
            sub.add_argument('--field', choices=sorted(_BRUTE_FORCE_FIELDS),
                             default='gf2')
        elif name == 'linker':
            sub.add_argument('--degree', type=int, default=1)
            sub.add_argument('--side', choices=['l', 'r', 'left', 'right'],
                             default='r')
        elif name == 'sample':
            sub.add_argument('--samples', type=int, default=500)

    gen = commands.add_parser('gen', parents=[common],
                              help='write an example family as a space file')
    gen.add_argument('family', choices=ExampleSpec.families())
    gen.add_argument('params', nargs='*',
                     help='positional values or key=value pairs')
    gen.add_argument('-o', '--output', default=None)
    return parser


def _toolkit(args):
    kwargs = {'force': args.force, 'verbose': args.verbose}
    if args.omega_size is not None:
        kwargs['omega_size'] = args.omega_size
    if args.guard_subspaces is not None:
        kwargs['guard_subspaces'] = args.guard_subspaces
    return LieToolkit(**kwargs)


def _emit(payload):
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + '\n')


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_ERROR if ex.code else EXIT_DECIDED

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format='%(levelname)s %(message)s', stream=sys.stderr)

    try:
        toolkit = _toolkit(args)
        if args.command == 'gen':
            return _gen(toolkit, args)
        if args.command == 'sample' and args.seed is None:
            args.seed = 0
        space = load_space(args.file, args.lenient)
        toolkit._start_timer()
        report, code = COMMANDS[args.command](toolkit, space, args)
    except (LieSditError, DescentStalled) as ex:
        _emit({'error': {'code': ex.code, 'message': str(ex)}})
        return EXIT_ERROR
    except (OSError, ValueError) as ex:
        _emit({'error': {'code': 'error', 'message': str(ex)}})
        return EXIT_ERROR

    report['command'] = args.command
    report['timing'] = {'seconds': toolkit.get_elapsed_seconds()}
    _emit(report)
    return code
