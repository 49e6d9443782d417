#Exact chain-level topology functions.
#
#License: MIT

"""
The topochains command line.

Every subcommand prints a table, or JSON with --json.  Rejections by the
computation modules exit with status 1 and the error object
{"error": {"type", "message"}} on standard output; malformed input and
malformed arguments exit with status 2.
"""
import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from topochains.cobar import CobarError, cobar, h0_relations, pi1_presentation
from topochains.cobar import DEFAULT_MAX_DEG, DEFAULT_MAX_LEN, format_polynomial
from topochains.coalgebra import CoalgebraError, normalized_chains
from topochains.detect import DEFAULT_UP_TO, DetectConfig, DetectError, whitehead_verdict
from topochains.groups import DEFAULT_TC_BUDGET, Exhausted, GroupError, PiModule
from topochains.groups import abelianization, format_word, regular_module, todd_coxeter
from topochains.linear import LinearError, homology
from topochains.simplicial import ReducedSimplicialSet, SimplicialError, SimplicialMap
from topochains.simplicial import SimplicialSetData, collapse, covering_space
from topochains.twisted import TwistedError, bar, rho, twisted_tensor
from topochains.utils import FormatError, conventions_json, parse_coefficients
from .corpus import CORPUS, corpus_names, corpus_space

__all__ = (
    'build_parser',
    'main',
    'load_space',
    'load_map',
    'load_module',
    'EXIT_OK',
    'EXIT_REJECTED',
    'EXIT_MALFORMED'
)

_LOGGER = logging.getLogger(__name__)

#Exit codes.
EXIT_OK: int = 0
EXIT_REJECTED: int = 1
EXIT_MALFORMED: int = 2

_INNER_ERRORS = (SimplicialError, LinearError, GroupError, CoalgebraError, CobarError,
                 TwistedError, DetectError)


def _read_json(path: str) -> Any:
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            return json.load(handle)
    except OSError as error:
        raise FormatError('cannot read {0}: {1}'.format(path, error.strerror)) from None
    except json.JSONDecodeError:
        raise FormatError('malformed JSON value: ' + path) from None


def _space_from_value(value: Any) -> ReducedSimplicialSet:
    if isinstance(value, str):
        if value not in CORPUS:
            raise FormatError('unknown space: ' + value)
        return corpus_space(value)
    return ReducedSimplicialSet.from_data(SimplicialSetData.from_json(value), 'file')


def load_space(text: str) -> ReducedSimplicialSet:
    """
    Return a corpus space by name or a space read from a JSON file.

    Exception
    - FormatError: if the file is missing or malformed.
    - SimplicialError: if the file holds an invalid or non-reduced set.
    """
    if text in CORPUS:
        return corpus_space(text)
    space = _space_from_value(_read_json(text))
    space.name = text
    return space


def load_map(text: str) -> SimplicialMap:
    """
    Return the map named by 'identity:NAME', 'collapse:NAME' or a map JSON file.

    The file holds {"schema", "source", "target", "assign"} where source and
    target are corpus names or simplicial set JSON values.

    Exception
    - FormatError: if the selector or the file is malformed.
    """
    kind, _, name = text.partition(':')
    if kind in ('identity', 'collapse') and name:
        space = load_space(name)
        if kind == 'identity':
            return SimplicialMap.identity(space)
        return collapse(space)
    value = _read_json(text)
    if not isinstance(value, dict) or 'source' not in value or 'target' not in value:
        raise FormatError('malformed map')
    source = _space_from_value(value['source'])
    target = source if value['target'] == value['source'] else _space_from_value(value['target'])
    return SimplicialMap.from_json(value, source, target)


def load_module(text: str, space: ReducedSimplicialSet, budget: int) -> PiModule:
    """
    Return the regular module of the fundamental group, or a module JSON file.

    Exception
    - CobarError('group is not certified finite'): for 'regular' when the
    enumeration exhausts its bound.
    - FormatError: if the file is malformed.
    """
    if text == 'regular':
        table = todd_coxeter(pi1_presentation(space), budget)
        if isinstance(table, Exhausted):
            raise CobarError('group is not certified finite: coset bound {0}'.format(budget))
        return regular_module(table)
    return PiModule.from_json(_read_json(text), text)


def _emit(args: argparse.Namespace, value: Any, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(value, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _table(rows: Sequence[Sequence[Any]]) -> List[str]:
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    return ['  '.join(str(cell).ljust(width) for cell, width in zip(row, widths)).rstrip()
            for row in rows]


def _space_summary(space: ReducedSimplicialSet) -> Dict[str, Any]:
    return {'name': space.name,
            'counts': [space.count(n) for n in range(space.top_dim + 1)],
            'euler_characteristic': space.euler_characteristic()}


def _cmd_space(args: argparse.Namespace) -> int:
    if args.action == 'list':
        entries = [{'name': name, 'recipe': CORPUS[name].recipe} for name in corpus_names()]
        _emit(args, entries, _table([('name', 'recipe')] + [
            (entry['name'], entry['recipe']) for entry in entries]))
        return EXIT_OK
    if args.space is None:
        raise FormatError('--space is required')
    space = load_space(args.space)
    if args.action == 'show':
        summary = _space_summary(space)
        lines = ['space: {0}'.format(space.name)]
        lines += ['  dimension {0}: {1}'.format(n, ', '.join(space.simplices(n)))
                  for n in range(space.top_dim + 1)]
        lines.append('euler characteristic: {0}'.format(summary['euler_characteristic']))
        _emit(args, dict(summary, space=space.to_json()), lines)
        return EXIT_OK
    text = json.dumps(space.to_json(), indent=2, sort_keys=True)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as handle:
            handle.write(text + '\n')
        _LOGGER.info('wrote %s', args.out)
    else:
        print(text)
    return EXIT_OK


def _cmd_homology(args: argparse.Namespace) -> int:
    space = load_space(args.space)
    mode, modulus = parse_coefficients(args.coeffs)
    complex_ = normalized_chains(space).complex
    groups = [homology(complex_, n, mode, modulus) for n in range(args.up_to + 1)]
    _emit(args, {'space': space.name, 'coeffs': args.coeffs,
                 'homology': [group.to_json() for group in groups]},
          _table([('degree', 'group')] + [(n, str(group)) for n, group in enumerate(groups)]))
    return EXIT_OK


def _cmd_pi1(args: argparse.Namespace) -> int:
    space = load_space(args.space)
    presentation = pi1_presentation(space)
    table = todd_coxeter(presentation, args.tc_budget)
    order = table.to_json() if isinstance(table, Exhausted) else table.size
    group = abelianization(presentation)
    value = {'space': space.name, 'presentation': presentation.to_json(),
             'abelianization': group.to_json(), 'order': order}
    lines = ['generators: ' + ', '.join(presentation.generators)]
    lines += ['relator: ' + format_word(word) for word in presentation.relators]
    lines.append('abelianization: {0}'.format(group))
    lines.append('order: {0}'.format(
        'exhausted at {0} cosets'.format(args.tc_budget) if isinstance(table, Exhausted)
        else table.size))
    _emit(args, value, lines)
    return EXIT_OK


def _cmd_cobar(args: argparse.Namespace) -> int:
    space = load_space(args.space)
    chains = normalized_chains(space)
    window = cobar(chains, args.max_deg, args.max_len)
    presentation = window.presentation
    generators = [{'generator': label, 'degree': window.degree(label),
                   'differential': format_polynomial(presentation.generator_differential(label))}
                  for label in window.generators]
    sizes = [window.basis_size(d) for d in range(args.max_deg + 1)]
    closed = {}
    for d in range(min(args.up_to, args.max_deg) + 1):
        if window.is_closed(d):
            closed[str(d)] = str(window.homology(d))
    ring = h0_relations(chains)
    value = {'space': space.name, 'max_deg': args.max_deg, 'max_len': args.max_len,
             'generators': generators, 'basis_sizes': sizes,
             'd_squared': [issue.where for issue in presentation.check()],
             'homology': closed, 'h0': ring.to_json()}
    lines = ['{0} (degree {1}): D = {2}'.format(entry['generator'], entry['degree'],
                                                 entry['differential']) for entry in generators]
    lines.append('basis sizes: ' + ', '.join(str(size) for size in sizes))
    lines.append('D^2 = 0 on generators: {0}'.format(not value['d_squared']))
    lines += ['H_{0} = {1}'.format(d, group) for d, group in closed.items()]
    lines += ['relation: ' + format_polynomial(relation) for relation in ring.relations]
    _emit(args, value, lines)
    return EXIT_OK


def _cmd_local_homology(args: argparse.Namespace) -> int:
    space = load_space(args.space)
    module = load_module(args.module, space, args.tc_budget)
    mode, modulus = parse_coefficients(args.coeffs)
    complex_ = twisted_tensor(normalized_chains(space), module)
    groups = [homology(complex_, n, mode, modulus) for n in range(args.up_to + 1)]
    _emit(args, {'space': space.name, 'module': module.name, 'rank': module.rank,
                 'coeffs': args.coeffs,
                 'homology': [group.to_json() for group in groups]},
          _table([('degree', 'group')] + [(n, str(group)) for n, group in enumerate(groups)]))
    return EXIT_OK


def _cmd_bar(args: argparse.Namespace) -> int:
    space = load_space(args.space)
    chains = normalized_chains(space)
    window = bar(cobar(chains, args.max_deg, args.max_len), args.max_words, args.max_deg)
    complex_ = window.complex()
    ranks = list(complex_.complex.ranks)
    closed = {str(n): str(complex_.homology(n)) for n in range(args.max_deg + 1)
              if complex_.is_closed(n)}
    rho_failures = rho(chains, window).check()
    value = {'space': space.name, 'ranks': ranks, 'leaks': sorted(complex_.leaks),
             'd_squared': [issue.where for issue in window.check()],
             'homology': closed, 'rho_chain_map': not rho_failures}
    lines = ['ranks: ' + ', '.join(str(rank) for rank in ranks),
             'leaking degrees: ' + (', '.join(str(n) for n in sorted(complex_.leaks)) or 'none'),
             'D^2 = 0: {0}'.format(not value['d_squared']),
             'rho is a chain map: {0}'.format(not rho_failures)]
    lines += ['H_{0} = {1}'.format(n, group) for n, group in closed.items()]
    _emit(args, value, lines)
    return EXIT_OK


def _cmd_detect(args: argparse.Namespace) -> int:
    simplicial_map = load_map(args.map)
    modules = [load_module(path, simplicial_map.target, args.tc_budget)
               for path in args.module or ()]
    config = DetectConfig(args.up_to, args.tc_budget, tuple(modules), args.max_deg, args.max_len)
    verdict = whitehead_verdict(simplicial_map, config)
    lines = ['verdict: {0} (depth {1})'.format(verdict.outcome, verdict.depth)]
    lines += ['witness: {0}'.format(json.dumps(witness.to_json(), sort_keys=True))
              for witness in verdict.witnesses]
    lines += ['check {0}: {1}'.format(entry['check'], entry['result']['outcome'])
              for entry in verdict.transcript]
    _emit(args, verdict.to_json(), lines)
    return EXIT_OK


def _cmd_covering_space(args: argparse.Namespace) -> int:
    space = load_space(args.space)
    table = todd_coxeter(pi1_presentation(space), args.tc_budget)
    if isinstance(table, Exhausted):
        raise CobarError('group is not certified finite: coset bound {0}'.format(args.tc_budget))
    cover = covering_space(space, table)
    complex_ = normalized_chains(cover).complex
    groups = [homology(complex_, n) for n in range(args.up_to + 1)]
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as handle:
            handle.write(json.dumps(cover.to_json(), indent=2, sort_keys=True) + '\n')
    _emit(args, {'space': space.name, 'sheets': table.size,
                 'counts': [cover.count(n) for n in range(cover.top_dim + 1)],
                 'homology': [group.to_json() for group in groups]},
          ['sheets: {0}'.format(table.size)] + _table(
              [('degree', 'group')] + [(n, str(group)) for n, group in enumerate(groups)]))
    return EXIT_OK


def _cmd_conventions(args: argparse.Namespace) -> int:
    table = conventions_json()
    lines = []
    for name, entry in table.items():
        lines.append('{0}{1}: {2}'.format(name, ' (adjusted)' if entry['adjusted'] else '',
                                          entry['formula']))
    _emit(args, table, lines)
    return EXIT_OK


def _degree(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError('must be non-negative')
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('must be positive')
    return value


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='print JSON instead of tables')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (twice for debug output)')
    common.add_argument('--up-to', type=_degree, default=DEFAULT_UP_TO, metavar='N',
                        help='highest degree (default %(default)s)')
    common.add_argument('--max-deg', type=_degree, default=DEFAULT_MAX_DEG, metavar='N',
                        help='cobar degree bound (default %(default)s)')
    common.add_argument('--max-len', type=_degree, default=DEFAULT_MAX_LEN, metavar='L',
                        help='cobar word length bound (default %(default)s)')
    common.add_argument('--tc-budget', type=_positive, default=DEFAULT_TC_BUDGET, metavar='N',
                        help='coset enumeration bound (default %(default)s)')
    common.add_argument('--coeffs', default='z', metavar='RING',
                        help='z, q or zmod:<m> (default %(default)s)')

    parser = argparse.ArgumentParser(
        prog='topochains',
        description='Exact chain-level invariants of finite simplicial sets.')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    space = commands.add_parser('space', parents=[common], help='list, show or export spaces')
    space.add_argument('action', choices=('list', 'show', 'export'))
    space.add_argument('--space', metavar='NAME|FILE')
    space.add_argument('--out', metavar='FILE', help='output file for export')
    space.set_defaults(handler=_cmd_space)

    for name, handler, text in (
            ('homology', _cmd_homology, 'integral homology'),
            ('pi1', _cmd_pi1, 'fundamental group'),
            ('cobar', _cmd_cobar, 'cobar window dump'),
            ('covering-space', _cmd_covering_space, 'universal cover')):
        command = commands.add_parser(name, parents=[common], help=text)
        command.add_argument('--space', required=True, metavar='NAME|FILE')
        if name == 'covering-space':
            command.add_argument('--out', metavar='FILE', help='write the cover as JSON')
        command.set_defaults(handler=handler)

    local = commands.add_parser('local-homology', parents=[common],
                                help='homology with local coefficients')
    local.add_argument('--space', required=True, metavar='NAME|FILE')
    local.add_argument('--module', default='regular', metavar='regular|FILE')
    local.set_defaults(handler=_cmd_local_homology)

    bar_command = commands.add_parser('bar', parents=[common], help='bar window of the cobar window')
    bar_command.add_argument('--space', required=True, metavar='NAME|FILE')
    bar_command.add_argument('--max-words', type=_degree, default=DEFAULT_MAX_LEN, metavar='L',
                             help='bar word length bound (default %(default)s)')
    bar_command.set_defaults(handler=_cmd_bar)

    detect = commands.add_parser('detect', parents=[common],
                                 help='certificates against weak equivalence')
    detect.add_argument('--map', required=True, metavar='identity:NAME|collapse:NAME|FILE')
    detect.add_argument('--module', action='append', metavar='FILE',
                        help='module over the target group, repeatable')
    detect.set_defaults(handler=_cmd_detect)

    conventions = commands.add_parser('conventions', parents=[common],
                                      help='print the sign conventions')
    conventions.set_defaults(handler=_cmd_conventions)
    return parser


def _error(kind: str, message: str) -> None:
    print(json.dumps({'error': {'type': kind, 'message': message}}, sort_keys=True))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line.

    Return: the exit status, 0 on success, 1 on a rejection by a computation
    module, 2 on malformed input.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if error.code == 0 else EXIT_MALFORMED
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s',
                        stream=sys.stderr)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except FormatError as error:
        _error(type(error).__name__, error.msg)
        return EXIT_MALFORMED
    except _INNER_ERRORS as error:
        _error(type(error).__name__, error.msg)
        return EXIT_REJECTED
