#!/usr/bin/env python3
"""
HallShell CLI - marriage condition, shellability, configurations and hook
families from the command line, with defaults from config.py.

Every run prints one report (JSON or CSV) on stdout; diagnostics go to stderr.
Exit codes: 0 computed, 1 negative answer to a yes/no question, 2 bad input
or violated hypothesis, 3 brute-force bound exceeded.
"""

import argparse
import json
import os
import sys
import time
from typing import Any, Dict, List, Optional

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from hallshell import (
    __version__,
    Configuration,
    HallShellError,
    HypothesisError,
    InvalidInputError,
    OracleLimitError,
    Report,
    RunLogger,
    SetFamily,
    SkewShape,
    SurjectiveWord,
    Tableau,
    Transversal,
    all_transversals,
    average_bruteforce,
    average_closed_form,
    average_formula,
    balanced_configuration,
    configuration_count,
    configuration_of,
    corner_peeling_order,
    count_by_configuration,
    count_satisfying,
    count_standard,
    enumerate_configurations,
    error_report,
    find_transversal,
    fraction_to_dict,
    hook,
    hook_family,
    hook_length_formula,
    inner_corners,
    is_balanced,
    is_generalized_standard,
    is_standard,
    m_range,
    outer_corner_cells,
    run_suite,
    satisfies_marriage_condition,
    shelling_order,
    shelling_order_exhaustive,
    shelling_order_from_witness,
    solve,
    stirling2,
    surjection_count,
    tableau_satisfies,
    unique_element_set,
    SUITES,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


class _Parser(argparse.ArgumentParser):
    """Turns usage errors into InvalidInputError so they get a structured report."""

    def error(self, message):
        raise InvalidInputError(f"{self.prog}: {message}")


class Outcome:
    """Result payload plus the exit code it implies."""

    def __init__(self, result: Any, exit_code: int = EXIT_OK):
        self.result = result
        self.exit_code = exit_code


def _warn(message: str) -> None:
    print(message, file=sys.stderr)


def _parse_json(text: str, flag: str) -> Any:
    """Inline JSON, or @path to read it from a file."""
    if text.startswith('@'):
        try:
            with open(text[1:], 'r', encoding='utf-8') as f:
                text = f.read()
        except OSError as e:
            raise InvalidInputError(f"--{flag}: cannot read {text[1:]}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"--{flag}: malformed JSON: {e}") from e


def _cell(cell) -> List[int]:
    return [cell[0], cell[1]]


# ---------------------------------------------------------------------------
# input resolution
# ---------------------------------------------------------------------------

class Inputs:
    """Lazily parsed flags shared by all subcommands; `echo` records what was used."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.echo: Dict[str, Any] = {}
        self._shape: Optional[SkewShape] = None
        self._family: Optional[SetFamily] = None
        self._hook_transversal: Optional[Transversal] = None

    @property
    def shape(self) -> SkewShape:
        if self._shape is None:
            if not getattr(self.args, 'shape', None):
                raise InvalidInputError("this command needs --shape")
            self._shape = SkewShape.from_dict(_parse_json(self.args.shape, 'shape'))
            self.echo['shape'] = self._shape.to_dict()
        return self._shape

    @property
    def family(self) -> SetFamily:
        if self._family is None:
            if getattr(self.args, 'shape', None):
                self._family, self._hook_transversal = hook_family(self.shape)
            elif getattr(self.args, 'family', None):
                self._family = SetFamily.from_dict(_parse_json(self.args.family, 'family'))
                self.echo['family'] = self._family.to_dict()
            else:
                raise InvalidInputError("this command needs --family or --shape")
        return self._family

    @property
    def transversal(self) -> Transversal:
        fam = self.family
        if getattr(self.args, 'transversal', None):
            data = _parse_json(self.args.transversal, 'transversal')
            if not isinstance(data, list):
                raise InvalidInputError("--transversal must be a JSON list")
            t = Transversal(tuple(data))
            t.check(fam)
        elif self._hook_transversal is not None:
            t = self._hook_transversal
        else:
            t = find_transversal(fam)
            if t is None:
                raise HypothesisError('family has a transversal')
        self.echo['transversal'] = t.to_list()
        return t

    def m(self, required: bool = True) -> Optional[int]:
        m = getattr(self.args, 'm', None)
        if m is None and required:
            raise InvalidInputError("this command needs --m")
        if m is not None:
            self.echo['m'] = m
        return m

    def n(self) -> int:
        n = getattr(self.args, 'n', None)
        if n is None:
            raise InvalidInputError("this command needs --n")
        self.echo['n'] = n
        return n

    @property
    def configuration(self) -> Configuration:
        if not getattr(self.args, 'config', None):
            raise InvalidInputError("this command needs --config")
        data = _parse_json(self.args.config, 'config')
        f = Configuration(tuple(data)) if isinstance(data, list) else Configuration.from_dict(data)
        f.check(self.family)
        self.echo['config'] = list(f.demands)
        return f

    @property
    def word(self) -> SurjectiveWord:
        if not getattr(self.args, 'word', None):
            raise InvalidInputError("this command needs --word")
        data = _parse_json(self.args.word, 'word')
        if isinstance(data, list):
            if not data:
                raise InvalidInputError("--word must not be empty")
            w = SurjectiveWord.from_values(tuple(data))
        else:
            w = SurjectiveWord.from_dict(data)
        self.echo['word'] = list(w.values)
        return w

    @property
    def tableau(self) -> Tableau:
        if not getattr(self.args, 'tableau', None):
            raise InvalidInputError("this command needs --tableau")
        data = _parse_json(self.args.tableau, 'tableau')
        if not isinstance(data, list):
            raise InvalidInputError("--tableau must be a JSON list (rows or row-major entries)")
        T = Tableau.from_list(self.shape, data)
        self.echo['tableau'] = T.to_rows()
        return T

    def bound(self, settings: Dict[str, Any], key: str) -> int:
        bound = self.args.bound if getattr(self.args, 'bound', None) is not None else settings.get(key)
        self.echo['bound'] = bound
        return bound


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_marriage(inp: Inputs, settings) -> Outcome:
    ok = satisfies_marriage_condition(inp.family)
    return Outcome(ok, EXIT_OK if ok else EXIT_NEGATIVE)


def cmd_transversal(inp: Inputs, settings) -> Outcome:
    t = find_transversal(inp.family)
    if t is None:
        return Outcome(None, EXIT_NEGATIVE)
    return Outcome(t.to_list())


def cmd_transversals(inp: Inputs, settings) -> Outcome:
    found = all_transversals(inp.family, bound=inp.bound(settings, 'transversal_oracle_bound'))
    return Outcome([t.to_list() for t in found])


def cmd_shellable(inp: Inputs, settings) -> Outcome:
    ok = shelling_order(inp.family) is not None
    return Outcome(ok, EXIT_OK if ok else EXIT_NEGATIVE)


def cmd_shelling_order(inp: Inputs, settings) -> Outcome:
    method = inp.args.method
    inp.echo['method'] = method
    if method == 'witness':
        order = shelling_order_from_witness(inp.family, inp.transversal, inp.word)
    elif method == 'exhaustive':
        order = shelling_order_exhaustive(inp.family, bound=inp.bound(settings, 'transversal_oracle_bound'))
    elif method == 'corners':
        order = corner_peeling_order(inp.shape)
    else:
        order = shelling_order(inp.family)
    if order is None:
        return Outcome(None, EXIT_NEGATIVE)
    return Outcome(order.to_list())


def cmd_unique_set(inp: Inputs, settings) -> Outcome:
    elements = sorted(unique_element_set(inp.family))
    if getattr(inp.args, 'shape', None):
        return Outcome({
            'elements': elements,
            'cells': [_cell(inp.shape.cell_at(x)) for x in elements],
        })
    return Outcome(elements)


def cmd_m_range(inp: Inputs, settings) -> Outcome:
    lower, upper = m_range(inp.family)
    return Outcome({'min': lower, 'max': upper})


def cmd_configs_enumerate(inp: Inputs, settings) -> Outcome:
    t = inp.transversal
    configs = enumerate_configurations(inp.family, t, bound=inp.bound(settings, 'configuration_oracle_bound'))
    return Outcome([list(f.demands) for f in configs])


def cmd_configs_count(inp: Inputs, settings) -> Outcome:
    fam, t, f, m = inp.family, inp.transversal, inp.configuration, inp.m()
    count = count_satisfying(fam, t, f, m, bound=inp.bound(settings, 'word_oracle_bound'))
    return Outcome(count)


def cmd_configs_solve(inp: Inputs, settings) -> Outcome:
    fam, t, f, m = inp.family, inp.transversal, inp.configuration, inp.m()
    word = solve(fam, t, f, m, search_bound=inp.bound(settings, 'solver_search_bound'))
    if word is None:
        return Outcome(None, EXIT_NEGATIVE)
    return Outcome(list(word.values))


def cmd_configs_classify(inp: Inputs, settings) -> Outcome:
    f = configuration_of(inp.word, inp.family, inp.transversal)
    return Outcome(list(f.demands))


def cmd_configs_table(inp: Inputs, settings) -> Outcome:
    fam, t, m = inp.family, inp.transversal, inp.m()
    counts = count_by_configuration(fam, t, m, bound=inp.bound(settings, 'word_oracle_bound'))
    return Outcome([
        {'demands': list(demands), 'count': count}
        for demands, count in sorted(counts.items())
    ])


def cmd_shape_hooks(inp: Inputs, settings) -> Outcome:
    shape = inp.shape
    return Outcome([
        {
            'index': k,
            'cell': _cell(cell),
            'hook_length': len(hook(shape, cell)),
            'hook': [_cell(c) for c in sorted(hook(shape, cell))],
        }
        for k, cell in enumerate(shape.cells, 1)
    ])


def cmd_shape_family(inp: Inputs, settings) -> Outcome:
    fam, t = hook_family(inp.shape)
    return Outcome({
        'family': fam.to_dict(),
        'transversal': t.to_list(),
        'cells': [_cell(c) for c in inp.shape.cells],
    })


def cmd_shape_corners(inp: Inputs, settings) -> Outcome:
    shape = inp.shape
    return Outcome({
        'inner': [_cell(c) for c in sorted(inner_corners(shape.lam))],
        'outer': [_cell(c) for c in sorted(outer_corner_cells(shape))],
    })


def cmd_shape_syt_count(inp: Inputs, settings) -> Outcome:
    shape = inp.shape
    count = count_standard(shape, bound=inp.bound(settings, 'tableau_oracle_bound'))
    if shape.is_normal and count != hook_length_formula(shape):
        _warn(f"⚠️  brute-force count {count} disagrees with the hook-length formula")
    return Outcome(count)


def cmd_shape_balanced_check(inp: Inputs, settings) -> Outcome:
    T = inp.tableau
    balanced = is_balanced(T)
    result = {
        'generalized_standard': is_generalized_standard(T),
        'standard': is_standard(T),
        'balanced': balanced,
        'demands': list(balanced_configuration(T.shape).demands),
    }
    if getattr(inp.args, 'config', None):
        f = inp.configuration
        result['satisfies_config'] = tableau_satisfies(T, f)
        return Outcome(result, EXIT_OK if result['satisfies_config'] else EXIT_NEGATIVE)
    return Outcome(result, EXIT_OK if balanced else EXIT_NEGATIVE)


def _fraction_result(value) -> Dict[str, str]:
    result = fraction_to_dict(value)
    result['text'] = str(value)
    return result


def cmd_count_stirling(inp: Inputs, settings) -> Outcome:
    return Outcome(stirling2(inp.n(), inp.m()))


def cmd_count_surjections(inp: Inputs, settings) -> Outcome:
    return Outcome(surjection_count(inp.n(), inp.m()))


def cmd_count_average(inp: Inputs, settings) -> Outcome:
    value = average_formula(inp.family, inp.m())
    result = _fraction_result(value)
    result['configurations'] = str(configuration_count(inp.family))
    return Outcome(result)


def cmd_count_average_brute(inp: Inputs, settings) -> Outcome:
    fam, t, m = inp.family, inp.transversal, inp.m()
    value = average_bruteforce(fam, t, m, bound=inp.bound(settings, 'average_oracle_bound'))
    return Outcome(_fraction_result(value))


def cmd_count_average_closed(inp: Inputs, settings) -> Outcome:
    return Outcome(_fraction_result(average_closed_form(inp.family, inp.m())))


def cmd_verify(inp: Inputs, settings) -> Outcome:
    args = inp.args
    seed = args.seed if args.seed is not None else settings.get('default_seed', 0)
    samples = args.samples if args.samples is not None else settings.get('verify_samples', 200)
    bound = inp.bound(settings, 'verify_bound')
    inp.echo.update({'suite': args.suite, 'seed': seed, 'samples': samples})
    _warn("=" * 60)
    _warn(f"Verify: {args.suite} (seed {seed}, samples {samples}, bound {bound})")
    _warn("=" * 60)
    summary = run_suite(args.suite, seed=seed, samples=samples, bound=bound)
    if summary['passed']:
        _warn(f"✅ {summary['checked']} checks passed")
        return Outcome(summary)
    _warn(f"❌ {len(summary['failures'])} failure(s) in {summary['checked']} checks")
    return Outcome(summary, EXIT_NEGATIVE)


def cmd_history(inp: Inputs, settings) -> Outcome:
    args = inp.args
    logger = RunLogger(settings.get('run_log_file', 'run_history.jsonl'))
    if args.clear:
        return Outcome({'cleared': logger.clear_history()})
    if args.stats:
        return Outcome(logger.get_stats())
    if args.search:
        inp.echo['search'] = args.search
        return Outcome(logger.search(args.search)[:args.limit])
    inp.echo['limit'] = args.limit
    return Outcome(logger.get_history(limit=args.limit, command=args.command_filter))


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _input_flags() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--family', help='Family JSON {"n": 3, "members": [[1], [1, 2]]} or @file')
    common.add_argument('--shape', help='Skew shape JSON {"lambda": [3, 2], "mu": [1]}; implies its hook family')
    common.add_argument('--transversal', help='Transversal JSON list, one element per member')
    common.add_argument('--config', help='Configuration JSON: demand list or {"demands": [...]}')
    common.add_argument('--word', help='Word JSON: value list or {"m": 2, "values": [...]}')
    common.add_argument('--tableau', help='Tableau JSON: rows with null in mu cells, or a row-major list')
    common.add_argument('--m', type=int, help='Codomain size m')
    common.add_argument('--n', type=int, help='Domain size n')
    common.add_argument('--bound', type=int, help='Oracle size bound (overrides config.py)')
    common.add_argument('--format', choices=['json', 'csv'], default=None,
                        help='Report format (default from config.py)')
    return common


COMMANDS = {
    ('marriage',): (cmd_marriage, "Decide Hall's marriage condition"),
    ('transversal',): (cmd_transversal, 'Find one transversal'),
    ('transversals',): (cmd_transversals, 'List every transversal (bounded)'),
    ('shellable',): (cmd_shellable, 'Decide shellability'),
    ('shelling-order',): (cmd_shelling_order, 'Produce a shelling order'),
    ('unique-set',): (cmd_unique_set, 'Elements lying in exactly one member'),
    ('m-range',): (cmd_m_range, 'Admissible codomain sizes for the solver'),
    ('configs', 'enumerate'): (cmd_configs_enumerate, 'List every configuration'),
    ('configs', 'count'): (cmd_configs_count, 'Count words satisfying --config'),
    ('configs', 'solve'): (cmd_configs_solve, 'Construct a word satisfying --config'),
    ('configs', 'classify'): (cmd_configs_classify, 'Configuration satisfied by --word'),
    ('configs', 'table'): (cmd_configs_table, 'Word count for every achieved configuration'),
    ('shape', 'hooks'): (cmd_shape_hooks, 'Hooks and hook lengths'),
    ('shape', 'family'): (cmd_shape_family, 'Hook family with t(H_r) = r'),
    ('shape', 'corners'): (cmd_shape_corners, 'Inner corners of lambda and outer corners of lambda/mu'),
    ('shape', 'syt-count'): (cmd_shape_syt_count, 'Count standard tableaux'),
    ('shape', 'balanced-check'): (cmd_shape_balanced_check, 'Check a tableau for balance'),
    ('count', 'stirling'): (cmd_count_stirling, 'S(n, m)'),
    ('count', 'surjections'): (cmd_count_surjections, 'm! S(n, m)'),
    ('count', 'average'): (cmd_count_average, 'Average words per configuration (formula)'),
    ('count', 'average-brute'): (cmd_count_average_brute, 'Average words per configuration (enumeration)'),
    ('count', 'average-closed'): (cmd_count_average_closed, 'Average words per configuration (n - m <= 2)'),
    ('verify',): (cmd_verify, 'Run a property suite'),
    ('history',): (cmd_history, 'Show run history'),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog='cli.py',
        description='HallShell CLI - marriage condition, shellability and configurations',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python cli.py marriage --family '{"n": 2, "members": [[1], [1, 2]]}'
  python cli.py shellable --family '{"n": 2, "members": [[1, 2], [1, 2]]}'
  python cli.py configs solve --shape '{"lambda": [3, 2, 1]}' --config '[1, 1, 1, 1, 1, 1]' --m 6
  python cli.py count average --shape '{"lambda": [6, 5, 4, 3, 2, 1], "mu": [2, 1]}' --m 16
  python cli.py verify chang --seed 7 --samples 1000 --bound 7
  python cli.py history --stats
        """
    )
    parser.add_argument('--version', action='version', version=f'hallshell {__version__}')
    common = _input_flags()
    top = parser.add_subparsers(dest='command', metavar='command')
    top.required = True
    groups: Dict[str, argparse._SubParsersAction] = {}

    for path, (handler, help_text) in COMMANDS.items():
        if len(path) == 2:
            if path[0] not in groups:
                group = top.add_parser(path[0], help=f'{path[0]} subcommands')
                groups[path[0]] = group.add_subparsers(dest='action', metavar='action')
                groups[path[0]].required = True
            sub = groups[path[0]].add_parser(path[1], parents=[common], help=help_text)
        elif path[0] == 'verify':
            sub = top.add_parser('verify', parents=[common], help=help_text)
            sub.add_argument('suite', choices=sorted(SUITES), help='Property suite to run')
            sub.add_argument('--seed', type=int, help='RNG seed (default from config.py)')
            sub.add_argument('--samples', type=int, help='Random instances per suite (default from config.py)')
        elif path[0] == 'history':
            sub = top.add_parser('history', help=help_text)
            sub.add_argument('--limit', type=int, default=20, help='Entries to show (default: 20)')
            sub.add_argument('--command', dest='command_filter', help='Only runs of this command')
            sub.add_argument('--stats', action='store_true', help='Show run statistics')
            sub.add_argument('--search', help='Search run history')
            sub.add_argument('--clear', action='store_true', help='Delete the run history')
            sub.add_argument('--format', choices=['json', 'csv'], default=None)
        else:
            sub = top.add_parser(path[0], parents=[common], help=help_text)
            if path[0] == 'shelling-order':
                sub.add_argument('--method', choices=['greedy', 'exhaustive', 'corners', 'witness'],
                                 default='greedy', help='How to find the order (default: greedy)')
        sub.set_defaults(handler=handler, command_path=' '.join(path))
    return parser


def _command_name(argv: List[str]) -> str:
    words = [a for a in argv if not a.startswith('-')][:2]
    for path in COMMANDS:
        if tuple(words[:len(path)]) == path:
            return ' '.join(path)
    return ' '.join(words[:1]) or '(none)'


def _emit(report: Report, output_format: str) -> None:
    text = report.render(output_format)
    sys.stdout.write(text if text.endswith('\n') else text + '\n')


def run(argv: Optional[List[str]] = None, settings: Optional[Dict[str, Any]] = None) -> int:
    """Parse argv, compute, print the report and return the exit code."""
    if settings is None:
        import config
        settings = config.get_defaults()
    argv = list(sys.argv[1:] if argv is None else argv)
    output_format = settings.get('output_format', 'json')
    command = _command_name(argv)
    inp: Optional[Inputs] = None
    started = time.perf_counter()

    try:
        args = build_parser().parse_args(argv)
        command = args.command_path
        if getattr(args, 'format', None):
            output_format = args.format
        inp = Inputs(args)
        outcome = args.handler(inp, settings)
        report = Report(command, inp.echo, outcome.result, __version__)
        exit_code = outcome.exit_code
        error = None
    except OracleLimitError as e:
        _warn(f"⚠️  {e}")
        report = error_report(command, e, inp.echo if inp else {}, __version__)
        exit_code, error = EXIT_LIMIT, str(e)
    except (HallShellError, ValueError, TypeError) as e:
        _warn(f"❌ Error: {e}")
        report = error_report(command, e, inp.echo if inp else {}, __version__)
        exit_code, error = EXIT_INPUT, str(e)

    _emit(report, output_format)

    if settings.get('log_runs') and command != 'history':
        summary = json.dumps(report.result, sort_keys=True)
        RunLogger(settings.get('run_log_file', 'run_history.jsonl')).log_run(
            command,
            exit_code,
            inputs=report.inputs,
            summary=summary if len(summary) <= 200 else summary[:197] + '...',
            error=error,
            elapsed=time.perf_counter() - started,
        )
    return exit_code


def main():
    # Import config with better error handling
    try:
        import config
        settings = config.get_defaults()
    except Exception as e:
        print(f"❌ Error: Could not load config.py: {e}", file=sys.stderr)
        print("Please ensure config.py exists and is valid.", file=sys.stderr)
        sys.exit(EXIT_INPUT)
    sys.exit(run(sys.argv[1:], settings))


if __name__ == '__main__':
    main()
