"""
The advopt command line tool.
"""

# external package imports
import sys, json, argparse
import pandas as pd

# absolute module imports
import advopt
from advopt.exceptions import AdversarialOptimizationError, AssertionFailureError, InvalidValueError
from advopt.utils import rationals
from advopt.scenarios import ScenarioReport, reports_frame

FORMATS = ("json", "csv", "text")

class ErrorArgParser(argparse.ArgumentParser):
    """
    Subclass of ArgumentParser, overwrites the error message to call
    ErrorExit and not print the help message.
    """

    def error(self, message):
        ErrorExit('error: {}\n'.format(message), 2)

def ErrorExit(text, exit_code = 1):
    """
    This function prints an error and kills the execution of the program.

    Args:
        text                - The error message to be printed.
        exit_code           - Nonzero exit status.

    Returns:
        None.
    """
    if exit_code == 0:
        raise InvalidValueError("exit code", exit_code, "Exit code of 0 means program ran successfully. Always pass "
                "ErrorExit a non-zero exit code.")

    print('\nERROR: {}'.format(text), file=sys.stderr)
    print('       The execution of advopt stopped', file=sys.stderr)
    sys.exit(exit_code)

def _add_instance_arguments(required_arguments):
    required_arguments.add_argument('--x', dest='x_path', type=str, required=True,
            help='File path to the ".json" document of the fiber shift X.')
    required_arguments.add_argument('--y', dest='y_path', type=str, required=True,
            help='File path to the ".json" document of the base shift Y.')
    required_arguments.add_argument('--f', dest='f_path', type=str, required=True,
            help='File path to the ".json" document of the potential.')

def _add_subparser(subparsers, name, help):
    subparser = subparsers.add_parser(name, help=help, description=help)
    required_arguments = subparser.add_argument_group('Required Arguments')
    optional_arguments = subparser.add_argument_group('Optional Arguments')
    return subparser, required_arguments, optional_arguments

def build_parser():
    parser = ErrorArgParser(prog='advopt', description='Adversarial ergodic optimization on shifts of finite type: '
            'brackets for delta and alpha, periodic values, ground-state certification and scripted examples.',
            epilog='All values are exact rationals. Set ADVOPT_BUDGET to override the enumeration budget.')
    parser.add_argument('--format', dest='format', choices=FORMATS, default='json',
            help='Output format, one of json, csv or text.')
    parser.add_argument('--settings', dest='settings_path', type=str, default=None,
            help='File path to a ".ini" settings file.')
    parser.add_argument('--output', dest='output_path', type=str, default=None,
            help='Write the JSON result to this file as well.')
    parser.add_argument('--seedless', dest='seedless', action='store_true', default=False,
            help='Reserved. Nothing in advopt is random, so this flag changes nothing and takes no value.')
    parser.add_argument('--logging', dest='logging', action='store_true', default=False,
            help='Print progress while computing.')

    subparsers = parser.add_subparsers(dest='command', metavar='command', parser_class=ErrorArgParser)
    subparsers.required = True

    subparser, required_arguments, optional_arguments = _add_subparser(subparsers, 'rk',
            'Compute r_k = max_y min_x S_k f(x, y) and its maximizing Y-word.')
    _add_instance_arguments(required_arguments)
    required_arguments.add_argument('--k', dest='k', type=int, required=True, help='The horizon k.')
    optional_arguments.add_argument('--no_pruning', dest='pruning', action='store_false', default=True,
            help='Visit every Y-word instead of the dominance pruned sweep.')

    subparser, required_arguments, optional_arguments = _add_subparser(subparsers, 'delta',
            'Bracket delta(f) from r_1, ..., r_kmax and periodic orbits.')
    _add_instance_arguments(required_arguments)
    required_arguments.add_argument('--kmax', dest='k_max', type=int, required=True, help='Largest horizon.')
    required_arguments.add_argument('--pmax', dest='pmax', type=int, required=True, help='Largest orbit period.')
    optional_arguments.add_argument('--report', dest='report_path', type=str, default=None,
            help='File path to write the per-k table to as CSV.')

    subparser, required_arguments, optional_arguments = _add_subparser(subparsers, 'alpha-per',
            'Compute alpha_per = beta_per = gamma_per over periodic orbits.')
    _add_instance_arguments(required_arguments)
    required_arguments.add_argument('--pmax', dest='pmax', type=int, required=True, help='Largest orbit period.')
    optional_arguments.add_argument('--witness', dest='witness', action='store_true', default=False,
            help='Include the witness cycle of the best orbit.')

    subparser, required_arguments, optional_arguments = _add_subparser(subparsers, 'alpha',
            'Bracket alpha(f) through the effective potential g_L.')
    _add_instance_arguments(required_arguments)
    required_arguments.add_argument('--L', dest='L', type=int, required=True, help='Central radius L.')
    optional_arguments.add_argument('--kmax', dest='k_max', type=int, default=None,
            help='Also intersect with the delta bracket up to this horizon (needs --pmax).')
    optional_arguments.add_argument('--pmax', dest='pmax', type=int, default=None, help='Largest orbit period.')
    optional_arguments.add_argument('--effective', dest='effective_path', type=str, default=None,
            help='File path to write g_L to as a potential document.')

    subparser, required_arguments, optional_arguments = _add_subparser(subparsers, 'ground-certify',
            'Check a periodic Y-orbit for (f, C)-improvements on intervals of length at most W.')
    _add_instance_arguments(required_arguments)
    required_arguments.add_argument('--orbit', dest='orbit', type=str, required=True,
            help='Cycle of the orbit, comma separated, e.g. "1,0".')
    required_arguments.add_argument('--C', dest='C', type=str, required=True, help='Nonnegative rational C.')
    required_arguments.add_argument('--W', dest='W', type=int, required=True, help='Largest interval length.')

    subparser, required_arguments, optional_arguments = _add_subparser(subparsers, 'hruskova',
            'Reproduce the edge shift example whose ground-state shift is not of finite type.')
    required_arguments.add_argument('--M', dest='M', type=int, required=True, help='Length of the loop run, 1 to 8.')
    required_arguments.add_argument('--C', dest='C', type=str, required=True, help='Rational C in [0, 1).')

    subparser, required_arguments, optional_arguments = _add_subparser(subparsers, 'counterexample',
            'Check the system with delta = 0 > alpha = -1.')
    optional_arguments.add_argument('--kmax', dest='k_max', type=int, default=None, help='Largest horizon.')
    optional_arguments.add_argument('--truncation', dest='truncation', type=int, default=None,
            help='Integer y values examined, at least kmax.')

    subparser, required_arguments, optional_arguments = _add_subparser(subparsers, 'covering-radius',
            'Bracket the covering radius of two shifts, delta of the Hamming potential.')
    required_arguments.add_argument('--x', dest='x_path', type=str, required=True,
            help='File path to the ".json" document of X.')
    required_arguments.add_argument('--y', dest='y_path', type=str, required=True,
            help='File path to the ".json" document of Y.')
    required_arguments.add_argument('--kmax', dest='k_max', type=int, required=True, help='Largest horizon.')
    required_arguments.add_argument('--pmax', dest='pmax', type=int, required=True, help='Largest orbit period.')

    _add_subparser(subparsers, 'run-all', 'Run every scripted scenario; exit status is nonzero if any check fails.')

    return parser

def _flat_frame(document):
    return pd.json_normalize(rationals.to_plain(document))

def render(result, format):
    """
    Renders a result in the requested format.

    Args:
        result              - A Bracket, ScenarioReport, list of ScenarioReport, or a document.
        format              - One of json, csv, text.

    Returns:
        The rendered string.
    """
    reports = result if isinstance(result, list) else None
    if format == "json":
        if reports is not None:
            return json.dumps([r.to_document() for r in reports], indent=2, sort_keys=True)
        return json.dumps(rationals.to_plain(result), indent=2, sort_keys=True)

    if format == "csv":
        if reports is not None:
            return reports_frame(reports).to_csv(index=False)
        if isinstance(result, ScenarioReport):
            return result.to_frame().to_csv(index=False)
        return _flat_frame(result).to_csv(index=False)

    if reports is not None:
        return "\n".join(r.to_text() for r in reports)
    if isinstance(result, ScenarioReport):
        return result.to_text()
    document = rationals.to_plain(result)
    return "\n".join("{}: {}".format(key, json.dumps(value) if isinstance(value, (dict, list)) else value)
            for key, value in sorted(document.items()))

def execute(opt):
    """
    Runs the selected subcommand.

    Returns:
        (result, exit_code)
    """
    if opt.command == 'rk':
        return advopt.compute_r_k(opt.settings_path, opt.x_path, opt.y_path, opt.f_path, opt.k, opt.pruning,
                opt.logging), 0
    if opt.command == 'delta':
        bracket = advopt.compute_delta(opt.settings_path, opt.x_path, opt.y_path, opt.f_path, opt.k_max, opt.pmax,
                opt.logging)
        if opt.report_path is not None:
            advopt.write_report(opt.settings_path, bracket, opt.report_path)
        return bracket, 0
    if opt.command == 'alpha-per':
        return advopt.compute_alpha_per(opt.settings_path, opt.x_path, opt.y_path, opt.f_path, opt.pmax,
                opt.witness), 0
    if opt.command == 'alpha':
        if (opt.k_max is None) != (opt.pmax is None):
            ErrorExit("--kmax and --pmax must be given together", 2)
        return advopt.compute_alpha(opt.settings_path, opt.x_path, opt.y_path, opt.f_path, opt.L, opt.k_max,
                opt.pmax, opt.effective_path, opt.logging), 0
    if opt.command == 'ground-certify':
        return advopt.certify_ground_state(opt.settings_path, opt.x_path, opt.y_path, opt.f_path, opt.orbit, opt.C,
                opt.W), 0
    if opt.command == 'hruskova':
        return advopt.hruskova(opt.settings_path, opt.M, opt.C), 0
    if opt.command == 'counterexample':
        return advopt.counterexample(opt.settings_path, opt.k_max, opt.truncation), 0
    if opt.command == 'covering-radius':
        return advopt.covering_radius(opt.settings_path, opt.x_path, opt.y_path, opt.k_max, opt.pmax,
                opt.logging), 0
    reports = advopt.run_scenarios(opt.settings_path, opt.logging)
    return reports, 0 if all(report.overall() for report in reports) else 1

def main(argv = None):
    """
    This is the main function to execute the program
    """
    parser = build_parser()
    opt = parser.parse_args(argv)

    try:
        result, exit_code = execute(opt)
    except AssertionFailureError as e:
        if e.report is None:
            ErrorExit(str(e))
        result, exit_code = e.report, 1
    except AdversarialOptimizationError as e:
        ErrorExit(str(e))

    if opt.output_path is not None:
        document = [r.to_document() for r in result] if isinstance(result, list) else result
        advopt.write_document(opt.settings_path, document, opt.output_path)

    print(render(result, opt.format))
    return exit_code

if __name__ == '__main__':
    sys.exit(main())
