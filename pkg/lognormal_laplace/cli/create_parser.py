import argparse
from pathlib import Path
from typing import Optional

from lognormal_laplace.config import Config
from lognormal_laplace.config.evaluators import EvaluatorsConfig
from lognormal_laplace.cli.grids import (
    parse_components,
    parse_point_grid,
    parse_real_grid,
)
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.models.records import OutputFormat, RunSpec, Subcommand
from lognormal_laplace.utils.errors import ValidationFailedError, exit_codes

DESCRIPTION = """Laplace transform of the lognormal distribution on the cut plane C \\ (-inf, 0],
its boundary values on the cut and the density of sums of independent lognormals.

grids are a comma list `a,b,c` or a range `start:stop:step` (stop included);
z may be complex, written `a+bj`. A grid starting with a minus sign is passed
with an equals sign: `--z=-1,-2`."""

# flag dest -> evaluator option name
EVAL_OPTIONS = {
    'alpha': 'alpha',
    'terms': 'n_terms',
    'k_bound': 'k_bound',
    'k': 'k',
    'n_poles': 'n_poles',
    'm_terms': 'm_terms',
}


def _epilog() -> str:
    lines = ['exit codes:', '  0  success']
    for code, info in sorted(exit_codes.items()):
        lines.append(f'  {code}  {info["description"]}')
    return '\n'.join(lines)


def create_parser(config: Config, evaluators: Optional[EvaluatorsConfig] = None) -> argparse.ArgumentParser:
    evaluators = evaluators or EvaluatorsConfig()
    parser = argparse.ArgumentParser(
        prog='lognormal_laplace',
        description=DESCRIPTION,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=_epilog(),
    )
    parser.add_argument('--version', action='version', version=config.VERSION)

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument(
        '--format',
        dest='output_format',
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.csv.value,
    )
    output.add_argument('--out', type=Path, default=None, help='output file, standard output when omitted')

    subparsers = parser.add_subparsers(dest='subcommand', required=True, metavar='subcommand')

    eval_parser = subparsers.add_parser(
        Subcommand.eval.value,
        parents=[output],
        help='evaluate phi(z) on a grid with one method',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='methods: ' + ', '.join(evaluators.selectors()),
    )
    eval_parser.add_argument('--method', default=config.BOUNDARY_METHOD)
    _add_params(eval_parser)
    eval_parser.add_argument('--z', required=True, help='grid of transform arguments')
    eval_parser.add_argument(
        '--upper-limit',
        action='store_true',
        help='read negative reals -t as the limits -t + i0 from the upper half-plane',
    )
    eval_parser.add_argument('--alpha', type=float, default=None, help='series split point, >= 1')
    eval_parser.add_argument('--terms', type=int, default=None, help='series terms n = 0 .. terms - 1')
    eval_parser.add_argument('--k-bound', type=float, default=None, help='abscissa of the series error bound')
    eval_parser.add_argument('--k', type=float, default=None, help='Mellin-Barnes contour abscissa')
    eval_parser.add_argument('--n-poles', type=int, default=None, help='gamma poles removed exactly')
    eval_parser.add_argument('--m-terms', type=int, default=None, help='Hermite terms')

    table_parser = subparsers.add_parser(
        Subcommand.table.value, parents=[output], help='recompute a golden table'
    )
    table_parser.add_argument('table_id', type=int)

    density_parser = subparsers.add_parser(
        Subcommand.density.value,
        parents=[output],
        help='density of a sum of independent lognormals',
    )
    density_parser.add_argument('--components', required=True, help='mu:sigma[,mu:sigma...]')
    density_parser.add_argument('--x', required=True, help='grid of abscissas, all >= 0')
    density_parser.add_argument('--method', default=None, help='boundary evaluator')
    density_parser.add_argument('--t-max-sqrt', type=float, default=config.MESH_T_MAX_SQRT)
    density_parser.add_argument('--step', type=float, default=config.MESH_STEP)

    thorin_parser = subparsers.add_parser(
        Subcommand.thorin.value, parents=[output], help='Thorin density U(t) of one lognormal'
    )
    _add_params(thorin_parser)
    thorin_parser.add_argument('--t', required=True, help='grid of t > 0')

    leipnik_parser = subparsers.add_parser(
        Subcommand.leipnik_demo.value,
        parents=[output],
        help='Leipnik contour integral next to the characteristic function',
    )
    leipnik_parser.add_argument('--sigma', type=float, required=True)
    leipnik_parser.add_argument('--k', type=float, default=0.5, help='contour abscissa, any real')
    leipnik_parser.add_argument('--t', required=True, help='grid of t > 0')

    return parser


def _add_params(parser: argparse.ArgumentParser):
    parser.add_argument('--mu', type=float, default=0.0)
    parser.add_argument('--sigma', type=float, required=True)


def _resolve_method(evaluators: EvaluatorsConfig, selector: Optional[str]) -> Optional[str]:
    if selector is None:
        return None
    try:
        return evaluators.resolve(selector)
    except KeyError as e:
        raise ValidationFailedError('--method', str(e.args[0])) from None


def build_run_spec(args: argparse.Namespace, evaluators: Optional[EvaluatorsConfig] = None) -> RunSpec:
    """Validates every argument of one invocation before any computation starts."""
    evaluators = evaluators or EvaluatorsConfig()
    subcommand = Subcommand(args.subcommand)
    common = dict(
        subcommand=subcommand,
        output_format=OutputFormat(args.output_format),
        out=args.out,
    )

    if subcommand is Subcommand.eval:
        options = {
            option: getattr(args, dest)
            for dest, option in EVAL_OPTIONS.items()
            if getattr(args, dest) is not None
        }
        return RunSpec(
            method=_resolve_method(evaluators, args.method),
            params=LognormalParams(mu=args.mu, sigma=args.sigma),
            points=tuple(parse_point_grid(args.z, args.upper_limit, source='--z')),
            options=options,
            **common,
        )
    if subcommand is Subcommand.table:
        return RunSpec(table_id=args.table_id, **common)
    if subcommand is Subcommand.density:
        x = parse_real_grid(args.x, source='--x')
        if min(x) < 0:
            raise ValidationFailedError('--x', f'abscissas must be >= 0, got {min(x)}')
        return RunSpec(
            method=_resolve_method(evaluators, args.method),
            components=parse_components(args.components, source='--components'),
            reals=tuple(x),
            options={'t_max_sqrt': args.t_max_sqrt, 'step': args.step},
            **common,
        )
    if subcommand is Subcommand.thorin:
        return RunSpec(
            params=LognormalParams(mu=args.mu, sigma=args.sigma),
            reals=tuple(_positive_grid(args.t, '--t')),
            **common,
        )
    return RunSpec(
        params=LognormalParams(sigma=args.sigma),
        reals=tuple(_positive_grid(args.t, '--t')),
        options={'k': args.k},
        **common,
    )


def _positive_grid(text: str, source: str) -> list[float]:
    values = parse_real_grid(text, source=source)
    if min(values) <= 0:
        raise ValidationFailedError(source, f'values must be > 0, got {min(values)}')
    return values
