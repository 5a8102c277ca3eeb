"""
Leipnik's contour integral set against the characteristic function. The two differ:
the integral is half the difference of phi on two sheets and vanishes as t -> 0,
while the characteristic function tends to 1.
"""
from lognormal_laplace.cli.dependencies import Dependencies
from lognormal_laplace.evaluators.mellin_barnes.mellin_barnes_evaluator import (
    characteristic_function,
    leipnik_formula,
)
from lognormal_laplace.models.records import RecordSet, RunSpec

COLUMNS = ['t', 'leipnik_re', 'leipnik_im', 'cf_re', 'cf_im', 'leipnik_abs', 'cf_abs']


async def run_leipnik_demo(spec: RunSpec, deps: Dependencies) -> RecordSet:
    config = deps.config
    params = spec.params
    k = spec.options['k']

    def row(t: float) -> dict:
        leipnik = leipnik_formula(t, params.sigma, k, config)
        cf = characteristic_function(t, params, config=config)
        return {
            't': t,
            'leipnik_re': leipnik.real,
            'leipnik_im': leipnik.imag,
            'cf_re': cf.real,
            'cf_im': cf.imag,
            'leipnik_abs': abs(leipnik),
            'cf_abs': abs(cf),
        }

    rows = await deps.worker_pool.map(row, spec.reals)
    return RecordSet(
        columns=COLUMNS, rows=rows, comments=[f'{params}, Leipnik contour at Re s = {k:g}']
    )
