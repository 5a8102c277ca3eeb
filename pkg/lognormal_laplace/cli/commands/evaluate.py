from lognormal_laplace.cli.dependencies import Dependencies
from lognormal_laplace.models.records import RecordSet, RunSpec

COLUMNS = ['z_re', 'z_im', 'method', 'value_re', 'value_im', 'error_bound']


async def run_eval(spec: RunSpec, deps: Dependencies) -> RecordSet:
    results = await deps.evaluation_service.evaluate_grid(
        spec.method, spec.points, spec.params, **spec.options
    )
    rows = [
        {
            'z_re': point.re,
            'z_im': point.im,
            'method': result.method,
            'value_re': result.value.real,
            'value_im': result.value.imag,
            'error_bound': result.error_bound if result.has_bound else None,
        }
        for point, result in zip(spec.points, results)
    ]
    comments = [f'{spec.params}']
    if any(point.is_boundary for point in spec.points):
        comments.append('negative z_re with z_im = 0 are the limits -t + i0')
    return RecordSet(columns=COLUMNS, rows=rows, comments=comments)
