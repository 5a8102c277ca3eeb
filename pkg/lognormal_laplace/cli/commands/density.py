from lognormal_laplace.cli.dependencies import Dependencies
from lognormal_laplace.models.records import RecordSet, RunSpec
from lognormal_laplace.services.density_service import (
    build_boundary_mesh,
    first_moment,
    lognormal_density,
)


async def run_density(spec: RunSpec, deps: Dependencies) -> RecordSet:
    components = spec.components
    mesh = build_boundary_mesh(spec.options['t_max_sqrt'], spec.options['step'])
    samples, curve = await deps.density_service.density(
        components, spec.reals, mesh=mesh, method=spec.method
    )
    columns = ['x', 'f']
    rows = [{'x': x, 'f': f} for x, f in zip(curve.x_nodes, curve.f_values)]
    if len(components) == 1:
        columns.append('reference')
        for row in rows:
            row['reference'] = lognormal_density(row['x'], components[0])
    comments = [
        'components ' + ' + '.join(str(p) for p in components.components),
        f'boundary method {samples.method_tag}, {samples.t_nodes.size} nodes up to t = {samples.t_nodes[-1]:g}, '
        f'small-z series at {samples.series_nodes} nodes',
        f'mass_estimate={curve.mass_estimate:.17g}',
        f'first_moment={first_moment(curve):.17g}',
        f'mean={components.mean:.17g}',
    ]
    return RecordSet(columns=columns, rows=rows, comments=comments)
