from lognormal_laplace.cli.dependencies import Dependencies
from lognormal_laplace.models.records import RecordSet, RunSpec


def sigma_column(sigma: float) -> str:
    return f'sigma={sigma:g}'


async def run_table(spec: RunSpec, deps: Dependencies) -> RecordSet:
    service = deps.table_service
    table = service.get_table(spec.table_id)
    cells = await service.compute(table.id)
    columns = ['z'] + [sigma_column(s) for s in table.sigma]
    rows = [
        {'z': z, **{sigma_column(s): value for s, value in zip(table.sigma, row)}}
        for z, row in zip(table.z, cells)
    ]
    return RecordSet(columns=columns, rows=rows, comments=service.footer(table))
