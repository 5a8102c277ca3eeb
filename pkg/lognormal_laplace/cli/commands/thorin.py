from lognormal_laplace.cli.dependencies import Dependencies
from lognormal_laplace.models.records import RecordSet, RunSpec


async def run_thorin(spec: RunSpec, deps: Dependencies) -> RecordSet:
    values = await deps.density_service.thorin(spec.params, spec.reals)
    rows = [{'t': t, 'U': u} for t, u in zip(spec.reals, values)]
    return RecordSet(columns=['t', 'U'], rows=rows, comments=[f'Thorin density of {spec.params}'])
