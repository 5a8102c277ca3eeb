"""
Density of X_1 + ... + X_n from the boundary values of the transform,

    f(x) = -(1 / pi) int_0^inf Im phi(-t + i0) e^{-tx} dt,  phi = prod_j phi_j,

and the Thorin density U(t) = Im[phi'(-t + i0) / phi(-t + i0)] / pi of one lognormal.
"""
import math
from typing import Optional, Sequence

import numpy as np
from scipy import stats

from lognormal_laplace.config import Config, default_config
from lognormal_laplace.evaluators import EvaluatorRegistry
from lognormal_laplace.evaluators.mellin_barnes.mellin_barnes_evaluator import (
    mellin_barnes_derivative,
    mellin_barnes_transform,
)
from lognormal_laplace.evaluators.small_z_series.small_z_series_evaluator import certified_series
from lognormal_laplace.models.approx import SmallZConfig
from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.models.inversion import BoundarySamples, DensityCurve
from lognormal_laplace.models.params import ComponentList, LognormalParams
from lognormal_laplace.quadrature.filon import FilonMesh
from lognormal_laplace.services.worker_pool import WorkerPool
from lognormal_laplace.utils.errors import (
    BaseLaplaceError,
    DivisionError,
    MeshError,
    NonFiniteError,
    TailError,
    TermOverflow,
    ValidationFailedError,
)
from lognormal_laplace.utils.logger import LogArgs, get_logger

logger = get_logger(__name__)

NEGATIVE_DENSITY_TOLERANCE = 1e-6


def build_boundary_mesh(t_max_sqrt: float, step: float) -> np.ndarray:
    """Squares of 0, step, 2 step, ..., t_max_sqrt; extended by one node when the count is even."""
    if not (step > 0 and math.isfinite(step)):
        raise ValidationFailedError('build_boundary_mesh', f'step must be > 0, got {step}')
    n = int(math.floor(t_max_sqrt / step + 1e-9))
    if n + 1 < 3:
        raise MeshError(
            'build_boundary_mesh', f'{n + 1} nodes from t_max_sqrt = {t_max_sqrt}, step = {step}'
        )
    if (n + 1) % 2 == 0:
        n += 1
        logger.debug('boundary mesh extended to %s nodes for an odd count', n + 1)
    return (step * np.arange(n + 1, dtype=float)) ** 2


def select_boundary_method(
    sigma: float, override: Optional[str] = None, config: Optional[Config] = None
) -> str:
    config = config or default_config()
    method = override or config.BOUNDARY_METHOD
    if sigma < config.BOUNDARY_LOW_SIGMA_WARNING:
        logger.warning(
            'boundary values for sigma = %(sigma)s are amplified by more than 1e8, method %(method)s',
            {LogArgs.sigma: sigma, LogArgs.method: method},
        )
    return method


def _series_value(point: CutPlanePoint, params: LognormalParams, config: Config) -> Optional[complex]:
    """The small-z series when its certified error is below BOUNDARY_SERIES_RTOL relative to the value."""
    cfg = SmallZConfig(alpha=config.SERIES_DEFAULT_ALPHA, n_terms=config.SERIES_DEFAULT_TERMS)
    try:
        result = certified_series(point, params, cfg)
    except (TermOverflow, NonFiniteError):
        return None
    if result.error_bound <= config.BOUNDARY_SERIES_RTOL * abs(result.value):
        return result.value
    return None


def boundary_value(
    components: ComponentList,
    t: float,
    method: str,
    registry: EvaluatorRegistry,
    config: Optional[Config] = None,
    series_first: bool = False,
) -> tuple[complex, int]:
    """
    prod_j phi_j(-t + i0), exactly 1 at t = 0, and the number of factors taken from the
    certified series instead of the method when series_first is set.
    """
    if t == 0:
        return 1 + 0j, 0
    config = config or default_config()
    evaluator = registry[method]
    point = CutPlanePoint.on_cut(t)
    value, from_series = 1 + 0j, 0
    for j, params in enumerate(components.components):
        factor = _series_value(point, params, config) if series_first else None
        if factor is not None:
            from_series += 1
        else:
            try:
                factor = evaluator.evaluate(point, params).value
            except BaseLaplaceError as e:
                raise e.with_context(component=j, t=t)
        value *= factor
    return value, from_series


def boundary_transform(
    components: ComponentList,
    mesh: Sequence[float],
    method: Optional[str] = None,
    registry: Optional[EvaluatorRegistry] = None,
    config: Optional[Config] = None,
) -> BoundarySamples:
    config = config or default_config()
    registry = registry or _default_registry(config)
    series_first = _series_first(method, config)
    method = _resolve(registry, select_boundary_method(_min_sigma(components), method, config))
    results = [boundary_value(components, float(t), method, registry, config, series_first) for t in mesh]
    return _samples(mesh, results, method)


def density_at(
    boundary: FilonMesh, x: float, t_end: float, im_end: float, config: Optional[Config] = None
) -> float:
    config = config or default_config()
    if x == 0:
        return 0.0
    if not x > 0:
        raise ValidationFailedError('density_from_boundary', f'x must be >= 0, got {x}')
    tail = abs(im_end) * math.exp(-t_end * x) / (math.pi * x)
    if tail > config.INVERSION_TAIL_TOL:
        raise TailError(
            'density_from_boundary',
            f'dropped tail {tail:.3g} at x = {x} exceeds {config.INVERSION_TAIL_TOL:g}, t_end = {t_end:g}',
            x=x,
        )
    return -boundary.integrate(-x).real / math.pi


def density_from_boundary(
    samples: BoundarySamples, x_nodes: Sequence[float], config: Optional[Config] = None
) -> DensityCurve:
    boundary = _imaginary_mesh(samples)
    t_end, im_end = float(samples.t_nodes[-1]), float(samples.values[-1].imag)
    f = [density_at(boundary, float(x), t_end, im_end, config) for x in x_nodes]
    return _curve(x_nodes, f)


def thorin_density(t: float, params: LognormalParams, config: Optional[Config] = None) -> float:
    """U(t) = Im[phi'(-t + i0) / phi(-t + i0)] / pi, with phi' from the Mellin-Barnes integrand."""
    config = config or default_config()
    if not t > 0:
        raise ValidationFailedError('thorin_density', f't must be > 0, got {t}')
    point = CutPlanePoint.on_cut(t)
    value = mellin_barnes_transform(point, params, config=config)
    if abs(value) < config.THORIN_MIN_MODULUS:
        raise DivisionError('thorin_density', f'|phi(-{t:g} + i0)| = {abs(value):.3g}', t=t)
    derivative = mellin_barnes_derivative(point, params, config=config)
    return (derivative / value).imag / math.pi


def lognormal_density(x: float, params: LognormalParams) -> float:
    return float(stats.lognorm.pdf(x, s=params.sigma, scale=math.exp(params.mu)))


def first_moment(curve: DensityCurve) -> float:
    return curve.first_moment


def _series_first(override: Optional[str], config: Config) -> bool:
    return override is None and config.BOUNDARY_SERIES_RTOL > 0


def _samples(mesh: Sequence[float], results: list[tuple[complex, int]], method: str) -> BoundarySamples:
    series_nodes = sum(1 for _, from_series in results if from_series)
    if series_nodes:
        logger.debug('%s boundary nodes from the certified small-z series', series_nodes)
    return BoundarySamples(
        t_nodes=mesh,
        values=[value for value, _ in results],
        method_tag=method,
        series_nodes=series_nodes,
    )


def _imaginary_mesh(samples: BoundarySamples) -> FilonMesh:
    return FilonMesh.from_samples(samples.t_nodes, samples.values.imag)


def _curve(x_nodes: Sequence[float], f: Sequence[float]) -> DensityCurve:
    curve = DensityCurve.from_values(x_nodes, f)
    if curve.f_values.size and curve.f_values.min() < -NEGATIVE_DENSITY_TOLERANCE:
        logger.warning('density goes negative: min f = %.3g', curve.f_values.min())
    logger.info('density on %s nodes, mass %.6f', curve.x_nodes.size, curve.mass_estimate)
    return curve


def _min_sigma(components: ComponentList) -> float:
    return min(p.sigma for p in components.components)


def _resolve(registry: EvaluatorRegistry, method: str) -> str:
    try:
        return registry[method].EVALUATOR_NAME
    except KeyError as e:
        raise ValidationFailedError('boundary_transform', str(e.args[0])) from None


def _default_registry(config: Config) -> EvaluatorRegistry:
    from lognormal_laplace.cli.dependencies import create_registry

    return create_registry(config)


class DensityService:
    def __init__(
        self,
        *,
        config: Config,
        evaluator_registry: EvaluatorRegistry,
        worker_pool: WorkerPool,
    ):
        self.config = config
        self.evaluator_registry = evaluator_registry
        self.worker_pool = worker_pool

    def default_mesh(self) -> np.ndarray:
        return build_boundary_mesh(self.config.MESH_T_MAX_SQRT, self.config.MESH_STEP)

    async def boundary_transform(
        self,
        components: ComponentList,
        mesh: Optional[Sequence[float]] = None,
        method: Optional[str] = None,
    ) -> BoundarySamples:
        mesh = self.default_mesh() if mesh is None else mesh
        series_first = _series_first(method, self.config)
        method = _resolve(
            self.evaluator_registry,
            select_boundary_method(_min_sigma(components), method, self.config),
        )
        logger.info(
            'boundary values of %(component)s components on %(nodes)s nodes with %(method)s',
            {LogArgs.component: len(components), LogArgs.nodes: len(mesh), LogArgs.method: method},
        )
        results = await self.worker_pool.map(
            lambda t: boundary_value(
                components, float(t), method, self.evaluator_registry, self.config, series_first
            ),
            mesh,
        )
        return _samples(mesh, results, method)

    async def density(
        self,
        components: ComponentList,
        x_nodes: Sequence[float],
        mesh: Optional[Sequence[float]] = None,
        method: Optional[str] = None,
    ) -> tuple[BoundarySamples, DensityCurve]:
        samples = await self.boundary_transform(components, mesh, method)
        boundary = _imaginary_mesh(samples)
        t_end, im_end = float(samples.t_nodes[-1]), float(samples.values[-1].imag)
        f = await self.worker_pool.map(
            lambda x: density_at(boundary, float(x), t_end, im_end, self.config), x_nodes
        )
        return samples, _curve(x_nodes, f)

    async def thorin(self, params: LognormalParams, t_nodes: Sequence[float]) -> list[float]:
        return await self.worker_pool.map(
            lambda t: thorin_density(float(t), params, self.config), t_nodes
        )
