from pydantic import BaseSettings


class NumericsConfig(BaseSettings):
    # direct quadrature on the Gaussian-weighted form
    DIRECT_ABS_TOL: float = 1e-11
    DIRECT_REL_TOL: float = 1e-12
    DIRECT_LIMITS: list[int] = [200, 800, 3200]
    DIRECT_HALF_WIDTH: float = 38.0  # standard deviations kept on each side

    # Filon quadrature of the continuation integral
    FILON_NODES: int = 2001
    FILON_MAX_PHASE: float = 0.01  # largest t * panel width before refining
    FILON_MAX_NODES: int = 400001
    FILON_CLIP: float = 1e-18  # fraction of the peak kept at the mesh ends
    FILON_TAIL_RATIO: float = 1e-13
    CONTINUATION_MAX_LOST_DIGITS: float = 12.0  # refuse values with fewer digits left

    # Mellin-Barnes trapezoid
    MB_DEFAULT_K: float = 1.0
    MB_MAX_STEP: float = 0.1
    MB_MAJORANT_RATIO: float = 1e-16
    MB_MAX_NODES: int = 2_000_000

    # series
    SERIES_MAX_TERMS: int = 500
    SERIES_DEFAULT_ALPHA: float = 10.0
    SERIES_DEFAULT_TERMS: int = 41
    ASYM_DEFAULT_POLES: int = 5
    ASYM_DEFAULT_TERMS: int = 10

    # inversion
    BOUNDARY_METHOD: str = 'mellin_barnes'
    BOUNDARY_LOW_SIGMA_WARNING: float = 0.35
    BOUNDARY_SERIES_RTOL: float = 1e-10  # certified series replaces the default method below this, 0 disables
    MESH_T_MAX_SQRT: float = 9.0
    MESH_STEP: float = 0.01
    INVERSION_TAIL_TOL: float = 1e-3
    THORIN_MIN_MODULUS: float = 1e-280
