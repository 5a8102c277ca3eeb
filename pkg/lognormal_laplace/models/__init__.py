from lognormal_laplace.models.approx import ApproxResult, SigmaAsymConfig, SmallZConfig
from lognormal_laplace.models.complex_plane import Boundary, ContourSpec, CutPlanePoint
from lognormal_laplace.models.inversion import BoundarySamples, DensityCurve
from lognormal_laplace.models.params import ComponentList, LognormalParams
