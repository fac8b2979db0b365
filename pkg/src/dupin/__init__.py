"""Numerical certification of curvature structure for Dupin and
isoparametric hypersurfaces in spheres.

Subpackages and modules:
  numkit    clustered symmetric eigensolves, Gram-Schmidt frames, FD Jacobians
  quat      quaternion arithmetic
  liegeo    Lie sphere coordinates, contact, cross ratios, parallel transforms
  clifford  Clifford systems (construction and certification)
  engine    constraint manifolds, shape operators, spectra, tubes
  otfkm     Clifford-Stiefel focal manifolds and their certification
  ptdeform  the deformed (non-isoparametric) Dupin family
  hopfmo    product hypersurfaces of S^4, Möbius warps, Hopf lifts
  morse     critical-point counts and taut doubling checks
  cli       the `dupin` command line tool
"""

from ._kern import BACKEND as kernel_backend

__version__ = "0.1.0"

__all__ = ["kernel_backend", "__version__"]
