"""Kernel backend selection.

The compiled extension is used when it imported cleanly and the environment
variable DUPIN_PURE is unset/empty; otherwise the NumPy reference backend
takes over. Both expose the same functions with identical semantics.
"""

import os

from . import pure

_impl = pure
if not os.environ.get("DUPIN_PURE"):
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND

qmul4 = _impl.qmul4
qconj4 = _impl.qconj4
hopf5 = _impl.hopf5
hopf5_batch = _impl.hopf5_batch
hopf_jac = _impl.hopf_jac
hopf_jac_batch = _impl.hopf_jac_batch
fiber_point = _impl.fiber_point
fiber_jac = _impl.fiber_jac
mobius_point = _impl.mobius_point
mobius_jac = _impl.mobius_jac
mobius_point_batch = _impl.mobius_point_batch
mobius_jac_batch = _impl.mobius_jac_batch
cartan_val = _impl.cartan_val
cartan_grad = _impl.cartan_grad
cartan_val_batch = _impl.cartan_val_batch
cartan_grad_batch = _impl.cartan_grad_batch
mo_val_batch = _impl.mo_val_batch
mo_grad_batch = _impl.mo_grad_batch
mo_guard_batch = _impl.mo_guard_batch
ptc_values = _impl.ptc_values
ptc_grads = _impl.ptc_grads
ptc_project = _impl.ptc_project

__all__ = [
    "BACKEND",
    "qmul4",
    "qconj4",
    "hopf5",
    "hopf5_batch",
    "hopf_jac",
    "hopf_jac_batch",
    "fiber_point",
    "fiber_jac",
    "mobius_point",
    "mobius_jac",
    "mobius_point_batch",
    "mobius_jac_batch",
    "cartan_val",
    "cartan_grad",
    "cartan_val_batch",
    "cartan_grad_batch",
    "mo_val_batch",
    "mo_grad_batch",
    "mo_guard_batch",
    "ptc_values",
    "ptc_grads",
    "ptc_project",
]
