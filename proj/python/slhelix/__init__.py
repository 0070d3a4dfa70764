"""Constant-angle (helix) surfaces in SL(2,R).

Construction of the three classified surface families, their differential
geometry (normal, angle, shape operator, Gauss curvature) and the numeric
certification of every structural identity they satisfy.
"""

import json as _json

try:
    from ._slhelix import (
        HelixSurface,
        IsometryFamily,
        ModelParams,
        XiFn,
        admissibility_residual,
        apply_J,
        case_params,
        dot22,
        hopf_project,
        solve_admissible,
    )
except ImportError:  # in-build layout: the extension sits next to the package
    from _slhelix import (
        HelixSurface,
        IsometryFamily,
        ModelParams,
        XiFn,
        admissibility_residual,
        apply_J,
        case_params,
        dot22,
        hopf_project,
        solve_admissible,
    )

__all__ = [
    "HelixSurface",
    "IsometryFamily",
    "ModelParams",
    "XiFn",
    "admissibility_residual",
    "apply_J",
    "case_params",
    "certify",
    "dot22",
    "hopf_project",
    "solve_admissible",
]

__version__ = "0.1.0"


def certify(surface, nu=25, nv=25, tol_scale=1.0):
    """Run the full certification battery and return the report as a dict."""
    return _json.loads(surface.certify_json(nu, nv, tol_scale))
