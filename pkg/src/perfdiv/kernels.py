"""Backend selection for the search kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is.  Setting ``PERFDIV_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from perfdiv import _pykernels

if os.environ.get("PERFDIV_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from perfdiv import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

max_clique = _impl.max_clique
maximum_cliques = _impl.maximum_cliques
color = _impl.color
odd_hole = _impl.odd_hole
induced_embedding = _impl.induced_embedding
perfect_table = _impl.perfect_table
omega_table = _impl.omega_table
first_indivisible = _impl.first_indivisible
first_without_anti_divider = _impl.first_without_anti_divider

__all__ = [
    "BACKEND",
    "max_clique",
    "maximum_cliques",
    "color",
    "odd_hole",
    "induced_embedding",
    "perfect_table",
    "omega_table",
    "first_indivisible",
    "first_without_anti_divider",
]
