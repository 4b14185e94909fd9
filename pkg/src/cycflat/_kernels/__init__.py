"""Kernel backend selection.

The compiled extension is used when it imports; set ``CYCFLAT_PURE_PYTHON=1``
to force the pure-Python twin.  ``BACKEND`` names the active choice.
"""

import os

from . import _pykernel as python

if os.environ.get("CYCFLAT_PURE_PYTHON", "") not in ("", "0"):
    compiled = None
else:
    try:
        from . import _ckernel as compiled
    except ImportError:  # extension not built
        compiled = None

active = compiled if compiled is not None else python
BACKEND = "cython" if compiled is not None else "python"

rank = active.rank
rank_table = active.rank_table
cyclic_flats_by_subsets = active.cyclic_flats_by_subsets
cyclic_flats_by_flats = active.cyclic_flats_by_flats

__all__ = ["BACKEND", "compiled", "python", "rank", "rank_table",
           "cyclic_flats_by_subsets", "cyclic_flats_by_flats"]
