"""Backend selection for the small-graph kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_kernels_py`` module. Set ``CHROMWIN_PURE=1`` to force the
fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py

_impl: ModuleType = _kernels_py
if os.environ.get("CHROMWIN_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND: str = _impl.BACKEND

decode = _impl.decode
has_clique = _impl.has_clique
clique_number = _impl.clique_number
is_colorable = _impl.is_colorable
chromatic_number = _impl.chromatic_number
bipartite_max_matching = _impl.bipartite_max_matching
hall_deficiency_masks = _impl.hall_deficiency_masks
scan_lemma_basic = _impl.scan_lemma_basic
scan_lemma_xyz = _impl.scan_lemma_xyz
scan_aes = _impl.scan_aes
scan_hall = _impl.scan_hall


def backend_module(name: str) -> ModuleType:
    """Return a specific backend ("python" or "cython") regardless of the active one."""
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")


def compiled_available() -> bool:
    try:
        from . import _ckernels  # noqa: F401
    except ImportError:
        return False
    return True
