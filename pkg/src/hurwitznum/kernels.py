"""Backend selection for the involution scan kernel.

Prefers the compiled extension `_speed` when it is importable, falling back
to the pure Python twin `_purekernels`.  Setting the environment variable
``HURWITZNUM_PURE`` to a non-empty value forces the pure backend, which is
useful for benchmarking and for debugging the compiled kernel against its
reference implementation.
"""

from __future__ import annotations

import os

if os.environ.get("HURWITZNUM_PURE"):
    from . import _purekernels as _impl
else:
    try:
        from . import _speed as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _purekernels as _impl

scan_involutions_block = _impl.scan_involutions_block


def backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'pure'."""
    return _impl.backend()
