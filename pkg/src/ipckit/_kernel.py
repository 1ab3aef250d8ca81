"""Kernel selection: compiled extension when available, pure Python otherwise.

Set IPCKIT_PURE=1 to force the pure scanner.
"""

import os

from . import _pureval

if os.environ.get("IPCKIT_PURE"):
    _impl = _pureval
else:
    try:
        from . import _fastval as _impl
    except ImportError:
        _impl = _pureval

KERNEL = "compiled" if _impl is not _pureval else "pure"

scan_validity = _impl.scan_validity
pure_scan_validity = _pureval.scan_validity
eval_program = _pureval.eval_program
