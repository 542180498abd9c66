"""Integer kernels behind congruence enumeration.

Two interchangeable backends implement the same six functions: a Cython
extension (``_ckern``) and a pure-Python fallback (``_pykern``).  The
compiled one is picked when importable; set ``PATHCONG_PURE=1`` to force
the fallback (the benchmark script uses this to compare the two).
"""

import os

from . import _pykern

if os.environ.get("PATHCONG_PURE"):
    _impl = _pykern
else:
    try:
        from . import _ckern as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykern

BACKEND = "cython" if _impl is not _pykern else "pure"

canonical_labels = _impl.canonical_labels
join_labels = _impl.join_labels
meet_labels = _impl.meet_labels
principal_labels = _impl.principal_labels
is_congruence_labels = _impl.is_congruence_labels
congruences_bruteforce = _impl.congruences_bruteforce

__all__ = [
    "BACKEND",
    "canonical_labels",
    "join_labels",
    "meet_labels",
    "principal_labels",
    "is_congruence_labels",
    "congruences_bruteforce",
]
