"""Integer polynomial kernels in q: compiled backend when available.

Set AFFGROTH_PURE=1 to force the pure-Python reference kernels; otherwise the
Cython extension _qpoly_c is used when importable.  Both expose the same
functions on tuples of ints (constant term first, no trailing zeros).
"""

import os

if os.environ.get("AFFGROTH_PURE"):
    from . import _qpoly_py as _impl
    BACKEND = "pure"
else:
    try:
        from . import _qpoly_c as _impl
        BACKEND = "compiled"
    except ImportError:
        from . import _qpoly_py as _impl
        BACKEND = "pure"

pstrip = _impl.pstrip
padd = _impl.padd
psub = _impl.psub
pneg = _impl.pneg
pmul = _impl.pmul
pcontent = _impl.pcontent
pprimitive = _impl.pprimitive
pdivexact = _impl.pdivexact
pgcd = _impl.pgcd
