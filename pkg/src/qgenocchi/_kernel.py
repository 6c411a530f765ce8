"""Kernel backend selection.

Imports the compiled extension when it is built, otherwise the pure-Python
implementation.  Set QGENOCCHI_PURE=1 to force the pure backend (used by
the benchmark and the parity tests).
"""

import os

if os.environ.get("QGENOCCHI_PURE") == "1":
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND
poly_trim = _impl.poly_trim
poly_mul = _impl.poly_mul
poly_content = _impl.poly_content
poly_primitive = _impl.poly_primitive
poly_pseudo_rem = _impl.poly_pseudo_rem
poly_gcd = _impl.poly_gcd
poly_divexact = _impl.poly_divexact
poly_eval_int = _impl.poly_eval_int
alt_weighted_int_sum = _impl.alt_weighted_int_sum
alt_weighted_mod_sum = _impl.alt_weighted_mod_sum
