"""Select the elimination kernel at import time.

The compiled extension is preferred when it was built; set MODDEF_PURE=1 to
force the pure-Python kernel (used by the benchmark and for debugging).
"""

import os

if os.environ.get("MODDEF_PURE"):
    from . import _kernel_py as kernel

    BACKEND = "python"
else:
    try:
        from . import _kernel_c as kernel  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernel_py as kernel

        BACKEND = "python"
