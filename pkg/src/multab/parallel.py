"""Worker-count control shared by the parallel-capable internals."""

from __future__ import annotations

import os

ENV_VAR = "MULTAB_THREADS"


def worker_count() -> int:
    """Workers to use for independent branch evaluation (default: serial).

    MULTAB_THREADS caps (or enables) parallelism; results are reduced in a
    fixed order either way, so outputs never depend on this value.
    """
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(1, value)
