"""Worker-count policy for the search routines.

QCGIRTH_THREADS caps the number of worker threads; unset or 0 means "use the
available parallelism".  Results never depend on the worker count: parallel
callers split work into fixed chunks and reduce with order-independent
operations.
"""

from __future__ import annotations

import os

ENV_VAR = "QCGIRTH_THREADS"


def worker_count() -> int:
    raw = os.environ.get(ENV_VAR, "").strip()
    if raw:
        try:
            value = int(raw)
        except ValueError as exc:
            raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from exc
        if value > 0:
            return value
    return os.cpu_count() or 1
