from __future__ import annotations

import contextlib
import logging
import os
from collections.abc import Callable, Iterable, Mapping
from pathlib import Path
from typing import TextIO

import numpy as np
import pandas as pd

from stablevoigt.core.errors import OutputError
from stablevoigt.core.models import MomentResult, ProfileSamples

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"
MOMENT_COLUMNS = ["tau", "q", "value", "method", "error_estimate"]


def atomic_write(path: Path, write: Callable[[TextIO], None]) -> None:
    """Write through a temporary sibling and rename it into place."""
    tmp = path.with_name(path.name + ".tmp")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(tmp, "w", newline="") as f:
            write(f)
        os.replace(tmp, path)
    except OSError as e:
        with contextlib.suppress(OSError):
            tmp.unlink(missing_ok=True)
        raise OutputError(f"could not write {path}: {e}") from e


def ensure_dir(path: Path) -> Path:
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OutputError(f"could not create {path}: {e}") from e
    return path


def window_indices(x: np.ndarray, half_width: float, stride: int = 1) -> np.ndarray:
    """Indices of points with |x| <= half_width, every `stride`-th counted from the center."""
    center = len(x) // 2
    offsets = np.arange(len(x)) - center
    keep = (np.abs(x) <= half_width * (1.0 + 1e-12)) & (offsets % stride == 0)
    return np.flatnonzero(keep)


def profile_frame(samples: ProfileSamples, index: np.ndarray | None = None) -> pd.DataFrame:
    x, values = samples.x, samples.values
    if index is not None:
        x, values = x[index], values[index]
    return pd.DataFrame({"x": x, "value": values})


def write_profile_csv(
    samples: ProfileSamples,
    path: Path,
    *,
    header: Mapping[str, float | int | str] | None = None,
    index: np.ndarray | None = None,
) -> Path:
    """`x,value` CSV, optionally preceded by one `# key=value ...` comment line."""
    frame = profile_frame(samples, index)

    def write(f: TextIO) -> None:
        if header:
            f.write("# " + " ".join(f"{k}={v}" for k, v in header.items()) + "\n")
        frame.to_csv(f, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")

    atomic_write(path, write)
    logger.debug("wrote %d rows to %s", len(frame), path)
    return path


def write_moments_csv(results: Iterable[MomentResult], path: Path) -> Path:
    frame = pd.DataFrame(
        [(r.tau, r.q, r.value, r.method, r.error_estimate) for r in results],
        columns=MOMENT_COLUMNS,
    )

    def write(f: TextIO) -> None:
        frame.to_csv(f, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")

    atomic_write(path, write)
    return path


def read_profile_csv(path: Path) -> pd.DataFrame:
    try:
        return pd.read_csv(path, comment="#", float_precision="round_trip")
    except OSError as e:
        raise OutputError(f"could not read {path}: {e}") from e
