"""Classic and threshold-enhanced run-length encoding.

Both encoders walk the raster in row-major order, top-left first, and let
runs continue across row ends. The enhanced encoder keeps the first pixel
of each run as its *anchor*: a later pixel joins the run when every channel
is within ``th`` of the anchor, otherwise it starts a new run. The anchor is
what gets stored, so decoding is off by at most ``th`` per channel.

``encode_runs_scalar`` applies the same rule to a plain integer sequence;
it exists so that small examples with out-of-byte-range values can be
encoded too.
"""

from typing import Iterable, List, NamedTuple, Sequence

import numpy as np

from .errors import CountMismatch, NegativeThreshold
from .image import ImageBuffer, Rgb24

DEFAULT_THRESHOLD = 10
MAX_THRESHOLD = 255


class ScalarRun(NamedTuple):
    value: int
    count: int


class _Run(NamedTuple):
    value: Rgb24
    count: int


class LogicalRun(_Run):
    """``(anchor pixel, count)``; the count is unbounded above."""

    __slots__ = ()

    def __new__(cls, value, count: int) -> "LogicalRun":
        if count < 1:
            raise ValueError(f"run count must be >= 1, got {count}")
        if not isinstance(value, Rgb24):
            value = Rgb24(*value)
        return super().__new__(cls, value, int(count))


def check_threshold(th: int, upper: int = MAX_THRESHOLD) -> int:
    """Validate a pixel threshold (0..255) and return it as an int."""
    if th < 0:
        raise NegativeThreshold(f"threshold must be >= 0, got {th}")
    if th > upper:
        raise ValueError(f"threshold must be <= {upper}, got {th}")
    return int(th)


def encode_runs_scalar(seq: Iterable[int], th: int = 0) -> List[ScalarRun]:
    if th < 0:
        raise NegativeThreshold(f"threshold must be >= 0, got {th}")
    runs: List[ScalarRun] = []
    anchor = None
    count = 0
    for v in seq:
        if anchor is not None and abs(anchor - v) <= th:
            count += 1
            continue
        if anchor is not None:
            runs.append(ScalarRun(anchor, count))
        anchor, count = v, 1
    if anchor is not None:
        runs.append(ScalarRun(anchor, count))
    return runs


def _classic_starts(flat: np.ndarray) -> np.ndarray:
    """Indices where a new run of identical pixels begins."""
    change = np.any(flat[1:] != flat[:-1], axis=1)
    return np.concatenate(([0], np.flatnonzero(change) + 1))


def _runs_from_starts(flat: np.ndarray, starts: np.ndarray) -> List[LogicalRun]:
    counts = np.diff(np.append(starts, len(flat)))
    values = flat[starts].tolist()
    return [LogicalRun(Rgb24(*v), c) for v, c in zip(values, counts.tolist())]


def encode_classic(img: ImageBuffer) -> List[LogicalRun]:
    """Lossless RLE: merge consecutive pixels identical in all channels."""
    flat = img.flat()
    return _runs_from_starts(flat, _classic_starts(flat))


def encode_enhanced(img: ImageBuffer, th: int = DEFAULT_THRESHOLD) -> List[LogicalRun]:
    """Lossy RLE with per-channel tolerance ``th`` around each run's anchor."""
    th = check_threshold(th)
    flat = img.flat()
    # Identical neighbours are equally far from any anchor, so a run can only
    # break where the pixel value changes; visit just those positions.
    candidates = _classic_starts(flat)
    cand_values = flat[candidates].astype(np.int16).tolist()
    starts = [0]
    ar, ag, ab = cand_values[0]
    for idx, (r, g, b) in zip(candidates[1:].tolist(), cand_values[1:]):
        if abs(ar - r) > th or abs(ag - g) > th or abs(ab - b) > th:
            starts.append(idx)
            ar, ag, ab = r, g, b
    return _runs_from_starts(flat, np.asarray(starts, dtype=np.intp))


def encode(img: ImageBuffer, mode: str = "enhanced", th: int = DEFAULT_THRESHOLD):
    """Dispatch on ``mode`` (``"classic"`` or ``"enhanced"``)."""
    if mode == "classic":
        return encode_classic(img)
    if mode == "enhanced":
        return encode_enhanced(img, th)
    raise ValueError(f"unknown mode {mode!r}")


def run_starts(runs: Sequence) -> List[int]:
    """Raster index at which each run begins."""
    out, pos = [], 0
    for run in runs:
        out.append(pos)
        pos += run[1]
    return out


def decode(runs: Sequence, width: int, height: int) -> ImageBuffer:
    """Expand ``(value, count)`` runs back into a ``width x height`` raster."""
    if not runs:
        raise CountMismatch(f"no runs for a {width}x{height} image")
    values = np.array([r[0] for r in runs], dtype=np.int64).reshape(-1, 3)
    counts = np.array([r[1] for r in runs], dtype=np.int64)
    total = int(counts.sum())
    if total != width * height:
        raise CountMismatch(
            f"runs cover {total} pixels, {width}x{height} image needs {width * height}"
        )
    if counts.min() < 1:
        raise CountMismatch("run counts must be >= 1")
    return ImageBuffer(width, height, np.repeat(values, counts, axis=0))
