"""Compression ratios, reconstruction error and run-length histograms."""

import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable

import numpy as np

from . import codec, container
from .bmp import write_bmp
from .errors import DimensionMismatch, ZeroCompressedSize
from .image import ImageBuffer

PEAK = 255


def compression_ratio(original: float, compressed: float) -> float:
    """``original / compressed``; below 1 means the data grew."""
    if compressed <= 0:
        raise ZeroCompressedSize(f"compressed size must be > 0, got {compressed}")
    return original / compressed


def format_ratio(ratio: float) -> str:
    return f"{ratio:.2f}:1"


def to_kb(nbytes: int) -> int:
    """Bytes to whole KiB, rounding halves up."""
    return (nbytes + 512) // 1024


def _diff(original: ImageBuffer, reconstructed: ImageBuffer) -> np.ndarray:
    if (original.width, original.height) != (reconstructed.width, reconstructed.height):
        raise DimensionMismatch(
            f"{original.width}x{original.height} vs "
            f"{reconstructed.width}x{reconstructed.height}"
        )
    return original.pixels.astype(np.int32) - reconstructed.pixels.astype(np.int32)


def max_channel_error(original: ImageBuffer, reconstructed: ImageBuffer) -> int:
    return int(np.abs(_diff(original, reconstructed)).max())


def mse(original: ImageBuffer, reconstructed: ImageBuffer) -> float:
    """Mean squared error over every channel sample."""
    d = _diff(original, reconstructed).astype(np.float64)
    return float(np.mean(d * d))


def psnr(mse_value: float, peak: int = PEAK) -> float:
    if mse_value == 0:
        return math.inf
    return 10.0 * math.log10(peak * peak / mse_value)


def run_length_histogram(runs: Iterable) -> Dict[int, int]:
    """Map each run length to how many runs have it, keys ascending."""
    counts = Counter(run[1] for run in runs)
    return dict(sorted(counts.items()))


@dataclass(frozen=True)
class RatioReport:
    image_name: str
    original_size: int
    classic_size: int
    classic_ratio: float
    enhanced_size: int
    enhanced_ratio: float
    threshold: int
    max_channel_error: int
    mse: float
    psnr_db: float


def ratio_report(name: str, img: ImageBuffer, threshold: int = codec.DEFAULT_THRESHOLD,
                 original_size: int = None) -> RatioReport:
    """Encode ``img`` both ways and measure sizes and enhanced-mode loss.

    ``original_size`` defaults to the size of ``img`` written as a BMP file.
    """
    if original_size is None:
        original_size = len(write_bmp(img))
    classic_runs = codec.encode_classic(img)
    enhanced_runs = codec.encode_enhanced(img, threshold)
    classic_size = len(container.serialize("classic", 0, img.width, img.height, classic_runs))
    enhanced_size = len(
        container.serialize("enhanced", threshold, img.width, img.height, enhanced_runs)
    )
    recon = codec.decode(enhanced_runs, img.width, img.height)
    err = mse(img, recon)
    return RatioReport(
        image_name=name,
        original_size=original_size,
        classic_size=classic_size,
        classic_ratio=compression_ratio(original_size, classic_size),
        enhanced_size=enhanced_size,
        enhanced_ratio=compression_ratio(original_size, enhanced_size),
        threshold=threshold,
        max_channel_error=max_channel_error(img, recon),
        mse=err,
        psnr_db=psnr(err),
    )
