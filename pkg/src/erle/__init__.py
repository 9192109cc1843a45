"""Classic and threshold-enhanced run-length encoding of 24-bit BMP images."""

from .bmp import BmpHeader, parse_bmp, read_header, row_stride, write_bmp
from .codec import (
    DEFAULT_THRESHOLD,
    LogicalRun,
    ScalarRun,
    decode,
    encode,
    encode_classic,
    encode_enhanced,
    encode_runs_scalar,
)
from .container import CompressedImage, Mode, SerializedRecord, deserialize, serialize
from .errors import *  # noqa: F401,F403
from .image import ImageBuffer, Rgb24
from .metrics import (
    RatioReport,
    compression_ratio,
    format_ratio,
    max_channel_error,
    mse,
    psnr,
    ratio_report,
    run_length_histogram,
)

__version__ = "0.1.0"
