"""Uncompressed 24-bit Windows BMP reading and writing.

Only the classic 54-byte layout is handled: a 14-byte file header followed
by a 40-byte BITMAPINFOHEADER. All multi-byte fields are little-endian.
Rows are stored bottom-up, B,G,R per pixel, each row padded to 4 bytes.
"""

import struct
from dataclasses import astuple, dataclass

import numpy as np

from .errors import BadSignature, BmpTruncated, DimensionOverflow, UnsupportedFormat
from .image import ImageBuffer

HEADER_SIZE = 54
INFO_HEADER_SIZE = 40
SIGNATURE = b"BM"
DEFAULT_PPM = 2835  # 72 DPI

# signature, file size, reserved x2, data offset, info size, width, height,
# planes, bpp, compression, image size, x/y ppm, colors used, colors important
_HEADER = struct.Struct("<2sIHHIIiiHHIIiiII")
assert _HEADER.size == HEADER_SIZE

_U32_MAX = 0xFFFFFFFF
_I32_MAX = 0x7FFFFFFF


@dataclass(frozen=True)
class BmpHeader:
    signature: bytes
    file_size: int
    reserved1: int
    reserved2: int
    data_offset: int
    header_size: int
    width: int
    height: int
    planes: int
    bits_per_pixel: int
    compression_type: int
    image_data_size: int
    x_ppm: int
    y_ppm: int
    colors_used: int
    colors_important: int

    def pack(self) -> bytes:
        return _HEADER.pack(*astuple(self))


def row_stride(width: int, bits_per_pixel: int = 24) -> int:
    """Bytes per stored row, rounded up to a multiple of 4."""
    return (width * bits_per_pixel + 31) // 32 * 4


def read_header(data: bytes) -> BmpHeader:
    """Decode the 54-byte header, checking only the signature.

    Works on any BMP with a BITMAPINFOHEADER, including palette and
    BMP-RLE files that :func:`parse_bmp` refuses.
    """
    if len(data) < HEADER_SIZE:
        raise BmpTruncated(f"BMP header needs {HEADER_SIZE} bytes, got {len(data)}")
    header = BmpHeader(*_HEADER.unpack_from(data, 0))
    if header.signature != SIGNATURE:
        raise BadSignature(f"expected signature b'BM', got {header.signature!r}")
    return header


def _check_decodable(h: BmpHeader) -> None:
    if h.header_size != INFO_HEADER_SIZE:
        raise UnsupportedFormat(f"info header size {h.header_size}, expected 40")
    if h.planes != 1:
        raise UnsupportedFormat(f"planes = {h.planes}, expected 1")
    if h.bits_per_pixel != 24:
        raise UnsupportedFormat(f"{h.bits_per_pixel}-bit BMP, only 24-bit is supported")
    if h.compression_type != 0:
        raise UnsupportedFormat(f"compression type {h.compression_type}, only 0 (none)")
    if h.width < 1 or h.height < 1:
        # negative height means a top-down file
        raise UnsupportedFormat(f"dimensions {h.width}x{h.height} not supported")
    if h.data_offset < HEADER_SIZE:
        raise UnsupportedFormat(f"pixel data offset {h.data_offset} overlaps header")


def parse_bmp(data: bytes) -> ImageBuffer:
    """Decode a 24-bit uncompressed BMP into a top-down RGB raster."""
    h = read_header(data)
    _check_decodable(h)
    stride = row_stride(h.width)
    end = h.data_offset + h.height * stride
    if len(data) < end:
        raise BmpTruncated(
            f"pixel data needs {h.height * stride} bytes at offset {h.data_offset}, "
            f"file has {max(len(data) - h.data_offset, 0)}"
        )
    rows = np.frombuffer(data, dtype=np.uint8, count=h.height * stride, offset=h.data_offset)
    rows = rows.reshape(h.height, stride)[:, : 3 * h.width].reshape(h.height, h.width, 3)
    # bottom-up -> top-down, BGR -> RGB
    return ImageBuffer(h.width, h.height, np.ascontiguousarray(rows[::-1, :, ::-1]))


def write_bmp(img: ImageBuffer) -> bytes:
    stride = row_stride(img.width)
    image_size = stride * img.height
    file_size = HEADER_SIZE + image_size
    if img.width > _I32_MAX or img.height > _I32_MAX or file_size > _U32_MAX:
        raise DimensionOverflow(
            f"{img.width}x{img.height} image does not fit 32-bit BMP size fields"
        )
    header = BmpHeader(
        signature=SIGNATURE,
        file_size=file_size,
        reserved1=0,
        reserved2=0,
        data_offset=HEADER_SIZE,
        header_size=INFO_HEADER_SIZE,
        width=img.width,
        height=img.height,
        planes=1,
        bits_per_pixel=24,
        compression_type=0,
        image_data_size=image_size,
        x_ppm=DEFAULT_PPM,
        y_ppm=DEFAULT_PPM,
        colors_used=0,
        colors_important=0,
    )
    rows = np.zeros((img.height, stride), dtype=np.uint8)
    rows[:, : 3 * img.width] = img.pixels[::-1, :, ::-1].reshape(img.height, -1)
    return header.pack() + rows.tobytes()


def load(path) -> ImageBuffer:
    with open(path, "rb") as f:
        return parse_bmp(f.read())


def save(path, img: ImageBuffer) -> None:
    with open(path, "wb") as f:
        f.write(write_bmp(img))
