"""The ERLE container: a fixed 20-byte header followed by 4-byte records.

Layout (little-endian)::

    offset  size  field
    0       4     magic b"ERLE"
    4       1     version (1)
    5       1     mode (0 = classic, 1 = enhanced)
    6       1     threshold (0 for classic)
    7       1     reserved, must be 0
    8       4     width
    12      4     height
    16      4     record count
    20      4*n   records: r, g, b, count (1..255)

Runs longer than 255 pixels are split into several records carrying the
same value.
"""

import struct
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple

import numpy as np

from .codec import LogicalRun
from .errors import (
    BadMagic,
    BadMode,
    ContainerError,
    ContainerTruncated,
    CountConservationViolated,
    TooManyRecords,
    UnsupportedVersion,
    ZeroCountRecord,
)
from .image import Rgb24

MAGIC = b"ERLE"
VERSION = 1
HEADER_SIZE = 20
RECORD_SIZE = 4
MAX_RECORD_COUNT = 255
EXTENSION = ".erle"

_HEADER = struct.Struct("<4sBBBBIII")
assert _HEADER.size == HEADER_SIZE
_U32_MAX = 0xFFFFFFFF


class Mode(IntEnum):
    CLASSIC = 0
    ENHANCED = 1

    @classmethod
    def parse(cls, value) -> "Mode":
        if isinstance(value, str):
            try:
                return cls[value.upper()]
            except KeyError:
                raise ValueError(f"unknown mode {value!r}") from None
        return cls(value)


class SerializedRecord(NamedTuple):
    r: int
    g: int
    b: int
    count: int


@dataclass(frozen=True)
class CompressedImage:
    mode: Mode
    threshold: int
    width: int
    height: int
    records: Tuple[SerializedRecord, ...]

    @property
    def record_count(self) -> int:
        return len(self.records)

    def runs(self) -> List[LogicalRun]:
        """One logical run per record (split runs are not re-merged)."""
        return records_to_runs(self.records)

    def to_bytes(self) -> bytes:
        return serialize(self.mode, self.threshold, self.width, self.height, self.runs())


def split_runs(runs: Iterable[LogicalRun]) -> Iterator[SerializedRecord]:
    """Break each run into records of at most 255 pixels, in order."""
    for value, count in runs:
        r, g, b = value
        full, rest = divmod(count, MAX_RECORD_COUNT)
        for _ in range(full):
            yield SerializedRecord(r, g, b, MAX_RECORD_COUNT)
        if rest:
            yield SerializedRecord(r, g, b, rest)


def records_to_runs(records: Iterable[SerializedRecord]) -> List[LogicalRun]:
    return [LogicalRun(Rgb24(r, g, b), c) for r, g, b, c in records]


def serialized_size(record_count: int) -> int:
    return HEADER_SIZE + RECORD_SIZE * record_count


def serialize(mode, threshold: int, width: int, height: int,
              runs: Sequence[LogicalRun]) -> bytes:
    mode = Mode.parse(mode)
    if not 0 <= threshold <= 255:
        raise ValueError(f"threshold must be in 0..255, got {threshold}")
    if mode is Mode.CLASSIC and threshold != 0:
        raise ValueError("classic mode requires threshold 0")
    if not (0 <= width <= _U32_MAX and 0 <= height <= _U32_MAX):
        raise ValueError(f"dimensions {width}x{height} do not fit u32")
    total = sum(c for _, c in runs)
    if total != width * height:
        raise CountConservationViolated(
            f"runs cover {total} pixels, {width}x{height} image needs {width * height}"
        )
    records = list(split_runs(runs))
    if len(records) > _U32_MAX:
        raise TooManyRecords(f"{len(records)} records exceed the u32 count field")
    header = _HEADER.pack(MAGIC, VERSION, int(mode), threshold, 0, width, height, len(records))
    body = np.array(records, dtype=np.uint8).reshape(-1, RECORD_SIZE)
    return header + body.tobytes()


def read_container_header(data: bytes) -> dict:
    """Decode and validate the 20-byte header only."""
    if len(data) < HEADER_SIZE:
        raise ContainerTruncated(f"ERLE header needs {HEADER_SIZE} bytes, got {len(data)}")
    magic, version, mode, threshold, reserved, width, height, n = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise BadMagic(f"expected magic b'ERLE', got {magic!r}")
    if version != VERSION:
        raise UnsupportedVersion(f"container version {version}, expected {VERSION}")
    if mode not in (Mode.CLASSIC, Mode.ENHANCED):
        raise BadMode(f"mode byte {mode}")
    if mode == Mode.CLASSIC and threshold != 0:
        raise BadMode(f"classic container carries threshold {threshold}")
    if reserved != 0:
        raise ContainerError(f"reserved byte is {reserved}, expected 0")
    return {
        "magic": magic.decode("ascii"),
        "version": version,
        "mode": Mode(mode),
        "threshold": threshold,
        "width": width,
        "height": height,
        "record_count": n,
    }


def deserialize(data: bytes) -> CompressedImage:
    hdr = read_container_header(data)
    n = hdr["record_count"]
    expected = serialized_size(n)
    if len(data) < expected:
        raise ContainerTruncated(f"{n} records need {expected} bytes, got {len(data)}")
    if len(data) > expected:
        raise ContainerError(f"{len(data) - expected} trailing bytes after records")
    body = np.frombuffer(data, dtype=np.uint8, count=n * RECORD_SIZE, offset=HEADER_SIZE)
    body = body.reshape(n, RECORD_SIZE)
    zero = np.flatnonzero(body[:, 3] == 0)
    if zero.size:
        raise ZeroCountRecord(f"record {zero[0]} has count 0")
    total = int(body[:, 3].sum(dtype=np.int64))
    if total != hdr["width"] * hdr["height"]:
        raise CountConservationViolated(
            f"records cover {total} pixels, header says {hdr['width']}x{hdr['height']}"
        )
    records = tuple(SerializedRecord(*row) for row in body.tolist())
    return CompressedImage(hdr["mode"], hdr["threshold"], hdr["width"], hdr["height"], records)
