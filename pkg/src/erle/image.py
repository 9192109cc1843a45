"""Pixel and raster types shared by the BMP reader and the codecs."""

from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np


class _Rgb(NamedTuple):
    r: int
    g: int
    b: int


class Rgb24(_Rgb):
    """One true-color pixel. Compares equal to a plain ``(r, g, b)`` tuple."""

    __slots__ = ()

    def __new__(cls, r: int, g: int, b: int) -> "Rgb24":
        for name, v in (("r", r), ("g", g), ("b", b)):
            if not 0 <= v <= 255:
                raise ValueError(f"channel {name}={v} outside 0..255")
        return super().__new__(cls, int(r), int(g), int(b))


class ImageBuffer:
    """Decoded raster, top row first.

    ``pixels`` is a ``uint8`` array of shape ``(height, width, 3)`` in R, G, B
    channel order. Anything array-like with those dimensions is accepted,
    including a flat sequence of ``width * height`` RGB triples.
    """

    __slots__ = ("width", "height", "pixels")

    def __init__(self, width: int, height: int, pixels) -> None:
        if width < 1 or height < 1:
            raise ValueError(f"image dimensions must be >= 1, got {width}x{height}")
        arr = np.asarray(pixels)
        if arr.size != width * height * 3:
            raise ValueError(
                f"expected {width * height} pixels for {width}x{height}, "
                f"got {arr.size / 3:g}"
            )
        if arr.dtype != np.uint8:
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise ValueError("channel values must be in 0..255")
            arr = arr.astype(np.uint8)
        arr = arr.reshape(height, width, 3)
        arr.flags.writeable = False
        self.width = int(width)
        self.height = int(height)
        self.pixels = arr

    @classmethod
    def from_array(cls, arr) -> "ImageBuffer":
        """Build from an ``(h, w, 3)`` array."""
        arr = np.asarray(arr)
        if arr.ndim != 3 or arr.shape[2] != 3:
            raise ValueError(f"expected shape (h, w, 3), got {arr.shape}")
        return cls(arr.shape[1], arr.shape[0], arr)

    @classmethod
    def filled(cls, width: int, height: int, color: Iterable[int]) -> "ImageBuffer":
        c = np.asarray(tuple(color), dtype=np.int64)
        return cls(width, height, np.broadcast_to(c, (height, width, 3)))

    @property
    def pixel_count(self) -> int:
        return self.width * self.height

    def flat(self) -> np.ndarray:
        """Pixels in raster order as an ``(n, 3)`` array."""
        return self.pixels.reshape(-1, 3)

    def __iter__(self) -> Iterator[Rgb24]:
        for r, g, b in self.flat().tolist():
            yield Rgb24(r, g, b)

    def __len__(self) -> int:
        return self.pixel_count

    def __getitem__(self, rc: Sequence[int]) -> Rgb24:
        row, col = rc
        return Rgb24(*self.pixels[row, col].tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ImageBuffer):
            return NotImplemented
        return (self.width, self.height) == (other.width, other.height) and bool(
            np.array_equal(self.pixels, other.pixels)
        )

    def __repr__(self) -> str:
        return f"ImageBuffer({self.width}x{self.height})"
