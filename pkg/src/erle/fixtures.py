"""Synthetic test images: gradients, flat blocks, checkerboards and noise."""

import os

import numpy as np

from .bmp import save
from .image import ImageBuffer


def uniform(width, height, color=(5, 5, 5)):
    return ImageBuffer.filled(width, height, color)


def horizontal_gradient(width=256, height=256, lo=0, hi=255):
    """Each column a gray level rising linearly from ``lo`` to ``hi``."""
    ramp = np.linspace(lo, hi, width).round().astype(np.uint8)
    arr = np.broadcast_to(ramp[None, :, None], (height, width, 3))
    return ImageBuffer.from_array(arr)


def color_gradient(width=256, height=256):
    x = np.linspace(0, 255, width)
    y = np.linspace(0, 255, height)
    arr = np.empty((height, width, 3))
    arr[..., 0] = x[None, :]
    arr[..., 1] = y[:, None]
    arr[..., 2] = (x[None, :] + y[:, None]) / 2
    return ImageBuffer.from_array(arr.round().astype(np.uint8))


def checkerboard(width=64, height=64, cell=8, a=(0, 0, 0), b=(255, 255, 255)):
    yy, xx = np.mgrid[0:height, 0:width]
    mask = ((yy // cell + xx // cell) % 2).astype(bool)
    arr = np.where(mask[..., None], np.array(b), np.array(a))
    return ImageBuffer.from_array(arr.astype(np.uint8))


def blocks(width=96, height=64, block=16, seed=0):
    """Flat rectangles of random colors."""
    rng = np.random.default_rng(seed)
    by, bx = -(-height // block), -(-width // block)
    colors = rng.integers(0, 256, size=(by, bx, 3), dtype=np.uint8)
    arr = colors.repeat(block, axis=0).repeat(block, axis=1)[:height, :width]
    return ImageBuffer.from_array(arr)


def noise(width=64, height=64, seed=0):
    rng = np.random.default_rng(seed)
    return ImageBuffer.from_array(rng.integers(0, 256, size=(height, width, 3), dtype=np.uint8))


def noisy_gradient(width=128, height=96, amplitude=3, seed=0):
    """A color gradient with small per-pixel jitter, like a scanned photo."""
    base = color_gradient(width, height).pixels.astype(np.int16)
    rng = np.random.default_rng(seed)
    jitter = rng.integers(-amplitude, amplitude + 1, size=base.shape)
    return ImageBuffer.from_array(np.clip(base + jitter, 0, 255).astype(np.uint8))


def standard_corpus():
    """Ten named images of varied character."""
    return {
        "01_uniform": uniform(100, 100),
        "02_gradient_h": horizontal_gradient(256, 256),
        "03_gradient_rgb": color_gradient(200, 150),
        "04_checker_8": checkerboard(64, 64, 8),
        "05_checker_1": checkerboard(33, 17, 1),
        "06_blocks": blocks(96, 64, 16, seed=1),
        "07_noise": noise(64, 48, seed=2),
        "08_noisy_gradient": noisy_gradient(128, 96, 3, seed=3),
        "09_noisy_gradient_wide": noisy_gradient(232, 50, 6, seed=4),
        "10_stripes": checkerboard(45, 31, 5, a=(200, 40, 40), b=(204, 44, 38)),
    }


def write_corpus(directory, images=None):
    """Write ``images`` (default :func:`standard_corpus`) as BMP files."""
    os.makedirs(directory, exist_ok=True)
    images = standard_corpus() if images is None else images
    paths = []
    for name, img in images.items():
        path = os.path.join(directory, name + ".bmp")
        save(path, img)
        paths.append(path)
    return paths
