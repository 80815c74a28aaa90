"""Synthetic covers shared by the demos, so they run without any image files."""

import numpy as np

from pixmark import GrayImage


def landscape(size=256, seed=0):
    """Smooth gradients plus mild texture; a stand-in for a photograph."""
    rng = np.random.default_rng(seed)
    y, x = np.mgrid[0:size, 0:size] / size
    sky = 200 - 120 * y
    hills = 60 * np.sin(6 * x + 2) * (y > 0.5)
    texture = rng.normal(0, 6, (size, size))
    return GrayImage(np.clip(sky + hills + texture, 0, 255).round())


def logo(size=32):
    """Binary mark: a ring with a bar through it."""
    y, x = np.mgrid[0:size, 0:size] - (size - 1) / 2
    r = np.hypot(x, y)
    mark = ((r > size * 0.3) & (r < size * 0.45)) | (np.abs(y) < size * 0.06)
    return GrayImage(np.where(mark, 255, 0).astype(np.uint8))
