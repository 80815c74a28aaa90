"""Single-level integer Haar DWT, orthonormal 2-D DCT and block partitioning."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import OddDimensions, RangeViolation
from .image_io import GrayImage

BANDS = ("LL", "HL", "LH", "HH")


@dataclass(frozen=True, eq=False)
class SubBands:
    """Haar coefficient planes, each (half_h, half_w) int64.

    First letter names the horizontal filter, second the vertical one, so
    HL holds horizontal differences of vertical sums.
    """

    LL: np.ndarray
    HL: np.ndarray
    LH: np.ndarray
    HH: np.ndarray

    @property
    def half_w(self) -> int:
        return self.LL.shape[1]

    @property
    def half_h(self) -> int:
        return self.LL.shape[0]

    def band(self, name: str) -> np.ndarray:
        return getattr(self, name.upper())

    def replace(self, name: str, values: np.ndarray) -> SubBands:
        planes = {b: getattr(self, b) for b in BANDS}
        planes[name.upper()] = values
        return SubBands(**planes)

    def __eq__(self, other):
        if not isinstance(other, SubBands):
            return NotImplemented
        return all(np.array_equal(getattr(self, b), getattr(other, b)) for b in BANDS)


def haar_forward(img: GrayImage) -> SubBands:
    if img.width % 2 or img.height % 2:
        raise OddDimensions(f"Haar transform needs even dimensions, got {img.width}x{img.height}")
    px = img.pixels.astype(np.int64)
    a = px[0::2, 0::2]
    b = px[0::2, 1::2]
    c = px[1::2, 0::2]
    d = px[1::2, 1::2]
    return SubBands(
        LL=a + b + c + d,
        HL=(a - b) + (c - d),
        LH=(a + b) - (c + d),
        HH=(a - b) - (c - d),
    )


def _haar_synthesis4(bands: SubBands):
    """Four times each pixel of the 2x2 block, in exact integers."""
    LL, HL, LH, HH = bands.LL, bands.HL, bands.LH, bands.HH
    shapes = {x.shape for x in (LL, HL, LH, HH)}
    if len(shapes) != 1:
        raise ValueError(f"sub-band shapes differ: {sorted(shapes)}")
    return (
        LL + HL + LH + HH,
        LL - HL + LH - HH,
        LL + HL - LH - HH,
        LL - HL - LH + HH,
    )


def _interleave(a, b, c, d, dtype):
    h, w = a.shape
    out = np.empty((2 * h, 2 * w), dtype=dtype)
    out[0::2, 0::2] = a
    out[0::2, 1::2] = b
    out[1::2, 0::2] = c
    out[1::2, 1::2] = d
    return out


def haar_inverse(bands: SubBands) -> GrayImage:
    """Exact inverse; raises RangeViolation unless every pixel is an integer in [0, 255]."""
    quads = [np.asarray(q, dtype=np.int64) for q in _haar_synthesis4(bands)]
    for q in quads:
        if np.any(q % 4):
            raise RangeViolation("band sums are not multiples of 4; pixels would be fractional")
    a, b, c, d = (q // 4 for q in quads)
    out = _interleave(a, b, c, d, np.int64)
    if out.min() < 0 or out.max() > 255:
        raise RangeViolation(f"reconstructed pixels span [{out.min()}, {out.max()}]")
    return GrayImage(out.astype(np.uint8))


def haar_inverse_real(bands: SubBands) -> np.ndarray:
    """Real-valued reconstruction for modified bands; no range checks."""
    quads = [np.asarray(q, dtype=np.float64) / 4.0 for q in _haar_synthesis4(bands)]
    return _interleave(*quads, np.float64)


# -- DCT ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def dct_matrix(n: int) -> np.ndarray:
    """Row k is alpha(k) * cos(pi * (2x + 1) * k / 2n) over x."""
    k = np.arange(n)[:, None]
    x = np.arange(n)[None, :]
    alpha = np.full((n, 1), np.sqrt(2.0 / n))
    alpha[0, 0] = np.sqrt(1.0 / n)
    m = alpha * np.cos(np.pi * (2 * x + 1) * k / (2 * n))
    m.flags.writeable = False
    return m


def dct2(block) -> np.ndarray:
    """Orthonormal 2-D DCT-II of a square block (or a stack of them)."""
    block = np.asarray(block, dtype=np.float64)
    n = block.shape[-1]
    if block.shape[-2] != n:
        raise ValueError(f"block must be square, got {block.shape[-2:]}")
    c = dct_matrix(n)
    return c @ block @ c.T


def idct2(coeffs) -> np.ndarray:
    """Inverse of :func:`dct2` (orthonormal DCT-III)."""
    coeffs = np.asarray(coeffs, dtype=np.float64)
    n = coeffs.shape[-1]
    if coeffs.shape[-2] != n:
        raise ValueError(f"block must be square, got {coeffs.shape[-2:]}")
    c = dct_matrix(n)
    return c.T @ coeffs @ c


# -- blocks ------------------------------------------------------------------


@dataclass(frozen=True)
class BlockGeometry:
    height: int
    width: int
    n: int

    @property
    def rows(self) -> int:
        return -(-self.height // self.n)

    @property
    def cols(self) -> int:
        return -(-self.width // self.n)

    @property
    def count(self) -> int:
        return self.rows * self.cols


def partition_blocks(img, n: int = 8) -> tuple[np.ndarray, BlockGeometry]:
    """Split into n x n blocks in raster order, edge-replicating to a multiple of n.

    Returns a (count, n, n) array and the geometry needed by :func:`reassemble`.
    """
    px = img.pixels if isinstance(img, GrayImage) else np.asarray(img)
    h, w = px.shape
    geom = BlockGeometry(h, w, n)
    padded = np.pad(px, ((0, geom.rows * n - h), (0, geom.cols * n - w)), mode="edge")
    blocks = padded.reshape(geom.rows, n, geom.cols, n).swapaxes(1, 2).reshape(-1, n, n)
    return blocks, geom


def reassemble(blocks: np.ndarray, geom: BlockGeometry) -> np.ndarray:
    """Inverse of :func:`partition_blocks`, cropped back to the original size."""
    n = geom.n
    full = blocks.reshape(geom.rows, geom.cols, n, n).swapaxes(1, 2).reshape(geom.rows * n, geom.cols * n)
    return full[: geom.height, : geom.width]
