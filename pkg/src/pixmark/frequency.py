"""Blind QIM embedding in Haar sub-bands and 8x8 block DCT coefficients."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapacityExceeded, OddDimensions
from .image_io import BitPayload, GrayImage
from .prng import MASK64, keyed_permutation
from .transforms import dct2, haar_forward, haar_inverse_real, idct2, partition_blocks, reassemble

BLOCK = 8
DEFAULT_DCT_DELTA = 8.0
DEFAULT_DWT_DELTA = 16
EDGE_PASSES = 8


def round_half_away(x):
    x = np.asarray(x, dtype=np.float64)
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


def to_pixels(values) -> np.ndarray:
    return np.clip(round_half_away(values), 0, 255).astype(np.uint8)


@dataclass(frozen=True)
class EmbedParams:
    """Knobs shared by the embedder and the blind extractor.

    ``delta=None`` picks the per-domain default (8 for DCT, 16 for DWT).
    """

    delta: float | None = None
    dct_pos: tuple[int, int] = (4, 3)
    subband: str = "HL"
    key: int = 0

    def __post_init__(self):
        if self.delta is not None and not self.delta > 0:
            raise ValueError(f"delta must be positive, got {self.delta}")
        u, v = self.dct_pos
        if (u, v) == (0, 0):
            raise ValueError("dct_pos (0, 0) is the DC coefficient and may not be modulated")
        if not (0 <= u < BLOCK and 0 <= v < BLOCK):
            raise ValueError(f"dct_pos {self.dct_pos} lies outside an {BLOCK}x{BLOCK} block")
        band = self.subband.upper()
        if band not in ("HL", "LH", "HH"):
            raise ValueError(f"subband must be one of HL, LH, HH, got {self.subband!r}")
        object.__setattr__(self, "subband", band)
        object.__setattr__(self, "dct_pos", (int(u), int(v)))
        if not 0 <= self.key <= MASK64:
            raise ValueError("key must be a 64-bit unsigned integer")

    def dct_delta(self) -> float:
        return float(self.delta) if self.delta is not None else DEFAULT_DCT_DELTA

    def dwt_delta(self) -> int:
        if self.delta is None:
            return DEFAULT_DWT_DELTA
        d = float(self.delta)
        if d != int(d) or int(d) % 2:
            raise ValueError(f"DWT delta must be an even integer, got {self.delta}")
        return int(d)


def qim_embed_value(c, b, delta):
    """Move ``c`` to the nearest point of the lattice ``2*delta*Z + b*delta``."""
    c = np.asarray(c, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    out = 2 * delta * round_half_away((c - b * delta) / (2 * delta)) + b * delta
    return out if out.ndim else float(out)


def qim_extract_value(c, delta):
    bits = (round_half_away(np.asarray(c, dtype=np.float64) / delta) % 2).astype(np.uint8)
    return bits if bits.ndim else int(bits)


def _slots(n_slots: int, nbits: int, key: int) -> np.ndarray:
    if nbits > n_slots:
        raise CapacityExceeded(nbits, n_slots)
    return keyed_permutation(n_slots, key)[:nbits]


# -- Haar domain -------------------------------------------------------------


def dwt_capacity(cover: GrayImage) -> int:
    if cover.width % 2 or cover.height % 2:
        raise OddDimensions(f"Haar transform needs even dimensions, got {cover.width}x{cover.height}")
    return (cover.width // 2) * (cover.height // 2)


def dwt_embed(cover: GrayImage, payload: BitPayload, params: EmbedParams = EmbedParams()) -> GrayImage:
    delta = params.dwt_delta()
    bands = haar_forward(cover)
    coeffs = bands.band(params.subband).ravel().copy()
    idx = _slots(coeffs.size, len(payload), params.key)
    if idx.size == 0:
        return cover
    coeffs[idx] = np.asarray(qim_embed_value(coeffs[idx], payload.bits, delta)).astype(np.int64)
    marked = bands.replace(params.subband, coeffs.reshape(bands.half_h, bands.half_w))
    return GrayImage(to_pixels(haar_inverse_real(marked)))


def dwt_extract(stego: GrayImage, nbits: int, params: EmbedParams = EmbedParams()) -> BitPayload:
    delta = params.dwt_delta()
    coeffs = haar_forward(stego).band(params.subband).ravel()
    idx = _slots(coeffs.size, nbits, params.key)
    return BitPayload(qim_extract_value(coeffs[idx], delta))


# -- block DCT domain --------------------------------------------------------


def dct_capacity(cover: GrayImage) -> int:
    return -(-cover.width // BLOCK) * -(-cover.height // BLOCK)


def dct_embed(cover: GrayImage, payload: BitPayload, params: EmbedParams = EmbedParams()) -> GrayImage:
    delta = params.dct_delta()
    blocks, geom = partition_blocks(cover, BLOCK)
    idx = _slots(geom.count, len(payload), params.key)
    if idx.size == 0:
        return cover
    u, v = params.dct_pos
    bits = payload.bits
    out = blocks.copy()
    pending = np.arange(idx.size)
    for _ in range(EDGE_PASSES):
        coeffs = dct2(out[idx[pending]])
        coeffs[:, u, v] = qim_embed_value(coeffs[:, u, v], bits[pending], delta)
        out[idx[pending]] = to_pixels(idct2(coeffs))
        if geom.height % BLOCK == 0 and geom.width % BLOCK == 0:
            break
        # cropping drops the padded pixels of edge blocks; re-pad what the
        # extractor will actually see and retry blocks whose bit was lost
        out, _ = partition_blocks(reassemble(out, geom), BLOCK)
        seen = qim_extract_value(dct2(out[idx])[:, u, v], delta)
        pending = np.flatnonzero(seen != bits)
        if pending.size == 0:
            break
    return GrayImage(reassemble(out, geom))


def dct_extract(stego: GrayImage, nbits: int, params: EmbedParams = EmbedParams()) -> BitPayload:
    delta = params.dct_delta()
    blocks, geom = partition_blocks(stego, BLOCK)
    idx = _slots(geom.count, nbits, params.key)
    u, v = params.dct_pos
    coeffs = dct2(blocks[idx])
    return BitPayload(qim_extract_value(coeffs[:, u, v], delta))
