"""Spatial-domain embedding: LSB substitution and reversible difference expansion."""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import CapacityExceeded, FormatError, GeometryMismatch, MapInconsistent
from .image_io import HEADER_BITS, BitPayload, GrayImage, decode_header

# -- LSB ---------------------------------------------------------------------


def lsb_embed(cover: GrayImage, payload: BitPayload) -> GrayImage:
    """Overwrite the parity of the first ``len(payload)`` pixels in raster order."""
    npix = cover.width * cover.height
    n = len(payload)
    if n > npix:
        raise CapacityExceeded(n, npix)
    flat = cover.pixels.ravel().copy()
    head = flat[:n]
    flat[:n] = head - head % 2 + payload.bits
    return GrayImage(flat.reshape(cover.shape))


def lsb_extract(stego: GrayImage, nbits: int | None = None) -> BitPayload:
    """Read pixel parities.

    With ``nbits=None`` the 32-bit dimension header is read first and the
    body length derived from it.
    """
    flat = stego.pixels.ravel()
    npix = flat.size
    if nbits is None:
        if npix < HEADER_BITS:
            raise CapacityExceeded(HEADER_BITS, npix)
        w, h = decode_header(flat[:HEADER_BITS] % 2)
        nbits = HEADER_BITS + w * h
    if nbits < 0:
        raise ValueError("nbits must be non-negative")
    if nbits > npix:
        raise CapacityExceeded(nbits, npix)
    return BitPayload(flat[:nbits] % 2)


# -- difference expansion ----------------------------------------------------


class PixelPair(NamedTuple):
    x: int
    y: int

    @property
    def l(self) -> int:  # noqa: E743
        return (self.x + self.y) // 2

    @property
    def h(self) -> int:
        return self.x - self.y


def pair_forward(x, y):
    """Integer average and difference of a pixel pair (works on arrays)."""
    return (x + y) // 2, x - y


def pair_inverse(l, h):
    """Exact inverse of :func:`pair_forward`."""
    return l + (h + 1) // 2, l - h // 2


def de_is_expandable(pair: PixelPair, b: int) -> bool:
    l, h = pair.l, pair.h
    return abs(2 * h + b) <= min(2 * (255 - l), 2 * l + 1)


def _expandable_mask(l, h, b):
    return np.abs(2 * h + b) <= np.minimum(2 * (255 - l), 2 * l + 1)


@dataclass(frozen=True, eq=False)
class DeMetadata:
    """Location map (one bit per horizontal pixel pair) plus payload length."""

    pair_count: int
    payload_len: int
    location_map: np.ndarray

    MAGIC = b"DEM1"

    def __post_init__(self):
        m = np.asarray(self.location_map, dtype=np.uint8).ravel()
        if m.size != self.pair_count:
            raise ValueError(f"location map has {m.size} entries for {self.pair_count} pairs")
        m.flags.writeable = False
        object.__setattr__(self, "location_map", m)

    def __eq__(self, other):
        if not isinstance(other, DeMetadata):
            return NotImplemented
        return (
            self.pair_count == other.pair_count
            and self.payload_len == other.payload_len
            and bool(np.array_equal(self.location_map, other.location_map))
        )

    def to_bytes(self) -> bytes:
        head = self.MAGIC + struct.pack(">II", self.pair_count, self.payload_len)
        return head + np.packbits(self.location_map).tobytes()

    @classmethod
    def from_bytes(cls, data: bytes) -> DeMetadata:
        data = bytes(data)
        if data[:4] != cls.MAGIC:
            raise FormatError(f"bad metadata magic {data[:4]!r}")
        if len(data) < 12:
            raise FormatError("metadata header truncated")
        pair_count, payload_len = struct.unpack(">II", data[4:12])
        nbytes = (pair_count + 7) // 8
        packed = np.frombuffer(data[12:], dtype=np.uint8)
        if packed.size != nbytes:
            raise FormatError(f"location map needs {nbytes} bytes, file has {packed.size}")
        bits = np.unpackbits(packed)[:pair_count]
        return cls(pair_count, payload_len, bits)


def _pairs(img: GrayImage):
    """Even/odd column views of the pairable region (trailing odd column dropped)."""
    px = img.pixels.astype(np.int64)
    half = img.width // 2
    return px[:, 0 : 2 * half : 2], px[:, 1 : 2 * half : 2]


def de_capacity(cover: GrayImage) -> int:
    """Pairs expandable whichever bit arrives, so any payload this long embeds.

    Bit 1 is the harder case for h >= 0 but bit 0 is harder for h < 0
    (|2h| > |2h + 1|), so both are required.
    """
    x, y = _pairs(cover)
    l, h = pair_forward(x, y)
    both = _expandable_mask(l, h, 0) & _expandable_mask(l, h, 1)
    return int(np.count_nonzero(both))


def de_embed(cover: GrayImage, payload: BitPayload) -> tuple[GrayImage, DeMetadata]:
    if cover.width < 2:
        raise GeometryMismatch("difference expansion needs a cover at least 2 pixels wide")
    x, y = _pairs(cover)
    l, h = pair_forward(x.ravel(), y.ravel())
    ok0 = _expandable_mask(l, h, 0).tolist()
    ok1 = _expandable_mask(l, h, 1).tolist()

    bits = payload.bits.tolist()
    nbits = len(bits)
    pair_count = l.size
    location = np.zeros(pair_count, dtype=np.uint8)
    carried = np.zeros(pair_count, dtype=np.int64)
    k = 0
    for i in range(pair_count):
        if k == nbits:
            break
        b = bits[k]
        if ok1[i] if b else ok0[i]:
            location[i] = 1
            carried[i] = b
            k += 1
    if k < nbits:
        raise CapacityExceeded(nbits, k)

    sel = location.astype(bool)
    h2 = h.copy()
    h2[sel] = 2 * h[sel] + carried[sel]
    nx, ny = pair_inverse(l, h2)
    out = cover.pixels.astype(np.int64)
    half = cover.width // 2
    out[:, 0 : 2 * half : 2] = nx.reshape(x.shape)
    out[:, 1 : 2 * half : 2] = ny.reshape(y.shape)
    meta = DeMetadata(pair_count, nbits, location)
    return GrayImage(out.astype(np.uint8)), meta


def de_extract_restore(stego: GrayImage, meta: DeMetadata) -> tuple[BitPayload, GrayImage]:
    """Recover the embedded bits and the bit-exact original cover."""
    expected = (stego.width // 2) * stego.height
    if meta.pair_count != expected:
        raise GeometryMismatch(
            f"metadata describes {meta.pair_count} pairs, a {stego.width}x{stego.height} image has {expected}"
        )
    marked = int(np.count_nonzero(meta.location_map))
    if marked != meta.payload_len:
        raise MapInconsistent(f"location map marks {marked} pairs but payload length is {meta.payload_len}")

    x, y = _pairs(stego)
    l, h2 = pair_forward(x.ravel(), y.ravel())
    sel = meta.location_map.astype(bool)
    bits = h2[sel] - 2 * (h2[sel] // 2)
    h = h2.copy()
    h[sel] = h2[sel] // 2
    nx, ny = pair_inverse(l, h)
    if np.any(nx < 0) or np.any(nx > 255) or np.any(ny < 0) or np.any(ny > 255):
        raise MapInconsistent("a mapped pair decodes outside [0, 255]")

    out = stego.pixels.astype(np.int64)
    half = stego.width // 2
    out[:, 0 : 2 * half : 2] = nx.reshape(x.shape)
    out[:, 1 : 2 * half : 2] = ny.reshape(y.shape)
    return BitPayload(bits), GrayImage(out.astype(np.uint8))
