"""Grayscale rasters, bit payloads and their byte-level serialization."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadHeader,
    DimensionOverflow,
    LengthMismatch,
    MalformedHeader,
    TruncatedData,
    UnsupportedMaxval,
)

HEADER_BITS = 32
THRESHOLD = 128


@dataclass(frozen=True, eq=False)
class GrayImage:
    """8-bit grayscale raster stored as a (height, width) uint8 array."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"expected a non-empty 2-D raster, got shape {arr.shape}")
        if arr.dtype != np.uint8:
            if np.any(arr < 0) or np.any(arr > 255):
                raise ValueError("intensities must lie in [0, 255]")
            arr = arr.astype(np.uint8)
        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        object.__setattr__(self, "pixels", arr)

    @classmethod
    def from_list(cls, width: int, height: int, values) -> GrayImage:
        values = np.asarray(values, dtype=np.int64)
        if values.size != width * height:
            raise ValueError(f"{values.size} values for a {width}x{height} raster")
        return cls(values.reshape(height, width))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def shape(self):
        return self.pixels.shape

    def flat(self) -> list[int]:
        return self.pixels.ravel().tolist()

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.pixels, other.pixels))

    def __repr__(self):
        return f"GrayImage({self.width}x{self.height})"


@dataclass(frozen=True, eq=False)
class BitPayload:
    """Ordered bit sequence; ``declared_len`` is the serialized bit count."""

    bits: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.bits, dtype=np.int64).ravel()
        if np.any((arr != 0) & (arr != 1)):
            raise ValueError("payload bits must be 0 or 1")
        arr = arr.astype(np.uint8)
        arr.flags.writeable = False
        object.__setattr__(self, "bits", arr)

    @property
    def declared_len(self) -> int:
        return int(self.bits.size)

    def __len__(self):
        return int(self.bits.size)

    def __eq__(self, other):
        if not isinstance(other, BitPayload):
            return NotImplemented
        return bool(np.array_equal(self.bits, other.bits))

    def __repr__(self):
        return f"BitPayload({self.declared_len} bits)"


# -- PGM ---------------------------------------------------------------------

_WHITESPACE = b" \t\r\n\v\f"


def _header_tokens(data: bytes, count: int, pos: int):
    """Read ``count`` whitespace-separated tokens, skipping '#' comments."""
    tokens = []
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos] in _WHITESPACE:
            pos += 1
        if pos < n and data[pos] == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
            continue
        start = pos
        while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
            pos += 1
        if start == pos:
            raise MalformedHeader("header ended early")
        tokens.append(data[start:pos])
    return tokens, pos


def _positive_int(token: bytes, what: str) -> int:
    if not token.isdigit():
        raise MalformedHeader(f"{what} is not a decimal integer: {token!r}")
    value = int(token)
    if value < 1:
        raise MalformedHeader(f"{what} must be positive")
    return value


def read_pgm(data: bytes) -> GrayImage:
    """Parse a binary (P5) or ASCII (P2) graymap with maxval 255."""
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P5", b"P2"):
        raise MalformedHeader(f"bad magic {magic!r}")
    if len(data) > 2 and data[2] not in _WHITESPACE and data[2] != ord("#"):
        raise MalformedHeader("magic must be followed by whitespace")
    (w_tok, h_tok, max_tok), pos = _header_tokens(data, 3, 2)
    width = _positive_int(w_tok, "width")
    height = _positive_int(h_tok, "height")
    if not max_tok.isdigit():
        raise MalformedHeader(f"maxval is not a decimal integer: {max_tok!r}")
    if int(max_tok) != 255:
        raise UnsupportedMaxval(f"maxval {int(max_tok)} (only 255 is supported)")
    npix = width * height

    if magic == b"P5":
        # exactly one whitespace byte separates the header from the raster
        if pos >= len(data) or data[pos] not in _WHITESPACE:
            raise TruncatedData(f"expected {npix} samples, got 0")
        raw = data[pos + 1 : pos + 1 + npix]
        if len(raw) < npix:
            raise TruncatedData(f"expected {npix} samples, got {len(raw)}")
        values = np.frombuffer(raw, dtype=np.uint8)
    else:
        body = []
        for line in data[pos:].splitlines():
            body.append(line.split(b"#", 1)[0])
        tokens = b" ".join(body).split()
        if len(tokens) < npix:
            raise TruncatedData(f"expected {npix} samples, got {len(tokens)}")
        try:
            values = np.array([int(t) for t in tokens[:npix]], dtype=np.int64)
        except ValueError as exc:
            raise MalformedHeader(f"non-numeric sample: {exc}") from None
        if np.any(values < 0) or np.any(values > 255):
            raise MalformedHeader("sample outside [0, 255]")
    return GrayImage(values.reshape(height, width).astype(np.uint8))


def write_pgm(img: GrayImage) -> bytes:
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.pixels.tobytes()


# -- payload serialization ---------------------------------------------------

def _uint_bits(value: int, nbits: int) -> list[int]:
    return [(value >> (nbits - 1 - k)) & 1 for k in range(nbits)]


def _bits_uint(bits) -> int:
    value = 0
    for b in bits:
        value = (value << 1) | int(b)
    return value


def payload_from_image(wm: GrayImage) -> BitPayload:
    """Binarize ``wm`` (>= 128 is 1) behind a 16+16 bit width/height header."""
    if wm.width > 0xFFFF or wm.height > 0xFFFF:
        raise DimensionOverflow(f"{wm.width}x{wm.height} does not fit a 16-bit header")
    header = np.array(_uint_bits(wm.width, 16) + _uint_bits(wm.height, 16), dtype=np.uint8)
    body = (wm.pixels.ravel() >= THRESHOLD).astype(np.uint8)
    return BitPayload(np.concatenate([header, body]))


def decode_header(bits) -> tuple[int, int]:
    """Width and height stored in the first 32 bits of a payload."""
    bits = np.asarray(bits)
    if bits.size < HEADER_BITS:
        raise BadHeader(f"payload has {bits.size} bits, header needs {HEADER_BITS}")
    width = _bits_uint(bits[:16])
    height = _bits_uint(bits[16:32])
    if width == 0 or height == 0:
        raise BadHeader(f"zero dimension in header ({width}x{height})")
    return width, height


def image_from_payload(p: BitPayload) -> GrayImage:
    width, height = decode_header(p.bits)
    body = p.bits[HEADER_BITS:]
    if body.size != width * height:
        raise LengthMismatch(
            f"header announces {width}x{height} = {width * height} bits, payload carries {body.size}"
        )
    return GrayImage((body.reshape(height, width) * 255).astype(np.uint8))
