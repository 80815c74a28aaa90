"""Quality (MSE/PSNR), robustness (BER), capacity and histogram measurements."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, LengthMismatch
from .frequency import EmbedParams, dct_capacity, dwt_capacity
from .image_io import BitPayload, GrayImage
from .spatial import de_capacity

PEAK = 255.0
METHODS = ("lsb", "de", "dwt", "dct")


def _diff(a: GrayImage, b: GrayImage) -> np.ndarray:
    if a.shape != b.shape:
        raise DimensionMismatch(f"{a.width}x{a.height} vs {b.width}x{b.height}")
    return a.pixels.astype(np.int64) - b.pixels.astype(np.int64)


def mse(a: GrayImage, b: GrayImage) -> float:
    d = _diff(a, b)
    return float(np.mean(d * d))


def psnr_from_mse(m: float) -> float:
    if m == 0:
        return math.inf
    return 10.0 * math.log10(PEAK**2 / m)


def psnr(a: GrayImage, b: GrayImage) -> float:
    """Peak signal-to-noise ratio in dB; ``math.inf`` for identical images."""
    return psnr_from_mse(mse(a, b))


@dataclass(frozen=True)
class QualityReport:
    mse: float
    psnr_db: float
    max_abs_diff: int

    def to_dict(self) -> dict:
        psnr_db = "inf" if math.isinf(self.psnr_db) else self.psnr_db
        return {"mse": self.mse, "psnr_db": psnr_db, "max_abs_diff": self.max_abs_diff}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def quality_report(a: GrayImage, b: GrayImage) -> QualityReport:
    d = _diff(a, b)
    m = float(np.mean(d * d))
    return QualityReport(mse=m, psnr_db=psnr_from_mse(m), max_abs_diff=int(np.abs(d).max()))


def ber(sent: BitPayload, recv: BitPayload) -> float:
    if len(sent) != len(recv):
        raise LengthMismatch(f"{len(sent)} sent bits vs {len(recv)} received")
    if len(sent) == 0:
        return 0.0
    return float(np.count_nonzero(sent.bits != recv.bits)) / len(sent)


def histogram(img: GrayImage) -> np.ndarray:
    return np.bincount(img.pixels.ravel(), minlength=256)


def histogram_csv(img: GrayImage) -> str:
    return "".join(f"{v},{c}\n" for v, c in enumerate(histogram(img).tolist()))


def capacity(method: str, cover: GrayImage, params: EmbedParams | None = None) -> int:
    """Largest payload, in bits, that ``method`` is guaranteed to fit into ``cover``."""
    if method == "lsb":
        return cover.width * cover.height
    if method == "de":
        return de_capacity(cover)
    if method == "dwt":
        return dwt_capacity(cover)
    if method == "dct":
        return dct_capacity(cover)
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
