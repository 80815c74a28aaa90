import json
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import images, random_image, random_payload
from pixmark import BitPayload, GrayImage, ber, capacity, de_embed, histogram, lsb_embed, mse, psnr, quality_report
from pixmark.errors import DimensionMismatch, LengthMismatch
from pixmark.metrics import histogram_csv, psnr_from_mse


def test_mse_examples():
    a = GrayImage.from_list(2, 2, [1, 2, 3, 4])
    assert mse(a, a) == 0
    assert mse(GrayImage.from_list(1, 1, [0]), GrayImage.from_list(1, 1, [255])) == 65025.0
    assert mse(GrayImage.from_list(2, 1, [0, 0]), GrayImage.from_list(2, 1, [1, 0])) == 0.5


def test_psnr_examples():
    a = GrayImage.from_list(1, 1, [0])
    assert psnr(a, a) == math.inf
    assert psnr(a, GrayImage.from_list(1, 1, [255])) == 0.0
    assert psnr_from_mse(1.0) == pytest.approx(48.1308, abs=1e-4)
    assert psnr_from_mse(0.5) == pytest.approx(51.1411, abs=1e-4)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        mse(GrayImage.from_list(2, 1, [0, 0]), GrayImage.from_list(1, 2, [0, 0]))


@given(images(max_side=8), st.data())
def test_mse_symmetric_psnr_monotone(a, data):
    b = data.draw(images(max_side=8).filter(lambda x: x.shape == a.shape) | st.just(a))
    assert mse(a, b) == mse(b, a)
    assert (mse(a, b) == 0) == (a == b) == math.isinf(psnr(a, b))


def test_psnr_strictly_decreasing():
    ms = np.linspace(0.01, 65025, 500)
    ps = [psnr_from_mse(m) for m in ms]
    assert all(x > y for x, y in zip(ps, ps[1:]))


def test_quality_report_json():
    a = GrayImage.from_list(2, 1, [0, 0])
    r = quality_report(a, GrayImage.from_list(2, 1, [3, 0]))
    assert json.loads(r.to_json()) == {"mse": 4.5, "psnr_db": pytest.approx(psnr_from_mse(4.5)), "max_abs_diff": 3}
    assert json.loads(quality_report(a, a).to_json()) == {"mse": 0.0, "psnr_db": "inf", "max_abs_diff": 0}


def test_ber():
    p = BitPayload([0, 1, 1, 0, 1, 0, 0, 1])
    assert ber(p, p) == 0.0
    assert ber(p, BitPayload(1 - p.bits)) == 1.0
    assert ber(p, BitPayload([1, 0, 1, 0, 1, 0, 0, 1])) == 0.25
    with pytest.raises(LengthMismatch):
        ber(p, BitPayload([0]))


def test_histogram_examples():
    h = histogram(GrayImage(np.full((4, 4), 7, np.uint8)))
    assert h[7] == 16 and h.sum() == 16 and h.size == 256
    h = histogram(GrayImage.from_list(2, 1, [0, 255]))
    assert h[0] == 1 and h[255] == 1 and h.sum() == 2


def test_histogram_csv():
    lines = histogram_csv(GrayImage.from_list(2, 1, [0, 255])).splitlines()
    assert len(lines) == 256
    assert lines[0] == "0,1" and lines[1] == "1,0" and lines[255] == "255,1"


@given(images())
def test_histogram_sum_and_permutation(img):
    h = histogram(img)
    assert h.sum() == img.width * img.height
    flipped = GrayImage(img.pixels[::-1, ::-1])
    assert np.array_equal(histogram(flipped), h)


def test_capacity_examples():
    big = GrayImage(np.zeros((512, 512), np.uint8))
    assert capacity("lsb", big) == 262144
    assert capacity("dct", big) == 4096
    assert capacity("dwt", big) == 65536
    assert capacity("de", GrayImage(np.full((8, 8), 255, np.uint8))) == 0
    with pytest.raises(ValueError):
        capacity("fft", big)


@pytest.mark.parametrize("fill", [0, 1])
def test_de_capacity_is_guaranteed(rng, fill):
    # constant payloads are the adversarial case: every bit needs the same gate
    for _ in range(100):
        cover = random_image(rng, 12, 12)
        cap = capacity("de", cover)
        de_embed(cover, BitPayload(np.full(cap, fill)))


def test_lsb_full_capacity_psnr(rng):
    cover = random_image(rng, 512, 512)
    stego = lsb_embed(cover, random_payload(rng, 512 * 512))
    assert psnr(cover, stego) == pytest.approx(51.14, abs=0.2)
