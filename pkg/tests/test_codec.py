import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from erle import (
    ImageBuffer,
    LogicalRun,
    Rgb24,
    ScalarRun,
    decode,
    encode_classic,
    encode_enhanced,
    encode_runs_scalar,
)
from erle.codec import check_threshold, run_starts
from erle.errors import CountMismatch, NegativeThreshold

from conftest import images
import oracles

PAPER_GRID = [100, 101, 102, 100, 200, 200, 205, 209, 300, 300, 305, 301, 210, 205, 300, 300]

# the 4x4 grid halved into byte range, used as gray pixels
HALVED_GRID = [50, 50, 51, 50, 100, 100, 102, 104, 150, 150, 152, 150, 105, 102, 150, 150]


def gray(values, width):
    return ImageBuffer(width, len(values) // width, [(v, v, v) for v in values])


def test_worked_example_enhanced():
    assert encode_runs_scalar(PAPER_GRID, 10) == [
        (100, 4), (200, 4), (300, 4), (210, 2), (300, 2)
    ]


def test_worked_example_classic():
    assert encode_runs_scalar(PAPER_GRID, 0) == [
        (100, 1), (101, 1), (102, 1), (100, 1), (200, 2), (205, 1), (209, 1),
        (300, 2), (305, 1), (301, 1), (210, 1), (205, 1), (300, 2),
    ]


def test_string_example():
    assert encode_runs_scalar([int(c) for c in "11112222333111"]) == [
        (1, 4), (2, 4), (3, 3), (1, 3)
    ]


def test_signed_difference_would_merge():
    # only the absolute difference keeps 100 and 200 in separate runs
    runs = encode_runs_scalar([100, 200], 10)
    assert runs == [(100, 1), (200, 1)]


def test_anchor_not_adjacent():
    # each step is 4 but the drift from the anchor exceeds 10 at 112
    assert encode_runs_scalar([100, 104, 108, 112, 116], 10) == [(100, 3), (112, 2)]


def test_scalar_edge_cases():
    assert encode_runs_scalar([], 3) == []
    assert encode_runs_scalar([7], 3) == [ScalarRun(7, 1)]
    with pytest.raises(NegativeThreshold):
        encode_runs_scalar([1, 2], -1)


@settings(max_examples=300)
@given(st.lists(st.integers(0, 20), max_size=64), st.integers(0, 20))
def test_scalar_matches_bruteforce(seq, th):
    assert encode_runs_scalar(seq, th) == oracles.greedy_runs(seq, th)


@settings(max_examples=200)
@given(st.lists(st.integers(0, 20), min_size=1, max_size=10), st.integers(0, 8))
def test_scalar_matches_enumeration(seq, th):
    assert encode_runs_scalar(seq, th) == oracles.enumerated_runs(seq, th)


def test_classic_uniform():
    assert encode_classic(ImageBuffer.filled(10, 10, (5, 5, 5))) == [((5, 5, 5), 100)]


def test_classic_crosses_row_boundary():
    img = ImageBuffer(2, 2, [(1, 1, 1), (2, 2, 2), (2, 2, 2), (1, 1, 1)])
    assert encode_classic(img) == [((1, 1, 1), 1), ((2, 2, 2), 2), ((1, 1, 1), 1)]


def test_classic_distinguishes_channels():
    img = ImageBuffer(3, 1, [(1, 2, 3), (1, 2, 4), (1, 2, 4)])
    assert encode_classic(img) == [((1, 2, 3), 1), ((1, 2, 4), 2)]


def test_enhanced_halved_grid():
    img = gray(HALVED_GRID, 4)
    runs = encode_enhanced(img, 5)
    assert [(r.value.r, r.count) for r in runs] == [
        (50, 4), (100, 4), (150, 4), (105, 2), (150, 2)
    ]
    assert all(r.value.r == r.value.g == r.value.b for r in runs)


def test_enhanced_uses_channel_conjunction():
    # green drifts beyond th while red and blue stay put
    img = ImageBuffer(3, 1, [(10, 10, 10), (10, 16, 10), (10, 20, 10)])
    assert encode_enhanced(img, 10) == [((10, 10, 10), 3)]
    assert encode_enhanced(img, 5) == [((10, 10, 10), 1), ((10, 16, 10), 2)]


@pytest.mark.parametrize("th", [0, 1, 10, 255])
def test_enhanced_uniform(th):
    assert len(encode_enhanced(ImageBuffer.filled(7, 3, (200, 200, 200)), th)) == 1


def test_enhanced_default_threshold_is_10():
    img = ImageBuffer(2, 1, [(0, 0, 0), (10, 10, 10)])
    assert len(encode_enhanced(img)) == 1
    img = ImageBuffer(2, 1, [(0, 0, 0), (11, 0, 0)])
    assert len(encode_enhanced(img)) == 2


def test_enhanced_threshold_range():
    img = ImageBuffer.filled(1, 1, (0, 0, 0))
    with pytest.raises(NegativeThreshold):
        encode_enhanced(img, -1)
    with pytest.raises(ValueError):
        encode_enhanced(img, 256)
    assert check_threshold(255) == 255


@settings(max_examples=200)
@given(images(max_side=8, palette=3), st.sampled_from([0, 1, 5, 10, 25, 50, 255]))
def test_enhanced_matches_pixelwise_oracle(img, th):
    pixels = [tuple(p) for p in img.flat().tolist()]
    assert encode_enhanced(img, th) == oracles.pixelwise_enhanced(pixels, th)


@settings(max_examples=200)
@given(images(max_side=8))
def test_classic_matches_pixelwise_oracle(img):
    pixels = [tuple(p) for p in img.flat().tolist()]
    assert encode_classic(img) == oracles.pixelwise_classic(pixels)


@settings(max_examples=200)
@given(images(max_side=9, palette=4))
def test_classic_lossless(img):
    runs = encode_classic(img)
    assert sum(r.count for r in runs) == img.pixel_count
    assert decode(runs, img.width, img.height) == img


@settings(max_examples=200)
@given(images(max_side=9), st.integers(0, 60))
def test_enhanced_properties(img, th):
    classic = encode_classic(img)
    enhanced = encode_enhanced(img, th)
    assert sum(r.count for r in enhanced) == img.pixel_count
    assert len(enhanced) <= len(classic)
    assert set(run_starts(enhanced)) <= set(run_starts(classic))
    flat = img.flat()
    for start, run in zip(run_starts(enhanced), enhanced):
        assert tuple(flat[start].tolist()) == run.value
    recon = decode(enhanced, img.width, img.height)
    err = np.abs(recon.pixels.astype(int) - img.pixels.astype(int)).max()
    assert err <= th


@settings(max_examples=100)
@given(images(max_side=9, palette=2))
def test_threshold_zero_is_classic(img):
    assert encode_enhanced(img, 0) == encode_classic(img)


def test_decode_uniform():
    assert decode([((5, 5, 5), 100)], 10, 10) == ImageBuffer.filled(10, 10, (5, 5, 5))


def test_decode_count_mismatch():
    with pytest.raises(CountMismatch):
        decode([((5, 5, 5), 99)], 10, 10)
    with pytest.raises(CountMismatch):
        decode([], 1, 1)


def test_types_validate():
    with pytest.raises(ValueError):
        Rgb24(256, 0, 0)
    with pytest.raises(ValueError):
        Rgb24(0, -1, 0)
    with pytest.raises(ValueError):
        LogicalRun((1, 2, 3), 0)
    assert LogicalRun((1, 2, 3), 10**9).count == 10**9
    with pytest.raises(ValueError):
        ImageBuffer(0, 1, [])
    with pytest.raises(ValueError):
        ImageBuffer(2, 2, [(0, 0, 0)])
    with pytest.raises(ValueError):
        ImageBuffer(1, 1, [(0, 0, 300)])
