import numpy as np
import pytest
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from erle import ImageBuffer

_criteria = []


@pytest.fixture
def criterion():
    """Record an acceptance criterion outcome for the end-of-run summary."""

    def record(number, description, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {description}"
        if detail:
            line += f" ({detail})"
        _criteria.append((number, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_criteria):
        terminalreporter.write_line(line)


@st.composite
def images(draw, max_side=9, palette=None):
    """Random ImageBuffers; with ``palette`` set, pixels come from that many colors."""
    w = draw(st.integers(1, max_side))
    h = draw(st.integers(1, max_side))
    if palette is None:
        arr = draw(arrays(np.uint8, (h, w, 3)))
    else:
        colors = draw(arrays(np.uint8, (palette, 3)))
        idx = draw(arrays(np.intp, (h, w), elements=st.integers(0, palette - 1)))
        arr = colors[idx]
    return ImageBuffer.from_array(arr)


def random_corpus(n=1000, max_side=33, seed=20110323):
    """Deterministic mix of noise, palette-run, smooth and low-range images."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(n):
        w, h = rng.integers(1, max_side + 1, size=2)
        kind = i % 4
        if kind == 0:
            arr = rng.integers(0, 256, size=(h, w, 3))
        elif kind == 1:
            colors = rng.integers(0, 256, size=(rng.integers(1, 5), 3))
            lengths = rng.integers(1, 40, size=w * h)
            labels = np.repeat(rng.integers(0, len(colors), size=w * h), lengths)[: w * h]
            arr = colors[labels].reshape(h, w, 3)
        elif kind == 2:
            base = rng.integers(0, 200, size=3)
            ramp = np.arange(w * h).reshape(h, w, 1) * rng.integers(0, 3, size=3) // 4
            arr = np.clip(base + ramp + rng.integers(-2, 3, size=(h, w, 3)), 0, 255)
        else:
            arr = rng.integers(0, 21, size=(h, w, 3))
        out.append(ImageBuffer.from_array(arr.astype(np.uint8)))
    return out
