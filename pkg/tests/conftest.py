import numpy as np
import pytest


class StubRng:
    """Drop-in for numpy Generator that replays scripted draws.

    Each scripted value answers one call; standard_normal / random /
    integers consume from their own queues so tests can force exact
    step sizes, switch draws, or partner picks.
    """

    def __init__(self, normals=(), uniforms=(), ints=()):
        self._normals = list(normals)
        self._uniforms = list(uniforms)
        self._ints = list(ints)

    def standard_normal(self, size=None):
        out = self._normals.pop(0)
        if size is None:
            return float(out)
        arr = np.asarray(out, dtype=float)
        assert arr.shape == (size,), f"scripted normal draw has wrong shape for size={size}"
        return arr.copy()

    def random(self, size=None):
        out = self._uniforms.pop(0)
        if size is None:
            return float(out)
        return np.asarray(out, dtype=float).copy()

    def integers(self, low, high=None):
        return int(self._ints.pop(0))


@pytest.fixture
def rng():
    return np.random.default_rng(0)
