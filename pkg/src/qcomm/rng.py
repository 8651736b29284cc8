"""Counter-based random streams for reproducible Monte Carlo runs.

All stochastic operations take an explicit integer seed and derive
independent substreams from it by counter, never by sharing generator
state.  Substream ``k`` of seed ``s`` is the Philox generator keyed by
``s`` with its 256-bit counter pre-advanced to block ``k << 128``, so
distinct substreams are disjoint for any realistic draw count and value
``r`` of a substream sits at a fixed counter offset.  Simulations that
draw one value per round from a substream therefore assign round ``r``
the same randomness no matter how rounds are chunked or parallelized.
"""

import numpy as np

_SUBSTREAM_STRIDE = 1 << 128


def substream(seed: int, index: int = 0) -> np.random.Generator:
    """Independent generator for substream `index` of `seed`."""
    if seed < 0 or seed >= 1 << 64:
        raise ValueError("seed must fit in an unsigned 64-bit integer")
    if index < 0:
        raise ValueError("substream index must be nonnegative")
    return np.random.Generator(np.random.Philox(key=seed, counter=index * _SUBSTREAM_STRIDE))


def sample_categorical(probs: np.ndarray, uniforms: np.ndarray) -> np.ndarray:
    """Inverse-CDF sampling of outcome indices, one per uniform draw.

    Selecting index i requires cdf[i] > u >= cdf[i-1], so outcomes with zero
    probability (zero-width CDF intervals) can never be drawn; structurally
    impossible outcomes stay impossible even on exact boundary hits.
    """
    p = np.clip(np.asarray(probs, dtype=float), 0.0, None)
    total = p.sum()
    if total <= 0.0:
        raise ValueError("all outcome probabilities vanish")
    cdf = np.cumsum(p / total)
    cdf[-1] = 1.0
    return np.searchsorted(cdf, uniforms, side="right")
