"""xorshift64 generator and the keyed Fisher-Yates permutation built on it.

Bit-exact by contract: an encoder and a decoder written independently must
agree on every index, so nothing here may depend on numpy's RNGs.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1


class XorShift64:
    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.state = seed

    def next(self) -> int:
        s = self.state
        s ^= (s << 13) & MASK64
        s ^= s >> 7
        s ^= (s << 17) & MASK64
        self.state = s
        return s


def keyed_permutation(n: int, key: int) -> np.ndarray:
    """Order in which ``n`` embedding slots are visited; key 0 is the identity."""
    order = list(range(n))
    if key == 0:
        return np.array(order, dtype=np.int64)
    rng = XorShift64(key)
    for i in range(n - 1, 0, -1):
        j = rng.next() % (i + 1)
        order[i], order[j] = order[j], order[i]
    return np.array(order, dtype=np.int64)
