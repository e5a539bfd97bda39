# seeding.py
import hashlib

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF


def make_rng(seed):
    """The one generator family used everywhere: PCG64 seeded with a 64-bit integer."""
    return np.random.Generator(np.random.PCG64(int(seed) & _MASK64))


def derive_seed(master_seed, *coordinates):
    """Stable 63-bit seed from a master seed and any printable coordinates.

    Depends only on the values, never on call order or process, so a cell or
    capture gets the same seed whether it runs alone or inside a full batch.
    """
    key = "|".join([str(int(master_seed))] + [str(c) for c in coordinates])
    digest = hashlib.blake2b(key.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little") >> 1
