"""Per-run seed derivation.

Every run gets a 64-bit seed mixed from (base seed, algorithm label, n, run
index), so the stream of one run never depends on which other runs are part
of the same experiment or on the order they execute in.
"""

import hashlib

import numpy as np


def derive_seed(base_seed: int, algorithm: str, n: int, run: int) -> int:
    """Return the 64-bit seed of run `run` at size `n`.

    The first 8 bytes (little endian) of SHA-256 over
    ``"{base_seed}:{algorithm}:{n}:{run}"``.
    """
    key = f"{base_seed}:{algorithm}:{n}:{run}".encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "little")


def run_streams(seed: int) -> tuple[np.random.Generator, np.random.Generator]:
    """Split a run seed into independent (instance, algorithm) streams.

    The instance stream generates the MAX-3SAT formula; the algorithm stream
    drives the initial point and all search randomness.
    """
    instance_seq, algorithm_seq = np.random.SeedSequence(seed).spawn(2)
    return np.random.default_rng(instance_seq), np.random.default_rng(algorithm_seq)
