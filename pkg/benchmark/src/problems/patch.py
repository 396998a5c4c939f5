"""Patches: offspring encoded as the sorted set of bits that differ from the parent."""

import numpy as np
import numpy.typing as npt

from ..utils.errors import InvalidParameterError

type Patch = npt.NDArray[np.int64]

EMPTY_PATCH: Patch = np.empty(0, dtype=np.int64)
EMPTY_PATCH.setflags(write=False)


def make_patch(indices: object, n: int) -> Patch:
    """Normalize arbitrary indices into a valid patch for length n.

    Raises:
        InvalidParameterError: If an index is outside [0, n) or repeated.
    """
    patch = np.sort(np.asarray(indices, dtype=np.int64).ravel())
    validate_patch(patch, n)
    return patch


def validate_patch(patch: Patch, n: int, *, check_order: bool = True) -> None:
    """Check that `patch` is strictly increasing and inside [0, n).

    Incremental evaluators pass check_order=False and only pay for the
    range test.

    Raises:
        InvalidParameterError: On any violation.
    """
    if patch.size == 0:
        return
    if patch[0] < 0 or patch[-1] >= n:
        raise InvalidParameterError(
            f"Patch index out of range for n={n}: [{patch[0]}, {patch[-1]}]"
        )
    if check_order and patch.size > 1 and not bool(np.all(np.diff(patch) > 0)):
        raise InvalidParameterError("Patch indices must be distinct and sorted")


def random_patch(n: int, size: int, rng: np.random.Generator) -> Patch:
    """Return a uniformly random `size`-subset of [0, n) as a patch."""
    if size == 1:
        return np.array([rng.integers(n)], dtype=np.int64)
    chosen = rng.choice(n, size=size, replace=False)
    return np.sort(chosen.astype(np.int64))


def subsample_patch(patch: Patch, bias: float, rng: np.random.Generator) -> Patch:
    """Keep each index of `patch` independently with probability `bias`.

    Relative to the parent x this is the patch of the biased crossover between
    x and the mutant x + patch: positions outside the patch agree in both
    parents, so only patch positions can differ.

    The retained count is drawn as Bin(|patch|, bias) and the retained set as a
    uniform subset of that size, which has the same law as independent coins.

    Raises:
        InvalidParameterError: If bias is outside (0, 1].
    """
    if not (0.0 < bias <= 1.0):
        raise InvalidParameterError(f"bias must lie in (0, 1], got {bias}")
    size = patch.size
    if size == 0 or bias == 1.0:
        return patch.copy()
    keep = int(rng.binomial(size, bias))
    if keep == 0:
        return EMPTY_PATCH
    if keep == size:
        return patch.copy()
    chosen = rng.choice(size, size=keep, replace=False)
    return patch[np.sort(chosen)]
