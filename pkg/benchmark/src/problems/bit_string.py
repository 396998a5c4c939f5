"""Word-packed fixed-length bit strings."""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np
import numpy.typing as npt

from ..utils.errors import InvalidParameterError

WORD_BITS = 64
_ALL_ONES = np.uint64(0xFFFFFFFFFFFFFFFF)


def _word_count(n: int) -> int:
    return (n + WORD_BITS - 1) // WORD_BITS


def _tail_mask(n: int) -> np.uint64:
    rem = n % WORD_BITS
    if rem == 0:
        return _ALL_ONES
    return np.uint64((1 << rem) - 1)


class BitString:
    """A length-n Boolean vector stored in 64-bit words.

    Bit i lives in word i // 64 at position i % 64. Bits past n in the last
    word are always zero, so popcounts over whole words are exact.

    Attributes:
        n: Length of the string (immutable).
        words: Backing uint64 array.
    """

    __slots__ = ("n", "words")

    def __init__(self, n: int, words: npt.NDArray[np.uint64] | None = None) -> None:
        if n < 1:
            raise InvalidParameterError(f"BitString length must be >= 1, got {n}")
        self.n = int(n)
        if words is None:
            words = np.zeros(_word_count(self.n), dtype=np.uint64)
        elif words.shape != (_word_count(self.n),) or words.dtype != np.uint64:
            raise InvalidParameterError(
                f"Expected {_word_count(self.n)} uint64 words for n={self.n}"
            )
        self.words = words

    @classmethod
    def zeros(cls, n: int) -> BitString:
        """Return the all-zeros string of length n."""
        return cls(n)

    @classmethod
    def ones(cls, n: int) -> BitString:
        """Return the all-ones string of length n."""
        words = np.full(_word_count(n), _ALL_ONES, dtype=np.uint64)
        words[-1] &= _tail_mask(n)
        return cls(n, words)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> BitString:
        """Return a uniformly random string of length n."""
        words = rng.integers(
            0, _ALL_ONES, size=_word_count(n), dtype=np.uint64, endpoint=True
        )
        words[-1] &= _tail_mask(n)
        return cls(n, words)

    @classmethod
    def from_bits(cls, bits: Iterable[int | bool] | str) -> BitString:
        """Build a string from a sequence of 0/1 values or a '0101' literal.

        Position 0 is the first character / element.
        """
        if isinstance(bits, str):
            values = np.array([c == "1" for c in bits], dtype=bool)
        else:
            values = np.array([bool(b) for b in bits], dtype=bool)
        out = cls(len(values))
        out.flip(np.flatnonzero(values))
        return out

    def to_bits(self) -> npt.NDArray[np.bool_]:
        """Unpack into a length-n bool array."""
        unpacked = np.unpackbits(self.words.view(np.uint8), bitorder="little")
        return unpacked[: self.n].astype(bool)

    def count_ones(self) -> int:
        """Return the number of one-bits."""
        return int(np.bitwise_count(self.words).sum())

    def get_bits(self, indices: npt.NDArray[np.int64]) -> npt.NDArray[np.int64]:
        """Return the bits at `indices` as an int array of 0/1 values."""
        idx = np.asarray(indices, dtype=np.int64)
        shifts = (idx & (WORD_BITS - 1)).astype(np.uint64)
        return ((self.words[idx >> 6] >> shifts) & np.uint64(1)).astype(np.int64)

    def flip(self, indices: npt.NDArray[np.int64]) -> None:
        """XOR the bits at the given distinct indices in place."""
        idx = np.asarray(indices, dtype=np.int64)
        if idx.size == 0:
            return
        masks = np.left_shift(np.uint64(1), (idx & (WORD_BITS - 1)).astype(np.uint64))
        np.bitwise_xor.at(self.words, idx >> 6, masks)

    def copy(self) -> BitString:
        """Return an independent copy."""
        return BitString(self.n, self.words.copy())

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self.n, self.words.tobytes()))

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.to_bits())

    def __repr__(self) -> str:
        """Human-readable representation for debugging."""
        if self.n <= 64:
            return f"BitString('{self}')"
        return f"BitString(n={self.n}, ones={self.count_ones()})"
