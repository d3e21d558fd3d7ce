"""The 32-symbol character vocabulary and index-encoded strings.

Index layout is fixed so that serialized models and datasets agree:
0-3 are the honorific capitals D, M, P, S; 4-29 are a-z; 30 is '.';
31 is ' '.
"""

from dataclasses import dataclass

import numpy as np

SYMBOLS = "DMPS" + "abcdefghijklmnopqrstuvwxyz" + ". "
VOCAB_SIZE = 32

_CHAR_TO_INDEX = {ch: i for i, ch in enumerate(SYMBOLS)}

SPACE_INDEX = _CHAR_TO_INDEX[" "]


class Vocabulary:
    """Bijective symbol <-> index table over the 32 supported characters."""

    def __init__(self, symbols: str = SYMBOLS):
        if len(symbols) != VOCAB_SIZE or len(set(symbols)) != VOCAB_SIZE:
            raise ValueError(f"vocabulary must hold exactly {VOCAB_SIZE} distinct symbols")
        self.symbols = symbols
        self.index = {ch: i for i, ch in enumerate(symbols)}

    def __len__(self) -> int:
        return VOCAB_SIZE

    def __contains__(self, ch: str) -> bool:
        return ch in self.index

    def encode(self, text: str) -> np.ndarray:
        """Map text to an index array; unknown characters raise with position."""
        if not text:
            raise ValueError("cannot encode an empty string")
        out = np.empty(len(text), dtype=np.int64)
        for pos, ch in enumerate(text):
            idx = self.index.get(ch)
            if idx is None:
                raise ValueError(f"character {ch!r} at position {pos} is not in the vocabulary")
            out[pos] = idx
        return out

    def decode(self, indices) -> str:
        return "".join(self.symbols[int(i)] for i in indices)


VOCAB = Vocabulary()


@dataclass
class EncodedString:
    """A string plus its vocabulary-index form; round-trips through VOCAB."""

    indices: np.ndarray
    original: str

    def __post_init__(self):
        self.indices = np.asarray(self.indices, dtype=np.int64)
        if self.indices.size < 1:
            raise ValueError("encoded string must have at least one character")
        if self.indices.min() < 0 or self.indices.max() >= VOCAB_SIZE:
            raise ValueError("character index out of range [0, 32)")

    def __len__(self) -> int:
        return int(self.indices.size)


def encode_string(text: str, vocab: Vocabulary = VOCAB) -> EncodedString:
    return EncodedString(indices=vocab.encode(text), original=text)
