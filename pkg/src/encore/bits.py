"""Bit-string buffers and integer codes shared by the codecs.

A bit string is a numpy uint8 array holding one bit per element. When bit
strings are packed into bytes, the first bit of the stream is the most
significant bit of the first byte.
"""
from __future__ import annotations

import numpy as np


class TruncatedStreamError(ValueError):
    """A bit stream ended in the middle of a code word or field."""


def bits_from_bytes(data: bytes, bit_count: int | None = None) -> np.ndarray:
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
    if bit_count is not None:
        if bit_count > bits.size:
            raise TruncatedStreamError(
                f"need {bit_count} bits, packed data holds {bits.size}"
            )
        bits = bits[:bit_count]
    return bits


def bytes_from_bits(bits: np.ndarray) -> bytes:
    """Pack a bit string MSB-first, zero-padding the final byte."""
    return np.packbits(np.asarray(bits, dtype=np.uint8)).tobytes()


def bits_from_text(text: str) -> np.ndarray:
    return np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0")


def text_from_bits(bits: np.ndarray) -> str:
    return "".join("1" if b else "0" for b in np.asarray(bits))


def bits_from_int(value: int, width: int) -> np.ndarray:
    if width < 0 or value < 0 or value >> width:
        raise ValueError(f"value {value} does not fit in {width} bits")
    return np.array([(value >> (width - 1 - i)) & 1 for i in range(width)], dtype=np.uint8)


class BitWriter:
    """Append-only bit buffer."""

    def __init__(self) -> None:
        self._chunks: list[np.ndarray] = []
        self._length = 0

    def __len__(self) -> int:
        return self._length

    def append_bit(self, bit: int) -> None:
        self._chunks.append(np.array([1 if bit else 0], dtype=np.uint8))
        self._length += 1

    def append_int(self, value: int, width: int) -> None:
        if width == 0:
            return
        self._chunks.append(bits_from_int(value, width))
        self._length += width

    def append_array(self, bits: np.ndarray) -> None:
        arr = np.asarray(bits, dtype=np.uint8)
        self._chunks.append(arr)
        self._length += arr.size

    def getvalue(self) -> np.ndarray:
        if not self._chunks:
            return np.zeros(0, dtype=np.uint8)
        return np.concatenate(self._chunks)


class BitReader:
    """Sequential reader over a bit string with exact position accounting."""

    def __init__(self, bits: np.ndarray, pos: int = 0) -> None:
        self._bits = np.asarray(bits, dtype=np.uint8)
        self.pos = pos

    @property
    def remaining(self) -> int:
        return self._bits.size - self.pos

    def read_bit(self) -> int:
        if self.pos >= self._bits.size:
            raise TruncatedStreamError("bit stream exhausted")
        b = int(self._bits[self.pos])
        self.pos += 1
        return b

    def read_int(self, width: int) -> int:
        if width > self.remaining:
            raise TruncatedStreamError(
                f"need {width} bits, {self.remaining} remain"
            )
        v = 0
        for _ in range(width):
            v = (v << 1) | int(self._bits[self.pos])
            self.pos += 1
        return v

    def read_array(self, count: int) -> np.ndarray:
        if count > self.remaining:
            raise TruncatedStreamError(
                f"need {count} bits, {self.remaining} remain"
            )
        out = self._bits[self.pos : self.pos + count]
        self.pos += count
        return out


def gamma_encode(value: int, writer: BitWriter) -> None:
    """Elias gamma code for a positive integer: (b-1) zeros then b value bits."""
    if value < 1:
        raise ValueError("gamma code requires a positive integer")
    width = value.bit_length()
    writer.append_int(0, width - 1)
    writer.append_int(value, width)


def gamma_decode(reader: BitReader) -> int:
    zeros = 0
    while reader.read_bit() == 0:
        zeros += 1
    value = 1
    for _ in range(zeros):
        value = (value << 1) | reader.read_bit()
    return value
