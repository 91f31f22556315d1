"""LEB128 unsigned varints: little-endian groups of 7 bits, high bit = continuation."""

from __future__ import annotations


def encode(value: int, out: bytearray) -> None:
    if value < 0:
        raise ValueError("varints are unsigned")
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            out.append(byte | 0x80)
        else:
            out.append(byte)
            return


def encode_all(values, out: bytearray) -> None:
    for v in values:
        encode(v, out)


def decode(buf: bytes, pos: int = 0) -> tuple[int, int]:
    """Returns (value, next position)."""
    result = 0
    shift = 0
    while True:
        byte = buf[pos]
        pos += 1
        result |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return result, pos
        shift += 7


def decode_n(buf: bytes, n: int, pos: int = 0) -> tuple[list[int], int]:
    values = []
    for _ in range(n):
        v, pos = decode(buf, pos)
        values.append(v)
    return values, pos


def decode_stream(buf: bytes) -> "np.ndarray":
    """Decode every varint in buf, vectorized."""
    import numpy as np

    raw = np.frombuffer(buf, dtype=np.uint8)
    if raw.size == 0:
        return np.empty(0, dtype=np.int64)
    is_end = raw < 0x80
    ends = np.nonzero(is_end)[0]
    if ends.size == 0 or ends[-1] != raw.size - 1:
        raise ValueError("truncated varint stream")
    starts = np.empty_like(ends)
    starts[0] = 0
    starts[1:] = ends[:-1] + 1
    widths = ends - starts + 1
    values = np.zeros(ends.size, dtype=np.int64)
    payload = (raw & 0x7F).astype(np.int64)
    for j in range(int(widths.max())):
        sel = widths > j
        values[sel] |= payload[starts[sel] + j] << (7 * j)
    return values
