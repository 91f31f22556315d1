import pytest
from hypothesis import given, strategies as st

from snipsearch import varint


def test_known_encodings():
    out = bytearray()
    varint.encode(0, out)
    varint.encode(127, out)
    varint.encode(128, out)
    varint.encode(300, out)
    assert bytes(out) == b"\x00\x7f\x80\x01\xac\x02"


def test_negative_rejected():
    with pytest.raises(ValueError):
        varint.encode(-1, bytearray())


@given(st.lists(st.integers(0, 2**60), max_size=200))
def test_round_trip(values):
    buf = bytearray()
    varint.encode_all(values, buf)
    decoded, pos = varint.decode_n(bytes(buf), len(values))
    assert decoded == values
    assert pos == len(buf)


@given(st.lists(st.integers(0, 2**40), max_size=200))
def test_vectorized_decode_matches_scalar(values):
    buf = bytearray()
    varint.encode_all(values, buf)
    assert varint.decode_stream(bytes(buf)).tolist() == values


def test_truncated_stream_rejected():
    with pytest.raises(ValueError):
        varint.decode_stream(b"\x80")
