"""Bit-string helpers.

Bit-strings are Python ``str`` of ``'0'``/``'1'`` rendered most-significant-bit
first, matching the transcript format.  Internally bit ``j`` of the integer
form corresponds to qubit ``j`` (least significant bit = qubit 0).
"""

from __future__ import annotations


def validate_bits(bits: str) -> str:
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"not a bit-string: {bits!r}")
    return bits


def bits_to_int(bits: str) -> int:
    """Parse an MSB-first bit-string into its integer value."""
    return int(validate_bits(bits), 2)


def int_to_bits(value: int, width: int) -> str:
    """Render an integer as an MSB-first bit-string of exactly ``width`` bits."""
    if width < 1:
        raise ValueError("width must be >= 1")
    if value < 0 or value >> width:
        raise ValueError(f"value {value} does not fit in {width} bits")
    return format(value, f"0{width}b")


def parity(value: int) -> int:
    """Sum of the bits of ``value`` modulo 2."""
    return value.bit_count() & 1


def xor_bits(a: str, b: str) -> str:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return int_to_bits(bits_to_int(a) ^ bits_to_int(b), len(a))


def dot_mod2(a: str, b: str) -> int:
    """Inner product of two equal-length bit-strings modulo 2."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return parity(bits_to_int(a) & bits_to_int(b))


def message_to_bits(text: str | bytes) -> str:
    """Encode a message as a bit-string, each UTF-8 byte MSB first."""
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
    if not data:
        raise ValueError("empty message")
    return "".join(format(byte, "08b") for byte in data)


def bits_to_message(bits: str) -> str:
    """Decode a bit-string produced by :func:`message_to_bits`."""
    validate_bits(bits)
    if len(bits) % 8:
        raise ValueError("bit length is not a multiple of 8")
    data = bytes(int(bits[i : i + 8], 2) for i in range(0, len(bits), 8))
    return data.decode("utf-8")
