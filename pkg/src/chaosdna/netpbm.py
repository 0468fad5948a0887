"""Binary netpbm image I/O: PGM (P5, grayscale) and PPM (P6, RGB).

Reads tolerate '#' comment lines inside the header; writes emit the minimal
header with no comments.  Only maxval 255 is supported.  All failure modes
(bad magic, malformed header, unsupported maxval, truncated payload) raise
NetpbmError with a distinct message.
"""

from __future__ import annotations

import numpy as np


class NetpbmError(ValueError):
    pass


def _read_header_tokens(data: bytes, count: int, pos: int) -> tuple[list[bytes], int]:
    tokens = []
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos : pos + 1].isspace():
            pos += 1
        if pos < n and data[pos : pos + 1] == b"#":
            while pos < n and data[pos] not in (0x0A, 0x0D):
                pos += 1
            continue
        if pos >= n:
            raise NetpbmError("malformed header: ran out of data")
        start = pos
        while pos < n and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def read_image(path) -> np.ndarray:
    """Read a P5 or P6 file; returns (H, W) uint8 for P5, (H, W, 3) for P6."""
    with open(path, "rb") as fh:
        data = fh.read()
    if len(data) < 2:
        raise NetpbmError("malformed header: file too short")
    magic = data[:2]
    if magic not in (b"P5", b"P6"):
        raise NetpbmError(f"unsupported magic {magic!r}: expected P5 or P6")
    tokens, pos = _read_header_tokens(data, 3, 2)
    try:
        width, height, maxval = (int(t) for t in tokens)
    except ValueError:
        raise NetpbmError(f"malformed header: non-numeric tokens {tokens!r}") from None
    if width < 1 or height < 1:
        raise NetpbmError(f"malformed header: bad dimensions {width}x{height}")
    if maxval != 255:
        raise NetpbmError(f"unsupported maxval {maxval}: only 255 is supported")
    pos += 1  # exactly one whitespace byte separates header and payload
    channels = 1 if magic == b"P5" else 3
    expected = width * height * channels
    payload = data[pos : pos + expected]
    if len(payload) < expected:
        raise NetpbmError(
            f"truncated pixel data: expected {expected} bytes, got {len(payload)}"
        )
    arr = np.frombuffer(payload, np.uint8)
    if channels == 1:
        return arr.reshape(height, width).copy()
    return arr.reshape(height, width, 3).copy()


def write_image(img, path) -> None:
    """Write (H, W) uint8 as P5 or (H, W, 3) as P6."""
    arr = np.ascontiguousarray(img, np.uint8)
    if arr.ndim == 2:
        magic = b"P5"
        h, w = arr.shape
    elif arr.ndim == 3 and arr.shape[2] == 3:
        magic = b"P6"
        h, w = arr.shape[:2]
    else:
        raise NetpbmError(f"cannot write image of shape {arr.shape}")
    with open(path, "wb") as fh:
        fh.write(magic + b"\n%d %d\n255\n" % (w, h))
        fh.write(arr.tobytes())
