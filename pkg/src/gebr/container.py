"""On-disk chunk container format.

Layout (all integers little endian):

    magic   4 bytes  "GEBR"
    version u8       1
    kind    u8       0 = expanded (m rows per column), 1 = compact (alpha)
    p       u16
    tau     u16
    k       u16
    r       u16
    w       u8
    glen    u16      number of g coefficients
    g       glen bytes, coefficient of x^0 first
    payload rows * (k+r) bytes, column major, one byte per symbol
    crc32   u32      over header + payload

A file is a sequence of containers; when at least one container is present
an 8-byte u64 footer records the true (unpadded) payload byte length. An
empty file is a valid encoding of empty input.
"""

import struct
import zlib

import numpy as np

from .errors import ContainerError
from .gebr_codec import GebrArray
from .gbr_codec import GbrArray
from .params import CodeParams, derive_params

MAGIC = b"GEBR"
VERSION = 1
KIND_GEBR = 0
KIND_GBR = 1

_HEADER = struct.Struct("<4sBBHHHHBH")
_CRC = struct.Struct("<I")
_FOOTER = struct.Struct("<Q")


def _rows(kind: int, params: CodeParams) -> int:
    return params.m if kind == KIND_GEBR else params.alpha


def kind_of(arr) -> int:
    return KIND_GEBR if isinstance(arr, GebrArray) else KIND_GBR


def pack_array(arr) -> bytes:
    """Serialize one array (either kind) into container bytes."""
    params = arr.params
    g = np.asarray(params.g, dtype=np.uint8)
    header = _HEADER.pack(
        MAGIC, VERSION, kind_of(arr), params.p, params.tau,
        params.k, params.r, params.w, len(g),
    ) + g.tobytes()
    payload = arr.symbols.tobytes(order="F")
    body = header + payload
    return body + _CRC.pack(zlib.crc32(body) & 0xFFFFFFFF)


def unpack_array(buf: bytes, offset: int = 0):
    """Parse one container at `offset`; returns (array, next_offset)."""
    if len(buf) - offset < _HEADER.size:
        raise ContainerError("truncated container header")
    magic, version, kind, p, tau, k, r, w, glen = _HEADER.unpack_from(buf, offset)
    if magic != MAGIC:
        raise ContainerError(f"bad magic {magic!r}")
    if version != VERSION:
        raise ContainerError(f"unsupported version {version}")
    if kind not in (KIND_GEBR, KIND_GBR):
        raise ContainerError(f"unknown code kind {kind}")
    pos = offset + _HEADER.size
    if len(buf) < pos + glen:
        raise ContainerError("truncated g coefficients")
    g = np.frombuffer(buf[pos : pos + glen], dtype=np.uint8)
    pos += glen
    try:
        params = derive_params(p, tau, k, r, w=w, g=g)
    except Exception as ex:
        raise ContainerError(f"invalid header parameters: {ex}") from ex
    rows = _rows(kind, params)
    n_payload = rows * params.n
    if len(buf) < pos + n_payload + _CRC.size:
        raise ContainerError("truncated payload")
    payload = buf[pos : pos + n_payload]
    pos += n_payload
    (crc_stored,) = _CRC.unpack_from(buf, pos)
    pos += _CRC.size
    crc_actual = zlib.crc32(buf[offset : pos - _CRC.size]) & 0xFFFFFFFF
    if crc_stored != crc_actual:
        raise ContainerError(
            f"CRC mismatch: stored {crc_stored:08x}, computed {crc_actual:08x}"
        )
    symbols = np.frombuffer(payload, dtype=np.uint8).reshape(
        (rows, params.n), order="F"
    )
    cls = GebrArray if kind == KIND_GEBR else GbrArray
    return cls(params, symbols), pos


def chunk_payload_size(params: CodeParams) -> int:
    return params.alpha * params.k


def split_chunks(data: bytes, params: CodeParams):
    """Split input into alpha x k information arrays, zero-padding the tail."""
    size = chunk_payload_size(params)
    chunks = []
    for start in range(0, len(data), size):
        piece = data[start : start + size]
        if len(piece) < size:
            piece = piece + b"\x00" * (size - len(piece))
        info = np.frombuffer(piece, dtype=np.uint8).reshape(
            (params.alpha, params.k), order="F"
        )
        chunks.append(info)
    return chunks


def join_chunks(infos, true_length: int) -> bytes:
    out = b"".join(info.tobytes(order="F") for info in infos)
    if true_length > len(out):
        raise ContainerError(
            f"footer length {true_length} exceeds decoded payload {len(out)}"
        )
    return out[:true_length]


def write_stream(arrays, true_length: int) -> bytes:
    """Containers plus the true-length footer; empty for no chunks."""
    if not arrays:
        return b""
    parts = [pack_array(a) for a in arrays]
    parts.append(_FOOTER.pack(true_length))
    return b"".join(parts)


def read_stream(buf: bytes):
    """Parse a container stream; returns (arrays, true_length)."""
    if not buf:
        return [], 0
    arrays = []
    pos = 0
    while len(buf) - pos > _FOOTER.size:
        arr, pos = unpack_array(buf, pos)
        arrays.append(arr)
    if len(buf) - pos != _FOOTER.size:
        raise ContainerError("missing or misaligned true-length footer")
    (true_length,) = _FOOTER.unpack_from(buf, pos)
    if not arrays:
        raise ContainerError("footer without containers")
    return arrays, true_length
