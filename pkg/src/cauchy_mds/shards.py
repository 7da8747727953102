"""Splitting files into self-describing shards and joining them back.

A file is cut into stripes of k(p-1) bits (bit b of byte i is file bit
8i+b), zero-padded at the end.  Within a stripe, bit m belongs to
information column m // (p-1), row m % (p-1).  Each of the k+r columns
becomes one shard:

    header  "CMDS" | version u8 | p u16 | k u8 | r u8 | column u8 | length u64 | stripes u32
    body    per stripe, ceil((p-1)/8) bytes holding the column's p-1 bits,
            bit i at byte i // 8, position i % 8

All header integers are little-endian.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .codec import CodeParams, ErasureError, ErasurePattern, decode_array, encode_array

MAGIC = b"CMDS"
VERSION = 1
HEADER = struct.Struct("<4sBHBBBQI")
SUFFIX = ".cmds"

# bits of file data handled per batch
CHUNK_BITS = 1 << 23


class ShardError(ValueError):
    """Malformed shard or inconsistent shard set."""


@dataclass(frozen=True)
class ShardHeader:
    p: int
    k: int
    r: int
    column: int
    length: int
    stripes: int
    version: int = VERSION

    def pack(self) -> bytes:
        return HEADER.pack(MAGIC, self.version, self.p, self.k, self.r, self.column, self.length, self.stripes)

    @classmethod
    def unpack(cls, raw: bytes) -> ShardHeader:
        if len(raw) < HEADER.size:
            raise ShardError("shard is shorter than its header")
        magic, version, p, k, r, column, length, stripes = HEADER.unpack_from(raw)
        if magic != MAGIC:
            raise ShardError(f"bad magic {magic!r}")
        if version != VERSION:
            raise ShardError(f"unsupported shard format version {version}")
        return cls(p, k, r, column, length, stripes, version)

    @property
    def params(self) -> CodeParams:
        return CodeParams(self.p, self.k, self.r)

    def same_set(self, other: ShardHeader) -> bool:
        return (self.p, self.k, self.r, self.length, self.stripes, self.version) == (
            other.p, other.k, other.r, other.length, other.stripes, other.version
        )


def _row_bytes(p: int) -> int:
    return (p - 1 + 7) // 8


def stripe_count(length: int, params: CodeParams) -> int:
    bits = params.k * params.rows
    return (8 * length + bits - 1) // bits


def _chunk_stripes(params: CodeParams) -> int:
    # a multiple of 8 stripes always covers whole input bytes
    return max(8, CHUNK_BITS // (params.k * params.rows) // 8 * 8)


def _pack_column(bits: np.ndarray, p: int) -> bytes:
    """(n, p-1) column bits -> shard body bytes."""
    n = bits.shape[0]
    padded = np.zeros((n, 8 * _row_bytes(p)), dtype=np.uint8)
    padded[:, : p - 1] = bits
    return np.packbits(padded, axis=1, bitorder="little").tobytes()


def _unpack_column(body: bytes, p: int, n: int) -> np.ndarray:
    raw = np.frombuffer(body, dtype=np.uint8).reshape(n, _row_bytes(p))
    return np.unpackbits(raw, axis=1, count=p - 1, bitorder="little")


def encode_bytes(data: bytes, params: CodeParams) -> list[bytes]:
    """Shard ``data``; returns k+r shard images, column order."""
    if params.n > 256 or params.p > 0xFFFF:
        raise ValueError("parameters do not fit the shard header")
    n = stripe_count(len(data), params)
    stripe_bits = params.k * params.rows
    bodies: list[list[bytes]] = [[] for _ in range(params.n)]
    buf = np.frombuffer(data, dtype=np.uint8)
    step = _chunk_stripes(params)
    for start in range(0, n, step):
        count = min(step, n - start)
        first = start * stripe_bits // 8
        raw = buf[first : first + (count * stripe_bits + 7) // 8]
        bits = np.zeros(count * stripe_bits, dtype=np.uint8)
        unpacked = np.unpackbits(raw, bitorder="little")[: count * stripe_bits]
        bits[: unpacked.size] = unpacked
        info = bits.reshape(count, params.k, params.rows).transpose(0, 2, 1)
        codewords = encode_array(params, info)
        for c in range(params.n):
            bodies[c].append(_pack_column(codewords[:, :, c], params.p))
    return [
        ShardHeader(params.p, params.k, params.r, c, len(data), n).pack() + b"".join(bodies[c])
        for c in range(params.n)
    ]


def decode_shards(images: Sequence[bytes]) -> bytes:
    """Reassemble the original bytes from at least k consistent shard images."""
    if not images:
        raise ErasureError("no shards given")
    headers = [ShardHeader.unpack(img) for img in images]
    first = headers[0]
    if any(not first.same_set(h) for h in headers[1:]):
        raise ShardError("shards come from different encodings")
    try:
        params = first.params
    except ValueError as exc:
        raise ShardError(f"invalid parameters in header: {exc}") from exc
    n = first.stripes
    if n != stripe_count(first.length, params):
        raise ShardError("stripe count disagrees with the recorded length")
    body_len = n * _row_bytes(params.p)
    columns: dict[int, bytes] = {}
    for h, img in zip(headers, images):
        if not 0 <= h.column < params.n:
            raise ShardError(f"column index {h.column} out of range")
        if h.column in columns:
            raise ShardError(f"duplicate shard for column {h.column}")
        body = img[HEADER.size :]
        if len(body) != body_len:
            raise ShardError(f"shard {h.column} body has {len(body)} bytes, expected {body_len}")
        columns[h.column] = body
    if len(columns) < params.k:
        raise ErasureError(f"{len(columns)} shards given, at least k = {params.k} needed")
    pattern = ErasurePattern.from_missing(params, set(range(params.n)) - set(columns))
    row_bytes = _row_bytes(params.p)
    step = _chunk_stripes(params)
    out = []
    for start in range(0, n, step):
        count = min(step, n - start)
        lo, hi = start * row_bytes, (start + count) * row_bytes
        avail = {c: _unpack_column(body[lo:hi], params.p, count) for c, body in columns.items()}
        info = decode_array(params, avail, pattern)[:, :, : params.k]
        out.append(np.packbits(info.transpose(0, 2, 1).ravel(), bitorder="little").tobytes())
    return b"".join(out)[: first.length]


def shard_name(source: Path | str, column: int) -> str:
    return f"{Path(source).name}.{column:03d}{SUFFIX}"


def encode_file(source: Path | str, params: CodeParams, out_dir: Path | str) -> list[Path]:
    source, out_dir = Path(source), Path(out_dir)
    images = encode_bytes(source.read_bytes(), params)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for c, img in enumerate(images):
        path = out_dir / shard_name(source, c)
        path.write_bytes(img)
        paths.append(path)
    return paths


def decode_files(shards: Sequence[Path | str], out: Path | str) -> None:
    data = decode_shards([Path(s).read_bytes() for s in shards])
    Path(out).write_bytes(data)
