"""PQM1 binary grid dumps and state files.

Layout: magic ``b"PQM1"``, three little-endian u32 dims, one u8 kind
(0 real, 1 complex), then little-endian f64 values with x varying fastest.
Complex payloads interleave re/im per node.
"""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

from .grid import KGrid
from .states import PhotonStateK

MAGIC = b"PQM1"
_HEADER = struct.Struct("<4s3IB")


def encode_array(values: np.ndarray) -> bytes:
    values = np.asarray(values)
    if values.ndim != 3:
        raise ValueError(f"grid dumps hold 3-d arrays, got shape {values.shape}")
    is_complex = np.iscomplexobj(values)
    flat = values.ravel(order="F")
    if is_complex:
        payload = np.empty(2 * flat.size, dtype="<f8")
        payload[0::2] = flat.real
        payload[1::2] = flat.imag
    else:
        payload = flat.astype("<f8")
    return _HEADER.pack(MAGIC, *values.shape, int(is_complex)) + payload.tobytes()


def decode_array(buf: bytes, offset: int = 0) -> tuple[np.ndarray, int]:
    """Parse one record starting at ``offset``; returns ``(array, next_offset)``."""
    if len(buf) - offset < _HEADER.size:
        raise ValueError("truncated PQM1 header")
    magic, nx, ny, nz, kind = _HEADER.unpack_from(buf, offset)
    if magic != MAGIC:
        raise ValueError(f"bad magic {magic!r}")
    if kind not in (0, 1):
        raise ValueError(f"unknown payload kind {kind}")
    count = nx * ny * nz * (2 if kind else 1)
    start = offset + _HEADER.size
    end = start + 8 * count
    if len(buf) < end:
        raise ValueError("truncated PQM1 payload")
    data = np.frombuffer(buf, dtype="<f8", count=count, offset=start).astype(float)
    if kind:
        # view the interleaved pairs directly; re + 1j*im turns inf into nan
        data = data.view(complex)
    return data.reshape((nx, ny, nz), order="F"), end


def write_array(path, values: np.ndarray) -> None:
    Path(path).write_bytes(encode_array(values))


def read_array(path) -> np.ndarray:
    arr, _ = decode_array(Path(path).read_bytes())
    return arr


def save_state(path, state: PhotonStateK) -> None:
    """Two complex records (lambda = +1 then -1) plus a ``.json`` sidecar with the grid."""
    path = Path(path)
    path.write_bytes(encode_array(state.amp[0]) + encode_array(state.amp[1]))
    meta = {
        "n": state.grid.n,
        "k_max": state.grid.k_max,
        "offset": state.grid.offset,
        "t_ref": state.t_ref,
        "helicities": [1, -1],
    }
    path.with_suffix(path.suffix + ".json").write_text(json.dumps(meta, indent=2))


def load_state(path, kgrid: KGrid | None = None) -> PhotonStateK:
    path = Path(path)
    sidecar = path.with_suffix(path.suffix + ".json")
    meta = json.loads(sidecar.read_text()) if sidecar.exists() else {}
    if kgrid is None:
        if not meta:
            raise ValueError(f"no grid given and no sidecar {sidecar.name}")
        kgrid = KGrid(int(meta["n"]), float(meta["k_max"]), float(meta["offset"]))
    buf = path.read_bytes()
    plus, pos = decode_array(buf)
    minus, _ = decode_array(buf, pos)
    if plus.shape != kgrid.shape:
        raise ValueError(f"state file shape {plus.shape} does not match grid {kgrid.shape}")
    return PhotonStateK(kgrid, np.array([plus, minus]), float(meta.get("t_ref", 0.0)))
