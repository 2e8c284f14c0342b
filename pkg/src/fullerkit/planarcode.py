"""planar_code byte stream reader/writer.

Format: the ASCII header ``>>planar_code<<`` followed by records.  Each
record is the vertex count n (one byte, n < 256) and then, for every vertex
in order, its cyclic neighbour list (1-based vertex numbers, one byte each)
terminated by a zero byte.  The neighbour lists are the map's rotation
system, so reading a written stream reproduces the map exactly.
"""

from __future__ import annotations

import io
from typing import BinaryIO, Iterable, List, Union

from .maps import CombMap, MapError

HEADER = b">>planar_code<<"


class BadHeader(Exception):
    pass


class TruncatedRecord(Exception):
    pass


class ValidationFailure(Exception):
    """Record ``index`` (0-based) does not encode a valid cubic map."""

    def __init__(self, index: int, reason: str) -> None:
        super().__init__("record %d: %s" % (index, reason))
        self.index = index


def read_planar_code(src: Union[bytes, BinaryIO]) -> List[CombMap]:
    """Parse a planar_code stream into validated maps."""
    if isinstance(src, bytes):
        src = io.BytesIO(src)
    head = src.read(len(HEADER))
    if head != HEADER:
        raise BadHeader("expected %r, got %r" % (HEADER, head))
    maps: List[CombMap] = []
    index = 0
    while True:
        first = src.read(1)
        if not first:
            return maps
        n = first[0]
        if n == 0:
            raise ValidationFailure(index, "vertex count 0")
        rotations: List[List[int]] = []
        for _ in range(n):
            nbrs: List[int] = []
            while True:
                b = src.read(1)
                if not b:
                    raise TruncatedRecord("record %d ends mid-vertex" % index)
                if b[0] == 0:
                    break
                if b[0] > n:
                    raise ValidationFailure(
                        index, "neighbour %d out of range" % b[0])
                nbrs.append(b[0] - 1)
            rotations.append(nbrs)
        if any(len(r) != 3 for r in rotations):
            raise ValidationFailure(index, "vertex of degree != 3")
        try:
            maps.append(CombMap.from_rotations(rotations))
        except (MapError, Exception) as exc:
            raise ValidationFailure(index, str(exc))
        index += 1


def write_planar_code(maps: Iterable[CombMap], sort: bool = True) -> bytes:
    """Serialize maps; by default ordered by (vertex count, canonical code).

    Pass ``sort=False`` to keep the given order (e.g. for step streams).
    """
    ms = list(maps)
    if sort:
        ms.sort(key=lambda m: (m.f0, m.canonical_code()))
    out = bytearray(HEADER)
    for m in ms:
        if m.f0 >= 256:
            raise MapError("planar_code with 1-byte entries needs n < 256")
        out.append(m.f0)
        for nbrs in m.rotations:
            out.extend(v + 1 for v in nbrs)
            out.append(0)
    return bytes(out)
