"""Incremental assembly of cubic disk patches, face by face.

A patch is grown by gluing each new face over a contiguous run of boundary
edges.  The boundary decomposes into elementary runs delimited by boundary
vertices of degree 2; a glued face always covers exactly one elementary run
(its interior vertices already have degree 3 and become interior vertices of
the patch, while the two delimiting vertices rise to degree 3).  The final
face closes the patch when every boundary vertex has degree 3.

This module is the shared engine behind the seed constructions and the
exhaustive sequential-winding generator.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from .maps import CombMap, MapError


class WindingError(Exception):
    """The requested gluing is not possible on the current boundary."""


class PatchBuilder:
    """Grows a disk patch of faces with given sizes.

    Attributes:
        cycles: per-face cyclic neighbour lists; ``None`` marks an open edge.
        boundary: boundary edge positions as (face, slot) pairs, in cyclic
            order around the patch.
        vdeg: ``vdeg[i]`` is the degree of the boundary vertex between edge
            ``i - 1`` and edge ``i``.
    """

    def __init__(self, first_size: int) -> None:
        self.cycles: List[List[Optional[int]]] = [[None] * first_size]
        self.sizes: List[int] = [first_size]
        self.open_count: List[int] = [first_size]
        self.boundary: List[Tuple[int, int]] = [(0, i) for i in range(first_size)]
        self.vdeg: List[int] = [2] * first_size
        self.closed = False

    # -- queries ------------------------------------------------------------

    def runs(self) -> List[Tuple[int, int]]:
        """Elementary runs as (start position, edge count) pairs.

        Runs are delimited by degree-2 boundary vertices.  If no boundary
        vertex has degree 2 the whole boundary is a single cyclic run,
        reported as (0, len(boundary)).
        """
        b = len(self.boundary)
        starts = [i for i in range(b) if self.vdeg[i] == 2]
        if not starts:
            return [(0, b)]
        out = []
        for idx, p in enumerate(starts):
            q = starts[(idx + 1) % len(starts)]
            out.append((p, (q - p) % b or b))
        return out

    def run_faces(self, start: int, length: int) -> List[int]:
        b = len(self.boundary)
        return [self.boundary[(start + i) % b][0] for i in range(length)]

    # -- gluing -------------------------------------------------------------

    def glue(self, size: int, start: int, length: int) -> int:
        """Glue a new face of ``size`` edges over the given elementary run.

        Returns the id of the new face.

        Raises:
            WindingError: the run is not elementary, the size does not leave
                at least one open edge, or the new face would share more than
                one edge with some existing face.
        """
        if self.closed:
            raise WindingError("patch already closed")
        b = len(self.boundary)
        if not 1 <= length < b:
            raise WindingError("bad run length %d" % length)
        if size - length < 1:
            raise WindingError("face of size %d cannot cover %d edges"
                               % (size, length))
        if self.vdeg[start] != 2 or self.vdeg[(start + length) % b] != 2:
            raise WindingError("run endpoints must be degree-2 vertices")
        for i in range(1, length):
            if self.vdeg[(start + i) % b] != 3:
                raise WindingError("run interior vertex has degree 2")
        covered = [self.boundary[(start + i) % b] for i in range(length)]
        owners = [f for f, _ in covered]
        if len(set(owners)) != length:
            raise WindingError("face would share two edges with one face")
        new_id = len(self.cycles)
        # the new face traverses the shared edges opposite to the boundary
        # walk, so the covered owners appear reversed in its cycle
        self.cycles.append(list(reversed(owners)) + [None] * (size - length))
        self.sizes.append(size)
        self.open_count.append(size - length)
        for f, slot in covered:
            self.cycles[f][slot] = new_id
            self.open_count[f] -= 1
        # splice the new open edges into the boundary in place of the run
        rest = [self.boundary[(start + length + i) % b]
                for i in range(b - length)]
        rest_deg = [self.vdeg[(start + length + i) % b]
                    for i in range(b - length)]
        new_edges = [(new_id, length + j) for j in range(size - length)]
        self.boundary = new_edges + rest
        # vertex before the first new edge and before `rest` are now degree 3
        self.vdeg = [3] + [2] * (size - length - 1) + [3] + rest_deg[1:]
        return new_id

    def interior_run_ok(self, start: int, length: int) -> bool:
        b = len(self.boundary)
        if self.vdeg[start] != 2 or self.vdeg[(start + length) % b] != 2:
            return False
        return all(self.vdeg[(start + i) % b] != 2 for i in range(1, length))

    def close(self, size: int) -> int:
        """Glue the final face over the entire remaining boundary."""
        if self.closed:
            raise WindingError("patch already closed")
        b = len(self.boundary)
        if size != b:
            raise WindingError("closing face size %d != boundary length %d"
                               % (size, b))
        if any(d != 3 for d in self.vdeg):
            raise WindingError("boundary vertex of degree 2 at closure")
        owners = [f for f, _ in self.boundary]
        if len(set(owners)) != b:
            raise WindingError("closing face would share two edges with one face")
        new_id = len(self.cycles)
        self.cycles.append(list(reversed(owners)))
        self.sizes.append(size)
        self.open_count.append(0)
        for f, slot in self.boundary:
            self.cycles[f][slot] = new_id
            self.open_count[f] -= 1
        self.boundary = []
        self.vdeg = []
        self.closed = True
        return new_id

    def to_map(self) -> CombMap:
        if not self.closed:
            raise WindingError("patch is not closed")
        return CombMap.from_face_cycles(self.cycles)  # may raise MapError
