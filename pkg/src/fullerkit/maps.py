"""Cubic planar combinatorial maps: construction, validation, canonical forms.

A map is stored as a rotation system: for every vertex, the cyclic
(counterclockwise) list of its three neighbours.  Darts are dense integers
``3 * v + slot`` where ``slot`` indexes the rotation list of ``v``.  Faces are
the orbits of ``prev o twin`` and are traversed with the interior on the left.
All maps are immutable after construction; surgery returns fresh maps.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple


class MapError(Exception):
    """Base class for construction and validation failures."""


class NonCubic(MapError):
    """A vertex does not list exactly three distinct neighbours."""


class AsymmetricAdjacency(MapError):
    """Vertex u lists v but v does not list u."""


class NonPlanar(MapError):
    """Euler count of the rotation system differs from 2."""


class Disconnected(MapError):
    """The underlying graph is not connected."""


class ValidationReport:
    """Outcome of the structural checks on a map.

    Attributes:
        face_vector: mapping face size -> count.
        simple: no loops or parallel edges.
        connected: the graph is connected.
        three_connected: no vertex pair disconnects the graph.
        euler_ok: f0 - f1 + f2 == 2.
        residual: 3*p3 + 2*p4 + p5 - 12 - sum((k - 6) * p_k for k >= 7).
    """

    def __init__(self, face_vector: Dict[int, int], simple: bool,
                 connected: bool, three_connected: bool, euler_ok: bool,
                 residual: int) -> None:
        self.face_vector = face_vector
        self.simple = simple
        self.connected = connected
        self.three_connected = three_connected
        self.euler_ok = euler_ok
        self.residual = residual

    @property
    def ok(self) -> bool:
        return (self.simple and self.connected and self.three_connected
                and self.euler_ok and self.residual == 0)

    def __repr__(self) -> str:
        return ("ValidationReport(face_vector={0}, simple={1}, connected={2}, "
                "three_connected={3}, euler_ok={4}, residual={5})".format(
                    self.face_vector, self.simple, self.connected,
                    self.three_connected, self.euler_ok, self.residual))


class CombMap:
    """Immutable cubic planar map given by per-vertex rotations.

    Do not call the constructor directly; use :meth:`from_rotations` or
    :meth:`from_face_cycles`.
    """

    __slots__ = ("rotations", "twin", "face_of", "faces", "_canon", "_canon2")

    def __init__(self, rotations: Tuple[Tuple[int, int, int], ...],
                 twin: Tuple[int, ...], face_of: Tuple[int, ...],
                 faces: Tuple[Tuple[int, ...], ...]) -> None:
        self.rotations = rotations
        self.twin = twin
        self.face_of = face_of
        self.faces = faces
        self._canon: Optional[bytes] = None
        self._canon2: Optional[Tuple[bytes, bytes]] = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rotations(cls, rotations: Sequence[Sequence[int]]) -> "CombMap":
        """Build a map from per-vertex cyclic neighbour lists.

        Args:
            rotations: for each vertex, its three neighbours in cyclic order.

        Raises:
            NonCubic: a vertex has a degree other than 3, a loop, or a
                repeated neighbour.
            AsymmetricAdjacency: adjacency is not symmetric.
            Disconnected: the graph has more than one component.
            NonPlanar: the rotation system does not have Euler count 2.
        """
        n = len(rotations)
        rot: List[Tuple[int, int, int]] = []
        for v, nbrs in enumerate(rotations):
            nbrs = tuple(int(w) for w in nbrs)
            if len(nbrs) != 3 or len(set(nbrs)) != 3 or v in nbrs:
                raise NonCubic("vertex %d has neighbours %r" % (v, nbrs))
            for w in nbrs:
                if not 0 <= w < n:
                    raise NonCubic("vertex %d lists unknown vertex %d" % (v, w))
            rot.append(nbrs)
        dart_at: Dict[Tuple[int, int], int] = {}
        for v, nbrs in enumerate(rot):
            for i, w in enumerate(nbrs):
                key = (v, w)
                if key in dart_at:
                    raise NonCubic("parallel edge %d-%d" % (v, w))
                dart_at[key] = 3 * v + i
        twin = [0] * (3 * n)
        for (v, w), d in dart_at.items():
            e = dart_at.get((w, v))
            if e is None:
                raise AsymmetricAdjacency(
                    "vertex %d lists %d but not conversely" % (v, w))
            twin[d] = e
        # connectivity
        if n:
            seen = [False] * n
            seen[0] = True
            stack = [0]
            while stack:
                v = stack.pop()
                for w in rot[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            if not all(seen):
                raise Disconnected("graph is not connected")
        # face orbits of prev o twin
        face_of = [-1] * (3 * n)
        faces: List[Tuple[int, ...]] = []
        for d0 in range(3 * n):
            if face_of[d0] >= 0:
                continue
            fid = len(faces)
            orbit = []
            d = d0
            while face_of[d] < 0:
                face_of[d] = fid
                orbit.append(d)
                t = twin[d]
                d = (t - t % 3) + (t % 3 - 1) % 3  # prev(twin(d))
            faces.append(tuple(orbit))
        f0, f1, f2 = n, 3 * n // 2, len(faces)
        if f0 - f1 + f2 != 2:
            raise NonPlanar("Euler count %d != 2" % (f0 - f1 + f2))
        return cls(tuple(rot), tuple(twin), tuple(face_of), tuple(faces))

    @classmethod
    def from_face_cycles(cls, cycles: Sequence[Sequence[int]]) -> "CombMap":
        """Build a map from per-face cyclic neighbour-face lists.

        This is the inverse of :meth:`face_cycles`.  Each face lists the faces
        across its boundary edges in cyclic order; any two faces may share at
        most one edge, so the pairing of dual darts is forced.

        Raises:
            MapError: the cycles are inconsistent or a corner orbit does not
                have length 3 (the primal graph would not be cubic).
        """
        offs: List[int] = []
        total = 0
        for cyc in cycles:
            offs.append(total)
            total += len(cyc)
        flat: List[int] = [g for cyc in cycles for g in cyc]
        owner: List[int] = []
        for f, cyc in enumerate(cycles):
            owner.extend([f] * len(cyc))
        pair_at: Dict[Tuple[int, int], int] = {}
        for d, g in enumerate(flat):
            key = (owner[d], g)
            if key in pair_at:
                raise MapError("faces %d and %d share more than one edge"
                               % (owner[d], g))
            pair_at[key] = d
        twin = [0] * total
        for d, g in enumerate(flat):
            e = pair_at.get((g, owner[d]))
            if e is None:
                raise MapError("face %d lists %d but not conversely"
                               % (owner[d], g))
            twin[d] = e
        # corner orbits of the dual map are the primal vertices
        deg = [len(cyc) for cyc in cycles]
        corner_of = [-1] * total
        corners: List[Tuple[int, int, int]] = []
        for d0 in range(total):
            if corner_of[d0] >= 0:
                continue
            vid = len(corners)
            orbit = []
            d = d0
            while corner_of[d] < 0:
                corner_of[d] = vid
                orbit.append(d)
                t = twin[d]
                f = owner[t]
                d = offs[f] + (t - offs[f] - 1) % deg[f]
            if len(orbit) != 3:
                raise MapError("corner orbit of length %d; map is not cubic"
                               % len(orbit))
            corners.append((orbit[0], orbit[1], orbit[2]))
        # primal vertex v has one edge per orbit dart d, leading to the
        # vertex whose orbit contains twin(d); orbit order gives the rotation
        rot = []
        for orbit in corners:
            rot.append(tuple(corner_of[twin[d]] for d in orbit))
        return cls.from_rotations(rot)

    # -- basic accessors ----------------------------------------------------

    @property
    def f0(self) -> int:
        return len(self.rotations)

    @property
    def f1(self) -> int:
        return 3 * len(self.rotations) // 2

    @property
    def f2(self) -> int:
        return len(self.faces)

    def head(self, d: int) -> int:
        """Vertex the dart points to."""
        return self.rotations[d // 3][d % 3]

    def tail(self, d: int) -> int:
        """Vertex the dart starts from."""
        return d // 3

    def next_dart(self, d: int) -> int:
        """Next outgoing dart counterclockwise around the origin vertex."""
        return (d - d % 3) + (d % 3 + 1) % 3

    def prev_dart(self, d: int) -> int:
        return (d - d % 3) + (d % 3 - 1) % 3

    def face_next(self, d: int) -> int:
        """Next dart along the face of ``d`` (interior on the left)."""
        return self.prev_dart(self.twin[d])

    def dart(self, u: int, v: int) -> int:
        """The dart from vertex ``u`` to its neighbour ``v``."""
        return 3 * u + self.rotations[u].index(v)

    def face_size(self, f: int) -> int:
        return len(self.faces[f])

    def face_vertices(self, f: int) -> List[int]:
        """Vertices along the face boundary, one per boundary dart."""
        return [d // 3 for d in self.faces[f]]

    def face_vector(self) -> Dict[int, int]:
        """Census of face sizes: p_k for each occurring k."""
        pk: Dict[int, int] = {}
        for orbit in self.faces:
            k = len(orbit)
            pk[k] = pk.get(k, 0) + 1
        return pk

    def face_cycles(self) -> List[List[int]]:
        """Per-face cyclic list of the neighbouring face across each edge."""
        out = []
        for orbit in self.faces:
            out.append([self.face_of[self.twin[d]] for d in orbit])
        return out

    def face_neighbors(self, f: int) -> List[int]:
        """Distinct faces sharing an edge with ``f``."""
        seen: List[int] = []
        for d in self.faces[f]:
            g = self.face_of[self.twin[d]]
            if g not in seen:
                seen.append(g)
        return seen

    def edge_darts(self) -> List[int]:
        """One representative dart per edge (the smaller of the pair)."""
        return [d for d in range(3 * self.f0) if d < self.twin[d]]

    # -- validation ---------------------------------------------------------

    def is_connected_without(self, removed: Tuple[int, int]) -> bool:
        n = self.f0
        a, b = removed
        start = next(v for v in range(n) if v != a and v != b)
        seen = [False] * n
        seen[a] = seen[b] = True
        seen[start] = True
        stack = [start]
        count = 1
        while stack:
            v = stack.pop()
            for w in self.rotations[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == n - 2

    def is_three_connected(self) -> bool:
        """Exhaustive 2-cut search; fine at desk scale."""
        n = self.f0
        if n < 5:
            return n == 4
        for a in range(n):
            for b in range(a + 1, n):
                if not self.is_connected_without((a, b)):
                    return False
        return True

    def validate(self) -> ValidationReport:
        """Structural report; construction already guarantees most checks."""
        pk = self.face_vector()
        residual = (3 * pk.get(3, 0) + 2 * pk.get(4, 0) + pk.get(5, 0) - 12
                    - sum((k - 6) * c for k, c in pk.items() if k >= 7))
        euler_ok = self.f0 - self.f1 + self.f2 == 2
        # simplicity of the face structure: faces share at most one edge
        simple = True
        for f in range(self.f2):
            nbrs = [self.face_of[self.twin[d]] for d in self.faces[f]]
            if f in nbrs or len(nbrs) != len(set(nbrs)):
                simple = False
                break
        return ValidationReport(pk, simple, True, self.is_three_connected(),
                                euler_ok, residual)

    def is_fullerene(self) -> bool:
        pk = self.face_vector()
        return set(pk) <= {5, 6} and pk.get(5, 0) == 12

    # -- relabeling and reflection ------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "CombMap":
        """New map with vertex ``v`` renamed ``perm[v]``."""
        n = self.f0
        rot: List[Tuple[int, int, int]] = [(0, 0, 0)] * n
        for v, nbrs in enumerate(self.rotations):
            rot[perm[v]] = tuple(perm[w] for w in nbrs)
        return CombMap.from_rotations(rot)

    def mirror(self) -> "CombMap":
        """Reflection: every rotation list reversed."""
        return CombMap.from_rotations(
            [tuple(reversed(nbrs)) for nbrs in self.rotations])

    # -- canonical form -----------------------------------------------------

    def _oriented_codes(self) -> Tuple[bytes, bytes]:
        if self._canon2 is None:
            rot = self.rotations
            mrot = [(a[2], a[1], a[0]) for a in rot]
            self._canon2 = (_min_word(rot), _min_word(mrot))
        return self._canon2

    def canonical_code(self) -> bytes:
        """Minimal BFS word over all rooted darts and both orientations."""
        if self._canon is None:
            a, b = self._oriented_codes()
            self._canon = a if a <= b else b
        return self._canon

    def is_chiral(self) -> bool:
        """True if the map admits no orientation-reversing automorphism."""
        a, b = self._oriented_codes()
        return a != b

    def is_isomorphic(self, other: "CombMap") -> bool:
        return self.canonical_code() == other.canonical_code()

    def __repr__(self) -> str:
        return "CombMap(f0=%d, f1=%d, f2=%d)" % (self.f0, self.f1, self.f2)


def _min_word(rot: Sequence[Tuple[int, int, int]]) -> bytes:
    """Lexicographically minimal BFS word over all root darts.

    The word lists, for each vertex in discovery order, the labels of its
    three neighbours starting at the entry edge and following the rotation.
    Labels are assigned in order of first appearance.  Maps with up to 255
    vertices fit in one byte per entry.
    """
    n = len(rot)
    if n > 255:
        raise MapError("canonical code supports at most 255 vertices")
    best: Optional[bytes] = None
    for root_v in range(n):
        for root_slot in range(3):
            word = _bfs_word(rot, root_v, root_slot, best)
            if word is not None:
                best = word
    assert best is not None
    return best


def _bfs_word(rot: Sequence[Tuple[int, int, int]], root_v: int,
              root_slot: int, best: Optional[bytes]) -> Optional[bytes]:
    """BFS word from one root, or None once it exceeds ``best``."""
    n = len(rot)
    label = [-1] * n
    label[root_v] = 0
    order = [root_v]
    start = [0] * n
    start[root_v] = root_slot
    word = bytearray()
    nxt_label = 1
    pos = 0
    while pos < len(order):
        v = order[pos]
        pos += 1
        nbrs = rot[v]
        s = start[v]
        for i in (s, (s + 1) % 3, (s + 2) % 3):
            w = nbrs[i]
            lw = label[w]
            if lw < 0:
                lw = nxt_label
                label[w] = lw
                nxt_label += 1
                start[w] = rot[w].index(v)
                order.append(w)
            word.append(lw)
            if best is not None:
                j = len(word) - 1
                c = best[j]
                if word[j] > c:
                    return None
                if word[j] < c:
                    best = None  # strictly smaller; stop comparing
    return bytes(word)
