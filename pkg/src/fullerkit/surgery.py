"""Edge-cut surgery on cubic maps: truncation along a run, and its inverse.

An (s,k)-truncation cuts a k-gonal face along a run of s + 2 consecutive
boundary edges: the first and last run edges are subdivided by midpoints and
the midpoints are joined by a new edge, splitting the face into an
(s+3)-gon and a (k-s+1)-gon.  The faces across the two subdivided edges each
gain one edge; nothing else changes.  Straightening along an edge is the
inverse: the edge is deleted and the two resulting degree-2 vertices are
smoothed away, merging the edge's two faces.  Straightening is defined
exactly when the two faces have disjoint neighbour sets, equivalently when
no 3-belt passes through both.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .belts import find_k_belts
from .maps import CombMap, MapError


class InvalidRun(Exception):
    """The truncation run does not lie on the stated face."""


class SpecOutOfRange(Exception):
    """s is outside 0..k-2."""


class NotDefined(Exception):
    """Straightening along this edge is not defined."""


class IsSimplex(Exception):
    """The tetrahedron admits no straightening."""


class TruncationSpec:
    """A run of s+2 consecutive edges on a face, given by its first dart.

    The first dart must have the face on its left; the run follows the face
    traversal.  The derived signature is (s, k; t0, t1) where k is the face
    size and t0, t1 are the sizes of the faces across the first and last run
    edges.
    """

    def __init__(self, m: CombMap, start_dart: int, s: int) -> None:
        face = m.face_of[start_dart]
        k = m.face_size(face)
        if not 0 <= s <= k - 2:
            raise SpecOutOfRange("s=%d outside 0..%d" % (s, k - 2))
        self.start_dart = start_dart
        self.s = s
        self.face = face
        self.k = k
        run = [start_dart]
        for _ in range(s + 1):
            run.append(m.face_next(run[-1]))
        self.run = run
        self.t0 = m.face_size(m.face_of[m.twin[run[0]]])
        self.t1 = m.face_size(m.face_of[m.twin[run[-1]]])

    @property
    def signature(self) -> Tuple[int, int, int, int]:
        return (self.s, self.k, self.t0, self.t1)

    def __repr__(self) -> str:
        return "TruncationSpec(s=%d, k=%d; t0=%d, t1=%d)" % self.signature


class TruncationResult:
    """New map plus handles into it.

    Attributes:
        map: the truncated map.
        new_edge: dart of the added edge, oriented with the (s+3)-gon on
            its left.
        small_face, big_face: ids of the (s+3)-gon and the (k-s+1)-gon.
        face_map: old face id -> tuple of new face ids (the cut face maps to
            (small_face, big_face); every other face to a 1-tuple).
            Computed on first access.
    """

    def __init__(self, m: CombMap, new_edge: int, small_face: int,
                 big_face: int, source: CombMap, cut_face: int) -> None:
        self.map = m
        self.new_edge = new_edge
        self.small_face = small_face
        self.big_face = big_face
        self._source = source
        self._cut_face = cut_face
        self._face_map: Optional[Dict[int, Tuple[int, ...]]] = None

    @property
    def face_map(self) -> Dict[int, Tuple[int, ...]]:
        if self._face_map is None:
            # old vertex ids survive, so an old face maps to the new face
            # whose vertex set contains it (the cut face to both parts)
            src, out = self._source, self.map
            fm: Dict[int, Tuple[int, ...]] = {
                self._cut_face: (self.small_face, self.big_face)}
            new_sets = {f: set(out.face_vertices(f)) for f in range(out.f2)}
            for f in range(src.f2):
                if f == self._cut_face:
                    continue
                old_set = set(src.face_vertices(f))
                hits = tuple(g for g, s in new_sets.items() if old_set <= s)
                assert len(hits) == 1, "ambiguous face correspondence"
                fm[f] = hits
            self._face_map = fm
        return self._face_map


class StraighteningResult:
    """New map plus handles into it.

    Attributes:
        map: the straightened map.
        vertex_map: old vertex id -> new vertex id (the two removed vertices
            are absent).
        merged_face: id of the united face in the new map.
    """

    def __init__(self, m: CombMap, vertex_map: Dict[int, int],
                 merged_face: int) -> None:
        self.map = m
        self.vertex_map = vertex_map
        self.merged_face = merged_face


def truncate(m: CombMap, spec: TruncationSpec) -> TruncationResult:
    """Cut the face of ``spec`` along its run.  Returns fresh handles."""
    if m.face_of[spec.start_dart] != spec.face:
        raise InvalidRun("start dart not on the stated face")
    n = m.f0
    d0 = spec.run[0]
    d1 = spec.run[-1]
    u0, v0 = m.tail(d0), m.head(d0)
    u1, v1 = m.tail(d1), m.head(d1)
    m0, m1 = n, n + 1
    rot: List[List[int]] = [list(r) for r in m.rotations]
    rot[u0][rot[u0].index(v0)] = m0
    rot[v0][rot[v0].index(u0)] = m0
    rot[u1][rot[u1].index(v1)] = m1
    rot[v1][rot[v1].index(u1)] = m1
    # the run has the face on its left; the new edge closes the (s+3)-gon
    # on the side of the run interior (v0 .. u1)
    rot.append([u0, v0, m1])   # m0
    rot.append([u1, v1, m0])   # m1
    out = CombMap.from_rotations(rot)
    e = out.dart(m0, m1)
    fa, fb = out.face_of[e], out.face_of[out.twin[e]]
    if out.face_size(fa) == spec.s + 3 and out.face_size(fb) == spec.k - spec.s + 1:
        small, big = fa, fb
    elif out.face_size(fb) == spec.s + 3 and out.face_size(fa) == spec.k - spec.s + 1:
        small, big = fb, fa
        e = out.twin[e]
    else:
        raise MapError("truncation produced unexpected face sizes")
    return TruncationResult(out, e, small, big, m, spec.face)


def truncate_along_edge(m: CombMap, dart: int) -> TruncationResult:
    """The s = 1 truncation determined by its middle edge alone.

    The cut face is the one on the left of ``dart``; the run consists of the
    face edges before, at, and after the dart.  The derived signature is
    (1; t0, t2) with t0, t2 the sizes of the faces across the outer two run
    edges.
    """
    start = m.twin[m.next_dart(dart)]   # previous edge around the face
    return truncate(m, TruncationSpec(m, start, 1))


def edge_faces(m: CombMap, dart: int) -> Tuple[int, int]:
    return m.face_of[dart], m.face_of[m.twin[dart]]


def can_straighten(m: CombMap, dart: int) -> bool:
    """True iff the neighbour sets of the edge's two faces are disjoint.

    The equivalent 3-belt criterion (no 3-belt contains both faces) is
    asserted to agree; both are cheap at desk scale.
    """
    if m.f0 == 4:
        return False
    f1, f2 = edge_faces(m, dart)
    # the faces at the two endpoints of the edge meet both f1 and f2 by
    # construction and do not obstruct straightening
    x, y = m.tail(dart), m.head(dart)
    at_ends = {m.face_of[3 * v + i] for v in (x, y) for i in range(3)}
    n1 = set(m.face_neighbors(f1)) - {f2} - at_ends
    n2 = set(m.face_neighbors(f2)) - {f1} - at_ends
    disjoint = not (n1 & n2)
    belt_free = not any(f1 in belt and f2 in belt for belt in find_k_belts(m, 3))
    assert disjoint == belt_free, "neighbour-set and 3-belt criteria disagree"
    return disjoint


def straighten(m: CombMap, dart: int) -> StraighteningResult:
    """Delete the edge and smooth its endpoints, merging its two faces."""
    if m.f0 == 4:
        raise IsSimplex("the simplex admits no straightening")
    if not can_straighten(m, dart):
        raise NotDefined("the two faces have a common neighbour")
    x, y = m.tail(dart), m.head(dart)
    f_merge_old = set(m.face_vertices(m.face_of[dart])
                      + m.face_vertices(m.face_of[m.twin[dart]]))
    rot: List[Optional[List[int]]] = [list(r) for r in m.rotations]
    for a, b in ((x, y), (y, x)):
        nbrs = [w for w in m.rotations[a] if w != b]
        p, q = nbrs
        rot[p][rot[p].index(a)] = q
        rot[q][rot[q].index(a)] = p
    vertex_map: Dict[int, int] = {}
    new_rot: List[List[int]] = []
    for v in range(m.f0):
        if v in (x, y):
            continue
        vertex_map[v] = len(new_rot)
        new_rot.append(rot[v])
    for nbrs in new_rot:
        for i, w in enumerate(nbrs):
            nbrs[i] = vertex_map[w]
    out = CombMap.from_rotations(new_rot)
    # the merged face is the one containing every surviving old boundary
    # vertex of the two united faces
    want = {vertex_map[v] for v in f_merge_old if v not in (x, y)}
    merged = -1
    for f in range(out.f2):
        if want <= set(out.face_vertices(f)):
            merged = f
            break
    assert merged >= 0, "merged face not found"
    return StraighteningResult(out, vertex_map, merged)


def is_flag(m: CombMap) -> bool:
    """Flag simple polytope: not the simplex and free of 3-belts."""
    return m.f0 > 4 and not find_k_belts(m, 3)


class FlagReport:
    def __init__(self, input_flag: bool, output_flag: bool,
                 four_belts_through_pair: List[List[int]]) -> None:
        self.input_flag = input_flag
        self.output_flag = output_flag
        self.four_belts_through_pair = four_belts_through_pair


def flag_effects(m: CombMap, dart: int) -> FlagReport:
    """Straighten along the edge and report flagness on both sides.

    Also collects the 4-belts containing both faces of the edge, so that the
    relation between their existence and output flagness can be tabulated
    empirically.
    """
    f1, f2 = edge_faces(m, dart)
    belts4 = [belt for belt in find_k_belts(m, 4)
              if f1 in belt and f2 in belt]
    out = straighten(m, dart).map
    return FlagReport(is_flag(m), is_flag(out), belts4)
