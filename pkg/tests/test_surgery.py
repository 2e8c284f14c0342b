import pytest

from fullerkit.maps import CombMap
from fullerkit.surgery import (IsSimplex, NotDefined, SpecOutOfRange,
                               TruncationSpec, can_straighten, edge_faces,
                               flag_effects, is_flag, straighten, truncate,
                               truncate_along_edge)


def tetrahedron():
    return CombMap.from_rotations([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])


def all_specs(m):
    for d in m.edge_darts():
        for e in (d, m.twin[d]):
            k = m.face_size(m.face_of[e])
            for s in range(0, k - 1):
                yield TruncationSpec(m, e, s)


def test_one_five_truncation_example(dodecahedron):
    spec = TruncationSpec(m := dodecahedron, 0, 1)
    res = truncate(m, spec)
    assert res.map.face_vector() == {4: 1, 5: 10, 6: 2}
    assert res.map.f0 == 22
    assert res.map.f0 - res.map.f1 + res.map.f2 == 2


def test_face_and_vertex_deltas(small_fullerenes, rng):
    for m in small_fullerenes:
        d = rng.choice(m.edge_darts())
        k = m.face_size(m.face_of[d])
        s = rng.randrange(0, k - 1)
        res = truncate(m, TruncationSpec(m, d, s))
        assert res.map.f0 == m.f0 + 2
        assert res.map.f1 == m.f1 + 3
        assert res.map.f2 == m.f2 + 1
        assert res.map.face_size(res.small_face) == s + 3
        assert res.map.face_size(res.big_face) == k - s + 1


def test_spec_out_of_range(dodecahedron):
    with pytest.raises(SpecOutOfRange):
        TruncationSpec(dodecahedron, 0, 4)


def test_roundtrip_truncate_then_straighten(small_fullerenes):
    for m in small_fullerenes:
        for spec in list(all_specs(m))[::7]:
            res = truncate(m, spec)
            if not can_straighten(res.map, res.new_edge):
                continue
            back = straighten(res.map, res.new_edge)
            assert back.map.is_isomorphic(m)
            assert back.merged_face in range(back.map.f2)


def test_flag_polarity_of_truncation(dodecahedron, barrel):
    # on flag input the output is flag exactly when 0 < s < k-2
    for m in (dodecahedron, barrel):
        assert is_flag(m)
        for spec in all_specs(m):
            out = truncate(m, spec).map
            assert is_flag(out) == (0 < spec.s < spec.k - 2)


def test_complementary_run_equivalence(dodecahedron, barrel):
    for m in (dodecahedron, barrel):
        for d in m.edge_darts()[::5]:
            k = m.face_size(m.face_of[d])
            for s in range(1, k - 2):
                spec = TruncationSpec(m, d, s)
                a = truncate(m, spec).map
                # the complementary run shares the two subdivided end edges:
                # it starts at this run's last edge and goes the other way
                # around the face back to its first edge
                b = truncate(m, TruncationSpec(m, spec.run[-1],
                                               k - s - 2)).map
                assert a.is_isomorphic(b)


def test_truncate_along_edge_signature(dodecahedron):
    res = truncate_along_edge(dodecahedron, 0)
    assert res.map.face_vector() == {4: 1, 5: 10, 6: 2}


def test_face_correspondence(dodecahedron):
    m = dodecahedron
    spec = TruncationSpec(m, 0, 1)
    res = truncate(m, spec)
    fm = res.face_map
    assert fm[spec.face] == (res.small_face, res.big_face)
    for f in range(m.f2):
        if f == spec.face:
            continue
        (g,) = fm[f]
        old = set(m.face_vertices(f))
        assert old <= set(res.map.face_vertices(g))


def test_straighten_fullerene_edges_always_defined(small_fullerenes):
    for m in small_fullerenes:
        for d in m.edge_darts()[::4]:
            assert can_straighten(m, d)


def test_straighten_not_defined_after_zero_cut(dodecahedron):
    # an s = 0 truncation creates a 3-belt through the triangle; the edges
    # of the triangle cannot all be straightened
    res = truncate(dodecahedron, TruncationSpec(dodecahedron, 0, 0))
    assert not is_flag(res.map)
    blocked = [d for d in res.map.edge_darts()
               if not can_straighten(res.map, d)]
    assert blocked


def test_tetrahedron_has_no_straightening():
    t = tetrahedron()
    with pytest.raises(IsSimplex):
        straighten(t, 0)


def test_flag_effects_on_fullerene(dodecahedron):
    rep = flag_effects(dodecahedron, 0)
    assert rep.input_flag
    assert rep.output_flag
    assert rep.four_belts_through_pair == []


def test_not_defined_raises(dodecahedron):
    res = truncate(dodecahedron, TruncationSpec(dodecahedron, 0, 0))
    blocked = [d for d in res.map.edge_darts()
               if not can_straighten(res.map, d)]
    with pytest.raises(NotDefined):
        straighten(res.map, blocked[0])


def test_edge_faces(dodecahedron):
    f1, f2 = edge_faces(dodecahedron, 0)
    assert f1 != f2
