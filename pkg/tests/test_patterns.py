from itertools import permutations

import pytest

from fullerkit.growth import rules_by_id, seed_family_one, seed_family_two
from fullerkit.patterns import (B, PatchPattern, PatternError, extract_patch,
                                match_pattern, path_turns,
                                shortest_thick_path)


def road(k):
    faces = {"P0": ["H1", B, B, B, B]}
    for i in range(1, k + 1):
        prev = "P0" if i == 1 else "H%d" % (i - 1)
        nxt = "P1" if i == k else "H%d" % (i + 1)
        faces["H%d" % i] = [prev, B, B, nxt, B, B]
    faces["P1"] = ["H%d" % k, B, B, B, B]
    return PatchPattern(faces)


def test_pattern_validation_rejects_asymmetry():
    with pytest.raises(PatternError):
        PatchPattern({"A": ["B2", B, B, B, B], "B2": [B, B, B, B, B]})


def test_pattern_validation_rejects_disconnected():
    with pytest.raises(PatternError):
        PatchPattern({"A": [B] * 5, "C": [B] * 5})


def test_contact_sequence_of_road():
    pat = road(1)
    walk = pat.boundary_walk()
    assert len(walk) == sum(cyc.count(B) for cyc in pat.faces.values())
    assert sorted(pat.contact_sequence()) == [2, 2, 4, 4]


def test_cap_matches_once_per_pentagon(dodecahedron):
    cap = rules_by_id("a")[0].lhs
    assert len(match_pattern(dodecahedron, cap)) == 12
    # with self-symmetries included there are 5 rotations x 2 orientations
    assert len(match_pattern(dodecahedron, cap, all_embeddings=True)) == 120


def test_endo_kroto_lhs_on_barrel(barrel):
    assert match_pattern(barrel, road(1))


def test_screw_fragment_on_family_two():
    frag = rules_by_id("b")[0].lhs
    assert len(match_pattern(seed_family_two(1), frag)) >= 2


def test_match_darts_are_consistent(barrel):
    pat = road(1)
    for res in match_pattern(barrel, pat, all_embeddings=True):
        for name, cyc in pat.faces.items():
            assert barrel.face_size(res.faces[name]) == len(cyc)
            for slot, g in enumerate(cyc):
                d = res.dart_at(barrel, name, slot)
                assert barrel.face_of[d] == res.faces[name]
                if g != B:
                    assert barrel.face_of[barrel.twin[d]] == res.faces[g]


def test_match_completeness_against_brute_force(barrel):
    # brute force: try every injective face assignment and every per-face
    # alignment of the pattern cycles against the actual neighbour cycles
    pat = road(1)
    names = list(pat.faces)
    found = {frozenset(r.faces.values())
             for r in match_pattern(barrel, pat)}

    def nbr_cycle(f):
        out = []
        d = min(barrel.faces[f])
        for _ in range(barrel.face_size(f)):
            out.append(barrel.face_of[barrel.twin[d]])
            d = barrel.face_next(d)
        return out

    def aligns(f, cyc, amap, mirrored):
        actual = nbr_cycle(f)
        if mirrored:
            actual = actual[::-1]
        k = len(actual)
        image = set(amap.values())
        for r in range(k):
            rot = actual[r:] + actual[:r]
            ok = True
            for slot, g in enumerate(cyc):
                if g == B:
                    if rot[slot] in image:
                        ok = False
                        break
                elif rot[slot] != amap[g]:
                    ok = False
                    break
            if ok:
                return True
        return False

    brute = set()
    for combo in permutations(range(barrel.f2), len(names)):
        amap = dict(zip(names, combo))
        if any(barrel.face_size(amap[n]) != len(pat.faces[n]) for n in names):
            continue
        for mirrored in (False, True):
            if all(aligns(amap[n], pat.faces[n], amap, mirrored)
                   for n in names):
                brute.add(frozenset(amap.values()))
                break
    assert found == brute


def test_extract_patch_roundtrip(dodecahedron):
    ids = [0] + dodecahedron.face_neighbors(0)
    pat = extract_patch(dodecahedron, ids)
    assert len(match_pattern(dodecahedron, pat)) == 12


def test_wildcard_pattern_matching(dodecahedron):
    pat = rules_by_id("d")[0].lhs
    assert any(pat.is_wild(n) for n in pat.faces)
    sites = match_pattern(dodecahedron, pat)
    assert sites
    with pytest.raises(PatternError):
        pat.boundary_walk()


def test_thick_path_adjacent(dodecahedron):
    path = shortest_thick_path(dodecahedron, 0, dodecahedron.face_neighbors(0)[0])
    assert len(path) == 2


def test_thick_path_across_ring():
    m = seed_family_one(1)
    # pick a ring hexagon and a pentagon neighbour on each side of the ring:
    # the shortest thick path between them crosses exactly that hexagon
    hexes = [f for f in range(m.f2) if m.face_size(f) == 6]
    h = hexes[0]
    caps = [p for p in range(m.f2)
            if m.face_size(p) == 5
            and all(m.face_size(g) == 5 for g in m.face_neighbors(p))]
    assert len(caps) == 2

    def side(p, cap):
        return len(shortest_thick_path(m, p, cap))

    pents = [p for p in m.face_neighbors(h) if m.face_size(p) == 5]
    a = min(pents, key=lambda p: side(p, caps[0]))
    b = min(pents, key=lambda p: side(p, caps[1]))
    assert a != b
    path = shortest_thick_path(m, a, b)
    assert len(path) == 3
    assert m.face_size(path[1]) == 6
    assert path_turns(m, path) <= 1
    # the two cap centres are further apart: their path crosses the ring too
    assert len(shortest_thick_path(m, caps[0], caps[1])) == 5


def test_minimal_path_properties(small_fullerenes):
    for m in small_fullerenes:
        pents = [f for f in range(m.f2) if m.face_size(f) == 5]
        a, b = pents[0], pents[-1]
        path = shortest_thick_path(m, a, b)
        assert len(set(path)) == len(path)
        for i in range(len(path) - 1):
            assert path[i + 1] in m.face_neighbors(path[i])
