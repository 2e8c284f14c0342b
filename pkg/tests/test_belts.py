import pytest

from fullerkit.belts import (NotFullerene, NotSimpleCycle, border_loops,
                             belt_boundary_cycles, classify_five_belts,
                             find_k_belts, split_by_cycle)
from fullerkit.growth import seed_family_one
from fullerkit.maps import CombMap


def test_fullerenes_have_no_small_belts(small_fullerenes):
    for m in small_fullerenes:
        assert find_k_belts(m, 3) == []
        assert find_k_belts(m, 4) == []


def test_dodecahedron_five_belts(dodecahedron):
    belts = find_k_belts(dodecahedron, 5)
    assert len(belts) == 12
    rep = classify_five_belts(dodecahedron)
    assert rep.count == 12
    assert rep.kinds == ["pentagon"] * 12


@pytest.mark.parametrize("k", range(0, 4))
def test_family_one_five_belt_census(k):
    m = seed_family_one(k)
    belts = find_k_belts(m, 5)
    assert len(belts) == 12 + k
    rep = classify_five_belts(m)
    assert rep.kinds.count("pentagon") == 12
    assert rep.kinds.count("hexagon ring") == k


def test_tetrahedron_three_belt_absent():
    # the tetrahedron's three faces around a vertex always share it, so no
    # 3-belt exists despite pairwise adjacency
    t = CombMap.from_rotations([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])
    assert find_k_belts(t, 3) == []


def test_cube_four_belts():
    cube = CombMap.from_rotations([
        [1, 3, 4], [0, 5, 2], [1, 6, 3], [2, 7, 0],
        [0, 7, 5], [1, 4, 6], [2, 5, 7], [3, 6, 4]])
    assert find_k_belts(cube, 3) == []
    # three equatorial rings of four quadrangles
    assert len(find_k_belts(cube, 4)) == 3


def test_split_by_cycle_loop_arithmetic(dodecahedron):
    m = dodecahedron
    # take a pentagon's boundary as the cycle
    f = 0
    darts = []
    d = min(m.faces[f])
    for _ in range(m.face_size(f)):
        darts.append(d)
        d = m.face_next(d)
    split = split_by_cycle(m, darts)
    assert len(split.side1) + len(split.side2) == m.f2
    # loop-length arithmetic: each side's loop length equals the sum of
    # (contact count - 1) over the other side's loop
    for la, lb in ((split.loop1, split.loop2), (split.loop2, split.loop1)):
        if len(lb.faces) > 1:
            assert len(la.faces) == sum(c - 1 for c in lb.contacts) or \
                len(la) == 1
    assert split.loop1.simple


def test_loop_arithmetic_nondegenerate():
    # cut family_one(1) along a boundary cycle of its hexagon ring: both
    # bordering loops are nondegenerate and the length law holds exactly
    m = seed_family_one(1)
    belt = next(b for b in find_k_belts(m, 5)
                if all(m.face_size(f) == 6 for f in b))
    cycle = belt_boundary_cycles(m, belt)[0]
    split = split_by_cycle(m, cycle)
    l1, l2 = split.loop1, split.loop2
    assert len(l1.faces) > 1 and len(l2.faces) > 1
    assert len(l1.faces) == sum(c - 1 for c in l2.contacts)
    assert len(l2.faces) == sum(c - 1 for c in l1.contacts)


def test_split_rejects_bad_cycles(dodecahedron):
    with pytest.raises(NotSimpleCycle):
        split_by_cycle(dodecahedron, [0, 1])


def test_belt_region_is_annulus(dodecahedron):
    belt = find_k_belts(dodecahedron, 5)[0]
    cycles = belt_boundary_cycles(dodecahedron, belt)
    assert len(cycles) == 2
    ana = border_loops(dodecahedron, belt)
    assert ana.kind == "surrounds-facet"
    assert len(ana.side1) == 1 or len(ana.side2) == 1
    # the belt encloses a pentagon: one boundary cycle has 5 edges
    assert sorted(len(c) for c in cycles)[0] == 5


def test_classify_five_belts_requires_fullerene():
    t = CombMap.from_rotations([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])
    with pytest.raises(NotFullerene):
        classify_five_belts(t)
