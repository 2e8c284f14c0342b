"""Structure checks for fullerenes and for surgery intermediates.

Each check is executed by exhaustive search (face census, belt search,
fragment search) and reports a witness when it fails, so a report can be
re-checked in isolation.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .belts import NotFullerene, border_loops, find_k_belts
from .maps import CombMap


class CheckResult:
    """One named verdict with an optional witness object."""

    def __init__(self, name: str, passed: bool, witness=None) -> None:
        self.name = name
        self.passed = passed
        self.witness = witness

    def __repr__(self) -> str:
        tail = "" if self.passed else " witness=%r" % (self.witness,)
        return "CheckResult(%s, %s%s)" % (self.name,
                                          "pass" if self.passed else "FAIL",
                                          tail)


class TheoremReport:
    """A bundle of named check verdicts."""

    def __init__(self, checks: List[CheckResult]) -> None:
        self.checks = checks

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __repr__(self) -> str:
        return "TheoremReport(%s)" % ", ".join(map(repr, self.checks))


def _pentagon_of_belt(m: CombMap, belt: List[int]) -> Optional[int]:
    """The single face enclosed by the belt, if there is exactly one."""
    ana = border_loops(m, belt)
    for side in (ana.side1, ana.side2):
        if len(side) == 1:
            return next(iter(side))
    return None


def _opposite_contacts(m: CombMap, belt: List[int]) -> bool:
    """Each belt face meets its two belt neighbours along opposite edges."""
    n = len(belt)
    for i, f in enumerate(belt):
        size = m.face_size(f)
        if size % 2:
            return False
        prev_f = belt[(i - 1) % n]
        next_f = belt[(i + 1) % n]
        pos = {}
        for idx, d in enumerate(m.faces[f]):
            g = m.face_of[m.twin[d]]
            if g == prev_f:
                pos["prev"] = idx
            elif g == next_f:
                pos["next"] = idx
        if len(pos) != 2:
            return False
        if (pos["next"] - pos["prev"]) % size != size // 2:
            return False
    return True


def verify_fullerene(m: CombMap) -> TheoremReport:
    """Fullerene contract: face census, pentagon count, belt structure.

    Checks: all faces pentagons or hexagons; exactly 12 pentagons; no
    3-belts (the map is flag); no 4-belts; every 5-belt either surrounds a
    single pentagon or is a ring of hexagons each meeting its belt
    neighbours along opposite edges.
    """
    checks: List[CheckResult] = []
    fv = m.face_vector()
    bad_sizes = sorted(set(fv) - {5, 6})
    checks.append(CheckResult("face-sizes", not bad_sizes, bad_sizes or None))
    checks.append(CheckResult("twelve-pentagons", fv.get(5, 0) == 12,
                              fv.get(5, 0)))
    belts3 = find_k_belts(m, 3)
    checks.append(CheckResult("no-3-belts", not belts3,
                              belts3[0] if belts3 else None))
    belts4 = find_k_belts(m, 4)
    checks.append(CheckResult("no-4-belts", not belts4,
                              belts4[0] if belts4 else None))
    if all(c.passed for c in checks):
        bad_belt = None
        for belt in find_k_belts(m, 5):
            enclosed = _pentagon_of_belt(m, belt)
            if enclosed is not None and m.face_size(enclosed) == 5:
                continue
            if (all(m.face_size(f) == 6 for f in belt)
                    and _opposite_contacts(m, belt)):
                continue
            bad_belt = belt
            break
        checks.append(CheckResult("five-belt-kinds", bad_belt is None,
                                  bad_belt))
    return TheoremReport(checks)


def verify_intermediate(m: CombMap) -> TheoremReport:
    """Contract for polytopes between fullerenes in a growth script.

    Checks: all faces pentagons or hexagons except at most one quadrangle
    or heptagon; no 3-belts; exactly one 4-belt when a quadrangle is
    present (and it surrounds the quadrangle), none otherwise.
    """
    checks: List[CheckResult] = []
    fv = m.face_vector()
    bad_sizes = sorted(set(fv) - {4, 5, 6, 7})
    exceptional = fv.get(4, 0) + fv.get(7, 0)
    checks.append(CheckResult("face-sizes", not bad_sizes, bad_sizes or None))
    checks.append(CheckResult("one-exceptional", exceptional <= 1,
                              {s: fv.get(s, 0) for s in (4, 7)}))
    belts3 = find_k_belts(m, 3)
    checks.append(CheckResult("no-3-belts", not belts3,
                              belts3[0] if belts3 else None))
    belts4 = find_k_belts(m, 4)
    if fv.get(4, 0) == 1:
        quad = next(f for f in range(m.f2) if m.face_size(f) == 4)
        ok = (len(belts4) == 1
              and _pentagon_of_belt(m, belts4[0]) == quad)
        checks.append(CheckResult("one-4-belt-surrounds-quad", ok,
                                  belts4))
    else:
        checks.append(CheckResult("no-4-belts", not belts4,
                                  belts4[0] if belts4 else None))
    return TheoremReport(checks)


class FamilyReport:
    """Nanotube-family classification.

    family_one_k / family_two_k hold the ring or screw-step count when the
    map belongs to the family, else None.  The dodecahedron is the k = 0
    member of both families, so both fields are 0 for it.
    """

    def __init__(self, family_one_k: Optional[int],
                 family_two_k: Optional[int]) -> None:
        self.family_one_k = family_one_k
        self.family_two_k = family_two_k

    @property
    def kind(self) -> str:
        if self.family_one_k is not None and self.family_two_k is not None:
            return "both"
        if self.family_one_k is not None:
            return "family_one"
        if self.family_two_k is not None:
            return "family_two"
        return "none"

    def __repr__(self) -> str:
        return "FamilyReport(one=%r, two=%r)" % (self.family_one_k,
                                                 self.family_two_k)


def classify_nanotube(m: CombMap) -> FamilyReport:
    """Detect membership in the two nanotube families.

    Family one members carry a pentagon fully surrounded by pentagons (the
    cap); family two members carry three pentagons around a vertex
    alternating with three more.  A fragment hit is cross-checked by the
    hexagon count (5k resp. 3k) and by isomorphism with the constructed
    member, which rebuilds the map layer by layer from the fragment.
    """
    from .growth import (rules_by_id, seed_family_one, seed_family_two)
    from .patterns import match_pattern
    if not m.is_fullerene():
        raise NotFullerene("nanotube classification expects a fullerene")
    p6 = m.face_vector().get(6, 0)
    one_k: Optional[int] = None
    two_k: Optional[int] = None
    cap = rules_by_id("a")[0].lhs
    if p6 % 5 == 0 and match_pattern(m, cap):
        k = p6 // 5
        if m.is_isomorphic(seed_family_one(k)):
            one_k = k
    screw = rules_by_id("b")[0].lhs
    if p6 % 3 == 0 and match_pattern(m, screw):
        k = p6 // 3
        if m.is_isomorphic(seed_family_two(k)):
            two_k = k
    return FamilyReport(one_k, two_k)
