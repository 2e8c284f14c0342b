"""Seed fullerenes, the seven growth operations, and the enumeration engine.

Each growth operation is a patch rewrite given by data: a left-hand-side
pattern, a script of permitted truncations realizing the rewrite, the
resulting right-hand-side pattern, and an inverse script of straightenings.
Applying an operation runs its truncation script at a matched site; the
patch replacement and the script composition are therefore the same thing by
construction.  Inverting an operation runs the straightening script at a
matched right-hand-side site.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .belts import NotFullerene
from .maps import CombMap
from .patterns import B, MatchResult, PatchPattern, extract_patch, match_pattern
from .spiral import wind
from .surgery import (StraighteningResult, TruncationResult, TruncationSpec,
                      straighten, truncate)
from .winding import PatchBuilder


class NegativeParameter(Exception):
    pass


class NotAMatch(Exception):
    pass


class ResultNotFullerene(Exception):
    """Internal bug sentinel: a growth operation left the fullerene class."""


# Truncation signatures that growth scripts may use: (s, k or None, {t0, t1}).
# For s = 1 the cut is determined by its middle edge alone, so k is free.
PERMITTED_SIGNATURES = (
    (1, None, (4, 5)),
    (1, None, (5, 5)),
    (2, 6, (4, 5)),
    (2, 6, (5, 5)),
    (2, 6, (5, 6)),
    (2, 7, (5, 5)),
    (2, 7, (5, 6)),
)


def signature_key(sig: Tuple[int, int, int, int]) -> Tuple[int, Optional[int], Tuple[int, int]]:
    s, k, t0, t1 = sig
    return (s, None if s == 1 else k, tuple(sorted((t0, t1))))


def is_permitted(sig: Tuple[int, int, int, int]) -> bool:
    return signature_key(sig) in PERMITTED_SIGNATURES


# -- seeds ------------------------------------------------------------------

def seed_dodecahedron() -> CombMap:
    return wind([5] * 12)


def seed_barrel() -> CombMap:
    return wind([6] + [5] * 12 + [6])


def seed_family_one(k: int) -> CombMap:
    """Two pentagon caps joined by k rings of five hexagons."""
    if k < 0:
        raise NegativeParameter("k must be >= 0")
    m = wind([5] * 6 + [6] * (5 * k) + [5] * 6)
    assert m is not None
    return m


def seed_family_two(k: int) -> CombMap:
    """Two three-pentagon caps joined by k screw steps of three hexagons."""
    if k < 0:
        raise NegativeParameter("k must be >= 0")
    pb = PatchBuilder(5)                      # A1
    a = [0, pb.glue(5, 0, 1)]                 # A2 over one edge of A1
    a.append(_glue_on(pb, 5, [a[0], a[1]]))   # A3 over the A1/A2 corner
    s = [a[0], a[1], a[2]]
    t = []
    for i in range(3):
        t.append(_glue_on(pb, 5, [s[i], s[(i + 1) % 3]]))   # notch B_i
    for _ in range(k):
        nt = []
        for i in range(3):
            nt.append(_glue_on(pb, 6, [t[i], s[(i + 1) % 3], t[(i + 1) % 3]]))
        s, t = t, nt
    bp = []
    for i in range(3):
        bp.append(_glue_on(pb, 5, [t[i], s[(i + 1) % 3], t[(i + 1) % 3]]))
    a1 = _glue_on(pb, 5, [bp[0], t[1], bp[1]])
    _glue_on(pb, 5, [a1, bp[1], t[2], bp[2]])
    pb.close(5)
    return pb.to_map()


def _glue_on(pb: PatchBuilder, size: int, faces: Sequence[int]) -> int:
    """Glue a face over the elementary run consisting of the given faces."""
    want = list(faces)
    for start, length in pb.runs():
        if length == len(want):
            got = pb.run_faces(start, length)
            if got == want or got == want[::-1]:
                return pb.glue(size, start, length)
    raise ValueError("no elementary run over faces %r" % (want,))


def seed(which: str, k: int = 0) -> CombMap:
    if which == "dodecahedron":
        return seed_dodecahedron()
    if which == "barrel":
        return seed_barrel()
    if which == "family_one":
        return seed_family_one(k)
    if which == "family_two":
        return seed_family_two(k)
    raise ValueError("unknown seed %r" % which)


# -- script engine ----------------------------------------------------------

class ScriptState:
    """A map plus named handles (face origin darts) evolving under a script."""

    def __init__(self, m: CombMap, origins: Dict[str, int],
                 patch: Set[str]) -> None:
        self.map = m
        self.origins = dict(origins)
        self.patch = set(patch)

    def face_of(self, name: str) -> int:
        return self.map.face_of[self.origins[name]]

    def dart_at(self, name: str, slot: int) -> int:
        """Dart at the given slot; negative slots walk backwards, so scripts
        can address runs relative to slot 0 independently of face size."""
        d = self.origins[name]
        if slot >= 0:
            for _ in range(slot):
                d = self.map.face_next(d)
        else:
            for _ in range(-slot):
                d = self.map.twin[self.map.next_dart(d)]
        return d


def run_trunc_step(state: ScriptState, name: str, slot: int, run_len: int,
                   small_name: str, big_name: str) -> Tuple[ScriptState, TruncationSpec]:
    m = state.map
    start = state.dart_at(name, slot)
    spec = TruncationSpec(m, start, run_len - 2)
    res = truncate(m, spec)
    origins = dict(state.origins)
    del origins[name]
    origins[small_name] = res.new_edge
    origins[big_name] = res.map.twin[res.new_edge]
    patch = set(state.patch)
    patch.discard(name)
    patch.add(small_name)
    patch.add(big_name)
    return ScriptState(res.map, origins, patch), spec


def run_straighten_step(state: ScriptState, name: str, slot: int,
                        merged_name: str) -> ScriptState:
    m = state.map
    d = state.dart_at(name, slot)
    other = m.face_of[m.twin[d]]
    # name of the face on the other side of the edge, if it has one
    other_names = [n for n in state.origins
                   if n != name and state.face_of(n) == other]
    keep = state.dart_at(name, (slot + 2) % m.face_size(state.face_of(name)))
    res = straighten(m, d)
    vm = res.vertex_map

    def remap(dart: int) -> Optional[int]:
        v = dart // 3
        if v not in vm:
            return None
        return 3 * vm[v] + dart % 3

    origins: Dict[str, int] = {}
    for n, dart in state.origins.items():
        if n in other_names or n == name:
            continue
        nd = remap(dart)
        if nd is not None:
            origins[n] = nd
    kd = remap(keep)
    assert kd is not None
    origins[merged_name] = kd
    patch = set(state.patch)
    patch.discard(name)
    for n in other_names:
        patch.discard(n)
    patch.add(merged_name)
    return ScriptState(res.map, origins, patch)


def unmirror(m: CombMap, match: MatchResult) -> Tuple[CombMap, Dict[str, int]]:
    """Host and origins with the match expressed in forward orientation."""
    if not match.mirrored:
        return m, dict(match.origin)
    mm = m.mirror()
    # a dart with the face on its left becomes, in the mirror map, the
    # reversed dart (the twin) re-indexed through the reversed rotation
    origins = {}
    for n, d in match.origin.items():
        t = m.twin[d]
        origins[n] = 3 * (t // 3) + (2 - t % 3)
    return mm, origins

# -- growth rules -----------------------------------------------------------

TruncStep = Tuple[str, str, int, int, str, str]       # TRUNC name slot len small big
StraightenStep = Tuple[str, str, int, str]            # STRAIGHTEN name slot merged


class GrowthRule:
    """One growth operation: patterns plus the scripts realizing them.

    Attributes:
        id: operation letter a-g.
        params: chain-length parameters (empty, (k,) or (k1, k2)).
        lhs, rhs: patch patterns before and after the operation.
        script: truncation steps rewriting an LHS match into the RHS.
        inverse_script: straightening steps rewriting an RHS match back.
    """

    def __init__(self, rule_id: str, params: Tuple[int, ...],
                 lhs: PatchPattern, rhs: PatchPattern,
                 script: List[TruncStep],
                 inverse_script: List[StraightenStep]) -> None:
        self.id = rule_id
        self.params = params
        self.lhs = lhs
        self.rhs = rhs
        self.script = script
        self.inverse_script = inverse_script
        self._validate()

    @property
    def key(self) -> str:
        if self.params:
            return "%s%s" % (self.id, "_".join(str(p) for p in self.params))
        return self.id

    @property
    def delta_p6(self) -> int:
        return len(self.script)

    def _validate(self) -> None:
        def hexes(pat: PatchPattern) -> int:
            return sum(1 for n in pat.faces if pat.sizes[n] == 6)
        if not hexes(self.rhs) > hexes(self.lhs):
            raise ValueError("rule %s: rhs must gain hexagons" % self.key)
        lw = any(self.lhs.is_wild(n) for n in self.lhs.faces)
        rw = any(self.rhs.is_wild(n) for n in self.rhs.faces)
        if not lw and not rw:
            a = self.lhs.contact_sequence()
            b = self.rhs.contact_sequence()
            # the walks start at arbitrary slots: compare up to rotation
            same = len(a) == len(b) and any(
                b[r:] + b[:r] == a for r in range(len(b)))
            if not same:
                raise ValueError(
                    "rule %s: lhs/rhs boundary contact mismatch" % self.key)

    def __repr__(self) -> str:
        return "GrowthRule(%s)" % self.key


def apply_rule(m: CombMap, rule: GrowthRule, at: MatchResult) -> CombMap:
    """Replace the matched LHS patch by the rule's RHS patch.

    Implemented as the rule's truncation script; every step signature is
    checked against the permitted seven, and the result is checked to be a
    fullerene with p6 increased by the script length.
    """
    _check_match(m, rule.lhs, at)
    st = _initial_state(m, at)
    for (_, name, slot, rl, small, big) in rule.script:
        st, spec = run_trunc_step(st, name, slot, rl, small, big)
        if not is_permitted(spec.signature):
            raise ResultNotFullerene(
                "script step signature %r not permitted" % (spec.signature,))
    out = st.map
    if not out.is_fullerene():
        raise ResultNotFullerene("rule %s output is not a fullerene" % rule.key)
    if out.face_vector().get(6, 0) != m.face_vector().get(6, 0) + rule.delta_p6:
        raise ResultNotFullerene("rule %s: unexpected hexagon delta" % rule.key)
    return out


def decompose_rule(m: CombMap, rule: GrowthRule,
                   at: MatchResult) -> List[Tuple[CombMap, TruncationSpec]]:
    """The intermediate polytopes of the rule's script, with bound specs.

    Folding ``surgery.truncate`` over the returned pairs reproduces
    ``apply_rule(m, rule, at)``.
    """
    _check_match(m, rule.lhs, at)
    st = _initial_state(m, at)
    out: List[Tuple[CombMap, TruncationSpec]] = []
    for (_, name, slot, rl, small, big) in rule.script:
        before = st.map
        st, spec = run_trunc_step(st, name, slot, rl, small, big)
        out.append((before, spec))
    return out


def invert_rule(m: CombMap, rule: GrowthRule, at_rhs: MatchResult) -> CombMap:
    """Run the rule's straightening script at an RHS match."""
    _check_match(m, rule.rhs, at_rhs)
    st = _initial_state(m, at_rhs)
    for (_, name, slot, merged) in rule.inverse_script:
        st = run_straighten_step(st, name, slot, merged)
    out = st.map
    if not out.is_fullerene():
        raise ResultNotFullerene("rule %s inverse left the class" % rule.key)
    return out


def _initial_state(m: CombMap, at: MatchResult) -> ScriptState:
    host, origins = unmirror(m, at)
    return ScriptState(host, origins, set(origins))


def _check_match(m: CombMap, pat: PatchPattern, at: MatchResult) -> None:
    anchor_name = next(n for n in pat.faces if not pat.is_wild(n))
    if anchor_name not in at.origin:
        raise NotAMatch("match does not bind face %r" % anchor_name)
    found = match_pattern(m, pat, anchored_at=[at.origin[anchor_name]],
                          all_embeddings=True)
    for cand in found:
        if cand.origin == at.origin and cand.mirrored == at.mirrored:
            return
    raise NotAMatch("not a match of this pattern at the given site")


def derive_inverse_script(m: CombMap, rule_lhs: PatchPattern,
                          script: List[TruncStep],
                          at: MatchResult) -> List[StraightenStep]:
    """Compute the straightening script undoing ``script`` at a sample site.

    The forward script is run, then each truncation is undone in reverse
    order by straightening the edge between its two result faces; the slot
    addresses recorded are site-independent because the rewrite region is
    isomorphic at every match.  The derived script is verified to restore
    the original map.
    """
    st = _initial_state(m, at)
    history: List[Tuple[str, str, str]] = []
    for (_, name, slot, rl, small, big) in script:
        st, _spec = run_trunc_step(st, name, slot, rl, small, big)
        history.append((small, big, name))
    inverse: List[StraightenStep] = []
    for small, big, merged in reversed(history):
        fsmall = st.face_of(small)
        fbig = st.face_of(big)
        mm = st.map
        d = st.origins[small]
        slot = -1
        for i in range(mm.face_size(fsmall)):
            if mm.face_of[mm.twin[d]] == fbig:
                slot = i
                break
            d = mm.face_next(d)
        assert slot >= 0, "result faces of a script step are not adjacent"
        inverse.append(("STRAIGHTEN", small, slot, merged))
        st = run_straighten_step(st, small, slot, merged)
    host, _ = unmirror(m, at)
    assert st.map.is_isomorphic(host), "inverse script failed to restore host"
    return inverse


def rhs_pattern(m: CombMap, rule_lhs: PatchPattern, script: List[TruncStep],
                at: MatchResult) -> PatchPattern:
    """Extract the RHS pattern by running the script at a sample site.

    Wildcard faces of the LHS stay wildcards: their extracted cycles are cut
    down to the contiguous arc of named neighbours.
    """
    st = _initial_state(m, at)
    for (_, name, slot, rl, small, big) in script:
        st, _spec = run_trunc_step(st, name, slot, rl, small, big)
    wild = {n for n in rule_lhs.faces if rule_lhs.is_wild(n)}
    out = st.map
    name_of = {st.face_of(n): n for n in st.patch}
    faces: Dict[str, List[str]] = {}
    for n in st.patch:
        f = st.face_of(n)
        d = st.origins[n]
        cyc = []
        for _ in range(out.face_size(f)):
            g = out.face_of[out.twin[d]]
            cyc.append(name_of.get(g, B))
            d = out.face_next(d)
        faces[n] = cyc
    for n in wild:
        faces[n] = _named_arc(faces[n])
    # deterministic order: sized faces first so the anchor is sized
    ordered = {n: faces[n] for n in sorted(faces) if n not in wild}
    ordered.update({n: faces[n] for n in sorted(wild)})
    return PatchPattern(ordered, wildcard=wild)


def _named_arc(cyc: List[str]) -> List[str]:
    """Rotate a cycle so its named entries form a leading contiguous arc."""
    k = len(cyc)
    named = [i for i, g in enumerate(cyc) if g != B]
    assert named, "wildcard face with no named neighbours"
    # find the rotation where all named entries are contiguous from 0
    for r in range(k):
        rot = cyc[r:] + cyc[:r]
        span = max(i for i, g in enumerate(rot) if g != B) + 1
        if span == len(named) and all(g != B for g in rot[:span]):
            return rot[:span]
    raise ValueError("named neighbours of wildcard face are not contiguous")


# -- rule catalog ------------------------------------------------------------

_RULES: Optional[List[GrowthRule]] = None
_CATALOG: Optional[Dict[str, PatchPattern]] = None


def _load_data() -> None:
    global _RULES, _CATALOG
    if _RULES is not None:
        return
    from importlib import resources
    from .rulefile import parse_file
    text = (resources.files("fullerkit") / "data" / "rules.txt").read_text()
    _CATALOG, _RULES = parse_file(text)


def load_rules() -> List[GrowthRule]:
    """The packaged growth-rule catalog (rules a-g, chain rules per length)."""
    _load_data()
    return list(_RULES)


def load_fragment_catalog() -> Dict[str, PatchPattern]:
    """Named guaranteed-fragment patterns shipped alongside the rules."""
    _load_data()
    return dict(_CATALOG)


def rules_by_id(rule_id: str) -> List[GrowthRule]:
    return [r for r in load_rules() if r.id == rule_id]


def detect_growth_sites(m: CombMap) -> List[Tuple[str, MatchResult]]:
    """All right-hand-side fragment occurrences of the growth operations.

    Returns (rule id, match) pairs; a nonempty result means some operation
    can be inverted at the reported site.  Faces of each reported fragment
    are pairwise distinct (guaranteed by the matcher and asserted here).
    """
    return [(rule.id, at) for rule, at in detect_growth_rules(m)]


def detect_growth_rules(m: CombMap) -> List[Tuple[GrowthRule, MatchResult]]:
    """Like detect_growth_sites but reporting the full rule objects."""
    if not m.is_fullerene():
        raise NotFullerene("growth-site detection expects a fullerene")
    out: List[Tuple[GrowthRule, MatchResult]] = []
    for rule in load_rules():
        for at in match_pattern(m, rule.rhs):
            assert len(set(at.faces.values())) == len(at.faces)
            out.append((rule, at))
    return out


# -- enumeration -------------------------------------------------------------

def _expand_one(m: CombMap, max_p6: int,
                rules: List[GrowthRule]) -> List[CombMap]:
    p6 = m.face_vector().get(6, 0)
    children: List[CombMap] = []
    for rule in rules:
        if p6 + rule.delta_p6 > max_p6:
            continue
        for at in match_pattern(m, rule.lhs):
            children.append(apply_rule(m, rule, at))
    return children


def _expand_rotations(args: Tuple[List[List[int]], int]
                      ) -> List[Tuple[bytes, List[List[int]]]]:
    rotations, max_p6 = args
    m = CombMap.from_rotations(rotations)
    seen: Dict[bytes, List[List[int]]] = {}
    for child in _expand_one(m, max_p6, load_rules()):
        code = child.canonical_code()
        if code not in seen:
            seen[code] = child.rotations
    return [(code, rot) for code, rot in seen.items()]


def enumerate_fullerenes(max_p6: int, jobs: int = 1) -> Set[bytes]:
    """Canonical codes of the closure of the dodecahedron under the rules.

    Breadth-first by p6; children are deduplicated by canonical code.  With
    jobs > 1 each frontier generation is expanded by a process pool.
    """
    return set(enumerate_maps(max_p6, jobs))


def enumerate_maps(max_p6: int, jobs: int = 1) -> Dict[bytes, CombMap]:
    if max_p6 < 0:
        raise NegativeParameter("max_p6 must be >= 0")
    start = seed_dodecahedron()
    seen: Dict[bytes, CombMap] = {start.canonical_code(): start}
    frontier: List[CombMap] = [start]
    rules = load_rules()
    while frontier:
        if jobs > 1:
            import multiprocessing
            with multiprocessing.Pool(jobs) as pool:
                batches = pool.map(
                    _expand_rotations,
                    [(m.rotations, max_p6) for m in frontier])
            produced = [(code, CombMap.from_rotations(rot))
                        for batch in batches for code, rot in batch]
        else:
            produced = []
            for m in frontier:
                for child in _expand_one(m, max_p6, rules):
                    produced.append((child.canonical_code(), child))
        frontier = []
        for code, child in produced:
            if code not in seen:
                seen[code] = child
                frontier.append(child)
    return seen
