"""Split one growth operation into its elementary edge-cut steps.

Each operation is a short script of truncations.  Between consecutive
fullerenes the intermediate polytopes carry exactly one quadrangle or
heptagon, and every intermediate passes its structural contract.
"""

from fullerkit import (decompose_rule, match_pattern, rules_by_id,
                       seed_dodecahedron, truncate, verify_intermediate)


def census(m) -> str:
    fv = m.face_vector()
    return " ".join("%d:%d" % (s, fv[s]) for s in sorted(fv))


def main() -> None:
    m = seed_dodecahedron()
    rule = rules_by_id("a")[0]
    site = match_pattern(m, rule.lhs)[0]
    print("applying operation %s: %d cut steps" % (rule.key, rule.delta_p6))
    print("start   %3d vertices  faces %s" % (m.f0, census(m)))
    chain = decompose_rule(m, rule, site)
    for i, (before, spec) in enumerate(chain, start=1):
        after = truncate(before, spec).map
        if after.is_fullerene():
            status = "fullerene"
        else:
            rep = verify_intermediate(after)
            status = "intermediate " + ("ok" if rep.passed else "BROKEN")
        print("step %d  %3d vertices  faces %-20s %s"
              % (i, after.f0, census(after), status))


if __name__ == "__main__":
    main()
