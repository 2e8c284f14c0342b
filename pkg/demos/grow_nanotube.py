"""Grow a pentagonal nanotube ring by ring and watch its belt census.

Starting from the dodecahedron, each application of operation ``a`` at a
cap adds one ring of five hexagons.  The number of five-belts grows by one
per ring: twelve belts around the pentagons plus one per hexagon ring.
"""

from fullerkit import (apply_rule, classify_five_belts, match_pattern,
                       render_svg, rules_by_id, seed_dodecahedron)


def main() -> None:
    rule = rules_by_id("a")[0]
    m = seed_dodecahedron()
    for k in range(0, 5):
        rep = classify_five_belts(m)
        print("k=%d: %3d vertices, %2d five-belts (%d hexagon rings)"
              % (k, m.f0, rep.count, rep.kinds.count("hexagon ring")))
        site = match_pattern(m, rule.lhs)[0]
        m = apply_rule(m, rule, site)
    with open("nanotube.svg", "w") as fh:
        fh.write(render_svg(m))
    print("wrote nanotube.svg (%d vertices)" % m.f0)


if __name__ == "__main__":
    main()
