"""Command-line interface.

Subcommands pipe planar_code streams through stdin/stdout (or --in/--out),
so generation, growth, verification and rendering compose with ordinary
shell pipelines.  Exit codes: 0 success / all checks passed, 1 a check or
operation failed on valid input, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Tuple

from .growth import (apply_rule, enumerate_maps, invert_rule, rules_by_id,
                     seed)
from .maps import CombMap
from .patterns import match_pattern
from .planarcode import read_planar_code, write_planar_code
from .rulefile import parse_file
from .surgery import truncate
from .svg import render_svg
from .verify import verify_fullerene, verify_intermediate


class CliFailure(Exception):
    """Operation failed on otherwise valid input (exit code 1)."""


def _read_maps(args) -> List[CombMap]:
    if args.infile:
        with open(args.infile, "rb") as fh:
            return read_planar_code(fh.read())
    return read_planar_code(sys.stdin.buffer.read())


def _write_maps(maps, args, sort: bool) -> None:
    data = write_planar_code(maps, sort=sort)
    if args.outfile:
        with open(args.outfile, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)


def _write_text(text: str, args) -> None:
    if args.outfile:
        with open(args.outfile, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _lhs_sites(m: CombMap, rule_id: str):
    sites = []
    for rule in sorted(rules_by_id(rule_id), key=lambda r: r.key):
        for at in match_pattern(m, rule.lhs):
            sites.append((rule, at))
    return sites


def _rhs_sites(m: CombMap, rule_id: str):
    sites = []
    for rule in sorted(rules_by_id(rule_id), key=lambda r: r.key):
        for at in match_pattern(m, rule.rhs):
            sites.append((rule, at))
    return sites


def _pick(sites, index: int, what: str):
    if not 0 <= index < len(sites):
        raise CliFailure("%s site %d out of range (found %d)"
                         % (what, index, len(sites)))
    return sites[index]


def cmd_gen(args) -> int:
    family = {"dodeca": "dodecahedron", "barrel": "barrel",
              "one": "family_one", "two": "family_two"}[args.family]
    _write_maps([seed(family, args.k)], args, sort=False)
    return 0


def cmd_grow(args) -> int:
    out = []
    for m in _read_maps(args):
        rule, at = _pick(_lhs_sites(m, args.rule), args.site, "growth")
        out.append(apply_rule(m, rule, at))
    _write_maps(out, args, sort=False)
    return 0


def cmd_enumerate(args) -> int:
    maps = enumerate_maps(args.max_p6, jobs=args.jobs)
    _write_maps(maps.values(), args, sort=True)
    return 0


def cmd_verify(args) -> int:
    check = verify_intermediate if args.intermediate else verify_fullerene
    lines = []
    ok = True
    for i, m in enumerate(_read_maps(args)):
        report = check(m)
        if report.passed:
            lines.append("record %d: PASS" % i)
        else:
            ok = False
            fails = "; ".join("%s (witness %r)" % (c.name, c.witness)
                              for c in report.failures())
            lines.append("record %d: FAIL %s" % (i, fails))
    _write_text("\n".join(lines) + "\n", args)
    return 0 if ok else 1


def cmd_decompose(args) -> int:
    maps = _read_maps(args)
    if len(maps) != 1:
        raise CliFailure("decompose expects exactly one input map")
    m = maps[0]
    from .growth import decompose_rule
    rule, at = _pick(_lhs_sites(m, args.rule), args.site, "growth")
    steps = decompose_rule(m, rule, at)
    stream = []
    cur = None
    for i, (before, spec) in enumerate(steps):
        stream.append(before)
        cur = truncate(before if cur is None else cur, spec).map
        print("step %d: cut %d-gon face %d along %d edges, signature %r"
              % (i, spec.k, spec.face, spec.s + 2, spec.signature),
              file=sys.stderr)
    stream.append(cur)
    _write_maps(stream, args, sort=False)
    return 0


def cmd_invert(args) -> int:
    out = []
    for m in _read_maps(args):
        rule, at = _pick(_rhs_sites(m, args.rule), args.site, "inversion")
        out.append(invert_rule(m, rule, at))
    _write_maps(out, args, sort=False)
    return 0


def cmd_canon(args) -> int:
    codes = sorted((m.f0, m.canonical_code()) for m in _read_maps(args))
    _write_text("".join(c.hex() + "\n" for _, c in codes), args)
    return 0


def cmd_match(args) -> int:
    with open(args.pattern) as fh:
        patterns, rules = parse_file(fh.read())
    if not patterns:
        patterns = {"lhs:" + r.key: r.lhs for r in rules}
    if not patterns:
        print("pattern file defines no patterns", file=sys.stderr)
        return 2
    lines = []
    for i, m in enumerate(_read_maps(args)):
        for name in sorted(patterns):
            found = match_pattern(m, patterns[name])
            lines.append("record %d pattern %s: %d matches"
                         % (i, name, len(found)))
    _write_text("\n".join(lines) + "\n", args)
    return 0


def cmd_render(args) -> int:
    maps = _read_maps(args)
    if len(maps) != 1:
        raise CliFailure("render expects exactly one input map")
    _write_text(render_svg(maps[0], outer=args.outer), args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fullerkit", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--in", dest="infile", default=None,
                        help="read planar_code from this file, not stdin")
        sp.add_argument("--out", dest="outfile", default=None,
                        help="write output to this file, not stdout")

    sp = sub.add_parser("gen", help="emit a seed fullerene")
    sp.add_argument("--family", required=True,
                    choices=["dodeca", "barrel", "one", "two"])
    sp.add_argument("--k", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("grow", help="apply a growth operation")
    sp.add_argument("--rule", required=True, choices=list("abcdefg"))
    sp.add_argument("--site", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_grow)

    sp = sub.add_parser("enumerate", help="closure of the dodecahedron")
    sp.add_argument("--max-p6", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="check the fullerene contract")
    sp.add_argument("--intermediate", action="store_true",
                    help="check the surgery-intermediate contract instead")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("decompose",
                        help="emit a rule's single-cut intermediates")
    sp.add_argument("--rule", required=True, choices=list("abcdefg"))
    sp.add_argument("--site", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("invert", help="undo a growth operation")
    sp.add_argument("--rule", required=True, choices=list("abcdefg"))
    sp.add_argument("--site", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_invert)

    sp = sub.add_parser("canon", help="emit canonical codes (hex)")
    common(sp)
    sp.set_defaults(func=cmd_canon)

    sp = sub.add_parser("match", help="count pattern occurrences")
    sp.add_argument("--pattern", required=True,
                    help="pattern/rule file to match")
    common(sp)
    sp.set_defaults(func=cmd_match)

    sp = sub.add_parser("render", help="render one map as SVG")
    sp.add_argument("--outer", type=int, default=0,
                    help="face id to use as the outer face")
    common(sp)
    sp.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliFailure as exc:
        print("fullerkit: %s" % exc, file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
