from importlib import resources

import pytest

from fullerkit.rulefile import (RuleFileError, format_pattern_block,
                                format_rules, parse_file)

CAP = """
pattern cap
  C 5 R0 R4 R3 R2 R1   # centre pentagon
  R0 5 C R1 B B R4
  R1 5 C R2 B B R0
  R2 5 C R3 B B R1
  R3 5 C R4 B B R2
  R4 5 C R0 B B R3
end
"""


def shipped_text():
    return (resources.files("fullerkit") / "data" / "rules.txt").read_text()


def test_parse_pattern_with_comments():
    patterns, rules = parse_file(CAP)
    assert rules == []
    assert set(patterns) == {"cap"}
    assert len(patterns["cap"].faces) == 6


def test_shipped_file_parses():
    patterns, rules = parse_file(shipped_text())
    assert len(rules) == 15
    assert len(patterns) == 7


def test_pattern_roundtrip():
    patterns, _ = parse_file(CAP)
    text = "pattern cap\n" + "\n".join(
        format_pattern_block(patterns["cap"])) + "\nend\n"
    again, _ = parse_file(text)
    assert again["cap"].faces == patterns["cap"].faces


def test_rules_roundtrip():
    _, rules = parse_file(shipped_text())
    text = format_rules(rules)
    _, again = parse_file(text)
    assert [r.key for r in again] == [r.key for r in rules]
    for a, b in zip(again, rules):
        assert a.lhs.faces == b.lhs.faces
        assert a.rhs.faces == b.rhs.faces
        assert a.script == b.script
        assert a.inverse_script == b.inverse_script


@pytest.mark.parametrize("text,line", [
    ("pattern\n  A 5 B B B B B\nend\n", 1),       # missing name
    ("pattern p\n  A 5 B B B\nend\n", 2),         # size/entry mismatch
    ("pattern p\n  A x B B B B B\nend\n", 2),     # bad size token
    ("pattern p\n  A 5 B B B B B\n", 1),          # missing end
    ("pattern p\n  A 5 B B B B B\n  A 5 B B B B B\nend\n", 3),  # dup face
    ("bogus\n", 1),                               # unknown section
    ("rule z\nlhs\n  A 5 B B B B B\nend\n", 1),   # bad rule id
    ("rule c\n  A 5 B B B B B\nend\n", 2),        # content before section
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(RuleFileError) as e:
        parse_file(text)
    assert e.value.line_no == line
    assert "line %d:" % line in str(e.value)


def test_bad_script_line_rejected():
    text = ("rule c\nlhs\n  A 5 B B B B B\nrhs\n  A 5 B B B B B\n"
            "script\n  TRUNC A 0\ninverse\nend\n")
    with pytest.raises(RuleFileError) as e:
        parse_file(text)
    assert e.value.line_no == 7
