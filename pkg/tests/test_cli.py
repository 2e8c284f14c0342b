import pytest

from fullerkit.cli import main
from fullerkit.planarcode import read_planar_code


def run(tmp_path, *argv, infile=None):
    args = list(argv)
    if infile is not None:
        args += ["--in", str(infile)]
    out = tmp_path / ("out%d.bin" % (len(list(tmp_path.iterdir()))))
    args += ["--out", str(out)]
    code = main(args)
    return code, out


def test_gen_dodecahedron(tmp_path, dodecahedron):
    code, out = run(tmp_path, "gen", "--family", "dodeca")
    assert code == 0
    (m,) = read_planar_code(out.read_bytes())
    assert m.is_isomorphic(dodecahedron)


def test_gen_grow_canon_pipeline(tmp_path):
    _, seeds = run(tmp_path, "gen", "--family", "barrel")
    code, grown = run(tmp_path, "grow", "--rule", "c", "--site", "0",
                      infile=seeds)
    assert code == 0
    code, canon = run(tmp_path, "canon", infile=grown)
    assert code == 0
    lines = canon.read_text().splitlines()
    assert len(lines) == 1
    bytes.fromhex(lines[0])  # valid hex


def test_enumerate_and_canon_counts(tmp_path):
    code, maps = run(tmp_path, "enumerate", "--max-p6", "3")
    assert code == 0
    _, canon = run(tmp_path, "canon", infile=maps)
    assert len(canon.read_text().splitlines()) == 3


def test_verify_pass_and_fail(tmp_path, capsys):
    _, seeds = run(tmp_path, "gen", "--family", "dodeca")
    assert main(["verify", "--in", str(seeds)]) == 0
    out = capsys.readouterr().out
    assert "record 0: PASS" in out

    _, mids = run(tmp_path, "decompose", "--rule", "a", infile=seeds)
    capsys.readouterr()
    assert main(["verify", "--in", str(mids)]) == 1
    assert main(["verify", "--intermediate", "--in", str(mids)]) == 0


def test_decompose_emits_script_intermediates(tmp_path):
    _, seeds = run(tmp_path, "gen", "--family", "dodeca")
    code, mids = run(tmp_path, "decompose", "--rule", "a", infile=seeds)
    assert code == 0
    chain = read_planar_code(mids.read_bytes())
    assert len(chain) >= 2
    # vertex counts rise by two per step
    counts = [m.f0 for m in chain]
    assert counts == sorted(counts)
    assert counts[-1] - counts[0] == 2 * (len(chain) - 1)


def test_grow_then_invert_roundtrip(tmp_path):
    _, seeds = run(tmp_path, "gen", "--family", "barrel")
    _, grown = run(tmp_path, "grow", "--rule", "c", infile=seeds)
    code, back = run(tmp_path, "invert", "--rule", "c", infile=grown)
    assert code == 0
    assert read_planar_code(back.read_bytes())[0].is_isomorphic(
        read_planar_code(seeds.read_bytes())[0])


CAP_FILE = """
pattern cap
  C 5 R0 R4 R3 R2 R1
  R0 5 C R1 B B R4
  R1 5 C R2 B B R0
  R2 5 C R3 B B R1
  R3 5 C R4 B B R2
  R4 5 C R0 B B R3
end
"""


def test_match_counts(tmp_path, capsys):
    _, seeds = run(tmp_path, "gen", "--family", "dodeca")
    patfile = tmp_path / "cap.txt"
    patfile.write_text(CAP_FILE)
    assert main(["match", "--pattern", str(patfile),
                 "--in", str(seeds)]) == 0
    out = capsys.readouterr().out
    assert "record 0 pattern cap: 12 matches" in out


def test_render_svg_output(tmp_path):
    _, seeds = run(tmp_path, "gen", "--family", "dodeca")
    code, svg = run(tmp_path, "render", infile=seeds)
    assert code == 0
    text = svg.read_text()
    assert text.startswith("<svg")
    assert text.count("<polygon") == 12


def test_bad_site_exits_one(tmp_path):
    _, seeds = run(tmp_path, "gen", "--family", "barrel")
    code, _ = run(tmp_path, "grow", "--rule", "c", "--site", "999",
                  infile=seeds)
    assert code == 1


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as e:
        main(["grow"])  # missing required --rule
    assert e.value.code == 2


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2
