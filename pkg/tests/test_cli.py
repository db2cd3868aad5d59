import io
import sys

import pytest

from fsprune import cli, textio
from fsprune.perm_core import Permutation


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", stdin)
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_ints_lexical_rules():
    text = "# header\n4, 3  1\n2,5 # trailing\n\n"
    assert textio.parse_ints(text) == [4, 3, 1, 2, 5]
    with pytest.raises(textio.ParseError, match="line 2"):
        textio.parse_ints("1 2\n3 x\n")


def test_scatter_csv_roundtrip():
    text = textio.permutation_csv(Permutation((2, 1, 3)))
    assert text == "index,value\n1,2\n2,1\n3,3\n"
    assert textio.read_scatter_csv(io.StringIO(text)) == ([1, 2, 3], [2, 1, 3])


def test_convert_perm_to_taps(tmp_path, capsys):
    src = tmp_path / "p.txt"
    src.write_text("4 3 1 2 5\n")
    code, out, _ = run(["convert", "--kind", "perm2taps", str(src)], capsys)
    assert code == 0 and out == "4 2 2 1 1\n"


def test_convert_taps_to_perm_and_invert(tmp_path, capsys):
    src = tmp_path / "t.txt"
    src.write_text("1 1 1")
    assert run(["convert", "--kind", "taps2perm", str(src)], capsys)[1] == "1 2 3\n"
    src.write_text("4,3,1,2,5")
    assert run(["convert", "--kind", "invert", str(src)], capsys)[1] == "3 4 2 1 5\n"


def test_convert_roundtrip_files(tmp_path, capsys):
    src = tmp_path / "p.txt"
    src.write_text("# a permutation\n3 5 4\n2 1 6\n")
    mid, back = tmp_path / "t.txt", tmp_path / "p2.txt"
    assert cli.main(["convert", "--kind", "perm2taps", str(src), "-o", str(mid)]) == 0
    assert cli.main(["convert", "--kind", "taps2perm", str(mid), "-o", str(back)]) == 0
    assert textio.parse_ints(back.read_text()) == textio.parse_ints(src.read_text()) == [3, 5, 4, 2, 1, 6]


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 two")
    code, _, err = run(["convert", "--kind", "perm2taps", str(bad)], capsys)
    assert code == cli.EXIT_PARSE and "parse error" in err
    bad.write_text("1 2 2")
    code, _, err = run(["convert", "--kind", "perm2taps", str(bad)], capsys)
    assert code == cli.EXIT_DOMAIN and "repeats value 2" in err
    bad.write_text("1 5 1")
    assert run(["convert", "--kind", "taps2perm", str(bad)], capsys)[0] == cli.EXIT_DOMAIN
    assert run(["convert", "--kind", "taps2perm", str(tmp_path / "missing")], capsys)[0] == cli.EXIT_PARSE
    assert cli.EXIT_PARSE != cli.EXIT_DOMAIN


def test_stream_text(tmp_path, capsys, monkeypatch):
    taps = tmp_path / "t.txt"
    taps.write_text("3 4 2 2 1 1")
    code, out, err = run(
        ["stream", "--taps", str(taps), "--trace"], capsys, io.StringIO("0 1 0 1 1 0\n"), monkeypatch
    )
    assert code == 0
    assert out == "0 1 1 1 0 0\n"
    lines = err.splitlines()
    assert lines[0] == "# delay=3" and len(lines) == 7


def test_stream_binary(tmp_path, capsys, monkeypatch):
    taps = tmp_path / "t.txt"
    taps.write_text("4 2 2 1 1")
    stdin = io.TextIOWrapper(io.BytesIO(b"abcdeABCDE"))
    buf = io.BytesIO()
    monkeypatch.setattr(sys, "stdin", stdin)
    monkeypatch.setattr(sys, "stdout", io.TextIOWrapper(buf))
    assert cli.main(["stream", "--taps", str(taps), "--binary", "--block"]) == 0
    sys.stdout.flush()
    assert buf.getvalue() == b"dcabeDCABE"


def test_stream_with_mask(tmp_path, capsys, monkeypatch):
    taps, mask = tmp_path / "t.txt", tmp_path / "m.txt"
    taps.write_text("4 2 2 1 1")
    mask.write_text("5\n")
    code, out, _ = run(["stream", "--taps", str(taps), "--mask", str(mask)], capsys, io.StringIO("a b c d"), monkeypatch)
    assert code == 0 and out == "d c a b\n"


def test_stream_partial_block_is_domain_error(tmp_path, capsys, monkeypatch):
    taps = tmp_path / "t.txt"
    taps.write_text("2 1")
    code, _, _ = run(["stream", "--taps", str(taps)], capsys, io.StringIO("a b c"), monkeypatch)
    assert code == cli.EXIT_DOMAIN


def test_prune_and_grow(tmp_path, capsys):
    t = tmp_path / "t.txt"
    t.write_text("3 4 2 2 1 1")
    assert run(["prune", "--m", "1", str(t)], capsys)[1] == "4 2 2 1 1\n"
    t.write_text("4 2 2 1 1")
    assert run(["grow", "--j", "3", str(t)], capsys)[1] == "3 4 2 2 1 1\n"
    assert run(["grow", "--j", "9", str(t)], capsys)[0] == cli.EXIT_DOMAIN


def test_spread_command(tmp_path, capsys):
    p = tmp_path / "p.txt"
    p.write_text("1 2 3 4")
    out = run(["spread", str(p)], capsys)[1]
    assert out == "spread=2 n1=1 n2=2 pairs_at_min=3\n"
    p.write_text("1 1 1 1")
    assert run(["spread", "--taps", str(p)], capsys)[1].startswith("spread=2 ")


def test_gprofile_csv(capsys):
    code, out, _ = run(["gprofile", "--K", "2048", "--h", "63", "--b", "128", "--c", "347", "--n", "1180"], capsys)
    rows = out.splitlines()
    assert code == 0 and rows[0] == "index,value"
    assert len(rows) == 1 + 2046  # l = 1..2047 without l = n - 1
    assert "1179," not in "\n".join(r[:5] for r in rows)


def test_qpp_gen(tmp_path, capsys):
    out = tmp_path / "q.txt"
    code, _, err = run(["qpp", "gen", "--K", "15", "--h", "2", "--b", "15", "--c", "0", "--out", str(out)], capsys)
    assert code == 0 and "case1" in err
    assert textio.parse_ints(out.read_text()) == [(2 * j) % 15 + 1 for j in range(15)]
    assert run(["qpp", "gen", "--K", "15", "--h", "3", "--b", "15"], capsys)[0] == cli.EXIT_DOMAIN


def test_qpp_prune_lift(tmp_path, capsys):
    code, out, _ = run(
        ["qpp", "prune-lift", "--K", "2048", "--h", "63", "--b", "128", "--c", "0", "--M", "500",
         "--outdir", str(tmp_path)],
        capsys,
    )
    assert code == 0
    fields = dict(kv.split("=") for kv in out.split())
    assert fields["target_length"] == "1548" and fields["actual_length"] == "1169"
    assert fields["lifted"] == "379" and fields["spread_after"] == "43"
    xs, ys = textio.read_scatter_csv(tmp_path / "lifted.csv")
    assert len(xs) == 1169
    assert len(textio.parse_ints((tmp_path / "dummy_positions.txt").read_text())) == 379


def test_reproduce_example(capsys):
    out = run(["reproduce", "example-sec2"], capsys)[1]
    assert "taps = (4 2 2 1 1)" in out
    assert "pi2 = (3 5 4 2 1 6)" in out
    assert "as pictured 00111" in out and "as pictured 001110" in out


@pytest.mark.parametrize(
    "fig, expected",
    [
        ("fig4", {"target": "1548", "actual": "1169", "lifted": "379", "spread": "43"}),
        ("fig5", {"length": "1169", "spread": "43"}),
        ("fig3", {"length": "2038"}),
        ("fig2", {"n": "1180", "points": "2046"}),
    ],
)
def test_reproduce_figures(fig, expected, tmp_path, capsys):
    code, out, _ = run(["reproduce", fig, "--outdir", str(tmp_path)], capsys)
    assert code == 0
    fields = dict(kv.split("=") for kv in out.split())
    for k, v in expected.items():
        assert fields[k] == v
    assert list(tmp_path.glob("*.csv"))


def test_reproduce_is_deterministic(tmp_path, capsys, monkeypatch):
    a, b = tmp_path / "a", tmp_path / "b"
    run(["reproduce", "fig4", "--outdir", str(a)], capsys)
    monkeypatch.setenv(cli.OUTDIR_ENV, str(b))
    run(["reproduce", "fig4"], capsys)
    for f in a.glob("*.csv"):
        assert f.read_bytes() == (b / f.name).read_bytes()


def test_reproduce_plot(tmp_path, capsys):
    assert run(["reproduce", "fig5", "--outdir", str(tmp_path), "--plot", "svg"], capsys)[0] == 0
    assert (tmp_path / "fig5_lifted_M500.svg").read_text().lstrip().startswith("<?xml")


def test_selftest(capsys):
    code, out, _ = run(["selftest", "--seed", "7", "--scale", "0.02"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "# prng=numpy.random.PCG64 seed=7 scale=0.02"
    assert all(line.startswith("PASS") for line in out.splitlines()[1:])
    again = run(["selftest", "--seed", "7", "--scale", "0.02"], capsys)[1]
    assert again == out
