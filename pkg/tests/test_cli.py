import subprocess
import sys

import pytest

from birackpoly import datasets
from birackpoly.cli import main

DATA = datasets.data_dir()
RANK2 = str(DATA / "biracks" / "rank2.txt")
SINGLE = str(DATA / "biracks" / "singleton.txt")
MOD = lambda n: str(DATA / "modules" / f"{n}.txt")
LINK = lambda n: str(DATA / "links" / f"{n}.txt")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_birack(capsys):
    assert run(capsys, "verify-birack", RANK2)[:2] == (0, "valid, pi=(1 2), N=2\n")
    assert run(capsys, "verify-birack", SINGLE)[:2] == (0, "valid, N=1\n")


def test_verify_birack_broken(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n1 1 2 2\n1 1 1 1\n")
    code, _, err = run(capsys, "verify-birack", str(bad))
    assert code == 1 and "bijective" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "verify-birack", "/nonexistent/birack.txt")
    assert code == 1 and "invalid input" in err


def test_verify_module(capsys, tmp_path):
    for name in ("z5_beads", "z5q_a", "z5q_b"):
        assert run(capsys, "verify-module", RANK2, MOD(name))[0] == 0
    bad = tmp_path / "m.txt"
    bad.write_text(open(MOD("z5_beads")).read().replace("1, 1, 2, 1, 2, 2", "1, 1, 3, 1, 2, 2"))
    code, _, err = run(capsys, "verify-module", RANK2, str(bad))
    assert code == 1
    assert "relation" in err and "fails at" in err and "[" in err


def test_count(capsys):
    assert run(capsys, "count", RANK2, LINK("figure_eight"))[1] == "2\n"
    assert run(capsys, "count", RANK2, LINK("unknot"))[1] == "2\n"
    assert run(capsys, "count", SINGLE, LINK("figure_eight"))[1] == "1\n"
    assert run(capsys, "count", RANK2, LINK("figure_eight"), "--basic")[1] == "2\n"


def test_enhance(capsys):
    assert run(capsys, "enhance", RANK2, MOD("z5q_a"), LINK("virtual_trefoil"), "--k", "0")[1] == \
        "{ 2 x (1+q+3q^2) }\n"
    assert run(capsys, "enhance", RANK2, MOD("z5_beads"), LINK("figure_eight"), "--beads")[1] == \
        "2u^25\n"
    assert run(capsys, "enhance", RANK2, MOD("z5q_a"), LINK("unknot"), "--k", "0")[1] == \
        "{ 2 x (0) }\n"
    assert run(capsys, "enhance", RANK2, MOD("z5q_a"), LINK("unknot"), "--format", "csv")[1] == \
        '"unknot","{ 2 x (0) }"\n'


def test_unsupported(capsys, tmp_path):
    m = tmp_path / "z6.txt"
    m.write_text("Z6[q]\n2\n1, 1, 0, 0, 1, 1\n1, 1, 0, 0, 1, 1\n")
    code, _, err = run(capsys, "enhance", RANK2, str(m), LINK("virtual_trefoil"), "--k", "1")
    assert code == 2 and "unsupported" in err
    assert run(capsys, "enhance", RANK2, MOD("z5q_a"), LINK("unknot"), "--beads")[0] == 2
    assert run(capsys, "search-modules", RANK2, "--ring", "Z[q]")[0] == 2
    assert run(capsys, "search-modules", RANK2, "--ring", "Z5[q]", "--emax", "-1")[0] == 2


def test_search_modules(capsys, tmp_path):
    code, out, _ = run(capsys, "search-modules", RANK2, "--ring", "Z5", "--emax", "0", "--dmax", "0")
    assert code == 0
    assert out.count("Z5\n2\n") > 0
    assert "1, 1, 2, 1, 2, 2\n1, 1, 4, 2, 3, 3\n" in out
    assert run(capsys, "search-modules", RANK2, "--ring", "Z5[q]", "--limit", "0")[:2] == (0, "")
    code, out, _ = run(capsys, "search-modules", RANK2, "--ring", "Z5", "--emax", "0", "--dmax", "0",
                       "--limit", "2", "--out", str(tmp_path / "mods"))
    files = sorted((tmp_path / "mods").glob("*.txt"))
    assert code == 0 and len(files) == 2
    assert run(capsys, "verify-module", RANK2, str(files[0]))[0] == 0


def test_table(capsys, tmp_path):
    vk = str(datasets.vknots_dir())
    code, out, _ = run(capsys, "table", RANK2, MOD("z5q_b"), vk)
    assert code == 0
    rows = dict(line.split('","') for line in out.strip().split("\n"))
    assert rows['"4.29'] == '{ 2 x (1+q+2q^2+4q^3+2q^4) }"'
    assert rows['"4.2'] == '{ 2 x (1+3q^2+q^4) }"'
    code, grouped, _ = run(capsys, "table", RANK2, MOD("z5q_b"), vk, "--grouped", "--format", "text")
    assert "{ 2 x (1+4q^2) } | 3.2" in grouped
    # parallel run gives byte-identical output
    assert run(capsys, "table", RANK2, MOD("z5q_b"), vk, "--jobs", "3")[1] == out
    # a broken file is reported and the rest still printed
    d = tmp_path / "links"
    d.mkdir()
    (d / "3.2.txt").write_text(open(datasets.vknots_dir() / "3.2.txt").read())
    (d / "9.9.txt").write_text("O1+O1+\n")
    code, out, err = run(capsys, "table", RANK2, MOD("z5q_b"), str(d))
    assert code == 1 and "9.9" in err and '"3.2"' in out


def test_deterministic_subprocess():
    argv = [sys.executable, "-m", "birackpoly.cli", "enhance", RANK2, MOD("z5q_b"),
            str(datasets.vknots_dir() / "4.7.txt")]
    a = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert a == b == "{ 2 x (1+4q^4) }\n"


def test_bad_k(capsys):
    with pytest.raises(SystemExit):
        main(["enhance", RANK2, MOD("z5q_a"), LINK("unknot"), "--k", "-1"])
