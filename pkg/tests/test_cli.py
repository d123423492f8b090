import json
import subprocess
import sys

import pytest

from acutetour import io
from acutetour.cli import main
from acutetour.generate import DISTRIBUTIONS
from conftest import SQUARE, TRIANGLE_CENTER


def write_csv(path, pts, k=0):
    io.write_points(path, pts, k)
    return str(path)


def test_tour_verify_round_trip(tmp_path, capsys):
    pts = tmp_path / "p.csv"
    assert main(["gen", "20", str(pts), "--seed", "7"]) == 0
    out = tmp_path / "t.json"
    svg = tmp_path / "t.svg"
    assert main(["tour", str(pts), str(out), "--svg", str(svg)]) == 0
    doc = json.loads(out.read_text())
    assert doc["acute"] is True and doc["n"] == 20 and doc["scale_k"] == 6
    assert set(doc) >= {"order", "acute", "max_angle_rad", "case_taken", "transforms_applied"}
    assert svg.read_text().startswith("<?xml")
    printed = capsys.readouterr().out
    assert "max_angle_rad=" in printed and "t_partition=" in printed and "t_construct=" in printed
    assert main(["verify", str(pts), str(out)]) == 0


def test_tour_exit_codes(tmp_path, capsys):
    odd = tmp_path / "odd.csv"
    main(["gen", "21", str(odd)])
    assert main(["tour", str(odd), str(tmp_path / "o.json")]) == 1
    small = tmp_path / "small.csv"
    main(["gen", "16", str(small)])
    assert main(["tour", str(small), str(tmp_path / "s.json")]) == 2
    assert "oracle" in capsys.readouterr().err
    dup = tmp_path / "dup.csv"
    dup.write_text("0,0\n0,0\n" + "".join(f"{i},{i * i}\n" for i in range(1, 19)))
    assert main(["tour", str(dup), str(tmp_path / "d.json")]) == 1
    assert main(["tour", str(tmp_path / "missing.csv"), str(tmp_path / "m.json")]) == 1
    assert main(["tour", str(odd), str(tmp_path / "o.json"), "-k", "12"]) == 1


def test_internal_failure_exit_code(tmp_path, monkeypatch, capsys):
    from acutetour import cli
    from acutetour.errors import InternalInvariantError

    def broken(part):
        raise InternalInvariantError("forced", {"case_taken": None})

    monkeypatch.setattr(cli, "build_tour", broken)
    pts = tmp_path / "p.csv"
    main(["gen", "20", str(pts)])
    assert main(["tour", str(pts), str(tmp_path / "t.json")]) == 3
    err = capsys.readouterr().err
    assert "forced" in err and '"case_taken": null' in err


def test_verify_failures(tmp_path, capsys):
    pts = write_csv(tmp_path / "line.csv", [(i, 0) for i in range(4)])
    order = tmp_path / "o.txt"
    order.write_text("0 1 2 3\n")
    assert main(["verify", pts, str(order), "-k", "0"]) == 1
    assert "obtuse vertex 1" in capsys.readouterr().out
    order.write_text("0 1 1 3\n")
    assert main(["verify", pts, str(order), "-k", "0"]) == 1
    order.write_text("0 1 2\n")
    assert main(["verify", pts, str(order), "-k", "0"]) == 1


def test_oracle_outputs(tmp_path, capsys):
    tri = write_csv(tmp_path / "tri.csv", TRIANGLE_CENTER)
    assert main(["oracle", tri, "-k", "0"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "2.0944"
    sq = write_csv(tmp_path / "sq.csv", SQUARE)
    assert main(["oracle", sq, "-k", "0"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "0.7854"
    big = write_csv(tmp_path / "big.csv", [(i, i * i) for i in range(13)])
    assert main(["oracle", big, "-k", "0"]) == 2


def test_gen(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["gen", "20", str(a), "--seed", "7"]) == 0
    assert main(["gen", "20", str(b), "--seed", "7"]) == 0
    assert a.read_bytes() == b.read_bytes()
    line = tmp_path / "line.csv"
    assert main(["gen", "20", str(line), "-d", "collinear"]) == 0
    pts = io.read_points(line)
    assert len(pts) == 20
    (x0, y0), (x1, y1) = pts[0], pts[1]
    assert all((x1 - x0) * (y - y0) == (y1 - y0) * (x - x0) for x, y in pts)
    assert main(["gen", "0", str(a)]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["gen", "20", str(a), "-d", "spiral"])
    assert exc.value.code == 1


def test_gen_million_rows(tmp_path):
    out = tmp_path / "m.csv"
    assert main(["gen", "1000000", str(out), "--seed", "1"]) == 0
    with open(out) as fh:
        rows = sum(1 for line in fh if not line.startswith("#"))
    assert rows == 10**6


def test_bench(tmp_path, capsys):
    assert main(["bench"]) == 1
    assert main(["bench", "40", "--repeats", "1"]) == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert rows[0] == "n,t_partition,t_construct" and len(rows) == 2
    assert rows[1].startswith("40,")
    out = tmp_path / "b.csv"
    assert main(["bench", "20", "24", "--repeats", "2", "-o", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 3
    assert main(["bench", "16", "--repeats", "1"]) == 2


def test_round_trip_across_distributions(tmp_path):
    for run in range(100):
        dist = DISTRIBUTIONS[run % len(DISTRIBUTIONS)]
        n = 20 + 2 * (run % 17)
        pts, out = tmp_path / f"p{run}.csv", tmp_path / f"t{run}.json"
        assert main(["gen", str(n), str(pts), "-d", dist, "--seed", str(run)]) == 0
        assert main(["tour", str(pts), str(out)]) == 0
        assert main(["verify", str(pts), str(out)]) == 0


def test_console_entry_point(tmp_path):
    pts = tmp_path / "p.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "acutetour.cli", "gen", "20", str(pts)], capture_output=True
    )
    assert proc.returncode == 0 and pts.exists()
