import json
import math
import xml.etree.ElementTree as ET

import pytest

from bnmatch.cli import main
from bnmatch.formats import (
    fmt17,
    instance_to_csv,
    instance_to_json,
    matching_to_json,
    parse_instance,
    parse_matching,
)
from conftest import SKEW4_COORDS, SQ4_COORDS


def write(path, text):
    path.write_text(text)
    return str(path)


@pytest.fixture
def sq4_file(tmp_path):
    return write(tmp_path / "sq4.json", instance_to_json(SQ4_COORDS))


class TestFormats:
    def test_float_round_trip(self):
        vals = [1 / 3, math.pi, 1e-17, 123456.75, 2.0 ** -1074]
        for v in vals:
            assert float(fmt17(v)) == v

    def test_instance_json_round_trip(self):
        pts = [(1 / 3, -2 / 7), (0.1, 0.2), (-5.5, 1e-12)]
        assert parse_instance(instance_to_json(pts)) == pts

    def test_instance_csv_round_trip(self):
        pts = [(1 / 3, -2 / 7), (0.1, 0.2)]
        assert parse_instance(instance_to_csv(pts)) == pts

    def test_matching_json_keys_stable(self):
        text = matching_to_json(4, 1.0, [(0, 1), (2, 3)], "one-cascade", 0, 7)
        assert list(json.loads(text)) == [
            "n", "value", "pairs", "structure", "cascades", "candidates",
        ]
        md = parse_matching(text)
        assert md["pairs"] == [(0, 1), (2, 3)]

    def test_matching_null_candidates(self):
        md = parse_matching(matching_to_json(4, 1.0, [(0, 1)], "one-cascade", 0, None))
        assert md["candidates"] is None

    def test_parse_errors(self):
        from bnmatch.formats import ParseError

        for bad in ("", "{", '{"pts": []}', "1,2,3\n", "x;y\n"):
            with pytest.raises(ParseError):
                parse_instance(bad)
        with pytest.raises(ParseError):
            parse_matching("[]")
        with pytest.raises(ParseError):
            parse_matching('{"n": 4}')


class TestSolveCommand:
    def test_sq4(self, sq4_file, tmp_path, capsys):
        out = tmp_path / "m.json"
        assert main(["solve", sq4_file, "--output", str(out)]) == 0
        md = parse_matching(out.read_text())
        assert md["n"] == 4 and md["value"] == 1.0
        assert md["structure"] == "one-cascade"

    def test_skew4_to_stdout(self, tmp_path, capsys):
        inst = write(tmp_path / "skew.json", instance_to_json(SKEW4_COORDS))
        assert main(["solve", inst]) == 0
        md = parse_matching(capsys.readouterr().out)
        assert md["value"] == pytest.approx(2 * math.cos(math.radians(10)), rel=1e-12)

    def test_odd_count_exits_3(self, tmp_path, capsys):
        inst = write(tmp_path / "odd.csv", "0,0\n1,0\n0,1\n")
        assert main(["solve", inst]) == 3
        assert "OddCount" in capsys.readouterr().err

    def test_nonconvex_exits_3(self, tmp_path, capsys):
        inst = write(tmp_path / "bad.csv", "0,0\n1,0\n2,0\n0,1\n")
        assert main(["solve", inst]) == 3
        assert "NotStrictlyConvex" in capsys.readouterr().err

    def test_garbage_exits_2(self, tmp_path, capsys):
        inst = write(tmp_path / "junk.json", "{nope")
        assert main(["solve", inst]) == 2

    def test_missing_file_exits_2(self, capsys):
        assert main(["solve", "/definitely/not/here.json"]) == 2

    def test_sort_ccw(self, tmp_path):
        shuffled = [SQ4_COORDS[2], SQ4_COORDS[0], SQ4_COORDS[3], SQ4_COORDS[1]]
        inst = write(tmp_path / "sh.json", instance_to_json(shuffled))
        assert main(["solve", inst, "--sort-ccw", "--output", str(tmp_path / "o.json")]) == 0


class TestBaselineAndOracle:
    def test_baseline(self, sq4_file, capsys):
        assert main(["baseline", sq4_file]) == 0
        md = parse_matching(capsys.readouterr().out)
        assert md["value"] == 1.0 and md["candidates"] is None

    def test_oracle(self, sq4_file, capsys):
        assert main(["oracle", sq4_file]) == 0
        assert parse_matching(capsys.readouterr().out)["value"] == 1.0

    def test_oracle_size_guard_exits_4(self, tmp_path, capsys):
        pts = [
            (math.cos(2 * math.pi * k / 22), math.sin(2 * math.pi * k / 22))
            for k in range(22)
        ]
        inst = write(tmp_path / "big.json", instance_to_json(pts))
        assert main(["oracle", inst]) == 4
        assert "TooLarge" in capsys.readouterr().err


class TestVerifyCommand:
    def test_ok(self, sq4_file, tmp_path, capsys):
        m = write(
            tmp_path / "m.json",
            matching_to_json(4, 1.0, [(0, 1), (2, 3)], "one-cascade", 0, 0),
        )
        assert main(["verify", sq4_file, m]) == 0
        assert capsys.readouterr().out.startswith("OK")

    def test_crossing_fails(self, sq4_file, tmp_path, capsys):
        m = write(
            tmp_path / "m.json",
            matching_to_json(4, math.sqrt(2), [(0, 2), (1, 3)], "one-cascade", 0, 0),
        )
        assert main(["verify", sq4_file, m]) == 1
        assert "nonCrossing" in capsys.readouterr().out

    def test_tampered_value_fails(self, sq4_file, tmp_path, capsys):
        m = write(
            tmp_path / "m.json",
            matching_to_json(4, 1.25, [(0, 1), (2, 3)], "one-cascade", 0, 0),
        )
        assert main(["verify", sq4_file, m]) == 1
        assert "value" in capsys.readouterr().out

    def test_imperfect_fails(self, sq4_file, tmp_path, capsys):
        m = write(
            tmp_path / "m.json",
            matching_to_json(4, 1.0, [(0, 1), (1, 2)], "one-cascade", 0, 0),
        )
        assert main(["verify", sq4_file, m]) == 1
        assert "perfect" in capsys.readouterr().out

    def test_n_mismatch_fails(self, sq4_file, tmp_path, capsys):
        m = write(
            tmp_path / "m.json",
            matching_to_json(6, 1.0, [(0, 1), (2, 3), (4, 5)], "one-cascade", 0, 0),
        )
        assert main(["verify", sq4_file, m]) == 1
        assert "n" in capsys.readouterr().out


class TestGenCommand:
    def test_json_output_deterministic(self, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        for path in (a, b):
            assert main([
                "gen", "--n", "10", "--mode", "valtr", "--seed", "5",
                "--output", str(path),
            ]) == 0
        assert a.read_text() == b.read_text()

    def test_csv_output(self, tmp_path, capsys):
        assert main(["gen", "--n", "6", "--format", "csv", "--seed", "2"]) == 0
        pts = parse_instance(capsys.readouterr().out)
        assert len(pts) == 6

    def test_round_trip_exact(self, tmp_path, capsys):
        from bnmatch import gen_circle

        assert main(["gen", "--n", "8", "--seed", "3"]) == 0
        pts = parse_instance(capsys.readouterr().out)
        assert pts == gen_circle(8, 3).coords()


class TestRenderCommand:
    def test_svg_structure(self, sq4_file, tmp_path):
        m = write(
            tmp_path / "m.json",
            matching_to_json(4, 1.0, [(0, 1), (2, 3)], "one-cascade", 0, 0),
        )
        out = tmp_path / "out.svg"
        assert main(["render", sq4_file, m, "--out", str(out)]) == 0
        root = ET.fromstring(out.read_text())
        ns = "{http://www.w3.org/2000/svg}"
        assert len(root.findall(f"{ns}circle")) == 4
        assert len(root.findall(f"{ns}line")) == 2
        assert len(root.findall(f"{ns}polygon")) == 1
        texts = root.findall(f"{ns}text")
        assert len(texts) == 1 and texts[0].text == "1"

    def test_empty_matching_exits_2(self, sq4_file, tmp_path, capsys):
        m = write(tmp_path / "m.json", "")
        assert main(["render", sq4_file, m, "--out", str(tmp_path / "o.svg")]) == 2

    def test_no_pairs_exits_2(self, sq4_file, tmp_path):
        m = write(tmp_path / "m.json", '{"n": 4, "value": 0.0, "pairs": []}')
        assert main(["render", sq4_file, m, "--out", str(tmp_path / "o.svg")]) == 2


class TestBenchCommand:
    def test_rows_and_slope(self, capsys):
        assert main([
            "bench", "--sizes", "8,16", "--reps", "2", "--seed", "1",
        ]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "n,rep,seed,elapsed_ns,value"
        assert len(lines) == 1 + 4 + 1
        assert lines[-1].startswith("# slope ")
        n, rep, seed, ns, value = lines[1].split(",")
        assert (n, rep, seed) == ("8", "0", "1") and int(ns) > 0
        float(value)

    def test_single_size_no_slope(self, capsys):
        assert main(["bench", "--sizes", "8", "--reps", "1", "--algo", "cubic"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2
        assert not lines[-1].startswith("#")

    def test_odd_size_rejected(self, capsys):
        assert main(["bench", "--sizes", "7"]) == 3


class TestRoundTrip:
    @pytest.mark.parametrize("mode", ["circle", "valtr", "cluster3"])
    def test_gen_solve_verify(self, mode, tmp_path):
        inst = tmp_path / "i.json"
        m = tmp_path / "m.json"
        for n in (8, 12):
            for seed in (0, 1):
                assert main([
                    "gen", "--n", str(n), "--mode", mode, "--seed", str(seed),
                    "--output", str(inst),
                ]) == 0
                assert main(["solve", str(inst), "--output", str(m)]) == 0
                assert main(["verify", str(inst), str(m)]) == 0

    def test_baseline_output_verifies(self, tmp_path):
        inst = tmp_path / "i.json"
        m = tmp_path / "m.json"
        assert main(["gen", "--n", "10", "--seed", "4", "--output", str(inst)]) == 0
        assert main(["baseline", str(inst), "--output", str(m)]) == 0
        assert main(["verify", str(inst), str(m)]) == 0


def test_console_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "bnmatch.cli", "gen", "--n", "4", "--seed", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert '"points"' in proc.stdout
