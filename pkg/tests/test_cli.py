import subprocess
import sys

import pytest

from cauchy_mds.cli import EXIT_DATA, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main


def encode(tmp_path, src, p, k, r):
    out = tmp_path / "shards"
    assert main(["encode", "--p", str(p), "--k", str(k), "--r", str(r), "--out", str(out), str(src)]) == EXIT_OK
    return sorted(out.glob("*.cmds"))


def test_round_trip_with_losses(tmp_path, rng, capsys):
    src = tmp_path / "in.dat"
    src.write_bytes(rng.bytes(4096))
    shards = encode(tmp_path, src, 11, 4, 3)
    assert len(shards) == 7
    assert capsys.readouterr().out.split() == [str(s) for s in shards]
    for s in shards[1:6:2]:
        s.unlink()
    out = tmp_path / "out.dat"
    assert main(["decode", "--out", str(out), *map(str, shards[0:6:2]), str(shards[6])]) == EXIT_OK
    assert out.read_bytes() == src.read_bytes()


def test_too_many_losses_is_a_data_error(tmp_path, capsys):
    src = tmp_path / "in.dat"
    src.write_bytes(b"abc")
    shards = encode(tmp_path, src, 5, 2, 2)
    assert main(["decode", "--out", str(tmp_path / "o"), str(shards[0])]) == EXIT_DATA
    assert "at least k" in capsys.readouterr().err


def test_missing_input_is_a_data_error(tmp_path):
    assert main(["encode", "--p", "5", "--k", "2", "--r", "2", "--out", str(tmp_path), str(tmp_path / "nope")]) == EXIT_DATA


def test_bad_magic_is_a_data_error(tmp_path):
    src = tmp_path / "in.dat"
    src.write_bytes(b"abc")
    shards = encode(tmp_path, src, 5, 2, 2)
    shards[0].write_bytes(b"JUNK" + shards[0].read_bytes()[4:])
    assert main(["decode", "--out", str(tmp_path / "o"), *map(str, shards)]) == EXIT_DATA
    assert not (tmp_path / "o").exists()


def test_mds_check(capsys):
    assert main(["mds-check", "5", "2", "2"]) == EXIT_OK
    assert "MDS" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [["mds-check", "4", "2", "2"], ["mds-check", "5", "3", "3"], ["frobnicate"], []])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as info:
        assert main(argv) == EXIT_USAGE
        raise SystemExit(EXIT_USAGE)
    assert info.value.code == EXIT_USAGE


def test_verification_failure(monkeypatch):
    import cauchy_mds.cli as cli

    monkeypatch.setattr(cli, "mds_check", lambda params: False)
    assert main(["mds-check", "5", "2", "2"]) == EXIT_VERIFY


def test_complexity_csv(tmp_path):
    out = tmp_path / "r4.csv"
    assert main(["complexity", "--r", "4", "--p-max", "31", "--csv", str(out)]) == EXIT_OK
    lines = out.read_bytes().split(b"\n")
    assert lines[0].startswith(b"p,k,r,mode,")
    assert all(line.endswith(b",true") for line in lines[1:] if line)


def test_complexity_bad_r():
    assert main(["complexity", "--r", "0", "--csv", "-"]) == EXIT_USAGE


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "cauchy_mds", "mds-check", "7", "3", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and "MDS" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "cauchy_mds", "mds-check", "9", "3", "4"], capture_output=True, text=True)
    assert proc.returncode == 1


def test_ten_mib_round_trip(tmp_path, rng):
    src = tmp_path / "big.bin"
    src.write_bytes(rng.bytes(10 * 1024 * 1024))
    shards = encode(tmp_path, src, 11, 4, 3)
    out = tmp_path / "big.out"
    assert main(["decode", "--out", str(out), *map(str, shards[3:])]) == EXIT_OK
    assert out.read_bytes() == src.read_bytes()
