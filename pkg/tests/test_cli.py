import json

import pytest

from latcorr import cli

from conftest import DATA_DIR


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "json")
    assert err == ""
    return code, json.loads(out)


def test_lattice_info(capsys):
    code, payload = run_json(capsys, "lattice", "info",
                             str(DATA_DIR / "nine.json"))
    assert code == 0
    assert payload["rank"] == 1
    assert payload["disc"] == 9
    assert payload["orders"] == [9]
    assert payload["pairing"] == [["8/9"]]
    assert payload["definite"] == "positive"


def test_lattice_info_text(capsys):
    code, out, err = run_cli(capsys, "lattice", "info",
                             str(DATA_DIR / "nine.json"))
    assert code == 0
    assert "disc: 9" in out
    assert err == ""


def test_lattice_metabolizers(capsys):
    code, payload = run_json(capsys, "lattice", "metabolizers",
                             str(DATA_DIR / "nine.json"))
    assert code == 0
    mets = payload["metabolizers"]
    assert len(mets) == 1
    assert mets[0]["elements"] == [[0], [3], [6]]


def test_lattice_dset(capsys):
    code, payload = run_json(capsys, "lattice", "dset",
                             str(DATA_DIR / "nine.json"))
    assert code == 0
    assert payload["contains_zero"]
    assert payload["entries"][0]["d"] == "0"
    assert payload["entries"][0]["min_char_square"] == 1


def test_embed_check_exit_codes(capsys):
    code, payload = run_json(capsys, "lattice", "embed-check",
                             str(DATA_DIR / "nine.json"))
    assert code == 0
    assert payload["embeds"]
    code, payload = run_json(capsys, "lattice", "embed-check",
                             str(DATA_DIR / "neg_one_a8.json"))
    assert code == 2
    assert not payload["embeds"]
    assert payload["orientation"] == "negated"
    assert [e["d"] for e in payload["entries"]] == ["-2"]


def test_embed_check_with_oracle(capsys):
    # [[4]] embeds in Z as the sublattice 2Z
    code, payload = run_json(capsys, "lattice", "embed-check",
                             str(DATA_DIR / "four.json"), "--oracle")
    assert code == 0
    assert any("brute_embed agrees" in n for n in payload["notes"])
    assert any("metabolizers agree" in n for n in payload["notes"])


def test_dinv_requires_unimodular(capsys):
    code, out, err = run_cli(capsys, "lattice", "dinv",
                             str(DATA_DIR / "nine.json"))
    assert code == 1
    assert err.startswith("error: InputError:")


def test_topo_linking_form(capsys):
    code, payload = run_json(capsys, "topo", "linking-form",
                             str(DATA_DIR / "four.json"))
    assert code == 0
    assert payload["orders"] == [4]
    assert payload["pairing"] == [["3/4"]]


def test_topo_rb_obstruction(capsys):
    code, payload = run_json(capsys, "topo", "rb-obstruction",
                             "--dtable", str(DATA_DIR / "s39_t23.json"))
    assert code == 2
    assert payload["verdict"] == "obstructed"
    vals = [v["value"] for v in payload["evidence"][0]["d_values"]]
    assert vals == ["2", "0", "0"]


def test_topo_rb_even_inconclusive(capsys):
    code, payload = run_json(capsys, "topo", "rb-obstruction",
                             "--dtable", str(DATA_DIR / "l41.json"))
    assert code == 3
    assert payload["verdict"] == "inconclusive"
    assert "caveat" in payload


def test_topo_filling_obstruction(capsys):
    code, payload = run_json(capsys, "topo", "filling-obstruction",
                             "--dtable", str(DATA_DIR / "z_example.json"))
    assert code == 2
    assert payload["verdict"] == "obstructed"


def test_topo_chain(capsys):
    code, payload = run_json(capsys, "topo", "chain",
                             "--filling", str(DATA_DIR / "nine.json"),
                             "--dtable", str(DATA_DIR / "s39_t23.json"))
    assert code == 0
    assert payload["verdict"] == "unobstructed"
    rec = payload["evidence"][0]
    assert rec["d_overlattice"] == "0"
    assert rec["constrained_min"] == "0"
    assert rec["table_min"] == "0"
    assert rec["chain_holds"]


def test_topo_chain_threads_deterministic(capsys):
    args = ("topo", "chain",
            "--filling", str(DATA_DIR / "nine.json"),
            "--dtable", str(DATA_DIR / "s39_t23.json"))
    _, p1 = run_json(capsys, *args, "--threads", "1")
    _, p2 = run_json(capsys, *args, "--threads", "4")
    assert p1 == p2


def test_error_line_format(capsys):
    code, out, err = run_cli(capsys, "lattice", "info", "/no/such/file.json")
    assert code == 1
    assert out == ""
    assert err.startswith("error: InputError: ")
    assert err.count("\n") == 1


def test_bad_flag_values(capsys):
    code, _, err = run_cli(capsys, "lattice", "info",
                           str(DATA_DIR / "nine.json"), "--max-group", "0")
    assert code == 1
    assert "max-group" in err
    code, _, err = run_cli(capsys, "lattice", "info",
                           str(DATA_DIR / "nine.json"), "--threads", "-1")
    assert code == 1
    assert "threads" in err


def test_unknown_command(capsys):
    code, _, err = run_cli(capsys, "lattice", "frobnicate", "x.json")
    assert code == 1
    assert err.startswith("error: LatcorrError:")


def test_json_output_is_deterministic(capsys):
    args = ("lattice", "dset", str(DATA_DIR / "neg_one_a8.json"))
    _, p1 = run_json(capsys, *args)
    _, p2 = run_json(capsys, *args)
    assert p1 == p2
