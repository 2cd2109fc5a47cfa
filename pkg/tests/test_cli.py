import io
import json

import pytest

from parabolic import cli
from parabolic.cli import parse_document, run
from parabolic.oracle import VerificationReport

CHI_DOC = {
    "curve": {
        "genus": 2,
        "points": [{"degree": 1, "ramification": 3, "weights": [2, 1, 1, 0]}],
    },
    "bundle": {"rank": 2, "degree": 1},
}

ED_DOC = {
    "curve": {
        "genus": 2,
        "points": [{"degree": 1, "ramification": 2, "weights": [12, 12, 0]}],
    },
    "bundle": {"rank": 12, "degree": 24},
}


@pytest.fixture()
def chi_path(tmp_path):
    path = tmp_path / "bundle.json"
    path.write_text(json.dumps(CHI_DOC))
    return str(path)


@pytest.fixture()
def ed_path(tmp_path):
    path = tmp_path / "big.json"
    path.write_text(json.dumps(ED_DOC))
    return str(path)


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_chi_documented_example(chi_path):
    code, out, err = invoke(["chi", "-i", chi_path])
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["chi"] == "-1"
    assert payload["stacky_degree"] == "5/3"
    assert payload["classical_part"] == "-1/3"
    assert payload["corrections"] == [["0", "2/3"]]


def test_ed_bound_documented_example(ed_path):
    code, out, _ = invoke(["ed-bound", "-i", ed_path])
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == 150
    assert payload["h"] == 12
    assert payload["conjectural"] is True


def test_ed_p_triple(ed_path):
    for prime, total in ((2, 148), (3, 147), (5, 145)):
        code, out, _ = invoke(["ed-p", "-i", ed_path, "--prime", str(prime)])
        assert code == 0
        payload = json.loads(out)
        assert payload["total"] == total
        assert payload["prime"] == prime
        assert payload["conjectural"] is False


def test_outputs_are_byte_stable(chi_path, ed_path):
    for argv in (
        ["chi", "-i", chi_path],
        ["ed-bound", "-i", ed_path],
        ["verify", "--e-max", "6", "--random", "10", "--seed", "5"],
    ):
        first = invoke(argv)
        second = invoke(argv)
        assert first == second
        assert first[0] == 0


def test_end_chi_and_hom_datum_agree(chi_path, tmp_path):
    code, out, _ = invoke(["end-chi", "-i", chi_path])
    assert code == 0
    assert json.loads(out) == {"end_chi": "-5"}

    code, out, _ = invoke(["hom-datum", "-i", chi_path])
    assert code == 0
    end_doc = json.loads(out)
    assert end_doc["bundle"] == {"rank": 4, "degree": -1}
    assert end_doc["curve"]["points"][0]["weights"] == [4, 2, 1, 0]
    # round-trip: the emitted document re-parses under the input schema,
    # and chi of the endomorphism document equals end-chi of the original
    bundle, pieces = parse_document(end_doc)
    assert pieces is None
    path = tmp_path / "end.json"
    path.write_text(json.dumps(end_doc))
    code, out, _ = invoke(["chi", "-i", str(path)])
    assert code == 0
    assert json.loads(out)["chi"] == "-5"


def test_stacky_degree_and_index(chi_path, ed_path):
    code, out, _ = invoke(["stacky-degree", "-i", chi_path])
    assert code == 0 and json.loads(out) == {"stacky_degree": "5/3"}
    code, out, _ = invoke(["index", "-i", ed_path])
    assert code == 0 and json.loads(out) == {"h": 12}


def test_flag_dim(chi_path):
    code, out, _ = invoke(["flag-dim", "-i", chi_path])
    assert code == 0
    assert json.loads(out) == {"per_point": [1], "flag_total": 1}


def test_nil_dim_defaults_to_single_piece(chi_path):
    code, out, _ = invoke(["nil-dim", "-i", chi_path])
    assert code == 0
    assert json.loads(out) == {"nil_dimension": 5}


def test_nil_dim_with_pieces(tmp_path):
    doc = dict(CHI_DOC)
    doc["pieces"] = [
        {"rank": 1, "weights_per_point": [[1, 1, 0, 0]]},
        {"rank": 1, "weights_per_point": [[1, 0, 0, 0]]},
    ]
    path = tmp_path / "pieces.json"
    path.write_text(json.dumps(doc))
    code, out, _ = invoke(["nil-dim", "-i", str(path)])
    assert code == 0
    # (g-1)(1+1) + flag dims of rank-one data (all zero)
    assert json.loads(out) == {"nil_dimension": 2}


def test_trdeg_bound_modes(chi_path):
    code, out, _ = invoke(["trdeg-bound", "-i", chi_path])
    assert code == 0
    assert json.loads(out) == {"trdeg_bound": 6, "mode": "indecomposable"}
    code, out, _ = invoke(["trdeg-bound", "-i", chi_path, "--nonsimple"])
    assert code == 0
    assert json.loads(out) == {"trdeg_bound": 5, "mode": "nonsimple"}


def test_gerbe_ed_commands():
    code, out, _ = invoke(["gerbe-ed", "12"])
    assert code == 0 and json.loads(out) == {"n": 12, "ed_upper": 5}
    code, out, _ = invoke(["gerbe-ed-p", "12", "--prime", "2"])
    assert code == 0 and json.loads(out) == {"n": 12, "prime": 2, "ed_p": 3}
    code, _, err = invoke(["gerbe-ed-p", "12", "--prime", "6"])
    assert code == 2 and "prime" in err


def test_verify_small_passes():
    code, out, _ = invoke(["verify", "--e-max", "4", "--random", "5"])
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert [r["name"] for r in payload["reports"]][0] == "cyclotomic-identities"
    assert all(r["pass"] for r in payload["reports"])


def test_verify_failure_exits_3(monkeypatch):
    broken = VerificationReport("demo", "n/a")
    broken.check("bad", 1, 2)
    monkeypatch.setattr(cli, "run_all", lambda **kw: [broken])
    code, out, _ = invoke(["verify"])
    assert code == 3
    assert json.loads(out)["pass"] is False


def test_text_format_flag_and_env(chi_path, monkeypatch):
    code, out, _ = invoke(["chi", "-i", chi_path, "--format", "text"])
    assert code == 0
    assert "chi: -1" in out
    # the environment variable overrides the flag
    monkeypatch.setenv("PARAB_FORMAT", "text")
    code, out2, _ = invoke(["chi", "-i", chi_path, "--format", "json"])
    assert code == 0 and out2 == out
    monkeypatch.setenv("PARAB_FORMAT", "bogus")
    code, _, err = invoke(["chi", "-i", chi_path])
    assert code == 2 and "PARAB_FORMAT" in err


def test_input_error_paths(tmp_path, chi_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{bad json")
    code, _, err = invoke(["chi", "-i", str(bad)])
    assert code == 2
    assert "line 1" in err and "column" in err

    code, _, _ = invoke(["chi", "-i", str(tmp_path / "missing.json")])
    assert code == 2

    code, _, _ = invoke(["not-a-command"])
    assert code == 2

    schema = tmp_path / "schema.json"
    schema.write_text(json.dumps({"curve": {"genus": 2}}))
    code, _, err = invoke(["chi", "-i", str(schema)])
    assert code == 2 and "bundle" in err

    weights = tmp_path / "weights.json"
    doc = json.loads(json.dumps(CHI_DOC))
    doc["curve"]["points"][0]["weights"] = [2, 3, 0]
    weights.write_text(json.dumps(doc))
    code, _, err = invoke(["chi", "-i", str(weights)])
    assert code == 2 and "nonincreasing" in err


def test_hypothesis_violation_exits_1(tmp_path):
    doc = json.loads(json.dumps(CHI_DOC))
    doc["curve"]["genus"] = 1
    path = tmp_path / "g1.json"
    path.write_text(json.dumps(doc))
    code, _, err = invoke(["ed-bound", "-i", str(path)])
    assert code == 1 and "genus" in err
    code, _, _ = invoke(["trdeg-bound", "-i", str(path), "--nonsimple"])
    assert code == 1
    # chi itself stays unguarded at low genus
    code, _, _ = invoke(["chi", "-i", str(path)])
    assert code == 0


def test_stdin_input(chi_path, monkeypatch):
    import sys

    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(CHI_DOC)))
    code, out, _ = invoke(["chi", "-i", "-"])
    assert code == 0
    assert json.loads(out)["chi"] == "-1"
