import json

import pytest

from polyops.cli import main
from polyops.presentations import presentation_from_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "TDendr", "2", "5")
    assert code == 0
    assert out.strip() == "1, 5, 31, 215, 1597"


def test_dims_json(capsys):
    code, out, _ = run(capsys, "dims", "Dendr", "2", "4", "--json")
    assert code == 0
    assert json.loads(out) == {"family": "Dendr", "gamma": 2, "dims": [1, 4, 20, 112]}


def test_series_matches_dims(capsys):
    code, out, _ = run(capsys, "series", "DAs", "3", "5")
    assert code == 0
    assert out.strip() == "1, 3, 15, 93, 645"


def test_series_check_dual(capsys):
    code, out, _ = run(capsys, "series", "--check-dual", "Dendr", "Dias", "2", "8")
    assert code == 0 and out.strip() == "PASS"
    code, out, _ = run(capsys, "series", "--check-dual", "Dendr", "Dendr", "2", "8")
    assert code == 1 and out.strip() == "FAIL"


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "As", "2", "star_2(star_1(.,.),.)")
    assert code == 0
    assert out.strip() == "star_2(.,star_2(.,.))"


def test_nf_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "nf", "As", "2", "star_9(.,.)")
    assert code == 2
    assert "star_9" in err


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["dims"])
    assert exc.value.code == 2


def test_unknown_family_exits_2(capsys):
    code, _, err = run(capsys, "dims", "Nope", "2", "5")
    assert code == 2 and "Nope" in err


def test_dual_json_round_trips(capsys):
    code, out, _ = run(capsys, "dual", "as", "2", "--json")
    assert code == 0
    pres = presentation_from_json(json.loads(out))
    assert pres.signature.names() == ["star_1'", "star_2'"]
    assert len(pres.relations) == 2


def test_compose_subcommands(capsys):
    code, out, _ = run(capsys, "compose", "corolla", "3", "2", "1", "2", "1")
    assert code == 0 and out.strip() == "arity=4 label=2"
    code, out, _ = run(
        capsys, "compose", "schroder", "2(1(.,2(.,.)),.,3(.,.,1(.,.)))", "5", "3(2(.,.),.)"
    )
    assert code == 0
    assert out.strip() == "2(1(.,2(.,.)),.,3(2(.,.),.,.,1(.,.)))"
    code, out, _ = run(capsys, "compose", "syntax", "as", "2", "star_1(.,.)", "2", "star_2(.,.)")
    assert code == 0 and out.strip() == "star_1(.,star_2(.,.))"


def test_product(capsys):
    code, out, _ = run(capsys, "product", "under", "2", "(.,.)", "(.,.)")
    assert code == 0 and out.strip() == "(.,(.,.))[inf,2]"
    code, out, _ = run(capsys, "product", "prec", "1", ".", "(.,.)")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "product", "prec", "2", "(.,.)", "(.,.)", "--json")
    assert code == 0
    assert json.loads(out) == [{"coeff": "1", "tree": "(.,(.,.))[inf,2]"}]


def test_product_undefined_exits_2(capsys):
    code, _, err = run(capsys, "product", "prec", "1", ".", ".")
    assert code == 2


def test_assoc_check(capsys):
    code, out, _ = run(capsys, "assoc", "check", "dendr-std", "2", "prec_2+succ_2")
    assert code == 0 and out.strip() == "associative"
    code, out, _ = run(capsys, "assoc", "check", "dendr-std", "2", "prec_1")
    assert code == 1 and out.strip() == "not associative"


def test_assoc_classify(capsys):
    code, out, _ = run(capsys, "assoc", "classify", "dup", "1", "--prime", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert set(lines[:-1]) == {"ul_1", "ur_1"}
    assert lines[-1].startswith("2 projective solution")


def test_butterfly_verify(capsys):
    code, out, _ = run(capsys, "butterfly", "verify", "2")
    assert code == 0
    assert out.count("PASS") == 2


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "hilbert-series")
    assert code == 0
    assert "PASS hilbert-series" in out
    assert out.strip().endswith("overall: PASS")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "butterfly", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["overall"] == "PASS"
    assert data["checks"][0]["id"] == "butterfly"


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 2 and "nonsense" in err


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "--dot", "evtree", "((.,.),.)[1,inf]")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "export", "syntax", "as", "1", "star_1(.,.)")
    assert code == 0 and "shape=circle" in out
    code, out, _ = run(capsys, "export", "schroder", "2(.,.)")
    assert code == 0 and "digraph" in out


def test_output_is_deterministic(capsys):
    one = run(capsys, "assoc", "classify", "dendr-std", "2", "--prime", "7")
    two = run(capsys, "assoc", "classify", "dendr-std", "2", "--prime", "7")
    assert one == two
