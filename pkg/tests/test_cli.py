"""Command line front end: outputs, exit codes, JSON round trips."""

import json

from hbcells.cli import main
from hbcells.hilbert_burch import CellMatrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims_worked_example(capsys):
    code, out, _ = run(capsys, "dims", "--m", "0,3,3,5")
    assert code == 0
    assert out.strip() == "V0=16 V1=11 V2=8 V3=4"


def test_dims_accepts_d_vector(capsys):
    code, out, _ = run(capsys, "dims", "--d", "3,0,2")
    assert out.strip() == "V0=16 V1=11 V2=8 V3=4"


def test_canonicalize_example(capsys):
    code, out, _ = run(capsys, "canonicalize", "x-3, y-2")
    assert code == 0
    assert out.strip() == "m=[0,1]; N=[[-2],[3]]"


def test_gdim_example(capsys):
    code, out, _ = run(capsys, "gdim", "--h", "1,2,1")
    assert code == 0
    assert out.strip() == "bella=2 brutta=2 agree=true"


def test_kinds(capsys):
    code, out, _ = run(capsys, "kinds", "x-y, y^2")
    assert code == 0 and out.strip() == "V0 V1 V2 V3"


def test_frame_text_and_json(capsys):
    code, out, _ = run(capsys, "frame", "--m", "0,3,3,5")
    assert code == 0 and "S: (2,1) (3,1) (4,1) (4,3)" in out
    code, out, _ = run(capsys, "frame", "--m", "0,3,3,5", "--format", "json")
    data = json.loads(out)
    assert data["U"] == [[3, 2, 3], [1, 0, 1], [2, 1, 2], [1, 0, 1]]
    assert data["S"] == [[2, 1], [3, 1], [4, 1], [4, 3]]


def test_minors_random_then_canonicalize_round_trip(capsys):
    code, out, _ = run(capsys, "minors", "--m", "0,2,3", "--kind", "V0", "--seed", "5",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    gens = ", ".join(data["generators"])
    code, out, _ = run(capsys, "canonicalize", gens, "--format", "json")
    assert code == 0
    back = json.loads(out)
    assert back["m"] == [0, 2, 3] and back["N"] == data["N"]


def test_cell_json_input_accepted(capsys):
    code, out, _ = run(capsys, "canonicalize", "x-3, y-2", "--format", "json")
    cell = out.strip()
    code, out, _ = run(capsys, "minors", "--m", "0,1", "--cell", cell)
    assert code == 0
    assert sorted(out.strip().splitlines()) == ["x - 3", "y - 2"]
    # round trip through the documented schema
    assert CellMatrix.from_json(json.loads(cell)).to_json() == json.loads(cell)


def test_betti_and_stratum(capsys):
    code, out, _ = run(capsys, "betti", "--m", "0,1,3,4,4,5,7", "--p", "zero")
    assert code == 0 and "j=7: beta0=2 beta1=2" in out
    code, out, _ = run(capsys, "betti", "--m", "0,1,3,4,4,5,7", "--p", "generic")
    assert "j=7" not in out
    code, out, _ = run(capsys, "stratum", "--m", "0,1,3,4,4,5,7", "--j", "7", "--u", "1",
                       "--format", "json")
    data = json.loads(out)
    assert data["rows"] == [3, 4, 7] and data["cols"] == [1, 4, 5]
    assert data["rank_bound"] == 1 and data["conditions"] == ["p1*p7"]
    assert data["entries"] == [["p", 1], ["zero"], ["zero"],
                               ["p", 2], ["one"], ["zero"],
                               ["p", 3], ["zero"], ["p", 7]]


def test_betti_incomplete_assignment_is_usage_error(capsys):
    code, _, err = run(capsys, "betti", "--m", "0,1,3,4,4,5,7", "--p", "p1=1")
    assert code == 2 and "missing" in err


def test_generic_subcommand(capsys):
    code, out, _ = run(capsys, "generic", "--gens", "x4^2, x2*x4, x2^2, x1*x4",
                       "--n", "4", "--format", "json")
    data = json.loads(out)
    assert data["initial"] == 8 and len(data["eliminated"]) == 3
    assert len(data["residual"]) == 2 and data["affine_space"] is False


def test_census_subcommand(capsys):
    code, out, _ = run(capsys, "census", "--d", "2", "--q", "2", "--brute-force",
                       "--format", "json")
    data = json.loads(out)
    assert data["total"] == "q^4 + q^3"
    assert data["at_q"] == {"q": 2, "total": 24, "brute_force": 24}


def test_latex_output(capsys):
    code, out, _ = run(capsys, "frame", "--m", "0,3,3,5", "--format", "latex")
    assert code == 0 and out.startswith(r"\begin{array}")


def test_deterministic_output(capsys):
    a = run(capsys, "minors", "--m", "0,3,3,5", "--kind", "V3", "--seed", "3")
    b = run(capsys, "minors", "--m", "0,3,3,5", "--kind", "V3", "--seed", "3")
    assert a == b


def test_prime_field_flag(capsys):
    code, out, _ = run(capsys, "minors", "--m", "0,2", "--kind", "V0", "--seed", "1",
                       "--field", "p:5")
    assert code == 0


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "canonicalize", "x^2")
    assert code == 1 and "domain error" in err
    code, _, err = run(capsys, "gdim", "--h", "1,5")
    assert code == 1 and "domain error" in err


def test_usage_error_exit_codes(capsys):
    code, _, err = run(capsys, "canonicalize", "x +")
    assert code == 2
    code, _, err = run(capsys, "dims", "--m", "zebra")
    assert code == 2
    code, _, err = run(capsys, "nonsense")
    assert code == 2
    code, _, err = run(capsys, "dims")
    assert code == 2 and "--m or --d" in err
    code, _, err = run(capsys, "generic", "--gens", "x1 + x2", "--n", "3")
    assert code == 2 and "monomial" in err
