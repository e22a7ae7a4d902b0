import io
import os
import time

import numpy as np
import pytest

from cli.cli_app import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, parse_params
from domain.box_distribution import BoxDistribution, distribution_from_box
from domain.channel import Channel, choi_distance
from domain.channel_file import dumps_channel, loads_channel, read_text, write_text
from domain.errors import ParameterError
from domain.system_types import GlobalType, SystemType
from domain import zoo_channels as zoo


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def zoo_files(tmp_path):
    """pr, uniform, phhh and dfp written as channel files"""
    paths = {}
    for name, ch in (("pr", zoo.pr_box()), ("uniform", zoo.uniform_box()), ("phhh", zoo.phhh()), ("dfp", zoo.dfp())):
        paths[name] = str(tmp_path / f"{name}.json")
        write_text(paths[name], dumps_channel(ch))
    return paths


def test_parse_params():
    """key=value pairs become a dict"""
    assert parse_params(["alpha=1/6", "ub = x"]) == {"alpha": "1/6", "ub": "x"}
    with pytest.raises(ParameterError):
        parse_params(["alpha"])


def test_zoo_list():
    """Every zoo identifier is listed"""
    code, out, _ = run_cli("zoo", "list")
    assert code == EXIT_OK
    for name in zoo.zoo_names():
        assert name in out


def test_zoo_show_pr():
    """The PR box is a 16 x 16 diagonal Choi matrix"""
    code, out, _ = run_cli("zoo", "show", "pr")
    assert code == EXIT_OK
    choi = loads_channel(out).choi
    assert choi.shape == (16, 16)
    np.testing.assert_array_equal(choi, np.diag(np.diag(choi)))


def test_zoo_show_dfp_alpha_zero():
    """Parameters reach the constructor"""
    code, out, _ = run_cli("zoo", "show", "dfp", "--param", "alpha=0")
    assert code == EXIT_OK
    assert choi_distance(loads_channel(out), zoo.dfp(0.0)) < 1e-12


def test_zoo_show_needs_name():
    """Missing channel name is a usage error"""
    code, _, err = run_cli("zoo", "show")
    assert code == EXIT_USAGE


def test_zoo_show_bad_param():
    """Unknown parameters are usage errors"""
    code, out, _ = run_cli("zoo", "show", "pr", "--param", "alpha=1")
    assert code == EXIT_USAGE
    assert "Error" in out


def test_zoo_show_writes_into_output_dir(tmp_path, monkeypatch):
    """Relative --out paths land in the configured output directory"""
    monkeypatch.setenv("LOSE_WORKBENCH_OUTPUT_DIR", str(tmp_path))
    code, out, _ = run_cli("zoo", "show", "phhh", "--out", "phhh.json")
    assert code == EXIT_OK
    path = os.path.join(str(tmp_path), "phhh.json")
    assert read_text(path) == dumps_channel(zoo.phhh())
    assert "Wrote" in out


def test_check_passes_on_zoo_file(zoo_files):
    """Zoo files pass the default checks"""
    code, out, _ = run_cli("check", zoo_files["phhh"])
    assert code == EXIT_OK
    assert "PASS" in out and "FAIL" not in out


def test_check_ppt_fails_on_dfp(zoo_files):
    """DFP is reported NPT"""
    code, out, _ = run_cli("check", zoo_files["dfp"], "--ppt")
    assert code == EXIT_FAIL
    assert "ppt" in out and "FAIL" in out


def test_check_corrupted_file(tmp_path):
    """A signaling file loads for diagnostics and fails"""
    g = GlobalType(x=SystemType.classical(2), y=SystemType.trivial(), a=SystemType.trivial(), b=SystemType.classical(2))
    path = str(tmp_path / "copy.json")
    write_text(path, dumps_channel(Channel(g, np.diag([1.0, 0.0, 0.0, 1.0]), validate=False)))
    code, out, _ = run_cli("check", path, "--nonsignaling")
    assert code == EXIT_FAIL
    assert "alice->bob" in out


def test_bennett_shows_and_fails_nonsignaling_check(tmp_path):
    """The Bennett exhibit materializes but the check reports it signaling"""
    path = str(tmp_path / "bennett.json")
    code, _, _ = run_cli("zoo", "show", "bennett", "--out", path)
    assert code == EXIT_OK
    code, out, _ = run_cli("check", path)
    assert code == EXIT_FAIL
    assert "cptp" in out and "nonsignaling" in out


def test_check_missing_file(tmp_path):
    """Unknown sources are usage errors"""
    code, _, _ = run_cli("check", str(tmp_path / "absent.json"))
    assert code == EXIT_USAGE


def test_convert_pr_to_phhh(tmp_path):
    """Converting the PR box reproduces PHHH"""
    path = str(tmp_path / "out.json")
    code, _, _ = run_cli("convert", "pr", "pr_to_phhh", "--out", path)
    assert code == EXIT_OK
    assert choi_distance(loads_channel(read_text(path)), zoo.phhh()) < 1e-10


def test_convert_phhh_dephase():
    """Dephasing PHHH prints the PR box"""
    code, out, _ = run_cli("convert", "phhh", "dephase")
    assert code == EXIT_OK
    np.testing.assert_allclose(distribution_from_box(loads_channel(out)).table, BoxDistribution.pr().table, atol=1e-14)


def test_convert_type_mismatch():
    """Constructions refuse resources of the wrong type"""
    code, out, _ = run_cli("convert", "pr", "phhh_to_shsa")
    assert code == EXIT_FAIL
    assert "expects" in out


def test_convert_teleport_party():
    """Bob's quantum output becomes classical"""
    code, out, _ = run_cli("convert", "phhh", "q_out_to_classical", "--party", "bob")
    assert code == EXIT_OK
    assert loads_channel(out).gtype.b == SystemType.classical(4)


def test_score_pr(zoo_files):
    """CHSH on the PR box prints 4 to twelve places"""
    code, out, _ = run_cli("score", "chsh", zoo_files["pr"])
    assert code == EXIT_OK
    assert out.strip() == "4.000000000000"


def test_score_uniform(zoo_files):
    """CHSH on the uniform box is 0"""
    code, out, _ = run_cli("score", "chsh", zoo_files["uniform"])
    assert code == EXIT_OK
    assert float(out) == pytest.approx(0.0, abs=1e-12)


def test_score_type_mismatch(zoo_files):
    """A quantum-output channel cannot play CHSH directly"""
    code, _, _ = run_cli("score", "chsh", zoo_files["phhh"])
    assert code == EXIT_FAIL


def test_lhv_chsh():
    """The classical bound prints 2"""
    code, out, _ = run_cli("lhv", "chsh")
    assert code == EXIT_OK
    assert out.strip() == "2.000000000000"


def test_unknown_game():
    """Unknown games are usage errors"""
    code, _, _ = run_cli("lhv", "poker")
    assert code == EXIT_USAGE


def test_types_table():
    """The encoding table lists all partition types"""
    code, out, _ = run_cli("types")
    assert code == EXIT_OK
    for key in ("II", "CC", "QQ", "linked unknowns"):
        assert key in out


def test_verbose_reports_events_on_err():
    """Events go to the error stream only when verbose"""
    _, _, quiet = run_cli("zoo", "show", "pr")
    _, _, loud = run_cli("--verbose", "zoo", "show", "pr")
    assert quiet == ""
    assert "Built pr" in loud


def test_usage_errors_from_argparse():
    """Bad command lines exit 2, --help exits 0"""
    assert run_cli("frobnicate")[0] == EXIT_USAGE
    assert run_cli("--help")[0] == EXIT_OK


def test_verify_paper_rejects_unknown_param():
    """verify-paper only takes bgnp-ub"""
    code, _, _ = run_cli("verify-paper", "--param", "alpha=1")
    assert code == EXIT_USAGE


def test_verify_paper_full_run():
    """Every acceptance criterion passes and the report keeps criterion order"""
    code, out, _ = run_cli("verify-paper")
    assert code == EXIT_OK
    assert "14/14 criteria passed" in out
    positions = [out.index(f"{n:2d}. ") for n in range(1, 15)]
    assert positions == sorted(positions)


def test_verify_paper_untwisted_bgnp():
    """With u_b = I the eigenstate criterion fails and the run exits 1"""
    code, out, _ = run_cli("verify-paper", "--param", "bgnp-ub=identity")
    assert code == EXIT_FAIL
    assert "13/14 criteria passed" in out


def test_verify_paper_parallel_within_budget():
    """Two workers give the same 14/14 report, well inside two minutes"""
    start = time.perf_counter()
    code, out, _ = run_cli("--jobs", "2", "verify-paper")
    assert code == EXIT_OK
    assert "14/14 criteria passed" in out
    assert time.perf_counter() - start < 120.0


def test_types_legend_marks_no_as_derived():
    code, out, _ = run_cli("types")
    assert code == EXIT_OK
    assert "derived" in out and "trivial side" in out


def test_convert_pr_to_shsa_chain(tmp_path):
    """The folded chain through PHHH reproduces SHSA"""
    path = str(tmp_path / "shsa.json")
    code, _, _ = run_cli("convert", "pr", "pr_to_shsa", "--out", path)
    assert code == EXIT_OK
    assert choi_distance(loads_channel(read_text(path)), zoo.shsa()) < 1e-10


def test_conversions_map():
    code, out, _ = run_cli("conversions")
    assert code == EXIT_OK
    assert "phhh_to_dfp" in out
    assert "equally postquantum: phhh, pr" in out


def test_conversions_path_and_open_pair():
    code, out, _ = run_cli("conversions", "pr", "dfp")
    assert code == EXIT_OK
    assert "pr_to_phhh then phhh_to_dfp" in out
    code, out, _ = run_cli("conversions", "shsa", "pr")
    assert code == EXIT_FAIL
    assert "No known LOSE conversion" in out
    assert run_cli("conversions", "pr")[0] == EXIT_USAGE
