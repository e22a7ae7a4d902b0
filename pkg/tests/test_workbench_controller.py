from typing import Any, Dict, List

import pytest

from domain import conversions
from domain.conversion_factory import ConversionFactory
from domain.conversion_strategies import BranchChshConversion, LoseOpConversion
from domain.channel import choi_distance
from domain.errors import ParameterError, TypeMismatchError
from domain.games import chsh_game
from domain.system_types import Party
from domain.workbench_controller import CHECKS, WorkbenchController
from event.observer import Observer
from domain import zoo_channels as zoo


class Recorder(Observer):
    def __init__(self):
        self.events: List[Dict[str, Any]] = []

    def update(self, data: Dict[str, Any]) -> None:
        self.events.append(data)


def test_singleton():
    """Every construction returns the same controller"""
    assert WorkbenchController() is WorkbenchController()


def test_reset_forgets_settings():
    """reset() gives fresh defaults"""
    WorkbenchController().configure(tolerance=1e-6, seed=5, n_jobs=3)
    assert WorkbenchController().seed == 5
    WorkbenchController.reset()
    c = WorkbenchController()
    assert c.seed != 5 and c.tolerance == 1e-9 and c.n_jobs == 1


def test_configure_ignores_none():
    """Unset options keep their values"""
    c = WorkbenchController()
    c.configure(seed=9)
    c.configure(tolerance=None)
    assert c.seed == 9 and c.tolerance == 1e-9


def test_output_dir_from_environment(monkeypatch, tmp_path):
    """Relative paths resolve against the environment's output directory"""
    monkeypatch.setenv("LOSE_WORKBENCH_OUTPUT_DIR", str(tmp_path))
    WorkbenchController.reset()
    c = WorkbenchController()
    assert c.resolve_output("a.json") == str(tmp_path / "a.json")
    assert c.resolve_output("/abs/a.json") == "/abs/a.json"


def test_check_reports_all_selected():
    """Every selected check reports a verdict and its measurements"""
    results = WorkbenchController().check(zoo.dfp(), CHECKS)
    assert set(results) == set(CHECKS)
    assert results["cptp"]["passed"] and results["nonsignaling"]["passed"]
    assert not results["ppt"]["passed"] and results["ppt"]["min_eigenvalue"] < 0


def test_classical_check_lists_classical_wires():
    """Only classical wires are measured"""
    results = WorkbenchController().check(zoo.phhh(), ("classical",))
    assert set(results["classical"]) == {"passed", "X", "Y"}


def test_events_are_published():
    """Build, conversion and score each notify observers"""
    c = WorkbenchController()
    recorder = Recorder()
    c.subject.attach(recorder)
    pr = c.build_channel("pr")
    c.convert(pr, "pr_to_phhh")
    c.score(chsh_game(), pr)
    assert [e["type"] for e in recorder.events] == ["channel_built", "conversion", "score"]


def test_convert_by_name():
    """Named constructions run through the factory"""
    out = WorkbenchController().convert(zoo.phhh(), "phhh_to_dfp", {"alpha": "1/6"})
    assert choi_distance(out, zoo.dfp(1 / 6)) < 1e-9


def test_lhv():
    """The controller forwards the classical bound"""
    assert WorkbenchController().lhv(chsh_game()) == pytest.approx(2.0)


def test_conversion_factory_names():
    """Every construction is available"""
    names = ConversionFactory.get_available_conversions()
    for name in ("pr_to_phhh", "phhh_to_shsa", "phhh_to_dfp", "dephase", "q_out_to_classical", "teleport_inverse"):
        assert name in names


def test_conversion_factory_rejects_params():
    """Only phhh_to_dfp takes alpha; unknown names raise"""
    with pytest.raises(ParameterError):
        ConversionFactory.create("pr_to_phhh", {"alpha": "1"})
    with pytest.raises(ParameterError):
        ConversionFactory.create("nope")
    assert isinstance(ConversionFactory.create("phhh_to_dfp", {"alpha": "0"}), LoseOpConversion)


def test_conversion_type_check():
    """LOSE constructions check the full source type"""
    with pytest.raises(TypeMismatchError):
        ConversionFactory.create("pr_to_phhh").convert(zoo.phhh())


def test_teleport_conversions_round_trip():
    """q_out_to_classical and teleport_inverse undo each other for either party"""
    for party in Party:
        forward = ConversionFactory.create("q_out_to_classical", party=party).convert(zoo.phhh())
        back = ConversionFactory.create("teleport_inverse", party=party).convert(forward)
        assert choi_distance(back, zoo.phhh()) < 1e-9


def test_branch_conversion_records_score():
    """The branch conversion leaves its score on the box"""
    conversion = ConversionFactory.create("chsh_branch", seed=2)
    assert isinstance(conversion, BranchChshConversion)
    box = conversion.convert(zoo.dfp())
    assert 2.83 < box.metadata["score"] < 4.0


def test_chained_construction_reports_alpha():
    """pr_to_dfp folds the chain and the event carries its parameters"""
    c = WorkbenchController()
    recorder = Recorder()
    c.subject.attach(recorder)
    out = c.convert(zoo.pr_box(), "pr_to_dfp", {"alpha": "0"})
    assert choi_distance(out, zoo.dfp(0.0)) < 1e-9
    event = recorder.events[-1]
    assert event["construction"] == "pr_to_dfp"
    assert event["params"] == {"alpha": 0.0}


def test_chained_constructions_listed():
    names = ConversionFactory.get_available_conversions()
    assert "pr_to_shsa" in names and "pr_to_dfp" in names
    with pytest.raises(ParameterError):
        ConversionFactory.create("pr_to_shsa", {"alpha": "0"})


def test_describe_reports_party_and_seed():
    assert ConversionFactory.create("q_out_to_classical", party=Party.BOB).describe() == {
        "name": "q_out_to_classical",
        "params": {"party": "bob"},
    }
    assert ConversionFactory.create("chsh_branch", seed=7).describe()["params"] == {"seed": 7}
    assert ConversionFactory.create("dephase").describe()["params"] == {}


def test_quantum_output_conversion_forwards_tolerance(monkeypatch):
    """The controller tolerance reaches the re-validation of the converted channel"""
    seen = []
    original = conversions.apply_lose

    def recording(op, ch, metadata=None, tol=None):
        seen.append(tol)
        return original(op, ch, metadata, tol=tol)

    monkeypatch.setattr(conversions, "apply_lose", recording)
    c = WorkbenchController()
    c.configure(tolerance=1e-7)
    c.convert(zoo.phhh(), "q_out_to_classical", party=Party.BOB)
    assert seen == [1e-7]
