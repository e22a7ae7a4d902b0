import numpy as np
import pytest

from domain.constants import TSIRELSON_BOUND
from domain.chsh_strategies import tsirelson_box
from domain.games import Game, chsh_game
from domain.ordering import (
    ONE_SIDED_NOTE,
    BranchDephasingProvider,
    DephasingProvider,
    DirectProvider,
    FreeProvider,
    best_strategy,
    default_providers,
    ordering_spotcheck,
)
from domain import zoo_channels as zoo

FAST_PROVIDERS = [DirectProvider(), DephasingProvider(), FreeProvider()]


def test_pr_beats_lose_free_box():
    """PR scores 4 against at most 2 sqrt 2; no reversal"""
    report = ordering_spotcheck(zoo.pr_box(), tsirelson_box(), [chsh_game()], FAST_PROVIDERS)
    c = report.comparisons[0]
    assert c.best_r1 == pytest.approx(4.0)
    assert c.best_r2 == pytest.approx(TSIRELSON_BOUND)
    assert not report.refuted
    assert report.note == ONE_SIDED_NOTE


def test_reversal_refutes_conversion():
    """A free box cannot become the PR box"""
    report = ordering_spotcheck(tsirelson_box(), zoo.pr_box(), [chsh_game()], FAST_PROVIDERS)
    assert report.refuted


def test_phhh_and_pr_tie():
    """Dephased PHHH and the PR box both score 4"""
    report = ordering_spotcheck(zoo.phhh(), zoo.pr_box(), [chsh_game()], FAST_PROVIDERS)
    c = report.comparisons[0]
    assert c.label_r1 == "dephase" and c.label_r2 == "direct"
    assert c.best_r1 == pytest.approx(c.best_r2)
    assert not c.reversal


def test_reflexive_report():
    """Comparing a resource with itself gives identical scores"""
    r = zoo.isotropic_box(0.6)
    c = ordering_spotcheck(r, r, [chsh_game()], FAST_PROVIDERS).comparisons[0]
    assert c.best_r1 == c.best_r2 and c.label_r1 == c.label_r2
    assert not c.reversal


def test_free_strategies_floor_every_resource():
    """Even a useless resource reaches the free Tsirelson value"""
    value, label = best_strategy(zoo.uniform_box(), chsh_game(), FAST_PROVIDERS)
    assert value == pytest.approx(TSIRELSON_BOUND)
    assert label == "free:tsirelson"


def test_witness_games_have_no_free_strategy():
    """Only the direct provider serves witness games"""
    g = Game(zoo.phhh().gtype, witness=np.eye(16), name="trace")
    assert FreeProvider().strategies(zoo.phhh(), g) == []
    assert best_strategy(zoo.phhh(), g, FAST_PROVIDERS) == (pytest.approx(4.0), "direct")


def test_no_strategy_reports_none():
    """A game no provider can reach has no score"""
    g = Game(zoo.shsa().gtype, witness=np.eye(24), name="trace")
    assert best_strategy(zoo.phhh(), g, FAST_PROVIDERS) == (None, None)


def test_branch_provider_only_for_controlled_channels():
    """The branch provider ignores resources of other shapes"""
    assert BranchDephasingProvider().strategies(zoo.phhh(), chsh_game()) == []


def test_dfp_below_pr():
    """The DFP branch strategy stays below the PR box"""
    report = ordering_spotcheck(zoo.dfp(1 / 6), zoo.pr_box(), [chsh_game()], default_providers(seed=3))
    c = report.comparisons[0]
    assert c.label_r1 == "chsh_branch"
    assert TSIRELSON_BOUND < c.best_r1 < 4.0
    assert report.refuted
