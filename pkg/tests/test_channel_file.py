import json

import numpy as np
import pytest

from domain.channel_file import dumps_channel, dumps_game, loads_channel, loads_game, read_text, write_text
from domain.channel import Channel
from domain.errors import ChannelValidationError, FileFormatError
from domain.games import Game, chsh_game
from domain.system_types import GlobalType, SystemType
from domain import zoo_channels as zoo


def _signaling_copy() -> Channel:
    g = GlobalType(x=SystemType.classical(2), y=SystemType.trivial(), a=SystemType.trivial(), b=SystemType.classical(2))
    return Channel(g, np.diag([1.0, 0.0, 0.0, 1.0]), {"name": "copy"}, validate=False)


@pytest.mark.parametrize("name", ["pr", "phhh", "shsa", "dfp"])
def test_channel_text_is_canonical(name):
    """dumps(loads(text)) reproduces the text byte for byte"""
    text = dumps_channel(getattr(zoo, "pr_box" if name == "pr" else name)())
    assert dumps_channel(loads_channel(text)) == text


def test_entries_survive_bit_exactly(rng):
    """Shortest-repr floats restore the same doubles"""
    ch = zoo.isotropic_box(float(rng.uniform()))
    assert np.array_equal(loads_channel(dumps_channel(ch)).choi, ch.choi)


def test_channel_text_layout():
    """Sorted keys, one Choi row per line, trailing newline"""
    text = dumps_channel(zoo.pr_box())
    data = json.loads(text)
    assert list(data) == sorted(data)
    assert data["kind"] == "channel" and data["choi"]["dim"] == 16
    assert text.endswith("}\n")
    assert sum(1 for line in text.splitlines() if line.strip().startswith("[[")) == 16


def test_metadata_roundtrip():
    """Provenance entries come back unchanged"""
    ch = zoo.dfp(0.25)
    assert loads_channel(dumps_channel(ch)).metadata == ch.metadata


def test_invalid_channel_needs_validate_false():
    """Signaling files only load for diagnostics"""
    text = dumps_channel(_signaling_copy())
    with pytest.raises(ChannelValidationError):
        loads_channel(text)
    assert loads_channel(text, validate=False).gtype == _signaling_copy().gtype


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"kind": "game", "format_version": "1.0"}',
        '{"kind": "channel", "format_version": "0.1"}',
    ],
)
def test_malformed_channel_text(text):
    """Bad JSON, wrong kind and wrong version are format errors"""
    with pytest.raises(FileFormatError):
        loads_channel(text)


def test_dim_must_match_type():
    """The Choi block must fit the declared type"""
    data = json.loads(dumps_channel(zoo.pr_box()))
    data["gtype"]["x"]["dim"] = 3
    with pytest.raises(FileFormatError):
        loads_channel(json.dumps(data))


def test_payoff_game_roundtrip():
    """CHSH survives the game file"""
    g = loads_game(dumps_game(chsh_game()))
    assert g.form == "payoff" and g.name == "chsh"
    np.testing.assert_array_equal(g.payoff, chsh_game().payoff)
    np.testing.assert_array_equal(g.input_dist, chsh_game().input_dist)


def test_witness_game_roundtrip():
    """Witness games keep their matrix"""
    w = np.diag(np.arange(16, dtype=float))
    g = loads_game(dumps_game(Game(GlobalType.box(2, 2, 2, 2), witness=w, name="diag")))
    assert g.form == "witness"
    np.testing.assert_array_equal(g.witness, w)


def test_unknown_game_form():
    """Only payoff and witness games exist"""
    data = json.loads(dumps_game(chsh_game()))
    data["form"] = "table"
    with pytest.raises(FileFormatError):
        loads_game(json.dumps(data))


def test_write_and_read(tmp_path):
    """Text files round-trip through disk"""
    path = str(tmp_path / "pr.json")
    write_text(path, dumps_channel(zoo.pr_box()))
    assert read_text(path) == dumps_channel(zoo.pr_box())
