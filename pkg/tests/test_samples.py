import io
import os

from domain.channel_file import loads_channel, loads_game, read_text
from cli.cli_app import EXIT_OK, main
from domain.channel_factory import ChannelFactory
from samples.create_sample_channels import create_sample_channels


def test_samples_cover_the_zoo(tmp_path):
    """One loadable file per zoo identifier plus the CHSH game"""
    paths = create_sample_channels(str(tmp_path))
    names = {os.path.splitext(os.path.basename(p))[0] for p in paths}
    assert names == set(ChannelFactory.get_available_channels()) | {"chsh_game"}
    bennett = loads_channel(read_text(str(tmp_path / "bennett.json")), validate=False)
    assert bennett.gtype.x.dim == 3
    assert bennett.metadata["signaling"] is True
    assert loads_game(read_text(str(tmp_path / "chsh_game.json"))).name == "chsh"


def test_score_with_game_file(tmp_path):
    """Game files work wherever a game name does"""
    create_sample_channels(str(tmp_path))
    out = io.StringIO()
    code = main(["score", str(tmp_path / "chsh_game.json"), str(tmp_path / "isotropic.json")], out=out, err=io.StringIO())
    assert code == EXIT_OK
    assert out.getvalue().strip() == "4.000000000000"
