"""
Sample Channel Generator
Writes canonical files for every zoo channel and the CHSH game
"""

import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from domain.channel_file import dumps_channel, dumps_game, write_text
from domain.channel_factory import ChannelFactory
from domain.constants import OUTPUT_DIR_ENV
from domain.games import chsh_game


def create_sample_channels(output_dir: str) -> list:
    """Write <name>.json for each zoo channel plus chsh_game.json; return the paths"""
    os.makedirs(output_dir, exist_ok=True)
    written = []
    for name in ChannelFactory.get_available_channels():
        path = os.path.join(output_dir, f"{name}.json")
        write_text(path, dumps_channel(ChannelFactory.create(name)))
        written.append(path)
    path = os.path.join(output_dir, "chsh_game.json")
    write_text(path, dumps_game(chsh_game()))
    written.append(path)
    return written


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else os.environ.get(OUTPUT_DIR_ENV, "sample_channels")
    print("Sample Channel Generator")
    print("=" * 60)
    for p in create_sample_channels(target):
        print(f"✓ {p}")
