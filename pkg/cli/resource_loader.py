"""
Resource Loader Strategy Pattern
Resolves a command-line source (zoo identifier or file path) to a Channel or Game
"""

import os
from abc import ABC, abstractmethod
from typing import Any, List, Mapping, Optional

from domain.channel import Channel
from domain.channel_factory import ChannelFactory
from domain.channel_file import loads_channel, loads_game, read_text
from domain.errors import ParameterError
from domain.games import Game, chsh_game
from domain.workbench_controller import WorkbenchController


class ResourceLoaderStrategy(ABC):
    """
    Strategy Interface: one way of turning a source string into a Channel
    """

    @abstractmethod
    def accepts(self, source: str) -> bool:
        pass

    @abstractmethod
    def load(self, source: str, params: Optional[Mapping[str, Any]] = None, validate: bool = True) -> Channel:
        pass

    @abstractmethod
    def get_name(self) -> str:
        pass


class ZooStrategy(ResourceLoaderStrategy):
    """Build a named zoo channel"""

    def accepts(self, source: str) -> bool:
        return source.strip().lower() in ChannelFactory.get_available_channels()

    def load(self, source: str, params: Optional[Mapping[str, Any]] = None, validate: bool = True) -> Channel:
        return WorkbenchController().build_channel(source, params)

    def get_name(self) -> str:
        return "zoo"


class FileStrategy(ResourceLoaderStrategy):
    """Read a canonical channel file"""

    def accepts(self, source: str) -> bool:
        return os.path.isfile(source)

    def load(self, source: str, params: Optional[Mapping[str, Any]] = None, validate: bool = True) -> Channel:
        if params:
            raise ParameterError("Parameters apply to zoo channels only, not to files")
        ch = loads_channel(read_text(source), validate=validate)
        WorkbenchController().subject.notify_channel_loaded(source, str(ch.gtype))
        return ch

    def get_name(self) -> str:
        return "file"


class ResourceLoaderContext:
    """
    Context class that uses a ResourceLoaderStrategy
    Files win over zoo names so a local file called 'pr' is still readable
    """

    def __init__(self):
        self.strategies: List[ResourceLoaderStrategy] = [FileStrategy(), ZooStrategy()]

    def load_channel(self, source: str, params: Optional[Mapping[str, Any]] = None, validate: bool = True) -> Channel:
        """
        Raises:
            ParameterError: If no strategy accepts the source
        """
        for strategy in self.strategies:
            if strategy.accepts(source):
                return strategy.load(source, params, validate)
        raise ParameterError(
            f"'{source}' is neither a file nor a zoo channel. "
            f"Valid channels: {', '.join(ChannelFactory.get_available_channels())}"
        )


BUILTIN_GAMES = {"chsh": chsh_game}


def load_game(source: str) -> Game:
    """A built-in game name or a game file"""
    if os.path.isfile(source):
        return loads_game(read_text(source))
    key = source.strip().lower()
    if key in BUILTIN_GAMES:
        return BUILTIN_GAMES[key]()
    raise ParameterError(f"Unknown game: {source}. Valid games: {', '.join(BUILTIN_GAMES)} or a game file")
