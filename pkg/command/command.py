"""
Command Pattern Implementation
Abstract base class for self-contained workbench checks
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass


@dataclass
class CommandResult:
    """Outcome of one command: verdict plus the measured value as text"""

    number: int
    title: str
    passed: bool
    measured: str


class Command(ABC):
    """
    Command Pattern Interface: a check that can be queued, run in a worker
    and reported.

    Responsibilities:
    - Carry everything it needs (no shared state), so it pickles to workers
    - Return a CommandResult from execute()
    """

    number: int = 0
    title: str = ""

    @abstractmethod
    def execute(self) -> CommandResult:
        pass

    def result(self, passed: bool, measured: str) -> CommandResult:
        return CommandResult(self.number, self.title, bool(passed), measured)

    def __str__(self) -> str:
        return f"{self.__class__.__name__}({self.number}: {self.title})"
