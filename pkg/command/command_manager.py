"""
CommandManager - Invoker Pattern Implementation
Runs queued commands, in parallel when asked, and keeps their history
"""

from typing import List, Optional

from joblib import Parallel, delayed

from event.workbench_subject import WorkbenchSubject

from .command import Command, CommandResult


def _execute(cmd: Command) -> CommandResult:
    try:
        return cmd.execute()
    except Exception as e:
        return cmd.result(False, f"error: {e}")


class CommandManager:
    """
    Invoker Pattern: executes commands and records what happened.

    Responsibilities:
    - Execute commands, one worker per command when n_jobs > 1
    - Report results in submission order regardless of completion order
    - Provide command history
    """

    def __init__(self, subject: Optional[WorkbenchSubject] = None, n_jobs: int = 1):
        self.subject = subject
        self.n_jobs = n_jobs
        self.history: List[CommandResult] = []

    def execute(self, cmd: Command) -> CommandResult:
        return self.run([cmd])[0]

    def run(self, commands: List[Command]) -> List[CommandResult]:
        if self.n_jobs == 1 or len(commands) < 2:
            results = [_execute(cmd) for cmd in commands]
        else:
            results = Parallel(n_jobs=self.n_jobs)(delayed(_execute)(cmd) for cmd in commands)
        for r in results:
            self.history.append(r)
            if self.subject is not None:
                self.subject.notify_criterion(r.number, r.title, r.passed, r.measured)
        return results

    def all_passed(self) -> bool:
        return bool(self.history) and all(r.passed for r in self.history)

    def clear(self) -> None:
        self.history.clear()
