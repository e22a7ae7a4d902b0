"""
WorkbenchSubject - Observable Pattern Implementation
Publishes workbench events (channels built, checks run, criteria finished)
"""

import sys
from typing import Any, Dict, List, Optional

from .observer import Observer


class WorkbenchSubject:
    """
    Observable Pattern: Notify observers of every noteworthy workbench event.

    Domain code never prints; it reports through this subject and the CLI
    decides what to render.

    Responsibilities:
    - Maintain observer list
    - Notify on change
    - Keep one failing observer from breaking the others
    """

    def __init__(self):
        self._observers: List[Observer] = []

    def attach(self, observer: Observer) -> None:
        if observer not in self._observers:
            self._observers.append(observer)

    def detach(self, observer: Observer) -> None:
        if observer in self._observers:
            self._observers.remove(observer)

    def notify(self, data: Dict[str, Any]) -> None:
        """
        Notify all observers of an event

        Args:
            data: Dictionary containing notification data:
                  - 'type': one of 'channel_built', 'channel_loaded',
                    'validation', 'conversion', 'score', 'criterion', 'error'
                  - Additional event-specific data
        """
        for observer in self._observers:
            try:
                observer.update(data)
            except Exception as e:
                print(f"Error notifying observer: {str(e)}", file=sys.stderr)

    def notify_channel_built(self, name: str, gtype: str, params: Optional[Dict[str, Any]] = None) -> None:
        self.notify({'type': 'channel_built', 'name': name, 'gtype': gtype, 'params': params or {}})

    def notify_channel_loaded(self, source: str, gtype: str) -> None:
        self.notify({'type': 'channel_loaded', 'source': source, 'gtype': gtype})

    def notify_validation(self, name: str, passed: bool, details: Dict[str, Any]) -> None:
        """
        Convenience method for a finished validation run

        Args:
            name: Channel name
            passed: Overall verdict
            details: Measured deviations per check
        """
        self.notify({'type': 'validation', 'name': name, 'passed': passed, 'details': details})

    def notify_conversion(
        self, construction: str, source: str, result_gtype: str, params: Optional[Dict[str, Any]] = None
    ) -> None:
        self.notify({
            'type': 'conversion',
            'construction': construction,
            'source': source,
            'gtype': result_gtype,
            'params': params or {},
        })

    def notify_score(self, game: str, value: float) -> None:
        self.notify({'type': 'score', 'game': game, 'value': value})

    def notify_criterion(self, number: int, title: str, passed: bool, measured: str) -> None:
        self.notify({'type': 'criterion', 'number': number, 'title': title, 'passed': passed, 'measured': measured})

    def notify_error(self, error_message: str) -> None:
        self.notify({'type': 'error', 'message': error_message})
