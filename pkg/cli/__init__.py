"""
CLI Package
Command-line interface for the LOSE workbench
"""

from .cli_app import WorkbenchCLI

__all__ = ['WorkbenchCLI']
