"""
LOSE Workbench
Main Entry Point

A command-line workbench for bipartite nonsignaling quantum channels as
resources under local operations and shared entanglement: typed channel
algebra, a zoo of postquantum examples, explicit conversions, witnesses and
games.

Design Patterns Implemented:
- Singleton: WorkbenchController
- Factory Method: ChannelFactory, ConversionFactory
- Strategy: ConversionStrategy, StrategyProvider, ResourceLoaderStrategy
- Observer: WorkbenchSubject and Observer
- Command: CommandManager and the acceptance-criterion commands
"""

import sys
import os

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from cli.cli_app import main

if __name__ == "__main__":
    sys.exit(main())
