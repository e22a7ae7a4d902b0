# Domain Layer - channels, conversions, witnesses and games
