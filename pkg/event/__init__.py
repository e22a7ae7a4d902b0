# Event Layer - Observer Pattern Implementation
