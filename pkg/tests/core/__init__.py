"""Core test package initialization."""
