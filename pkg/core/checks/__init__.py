"""Core validation-check infrastructure."""

from .base import CheckRegistry

# Global check registry
check_registry = CheckRegistry()

__all__ = ["check_registry"]
