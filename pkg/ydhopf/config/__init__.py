"""Configuration management for ydhopf."""

from .settings import Settings

__all__ = ["Settings"]
