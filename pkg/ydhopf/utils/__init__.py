"""Shared utilities: build cache and verification reports."""

from .cache import BuildCache, build_cache
from .report import CheckResult, VerificationReport

__all__ = ["BuildCache", "build_cache", "CheckResult", "VerificationReport"]
