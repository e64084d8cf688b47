"""
Configuration management with Pydantic validation and environment variable support.
"""

import json
import os
import platform
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings


class ArithmeticSettings(BaseModel):
    """Scalar field configuration."""

    conductor: Optional[int] = Field(
        default=None,
        ge=1,
        description="Override the cyclotomic conductor N of Q(zeta_N); must be a multiple of the natural one"
    )

    @field_validator("conductor", mode="before")
    @classmethod
    def empty_means_auto(cls, v):
        """Treat empty strings and zero from the environment as 'pick automatically'."""
        if v in ("", 0, "0", None):
            return None
        return v


class VerificationSettings(BaseModel):
    """Axiom scan configuration."""

    exhaustive_threshold: int = Field(
        default=512,
        ge=1,
        description="Dimension up to which associativity is checked on every basis triple"
    )
    triple_budget: int = Field(
        default=2_000_000,
        ge=1_000,
        description="Above the exhaustive threshold, most supported triples evaluated before associativity is sampled"
    )
    sample_size: int = Field(
        default=20_000,
        ge=100,
        le=10_000_000,
        description="Number of sampled triples for non-exhaustive scans"
    )
    sample_seed: int = Field(
        default=0,
        description="Seed for sampled scans"
    )
    search_bound: int = Field(
        default=10**6,
        ge=1,
        description="Largest cochain space searched by brute force"
    )
    threads: int = Field(
        default=1,
        ge=1,
        le=64,
        description="Worker threads for verification scans"
    )


class UISettings(BaseModel):
    """User interface configuration."""

    use_colors: bool = Field(
        default=True,
        description="Use colored output"
    )
    show_witnesses: bool = Field(
        default=True,
        description="Print counterexample tuples for failed checks"
    )
    max_table_rows: int = Field(
        default=60,
        ge=5,
        le=10_000,
        description="Maximum rows printed in a table"
    )
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="WARNING",
        description="Logging level"
    )


class Settings(BaseSettings):
    """Main application settings with environment variable support."""

    arithmetic: ArithmeticSettings = Field(default_factory=ArithmeticSettings)
    verification: VerificationSettings = Field(default_factory=VerificationSettings)
    ui: UISettings = Field(default_factory=UISettings)

    model_config = {
        "env_prefix": "YDH_",
        "env_nested_delimiter": "__",
        "case_sensitive": False,
        "env_file": ".env",
        "extra": "ignore",
    }

    @classmethod
    def from_file(cls, config_path: Path) -> "Settings":
        """Load settings from a JSON configuration file."""
        if config_path.exists():
            with open(config_path) as f:
                config_data = json.load(f)
            return cls(**config_data)
        return cls()

    def save_to_file(self, config_path: Path) -> None:
        """Save current settings to a configuration file."""
        config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(config_path, "w") as f:
            json.dump(self.model_dump(), f, indent=2)

    @property
    def cache_dir(self) -> Path:
        """Get the cache directory."""
        if platform.system() == "Windows":
            base = Path(os.environ.get("LOCALAPPDATA", "~"))
        else:
            base = Path(os.environ.get("XDG_CACHE_HOME", "~/.cache"))

        return (base / "ydhopf").expanduser()

    @property
    def log_file(self) -> Path:
        """Get the log file path."""
        return self.cache_dir / "ydhopf.log"
