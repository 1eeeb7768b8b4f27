"""Application settings and configuration management."""

from pathlib import Path
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables from .env file
load_dotenv()


class Settings(BaseSettings):
    """Solver and CLI settings loaded from environment variables (prefix ``PROXWELLS_``)."""

    model_config = SettingsConfigDict(
        env_prefix="PROXWELLS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Energy scan
    scan_points_per_unit: int = Field(default=2000, ge=1)
    min_scan_points: int = Field(default=2000, ge=2)
    max_scan_points: int = Field(default=400_000, ge=2)
    window_inset: float = Field(default=1e-9, gt=0)

    # Bracket refinement
    bisection_rel_tol: float = Field(default=1e-10, gt=0)
    max_bisection_iterations: int = Field(default=200, ge=1)
    root_residual_tol: float = Field(default=1e-8, gt=0)
    root_dedup_tol: float = Field(default=1e-9, ge=0)

    # Propagation
    degenerate_energy_tol: float = Field(default=1e-12, ge=0)

    # Wavefunctions
    eigen_check_tol: float = Field(default=1e-6, gt=0)
    node_samples_per_unit: int = Field(default=1000, ge=1)
    default_samples: int = Field(default=2001, ge=2)

    # Sweep defaults
    sweep_v_min: float = Field(default=0.25, ge=0)
    sweep_v_max: float = Field(default=20.0, gt=0)
    sweep_steps: int = Field(default=80, ge=2)
    max_parallel_workers: int = Field(default=4, ge=1)

    # Output
    default_output_format: Literal["csv", "json"] = "csv"

    # Logging
    log_level: str = Field(default="WARNING")
    log_file: Optional[str] = Field(default=None)

    def ensure_directories(self):
        """Ensure the log file directory exists when file logging is enabled."""
        if self.log_file:
            Path(self.log_file).parent.mkdir(parents=True, exist_ok=True)

    def scan_points_for(self, width: float) -> int:
        """Number of scan points for an energy window of the given width.

        Args:
            width: Window width in units of hbar^2/(2 m d^2)

        Returns:
            Grid size, at least ``min_scan_points`` and at most ``max_scan_points``
        """
        wanted = max(self.min_scan_points, int(round(self.scan_points_per_unit * width)))
        return min(wanted, self.max_scan_points)


# Global settings instance
settings = Settings()
