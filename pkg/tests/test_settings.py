"""Tests for environment-driven settings."""

import pytest
from pydantic import ValidationError

from core.settings import Settings


class TestScanPoints:

    def test_density(self):
        assert Settings().scan_points_for(5.0) == 10_000

    def test_minimum(self):
        assert Settings().scan_points_for(0.1) == 2000

    def test_cap(self):
        assert Settings().scan_points_for(1000.0) == 400_000


class TestEnvironment:

    def test_override(self, monkeypatch):
        monkeypatch.setenv("PROXWELLS_SCAN_POINTS_PER_UNIT", "100")
        monkeypatch.setenv("PROXWELLS_DEFAULT_OUTPUT_FORMAT", "json")
        configured = Settings()
        assert configured.scan_points_per_unit == 100
        assert configured.default_output_format == "json"

    def test_invalid_value(self, monkeypatch):
        monkeypatch.setenv("PROXWELLS_BISECTION_REL_TOL", "-1")
        with pytest.raises(ValidationError):
            Settings()
