"""Registry of named validation checks."""

from typing import Any, Callable, Dict, List, Optional


class CheckRegistry:
    """Registry for validation checks, grouped by category."""

    def __init__(self):
        self._checks: Dict[str, Dict[str, Any]] = {}

    def register(
        self,
        check_id: str,
        name: str,
        description: str,
        category: str,
        func: Callable,
        **metadata,
    ) -> None:
        """Register a check with the registry.

        Args:
            check_id: Unique identifier for the check
            name: Human-readable name
            description: What property the check verifies
            category: Project the check belongs to (e.g., 'proximity_wells')
            func: Callable running the check
            **metadata: Additional metadata for the check
        """
        if check_id in self._checks:
            raise ValueError(f"Check '{check_id}' is already registered")
        self._checks[check_id] = {
            "name": name,
            "description": description,
            "category": category,
            "func": func,
            **metadata,
        }

    def get_check(self, check_id: str) -> Optional[Dict[str, Any]]:
        """Check metadata by ID, or None if not registered."""
        return self._checks.get(check_id)

    def get_function(self, check_id: str) -> Optional[Callable]:
        """Callable of a check by ID, or None if not registered."""
        check = self._checks.get(check_id)
        return check.get("func") if check else None

    def list_checks(self, category: Optional[str] = None) -> List[Dict[str, Any]]:
        """List registered checks in registration order.

        Args:
            category: Optional category to filter by

        Returns:
            List of check metadata dictionaries (without the callable)
        """
        checks = []
        for check_id, metadata in self._checks.items():
            if category is None or metadata.get("category") == category:
                checks.append({"id": check_id, **{k: v for k, v in metadata.items() if k != "func"}})
        return checks
