"""Validation Runner - runs the registered checks and collects a report."""

import logging
from typing import Iterable, Optional

from core.checks import check_registry
from projects.proximity_wells.models import CheckFailure, CheckOutcome, ValidationReport, ValidationScope
from projects.proximity_wells.validation import CATEGORY

logger = logging.getLogger(__name__)


def run_validation(
    scope: Optional[ValidationScope] = None,
    check_ids: Optional[Iterable[str]] = None,
) -> ValidationReport:
    """Run registered checks over a scope of configurations.

    Args:
        scope: Configurations to cover (defaults to the reference grid)
        check_ids: Subset of checks to run (defaults to all)

    Returns:
        Report with one outcome per check, in registration order
    """
    scope = scope or ValidationScope()
    wanted = set(check_ids) if check_ids is not None else None
    unknown = (wanted or set()) - {check["id"] for check in check_registry.list_checks(CATEGORY)}
    if unknown:
        raise ValueError(f"Unknown check(s): {', '.join(sorted(unknown))}")

    report = ValidationReport()
    for check in check_registry.list_checks(CATEGORY):
        if wanted is not None and check["id"] not in wanted:
            continue

        func = check_registry.get_function(check["id"])
        logger.info(f"Running check {check['id']}")
        try:
            failures = func(scope)
        except Exception as e:
            logger.exception(f"Check {check['id']} raised")
            failures = [CheckFailure(message=f"{type(e).__name__}: {e}")]

        report.outcomes.append(CheckOutcome(
            check_id=check["id"],
            name=check["name"],
            passed=not failures,
            failures=failures,
        ))
    return report
