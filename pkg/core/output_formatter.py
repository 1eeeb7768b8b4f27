"""Output formatting: terminal summaries and deterministic CSV/JSON emission."""

import json
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd


def format_value(value: Any) -> str:
    """Shortest round-trip text for floats, lowercase booleans, str() otherwise."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, np.integer):
        return str(int(value))
    return str(value)


class ResultOutputFormatter:
    """Formats solver results for terminals and files."""

    @staticmethod
    def to_csv(
        rows: Iterable[Dict[str, Any]],
        columns: Sequence[str],
        comments: Optional[List[str]] = None,
    ) -> str:
        """Render rows as CSV text with optional leading ``#`` comment lines.

        Args:
            rows: Row dictionaries keyed by column name
            columns: Column order (also the header)
            comments: Lines emitted before the header, each prefixed with ``# ``

        Returns:
            CSV text; identical input gives byte-identical output
        """
        frame = pd.DataFrame(
            [[format_value(row[column]) for column in columns] for row in rows],
            columns=list(columns),
            dtype=object,
        )
        header = "".join(f"# {line}\n" for line in comments or [])
        return header + frame.to_csv(index=False, lineterminator="\n")

    @staticmethod
    def to_json(payload: Dict[str, Any]) -> str:
        """Render a payload as indented JSON ending in a newline."""
        return json.dumps(payload, indent=2) + "\n"

    @staticmethod
    def write(text: str, output_path: Optional[str] = None):
        """Write text to a file, or to standard output when no path is given."""
        if output_path is None:
            sys.stdout.write(text)
            return

        Path(output_path).parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        print(f"📁 Output saved to: {output_path}", file=sys.stderr)

    @staticmethod
    def display_eigenvalues(
        title: str,
        rows: List[Dict[str, Any]],
        window: Optional[Sequence[float]] = None,
    ):
        """Display an eigenvalue table to the terminal.

        Args:
            title: Description of the stack
            rows: Rows with index, E, nodes, proximity_valid and below_barrier
            window: Energy window searched
        """
        print("\n" + "=" * 80)
        print("🔬 EIGENVALUES")
        print("=" * 80)

        print(f"\n🧱 Stack: {title}")
        if window is not None:
            print(f"📏 Window: ({window[0]:g}, {window[1]:g})")
        print(f"📊 Found: {len(rows)}")

        if not rows:
            print("\n❌ No eigenvalues in the window")
        for row in rows:
            flag = "✅" if row["proximity_valid"] else "⚠️ "
            barrier = "below barrier" if row["below_barrier"] else "above barrier"
            print(f"\n{row['index']}. E = {row['E']:.10f}")
            print(f"   {flag} Nodes: {row['nodes']} ({barrier})")

        print("\n" + "=" * 80)

    @staticmethod
    def display_validation_report(outcomes: List[Dict[str, Any]], elapsed_time: Optional[float] = None):
        """Display pass/fail per validation check.

        Args:
            outcomes: Dictionaries with name, passed and failures
            elapsed_time: Total run time in seconds
        """
        print("\n" + "=" * 80)
        print("🧪 VALIDATION REPORT")
        print("=" * 80)

        for outcome in outcomes:
            mark = "✅" if outcome["passed"] else "❌"
            print(f"\n{mark} {outcome['name']}")
            for failure in outcome["failures"]:
                where = ", ".join(
                    f"{key}={format_value(failure[key])}"
                    for key in ("periods", "bc", "potential", "energy")
                    if failure.get(key) is not None
                )
                print(f"   • {where}: {failure['message']}" if where else f"   • {failure['message']}")

        passed = sum(1 for outcome in outcomes if outcome["passed"])
        print(f"\n📈 Passed: {passed}/{len(outcomes)}")
        if elapsed_time is not None:
            print(f"⏱️  Time: {elapsed_time:.2f} seconds")

        print("\n" + "=" * 80)
        print("✅ ALL CHECKS PASSED" if passed == len(outcomes) else "❌ VALIDATION FAILED")
        print("=" * 80)
