import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, in order."""
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", getattr(rep, "nodeid", ""))
            if m and rep.when == "call" or m and outcome == "error":
                summary = dict(rep.user_properties).get("summary", "")
                rows.append((int(m.group(1)), "PASS" if outcome == "passed" else "FAIL", summary))
    if rows:
        terminalreporter.section("acceptance criteria")
        for n, status, summary in sorted(rows):
            terminalreporter.write_line(f"criterion {n:2d}: {status}  {summary}")
