import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

# criterion number -> (description, passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_collection_modifyitems(config, items):
    if os.environ.get("THOMPSON_EXTENDED"):
        return
    skip = pytest.mark.skip(reason="set THOMPSON_EXTENDED=1 to run the extended series")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        desc, ok, detail = ACCEPTANCE[k]
        line = f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {desc}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
