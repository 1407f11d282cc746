import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

WORKED_WORD = (1, 6, 8, 4, 2, 9, 5, 7, 3)
WORKED_LABELING = (0, 2, 3, 1, 0, 3, 1, 2, 0)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
