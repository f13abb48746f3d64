import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

CRITERIA: list[str] = []

os.environ.setdefault("HYPOTHESIS_PROFILE", "repo")
from hypothesis import HealthCheck, settings  # noqa: E402

settings.register_profile("repo", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
