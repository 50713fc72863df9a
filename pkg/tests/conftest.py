import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

TESTS = Path(__file__).parent
FIXTURES = TESTS / "fixtures"
GOLDENS = FIXTURES / "goldens"
CORPUS = FIXTURES / "corpus"

# helper modules (gen_loops, minijava, corpus_gen) live next to the tests
sys.path.insert(0, str(TESTS))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def lang_of(path: Path) -> str:
    return "python" if path.suffix == ".py" else "java"


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDENS / name).read_text(encoding="utf-8")
    return read


@pytest.fixture(scope="session")
def corpus():
    from transguard.harness import ingest
    return ingest(CORPUS)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
