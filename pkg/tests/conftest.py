import pytest

from fsnlab import packaged_corpus

CORPORA = ("soluble_le_24", "family_le_200")


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def acceptance(request):
    """Record one summary line per acceptance criterion."""
    def record(number: int, ok: bool, text: str):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {text}"
        request.config._acceptance_lines.append((number, line))
        print(line)
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def corpus_specs():
    return [s for name in CORPORA for s in packaged_corpus(name)]


@pytest.fixture(scope="session")
def corpus_groups(corpus_specs):
    return [s.build() for s in corpus_specs]
