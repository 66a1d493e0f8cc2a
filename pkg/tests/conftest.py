import pytest

from telugu_entropy import from_texts, load_mapping, sample_corpus_path

_acceptance_results: list[tuple[int, str, str]] = []


@pytest.fixture(scope="session")
def table():
    return load_mapping()


@pytest.fixture(scope="session")
def sample_text():
    return sample_corpus_path().read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def sample_corpus(sample_text, table):
    return from_texts([sample_text], table)


@pytest.fixture(scope="session")
def sample_path():
    return str(sample_corpus_path())


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        number, title = marker.args
        _acceptance_results.append((number, title, rep.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    # several tests may back one criterion; it passes only if all of them do
    merged: dict[int, tuple[str, bool]] = {}
    for number, title, outcome in _acceptance_results:
        _, ok = merged.get(number, (title, True))
        merged[number] = (title, ok and outcome == "PASSED")
    terminalreporter.section("acceptance criteria")
    for number, (title, ok) in sorted(merged.items()):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}")
