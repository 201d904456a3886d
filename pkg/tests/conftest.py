import pytest

ACCEPTANCE_COUNT = 13
_results: dict[int, tuple[bool, str]] = {}


class _Recorder:
    def __call__(self, number: int, ok: bool, detail: str) -> None:
        _results[number] = (ok, detail)
        print(f"ACCEPTANCE {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail


@pytest.fixture
def acceptance():
    """Record one acceptance criterion's verdict and fail the test if it did not hold."""
    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in range(1, ACCEPTANCE_COUNT + 1):
        if number in _results:
            ok, detail = _results[number]
            terminalreporter.write_line(f"ACCEPTANCE {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        else:
            terminalreporter.write_line(f"ACCEPTANCE {number:2d}: FAIL  not run")
