import pytest

# criterion id -> [title, status]
_criteria: dict[str, list] = {}


def _sort_key(cid: str):
    head, _, tail = cid.partition(" ")
    return int(head), tail


@pytest.fixture
def criterion(request):
    """Tag a test as an acceptance criterion; its outcome is echoed in the summary."""

    def register(cid, title: str):
        cid = str(cid)
        _criteria[cid] = [title, "FAIL"]
        request.node._criterion_id = cid

    yield register


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    cid = getattr(item, "_criterion_id", None)
    if cid is None:
        return
    if rep.skipped:
        _criteria[cid][1] = "SKIP"
    elif rep.when == "call":
        _criteria[cid][1] = "PASS" if rep.passed else "FAIL"
    elif rep.failed:
        _criteria[cid][1] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_criteria, key=_sort_key):
        title, status = _criteria[cid]
        terminalreporter.write_line(f"criterion {cid:<22} {status}  {title}")
