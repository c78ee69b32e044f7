import re

import pytest

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = re.match(r"test_criterion_(\d+)", item.name)
    if not m:
        return
    number = int(m.group(1))
    doc = (item.obj.__doc__ or item.name).strip().splitlines()[0]
    ok, _ = _criteria.get(number, (True, doc))
    _criteria[number] = (ok and not rep.failed and not rep.skipped, doc)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_criteria):
        ok, doc = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {doc}")
