import pytest

from wreathavg import groups

# Catalog used throughout the acceptance criteria.
CATALOG = {
    "C2": lambda: groups.cyclic(2),
    "C3": lambda: groups.cyclic(3),
    "C4": lambda: groups.cyclic(4),
    "C2xC2": lambda: groups.direct_product(groups.cyclic(2), groups.cyclic(2)),
    "C5": lambda: groups.cyclic(5),
    "S3": lambda: groups.symmetric(3),
    "D4": lambda: groups.dihedral(4),
    "Q8": lambda: groups.quaternion8(),
    "C8": lambda: groups.cyclic(8),
}

P_GROUPS = {
    2: ["C2", "C4", "C2xC2", "D4", "Q8", "C8"],
    3: ["C3"],
    5: ["C5"],
}

_cache = {}


def group(name):
    if name not in _cache:
        _cache[name] = CATALOG[name]()
    return _cache[name]


@pytest.fixture(scope="session")
def catalog():
    return {name: group(name) for name in CATALOG}


# -- acceptance reporting ------------------------------------------------------

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if marker:
        number, text = marker
        prev = _acceptance.get(number, (text, True))
        _acceptance[number] = (text, prev[1] and report.passed)


def pytest_runtest_setup(item):
    m = item.get_closest_marker("criterion")
    if m:
        item.user_properties.append(("criterion", tuple(m.args)))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        text, ok = _acceptance[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {text}")
