import sys

import pytest

from sclab import build_catalog, builtin_group, group_from_expr


def lettered_s3():
    # builtin order: (), (1 2), (1 2 3), (1 3), (1 3 2), (2 3)
    return builtin_group("symmetric", 3).with_names("E A B C D K", label="S3")


def idx(g, names):
    """Sorted index tuple for a whitespace-separated list of element names."""
    return tuple(sorted(g.index(n) for n in names.split()))


@pytest.fixture(scope="session")
def s3():
    return lettered_s3()


@pytest.fixture(scope="session")
def z6():
    return group_from_expr("Z6")


@pytest.fixture(scope="session")
def d4():
    return group_from_expr("D4")


@pytest.fixture(scope="session")
def q8():
    return group_from_expr("Q8")


@pytest.fixture(scope="session")
def catalog24():
    return [(e, e.build()) for e in build_catalog(24)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.TITLES):
        if n not in mod.RESULTS:
            terminalreporter.write_line(f"criterion {n:2d}: NOT RUN  {mod.TITLES[n]}")
            continue
        ok, why = mod.RESULTS[n]
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {mod.TITLES[n]}"
        terminalreporter.write_line(line + ("" if ok else f"  ({why})"))
