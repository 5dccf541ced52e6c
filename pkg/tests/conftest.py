from fractions import Fraction as Q

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# every type the library builds at a size the oracles can afford
SMALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]
ALL_TYPES = SMALL_TYPES + [("A", 5), ("B", 5), ("C", 4), ("D", 5), ("F", 4), ("E", 6), ("E", 7), ("E", 8)]


def q(*items):
    return tuple(Q(c) for c in items)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    test_acceptance = mod
    terminalreporter.section("acceptance criteria")
    for k in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.RESULTS[k])
