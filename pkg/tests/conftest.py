import functools
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from operadpbw.corpus import builtin  # noqa: E402

BUILTINS = ["assoc-ns", "assoc", "com", "lie", "poisson", "perm", "prelie",
            "tot-assoc-3", "part-assoc-3", "m-dend(2)", "m-dend(3)"]


@functools.lru_cache(maxsize=None)
def cached_builtin(name):
    """Shared parsed builtin, so memoized ideals are reused across tests."""
    return builtin(name)


@pytest.fixture
def get():
    return cached_builtin


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    RESULTS = getattr(mod, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int(k.split(".")[0]), k)):
        ok, detail = RESULTS[key]
        terminalreporter.write_line("criterion %-6s %s  %s" % (key, "PASS" if ok else "FAIL", detail))
