"""Session-wide drawing registry and the acceptance summary.

Every :class:`Drawing` constructed in this process during the run is
recorded. At the end, each valid C0- or C1-drawing is checked against the
crossing ceilings of its class; a violation fails the session.
"""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oneplanar import drawing as drawing_mod  # noqa: E402
from oneplanar.bounds import bound_c0_max_crossings, bound_c1_max_crossings  # noqa: E402
from oneplanar.drawing import DrawingClass, is_valid, spec_overlap_class  # noqa: E402

RECORDED: list = []
ACCEPTANCE: dict[int, tuple[bool, str]] = {}

_original_post_init = drawing_mod.Drawing.__post_init__


def _recording_post_init(self) -> None:
    _original_post_init(self)
    RECORDED.append(self)


drawing_mod.Drawing.__post_init__ = _recording_post_init


def class_ceiling_violations(drawings) -> tuple[int, int, list[str]]:
    """(C0 checked, C1 checked, violation messages) over the valid drawings."""
    c0 = c1 = 0
    bad = []
    for d in drawings:
        if not is_valid(d):
            continue
        cls = spec_overlap_class(d.spec)[1]
        k, n = d.crossings, d.n
        if cls is DrawingClass.C0:
            c0 += 1
            if k > bound_c0_max_crossings(n):
                bad.append(f"C0-drawing with {k} crossings on {n} vertices")
        if cls <= DrawingClass.C1 and k > 0:
            c1 += 1
            if n <= 8 and k > 2:
                bad.append(f"C1-drawing with {k} > 2 crossings on {n} <= 8 vertices")
            if n >= 2 and k > bound_c1_max_crossings(n):
                bad.append(f"C1-drawing with {k} crossings on {n} vertices")
    return c0, c1, bad


def record_acceptance(number: int, passed: bool, detail: str, capture=None) -> None:
    ACCEPTANCE[number] = (passed, detail)
    line = f"ACCEPTANCE {number}: {'PASS' if passed else 'FAIL'} - {detail}"
    if capture is None:
        print(line)
        return
    with capture.global_and_fixture_disabled():
        sys.stdout.write(f"\n{line}\n")
        sys.stdout.flush()


@pytest.fixture
def acceptance(request):
    capture = request.config.pluginmanager.getplugin("capturemanager")
    return lambda number, passed, detail: record_acceptance(number, passed, detail, capture)


def pytest_sessionfinish(session, exitstatus):
    c0, c1, bad = class_ceiling_violations(RECORDED)
    session.config._drawing_registry = (len(RECORDED), c0, c1, bad)
    if bad:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    tr = terminalreporter
    total, c0, c1, bad = getattr(config, "_drawing_registry", (len(RECORDED), 0, 0, []))
    tr.section("drawing registry")
    tr.write_line(f"{total} drawings recorded; {c0} C0-drawings and {c1} crossed C1-drawings checked")
    for msg in bad[:20]:
        tr.write_line(f"VIOLATION: {msg}")
    if ACCEPTANCE:
        tr.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            passed, detail = ACCEPTANCE[number]
            tr.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}")


def pytest_collection_modifyitems(session, config, items):
    # The ceiling audit reads the registry, so it runs after everything else.
    last = [it for it in items if it.name == "test_criterion_4_class_ceilings"]
    items[:] = [it for it in items if it not in last] + last
