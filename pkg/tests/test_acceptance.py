"""Acceptance criteria, zero tolerance.

Each criterion runs the corresponding report section and passes only if every
claim in it passes. One summary line per criterion is printed at the end of
the session (see conftest.py).
"""

import pytest

from carpet_ext.report import CRITERIA

RESULTS: list[str] = []


@pytest.mark.parametrize("index", range(len(CRITERIA)), ids=[t for t, _ in CRITERIA])
def test_criterion(index):
    title, fn = CRITERIA[index]
    claims = fn()
    failed = [c for c in claims if not c.passed]
    status = "PASS" if not failed and claims else "FAIL"
    line = f"criterion {index + 1} ({title}): {status}, {len(claims) - len(failed)}/{len(claims)} claims"
    RESULTS.append(line)
    print(line)
    for c in failed:
        print("  " + c.line())
    assert claims, "criterion produced no claims"
    if failed:
        pytest.fail("\n".join(c.line() for c in failed), pytrace=False)
