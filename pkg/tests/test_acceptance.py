"""The acceptance suite: one test per criterion, one line printed each.

All tolerances are zero (exact arithmetic); randomized suites use
GBS_SEED (default 0).
"""

import pytest

from gliderbs.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA,
                         ids=[f"criterion-{i + 1}"
                              for i in range(len(CRITERIA))])
def test_acceptance(criterion, capsys):
    result = criterion()
    with capsys.disabled():
        status = "PASS" if result["ok"] else "FAIL"
        print(f"\n[acceptance {result['id']:2d}] {status}  "
              f"{result['detail']}")
    assert result["ok"], result["detail"]
