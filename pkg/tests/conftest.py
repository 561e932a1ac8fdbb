import re
from pathlib import Path

import pytest

from doobcodes.rings import GF4, GR16, OMEGA, OMEGA_BAR, PSI, ONE, ZERO

GOLDEN = Path(__file__).parent / "golden"

_SYMBOLS = {"": ONE, "w": OMEGA, "wb": OMEGA_BAR, "psi": PSI}
_TERM = re.compile(r"^(-?)(\d*)(w|wb|psi|)$")


def ring_expr(text: str) -> GR16:
    """Evaluate token notation such as '2wb+1', '-w', 'psi' in GR(4^2)."""
    total = ZERO
    for term in text.split("+"):
        sign, coef, sym = _TERM.match(term).groups()
        x = _SYMBOLS[sym]
        c = int(coef) if coef else 1
        for _ in range(c):
            total = total + (-x if sign else x)
    return total


def read_golden_matrix(name):
    """Golden matrix file -> (a_star columns over GR16, a_prime columns over GF4)."""
    rows = []
    for line in (GOLDEN / name).read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        left, right = line.split("|")
        rows.append((left.split(), right.split()))
    star = list(zip(*[[ring_expr(t) for t in left] for left, _ in rows]))
    prime = list(zip(*[[GF4(ring_expr(t).a, ring_expr(t).b) for t in right] for _, right in rows]))
    return star, prime


@pytest.fixture(scope="session")
def golden_dir():
    return GOLDEN


# criterion number -> (title, passed, seconds); filled by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, ok, secs = ACCEPTANCE[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {title} ({secs:.2f}s)")
