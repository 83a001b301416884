from fractions import Fraction

import pytest

from plcover.intervals import Type1 as T1, Type2 as T2

# The E = 8, p = 2 cover as printed in the source listing.  Entry 20 there
# reads I2(1503, 5, 13); the interval centred at 1503/(5 * 2^13) ~ 0.037 cannot
# sit between its neighbours (both ~0.147), while I2(1503, 5, 11) does.
PRINTED_E8 = [
    T1(1, 1), T1(1, 2), T1(3, 4), T1(45, 8), T2(7, 5, 3), T1(11, 6), T2(1, 3, 1),
    T1(5, 5), T1(155, 10), T2(3, 5, 2), T1(19, 7), T2(33, 7, 5), T1(603, 12),
    T2(5, 17, 1), T1(1203, 13), T2(47, 5, 6), T1(2405, 14), T2(16, 109, 0),
    T1(38477, 18), T2(155, 33, 5), T2(1503, 5, 13), T1(9619, 16), T2(263, 7, 8),
    T1(75, 9), T2(7, 3, 4), T1(37, 8), T2(1, 7, 0), T1(1, 3), T2(0, 1, 0),
]
TYPO_INDEX = 20
GOLDEN_E8 = list(PRINTED_E8)
GOLDEN_E8[TYPO_INDEX] = T2(1503, 5, 11)


def certificate_text(intervals, p=2, E=8, start="1/2", target="0/1", end=True):
    from plcover.intervals import format_interval

    lines = [f"PLCCOVER v1 p={p} E={E} start={start} target={target}"]
    lines += [format_interval(iv) for iv in intervals]
    if end:
        lines.append(f"END count={len(intervals)}")
    return "\n".join(lines) + "\n"


@pytest.fixture
def golden_e8():
    return list(GOLDEN_E8)


@pytest.fixture
def golden_cert(tmp_path):
    path = tmp_path / "golden.txt"
    path.write_text(certificate_text(GOLDEN_E8))
    return str(path)


HALF = Fraction(1, 2)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
