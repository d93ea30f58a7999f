import pytest

from bentcodes import build_code, make_field
from bentcodes.bentvec import gold_trace_family, select_components
from bentcodes.lincode import LinearCode, rm1_generator


@pytest.fixture(scope="session")
def gf16():
    return make_field(4)


@pytest.fixture(scope="session")
def gf64():
    return make_field(6)


@pytest.fixture(scope="session")
def vec_m2(gf16):
    # the only Gold-trace choice at m=2: exponent 2^2+1, a = generator
    return gold_trace_family(gf16, i=2)


@pytest.fixture(scope="session")
def vec_m3(gf64):
    return gold_trace_family(gf64, i=1)


@pytest.fixture(scope="session")
def code_m2_l1(gf16, vec_m2):
    return build_code(rm1_generator(gf16), select_components(vec_m2, [1]))


@pytest.fixture(scope="session")
def code_m2_l2(gf16, vec_m2):
    return build_code(rm1_generator(gf16), vec_m2)


@pytest.fixture(scope="session")
def code_m3_l1(gf64, vec_m3):
    return build_code(rm1_generator(gf64), select_components(vec_m3, [1]))


@pytest.fixture(scope="session")
def code_m3_l3(gf64, vec_m3):
    return build_code(rm1_generator(gf64), vec_m3)


@pytest.fixture(scope="session")
def rm14(gf16):
    return LinearCode(rm1_generator(gf16))


#  acceptance reporting: one line per criterion after the run

CRITERIA = {
    1: "weight enumerators exact",
    2: "pair span/enumerator equivalence, exhaustive 448x447",
    3: "census: 56 codes, 28 classes of 16",
    4: "2-designs with the stated lambda, both weight classes",
    5: "intersection spectra",
    6: "symmetric-difference property of the symmetric designs",
    7: "minimum-weight codewords span each code",
    8: "derived designs",
    9: "sufficient-condition strength gap at m=3",
    10: "property suites",
}

_acceptance_results = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    num = int(report.nodeid.split("test_criterion_")[1][:2])
    if report.when == "call":
        _acceptance_results[num] = report.outcome
    elif report.when == "setup" and report.outcome != "passed":
        _acceptance_results[num] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        outcome = _acceptance_results.get(num, "not run")
        word = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}.get(
            outcome, outcome.upper()
        )
        terminalreporter.write_line(f"criterion {num:2d} ({CRITERIA[num]}): {word}")
