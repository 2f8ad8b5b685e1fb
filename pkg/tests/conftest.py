"""Shared fixture builders plus the acceptance summary lines."""
import re

import pytest

from gradedalg.cohomology import Cochain2, FinAbGroup
from gradedalg.galg import build_twisted_group_algebra
from gradedalg.hostcat import GradedVecContext, RepContext
from gradedalg.linalg import Matrix
from gradedalg.scalars import ONE, ZERO, integer

MINUS = integer(-1)

Z2 = FinAbGroup((2,))
Z22 = FinAbGroup((2, 2))


def super_braiding():
    return Cochain2.from_function(Z2, lambda a, b: MINUS if a[0] * b[0] % 2 else ONE)


def z22_braiding():
    return Cochain2.from_function(
        Z22, lambda s, t: MINUS if (s[0] * t[1] + s[1] * t[0]) % 2 else ONE)


@pytest.fixture(scope="session")
def super_host():
    return GradedVecContext(Z2, super_braiding())


@pytest.fixture(scope="session")
def super_tga(super_host):
    return build_twisted_group_algebra(super_host, Z2, Cochain2.trivial(Z2))


@pytest.fixture(scope="session")
def plain_host():
    return GradedVecContext(Z2, Cochain2.trivial(Z2))


@pytest.fixture(scope="session")
def plain_tga(plain_host):
    return build_twisted_group_algebra(plain_host, Z2, Cochain2.trivial(Z2))


@pytest.fixture(scope="session")
def z22_host():
    return GradedVecContext(Z22, z22_braiding())


@pytest.fixture(scope="session")
def z22_tga(z22_host):
    return build_twisted_group_algebra(z22_host, Z22, Cochain2.trivial(Z22))


def d4_context():
    """The dihedral group of order 8 as a RepCat host, row r^k s^e."""
    elems = [(k, e) for e in range(2) for k in range(4)]
    idx = {g: i for i, g in enumerate(elems)}

    def mul(a, b):
        (k, e), (l, d) = a, b
        return ((k + (l if e == 0 else -l)) % 4, (e + d) % 2)

    table = [[idx[mul(a, b)] for b in elems] for a in elems]
    names = [f"r{k}s{e}" for (k, e) in elems]
    return RepContext(table, names), elems


def d4_character(rctx, elems, a, b):
    mats = [Matrix([[integer((-1) ** (a * k + b * e))]], ncols=1) for (k, e) in elems]
    return rctx.object(mats)


def d4_irrep2(rctx, elems):
    R = Matrix([[ZERO, MINUS], [ONE, ZERO]], ncols=2)
    S = Matrix([[ONE, ZERO], [ZERO, MINUS]], ncols=2)

    def rho(k, e):
        m = Matrix.identity(2)
        for _ in range(k):
            m = R @ m
        if e:
            m = m @ S
        return m

    return rctx.object([rho(k, e) for (k, e) in elems])


@pytest.fixture(scope="session")
def d4():
    rctx, elems = d4_context()
    lines = {g: d4_character(rctx, elems, *g) for g in Z22.elements}
    alg, frob = build_twisted_group_algebra(rctx, Z22, Cochain2.trivial(Z22), lines)
    return {
        "ctx": rctx,
        "elems": elems,
        "lines": lines,
        "algebra": alg,
        "frobenius": frob,
        "irrep2": d4_irrep2(rctx, elems),
    }


# -- acceptance summary -------------------------------------------------

CRITERIA = {
    1: "obstruction dichotomy on Z/2",
    2: "twisted group algebra structure for Z/2, Z/3, Z/4, (Z/2)^2",
    3: "coboundary twists are isomorphic, non-coboundary twists are not",
    4: "bicharacter criterion for braided promotion of right modules",
    5: "coequalizer and idempotent tensor products agree on seeded pairs",
    6: "graded Schur lemma on the D4 fixture with gauge invariance",
    7: "twisted interchange law, exhaustive on both braided fixtures",
    8: "mul-monoidality criterion and s2 o t2 = p",
    9: "Ind(x (x) y) matches Ind x (x)_A Ind y with even correspondence",
}

_outcomes = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if m:
        _outcomes[int(m.group(1))] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n in _outcomes:
            verdict = "PASS" if _outcomes[n] == "passed" else "FAIL"
        else:
            verdict = "NOT RUN"
        terminalreporter.write_line(f"criterion {n}: {verdict} - {CRITERIA[n]}")
