import itertools
import random

import pytest

from circleweights import (
    Dataset,
    complex_projective,
    product,
    reverse_orientation,
    sphere,
)


def cp2():
    return complex_projective(2, (0, 1, 2))


def generator_fixtures():
    """Named datasets built by the generators, all consistent."""
    base = {
        "S2[1]": sphere([1]),
        "S2[2]": sphere([2]),
        "S4[1,2]": sphere([1, 2]),
        "S4[2,2]": sphere([2, 2]),
        "S6[1,2,3]": sphere([1, 2, 3]),
        "CP1": complex_projective(1, (0, 1)),
        "CP2": cp2(),
        "CP2(0,1,3)": complex_projective(2, (0, 1, 3)),
        "CP2(0,2,4)": complex_projective(2, (0, 2, 4)),
        "CP3(0,1,3,7)": complex_projective(3, (0, 1, 3, 7)),
        "CP2(5,0,2)": complex_projective(2, (5, 0, 2)),
    }
    out = dict(base)
    for name, d in base.items():
        out[f"rev {name}"] = reverse_orientation(d)
    out["S2xS2"] = product(sphere([1]), sphere([1]))
    out["CP2xS2"] = product(cp2(), sphere([1]))
    out["CP2xCP2"] = product(cp2(), cp2())
    return out


def random_point_weights(rng, n_max=5, w_max=9):
    n = rng.randint(1, n_max)
    return tuple(rng.randint(1, w_max) for _ in range(n))


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def cp2_dataset():
    return cp2()


def brute_force_coefficient(sign, weights, w):
    """Coefficient of t^w by expanding each bracket 1 + 2t^a + 2t^2a + ... term by term."""
    choices = [range(w // a + 1) for a in weights]
    total = 0
    for js in itertools.product(*choices):
        if sum(j * a for j, a in zip(js, weights)) == w:
            term = 1
            for j in js:
                term *= 2 if j else 1
            total += term
    return sign * total


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and rep.when == "call":
        number, title = marker.args
        _acceptance.append((number, title, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(_acceptance):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} criterion {number}: {title}")
