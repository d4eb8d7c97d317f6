"""Exit criteria, one test per criterion.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import itertools
import random
import time

import pytest

from circleweights import (
    Dataset,
    FixedPoint,
    SearchSpace,
    build_pairing,
    check_min_weight_balance,
    check_parity,
    check_point_bound,
    closed_form_coefficient,
    complex_projective,
    contribution_series,
    effectiveness_gcd,
    enumerate_consistent,
    exact_constancy,
    pairing_violations,
    product,
    reverse_orientation,
    signature,
    sphere,
)
from circleweights.cli import main
from circleweights.document import dumps, loads
from circleweights.enumeration import Pruning, brute_force_consistent
from circleweights.index import coefficient_terms, constant_by_polynomials, first_nonzero_order

from conftest import generator_fixtures

SEED = 20261015


@pytest.mark.acceptance(1, "worked example: t^3 coefficient of (+1, {1,2,3}) is 6 = 4 + 2")
def test_criterion_1_worked_example():
    p = FixedPoint("p", 1, (1, 2, 3))
    start = time.perf_counter()
    closed = closed_form_coefficient(p, 3)
    series = contribution_series(p, 3)[3]
    elapsed = time.perf_counter() - start
    terms = dict(coefficient_terms(p, 3))
    assert terms[(1, 1, 0)] == 4
    assert terms[(0, 0, 1)] == 2
    assert elapsed < 1e-3
    assert closed == series
    # The stated value; the full expansion also contains j=(3,0,0) -> 2,
    # so both methods return 8 and this assertion fails.
    assert (closed, series) == (6, 6), f"closed form {closed}, series {series}; terms {terms}"


@pytest.mark.acceptance(2, "closed form == series on 1000 random points, w = 1..40, < 10 s")
def test_criterion_2_oracle_equivalence():
    rng = random.Random(SEED)
    start = time.perf_counter()
    mismatches = []
    for _ in range(1000):
        n = rng.randint(1, 5)
        p = FixedPoint("p", rng.choice((1, -1)), tuple(rng.randint(1, 9) for _ in range(n)))
        s = contribution_series(p, 40)
        for w in range(1, 41):
            if closed_form_coefficient(p, w) != s[w]:
                mismatches.append((p, w))
    elapsed = time.perf_counter() - start
    assert mismatches == []
    assert elapsed < 10, f"took {elapsed:.2f} s"


def _random_consistent(rng):
    kind = rng.randrange(4)
    if kind == 0:
        d = sphere([rng.randint(1, 6) for _ in range(rng.randint(1, 3))])
    elif kind == 1:
        n = rng.randint(1, 3)
        d = complex_projective(n, rng.sample(range(-6, 7), n + 1))
    elif kind == 2:
        d = product(sphere([rng.randint(1, 4)]),
                    complex_projective(2, rng.sample(range(0, 6), 3)))
    else:
        d = product(sphere([rng.randint(1, 3)]), sphere([rng.randint(1, 3)]))
    return reverse_orientation(d) if rng.random() < 0.5 else d


def _random_dataset(rng):
    n = rng.randint(1, 3)
    k = rng.randint(1, 5)
    return Dataset.from_pairs([(rng.choice((1, -1)), [rng.randint(1, 4) for _ in range(n)])
                               for _ in range(k)])


def _perturbed(rng, d):
    points = list(d.points)
    i = rng.randrange(len(points))
    ws = list(points[i].weights)
    ws[rng.randrange(len(ws))] += 1
    points[i] = FixedPoint(points[i].id, points[i].sign, tuple(ws))
    return Dataset(d.n, tuple(points))


@pytest.mark.acceptance(3, "polynomial and series constancy branches agree; CP^n signatures")
def test_criterion_3_exact_constancy():
    rng = random.Random(SEED)
    datasets = []
    for i in range(200):
        if i % 3 == 0:
            datasets.append(_random_consistent(rng))
        elif i % 3 == 1:
            datasets.append(_perturbed(rng, _random_consistent(rng)))
        else:
            datasets.append(_random_dataset(rng))
    verdicts = []
    for d in datasets:
        by_poly = constant_by_polynomials(d)
        by_series = first_nonzero_order(d) is None
        assert by_poly == by_series, d
        verdicts.append(by_poly)
    assert 50 <= sum(verdicts) <= 150, "mix should hold both kinds"

    for n, a in [(1, (0, 3)), (2, (0, 1, 3)), (3, (0, 1, 3, 7)), (4, (0, 1, 3, 7, 12))]:
        v = exact_constancy(complex_projective(n, a))
        assert v.is_constant
        assert v.constant_value == (1 if n % 2 == 0 else 0)


def _sweep_datasets():
    out = []
    for n, k, B in itertools.product((1, 2), range(5), (1, 2, 3)):
        out.extend(enumerate_consistent(SearchSpace(n, k, B)))
    out.extend(generator_fixtures().values())
    return out


@pytest.mark.acceptance(4, "parity, min-weight balance, pairing, point bound over sweep")
def test_criterion_4_theorem_sweeps():
    datasets = _sweep_datasets()
    assert len(datasets) > 50
    violations = []
    for d in datasets:
        if not d.points:
            continue
        assert exact_constancy(d).is_constant
        for w in d.weight_values():
            if not check_parity(d, w).even:
                violations.append(("parity", d, w))
        if not check_min_weight_balance(d).balanced:
            violations.append(("min-weight", d))
        problems = pairing_violations(d, build_pairing(d))
        if problems:
            violations.append(("pairing", d, problems))
        if effectiveness_gcd(d) == 1:
            for w in d.weight_values():
                if w % 2:
                    for q in d.ids:
                        if not check_point_bound(d, w, q):
                            violations.append(("bound", d, w, q))
    assert violations == []


@pytest.mark.acceptance(5, "enumerator ground truth, < 5 s, identical with 1 and 8 workers")
def test_criterion_5_enumerator():
    spaces = [SearchSpace(1, 2, 2), SearchSpace(1, 1, 3), SearchSpace(1, 3, 2)]
    start = time.perf_counter()
    results = [list(enumerate_consistent(s)) for s in spaces]
    elapsed = time.perf_counter() - start
    assert results[0] == [sphere([1]).canonical(), sphere([2]).canonical()]
    assert results[1] == [] and results[2] == []
    for s, got in zip(spaces, results):
        assert got == list(enumerate_consistent(s, pruning=Pruning.none()))
        assert got == brute_force_consistent(s)
    assert elapsed < 5
    for s in spaces + [SearchSpace(2, 4, 3)]:
        assert list(enumerate_consistent(s, workers=1)) == list(enumerate_consistent(s, workers=8))


@pytest.mark.acceptance(6, "signature multiplies under product, negates under reversal")
def test_criterion_6_structural_identities():
    fixtures = list(generator_fixtures().values())
    checked = 0
    for d1, d2 in itertools.product(fixtures, repeat=2):
        if d1.n + d2.n > 5:
            continue
        p = product(d1, d2)
        assert exact_constancy(p).is_constant
        assert signature(p) == signature(d1) * signature(d2)
        checked += 1
    for d in fixtures:
        r = reverse_orientation(d)
        assert exact_constancy(r).is_constant
        assert signature(r) == -signature(d)
    assert checked > 100


@pytest.mark.acceptance(7, "document round trip; exit codes 0, 1, 2, 3")
def test_criterion_7_cli_contract(tmp_path, capsys):
    for name, d in generator_fixtures().items():
        assert loads(dumps(d)) == (d, []), name

    good = tmp_path / "cp2.json"
    good.write_text(dumps(complex_projective(2, (0, 1, 2))))
    bad = tmp_path / "bad.json"
    bad.write_text(dumps(Dataset.from_pairs([(1, [1]), (-1, [2])])))
    broken = tmp_path / "broken.json"
    broken.write_text('{"dimension": 2, "fixed_points": [{"id": "a"}]}')

    assert main(["check", str(good)]) == 0
    assert "constant: 1" in capsys.readouterr().out
    assert main(["check", str(bad)]) == 1
    assert "first_failing_order: 1" in capsys.readouterr().out
    assert main(["check", str(broken)]) == 2
    assert main(["enum", "--n", "2", "--points", "4", "--max-weight", "3", "--limit", "10"]) == 3
