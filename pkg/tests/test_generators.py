import itertools

import pytest

from circleweights import (
    Dataset,
    InvalidWeightError,
    complex_projective,
    effectiveness_gcd,
    exact_constancy,
    product,
    reverse_orientation,
    signature,
    sphere,
    validate,
)

from conftest import generator_fixtures


@pytest.mark.parametrize("weights", [[4], [1, 2, 3], [2, 2]])
def test_sphere(weights):
    d = sphere(weights)
    assert [(p.sign, list(p.weights)) for p in d] == [(1, weights), (-1, weights)]
    assert signature(d) == 0


def test_sphere_gcd_and_errors():
    assert effectiveness_gcd(sphere([2, 2])) == 2
    with pytest.raises(InvalidWeightError):
        sphere([])
    with pytest.raises(InvalidWeightError):
        sphere([1, 0])


def test_cp2_data():
    d = complex_projective(2, (0, 1, 2))
    assert [(p.sign, p.weights) for p in d] == [(1, (1, 2)), (-1, (1, 1)), (1, (1, 2))]
    assert signature(d) == 1


def test_cp1_is_a_sphere():
    d = complex_projective(1, (0, 1))
    assert d.canonical() == sphere([1]).canonical()
    assert signature(d) == 0


def test_cp2_generic_exponents():
    d = complex_projective(2, (0, 1, 3))
    assert [(p.sign, p.weights) for p in d] == [(1, (1, 3)), (-1, (1, 2)), (1, (2, 3))]
    v = exact_constancy(d)
    assert v.is_constant and v.constant_value == 1


def test_cpn_degenerate():
    with pytest.raises(ValueError):
        complex_projective(2, (0, 1, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_cpn_signature(n):
    a = [k * k + k for k in range(n + 1)]
    d = complex_projective(n, a)
    assert d.sign_sum() == (1 if n % 2 == 0 else 0)
    if n <= 4:
        assert signature(d) == d.sign_sum()


def test_product_examples(cp2_dataset):
    d = product(sphere([1]), sphere([1]))
    assert (d.n, len(d), signature(d)) == (2, 4, 0)
    d = product(cp2_dataset, sphere([1]))
    assert (len(d), signature(d)) == (6, 0)
    d = product(cp2_dataset, cp2_dataset)
    assert (d.n, len(d), signature(d)) == (4, 9, 1)
    assert d.points[1].id == "(p0|p1)"
    assert d.points[1].weights == (1, 2, 1, 1)
    assert d.points[1].sign == -1


def test_reverse_orientation(cp2_dataset):
    s = sphere([3])
    assert reverse_orientation(s).canonical() == s.canonical()
    assert signature(reverse_orientation(cp2_dataset)) == -1
    assert reverse_orientation(reverse_orientation(cp2_dataset)) == cp2_dataset


@pytest.mark.parametrize("name, d", list(generator_fixtures().items()))
def test_generated_data_is_valid_and_consistent(name, d):
    assert validate(d).ok
    assert exact_constancy(d).is_constant


def test_structural_identities_on_pairs():
    fixtures = [d for d in generator_fixtures().values() if d.n <= 3]
    for d1, d2 in itertools.product(fixtures, repeat=2):
        if d1.n + d2.n > 4:
            continue
        assert signature(product(d1, d2)) == signature(d1) * signature(d2)
    for d in fixtures:
        assert signature(reverse_orientation(d)) == -signature(d)
