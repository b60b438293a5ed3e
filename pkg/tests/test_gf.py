import random

import pytest

from amlab.gf import (FieldError, artin_schreier_solve, field_with_modulus,
                      make_field, primitive_element, trace)


def brute_least_irreducible_quadratic(p):
    # oracle: a monic quadratic is irreducible iff it has no root
    for c0 in range(p):
        for c1 in range(p):
            if all((x * x + c1 * x + c0) % p != 0 for x in range(p)):
                return (c0, c1, 1)
    raise AssertionError("no irreducible quadratic found")


def test_make_field_prime():
    spec = make_field(3, 1)
    assert (spec.p, spec.k) == (3, 1)
    assert spec.order == 3


@pytest.mark.parametrize("p", [3, 5, 7, 13])
def test_make_field_quadratic_modulus_is_least(p):
    spec = make_field(p, 2)
    assert spec.modulus == brute_least_irreducible_quadratic(p)


def test_make_field_rejects_even_and_bad_input():
    with pytest.raises(FieldError, match="odd"):
        make_field(2, 1)
    with pytest.raises(FieldError, match="prime"):
        make_field(9, 1)
    with pytest.raises(FieldError):
        make_field(5, 0)


def test_modulus_root_satisfies_modulus():
    for (p, k) in [(3, 2), (3, 3), (3, 4), (5, 2), (7, 2), (7, 3)]:
        spec = make_field(p, k)
        t = spec.generator()
        acc = spec.zero()
        for i, c in enumerate(spec.modulus):
            acc = acc + spec.element(c) * t ** i
        assert acc.is_zero()


@pytest.mark.parametrize("p,want", [(3, 2), (5, 2), (7, 3), (11, 2), (13, 2)])
def test_primitive_element_examples(p, want):
    g = primitive_element(make_field(p, 1)).as_int()
    assert g == want
    # multiplicative order is exactly p - 1, by brute force
    seen, cur = set(), 1
    for _ in range(p - 1):
        cur = (cur * g) % p
        seen.add(cur)
    assert len(seen) == p - 1 and cur == 1


def test_trace_examples():
    f9 = make_field(3, 2)
    assert trace(f9.one()).as_int() == 2
    assert trace(f9.zero()).is_zero()
    f3 = make_field(3, 1)
    assert trace(f3.one()).as_int() == 1


@pytest.mark.parametrize("p,k", [(3, 1), (3, 2), (3, 3), (3, 5), (5, 1),
                                 (5, 2), (5, 3), (7, 1), (7, 2), (7, 3),
                                 (11, 1), (13, 1)])
def test_inverse_exhaustive_small_fields(p, k):
    spec = make_field(p, k)
    one = spec.one()
    for e in spec.elements():
        if not e.is_zero():
            assert e * e.inverse() == one


def test_inverse_randomized_above_343():
    spec = make_field(3, 7)  # 2187 elements
    rng = random.Random(11)
    els = list(spec.elements())
    for _ in range(300):
        e = rng.choice(els)
        if not e.is_zero():
            assert e * e.inverse() == spec.one()


@pytest.mark.parametrize("p,k", [(3, 2), (3, 4), (5, 2), (5, 3), (7, 3)])
def test_frobenius_iterated_k_times_is_identity(p, k):
    spec = make_field(p, k)
    for e in spec.elements():
        f = e
        for _ in range(k):
            f = f.frobenius()
        assert f == e


@pytest.mark.parametrize("p,k", [(3, 2), (3, 4), (3, 8), (5, 2), (5, 4),
                                 (7, 2), (7, 3), (13, 2)])
def test_trace_kernel_size(p, k):
    spec = make_field(p, k)
    assert sum(1 for e in spec.elements() if trace(e).is_zero()) == p ** (k - 1)


def test_trace_lands_in_prime_field_and_is_additive():
    spec = make_field(5, 3)
    rng = random.Random(3)
    els = list(spec.elements())
    for _ in range(100):
        a, b = rng.choice(els), rng.choice(els)
        assert trace(a + b) == trace(a) + trace(b)
        assert trace(a).spec.k == 1


def test_cross_field_arithmetic_rejected():
    a = make_field(3, 1).one()
    b = make_field(5, 1).one()
    with pytest.raises(FieldError, match="cross-field"):
        a + b
    c = make_field(3, 2).one()
    with pytest.raises(FieldError, match="cross-field"):
        a * c


def test_field_spec_json():
    spec = make_field(3, 2)
    assert spec.to_json_dict() == {"p": 3, "k": 2, "modulus": [1, 0, 1]}


def test_field_with_modulus_validates():
    # X^3 - X - 1 over F_3 is irreducible (no roots)
    spec = field_with_modulus(3, [2, 2, 0, 1])
    d = spec.element([0, 1, 0])
    assert d ** 3 - d == spec.element(1)
    with pytest.raises(FieldError, match="reducible"):
        field_with_modulus(3, [0, 0, 0, 1])  # X^3


@pytest.mark.parametrize("p,k", [(3, 2), (3, 3), (5, 2), (7, 2)])
def test_artin_schreier_solve_matches_trace_criterion(p, k):
    spec = make_field(p, k)
    for e in spec.elements():
        s = artin_schreier_solve(e)
        if trace(e).is_zero():
            assert s is not None and s ** p - s == e
        else:
            assert s is None
