import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from irrcodes.field import build_field, prime_power, smallest_irreducible

from oracles import (
    has_root,
    irreducible_by_trial_division,
    naive_add,
    naive_mul,
    smallest_irreducible_bruteforce,
)

SMALL = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (7, 2), (3, 3), (2, 6)]

# smallest monic irreducibles, frozen from oracles.smallest_irreducible_bruteforce
FROZEN_MODULI = {
    (5, 2): (2, 0, 1),                  # x^2 + 2
    (3, 6): (2, 1, 0, 0, 0, 0, 1),      # x^6 + x + 2
    (2, 4): (1, 1, 0, 0, 1),            # x^4 + x + 1
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (7, 2): (1, 0, 1),                  # x^2 + 1
}


@pytest.fixture(params=SMALL, ids=lambda pm: f"GF({pm[0]}^{pm[1]})")
def field(request):
    return build_field(*request.param)


def test_prime_field_gf2():
    F = build_field(2, 1)
    assert F.size == 2
    assert F.primitive_element == 1
    assert F.modulus == (0, 1)
    assert F.add(1, 1) == 0
    assert F.element_order(1) == 1


@pytest.mark.parametrize("pm", sorted(FROZEN_MODULI))
def test_modulus_is_smallest_irreducible(pm):
    assert build_field(*pm).modulus == FROZEN_MODULI[pm]


@pytest.mark.parametrize("pm", [(5, 2), (3, 6), (2, 4), (7, 2), (3, 2), (2, 5)])
def test_modulus_matches_bruteforce_search(pm):
    assert smallest_irreducible(*pm) == smallest_irreducible_bruteforce(*pm)


def test_gf25_modulus_rootless_and_first():
    f = build_field(5, 2).modulus
    assert not has_root(f, 5)
    # every monic quadratic listed earlier has a root
    for c1 in range(5):
        for c0 in range(5):
            if (c1, c0) < (f[1], f[0]):
                assert has_root([c0, c1, 1], 5)


def test_modulus_irreducible_by_trial_division(field):
    if field.m > 1:
        assert irreducible_by_trial_division(list(field.modulus), field.p)


def test_invariants(field):
    N = field.order
    assert field.element_order(field.primitive_element) == N
    assert field.antilog_table[0] == 1
    nz = np.arange(1, field.size)
    assert np.array_equal(field.antilog_table[field.log_table[nz]], nz)
    assert sorted(field.antilog_table.tolist()) == list(range(1, field.size))


def test_primitive_element_is_smallest(field):
    smaller = range(1, field.primitive_element)
    assert all(field.element_order(g) < field.order for g in smaller)


def test_tables_match_schoolbook_arithmetic(field):
    p, m = field.p, field.m
    for x in range(field.size):
        for y in range(field.size):
            assert field.mul(x, y) == naive_mul(x, y, p, field.modulus)
            assert field.add(x, y) == naive_add(x, y, p, m)


def test_vectorised_matches_scalar(field):
    xs = field.elements()
    ys = xs[::-1]
    assert field.add(xs, ys).tolist() == [field.add(int(x), int(y)) for x, y in zip(xs, ys)]
    assert field.mul_array(xs, ys).tolist() == [field.mul(int(x), int(y)) for x, y in zip(xs, ys)]


def test_small_examples():
    F5 = build_field(5, 1)
    assert F5.inv(2) == 3
    assert F5.element_order(2) == 4
    assert [F5.pow(2, e) for e in range(1, 5)] == [2, 4, 3, 1]
    F25 = build_field(5, 2)
    g = F25.primitive_element
    assert F25.pow(g, 24) == 1
    assert all(F25.mul(x, 1) == x for x in range(25))


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        build_field(5, 2).inv(0)
    with pytest.raises(ValueError):
        build_field(5, 2).element_order(0)


@pytest.mark.parametrize("bad", [(4, 2), (1, 3), (6, 1), (5, 0)])
def test_bad_parameters(bad):
    with pytest.raises(ValueError):
        build_field(*bad)


def test_size_bound():
    with pytest.raises(ValueError):
        build_field(2, 22)
    with pytest.raises(ValueError):
        build_field(3, 5, max_size=100)


def test_deterministic():
    a = build_field.__wrapped__(3, 4)
    b = build_field.__wrapped__(3, 4)
    assert a == b
    assert np.array_equal(a.log_table, b.log_table)


def test_log_homomorphism(field):
    N = field.order
    for x in range(1, field.size):
        for y in range(1, field.size):
            assert field.log(field.mul(x, y)) == (field.log(x) + field.log(y)) % N


def test_frobenius_is_a_ring_map(field):
    p = field.p
    for x in range(field.size):
        for y in range(field.size):
            assert field.pow(field.add(x, y), p) == field.add(field.pow(x, p), field.pow(y, p))
            assert field.pow(field.mul(x, y), p) == field.mul(field.pow(x, p), field.pow(y, p))


def _subfield_sizes(F):
    return [F.p**t for t in range(1, F.m + 1) if F.m % t == 0]


def test_subfield_tests_agree(field):
    for q in _subfield_sizes(field):
        members = [x for x in range(field.size) if field.is_in_subfield(x, q)]
        assert members == [x for x in range(field.size) if field.frobenius(x, q) == x]
        assert len(members) == q
        assert field.subfield_elements(q).tolist() == members


def test_subfield_examples_gf25():
    F = build_field(5, 2)
    assert F.is_in_subfield(0, 5)
    assert F.is_in_subfield(F.exp(6), 5)
    assert not F.is_in_subfield(F.exp(1), 5)
    with pytest.raises(ValueError):
        F.is_in_subfield(1, 3)
    with pytest.raises(ValueError):
        build_field(2, 6).is_in_subfield(1, 16)


def test_trace_balanced_gf25():
    F = build_field(5, 2)
    values = [F.trace_to_subfield(x, 5, 2) for x in range(25)]
    assert values[0] == 0
    assert all(F.is_in_subfield(v, 5) for v in values)
    subfield = F.subfield_elements(5).tolist()
    assert sorted(values) == sorted(subfield * 5)


def test_trace_on_subfield_is_k_times(field):
    for q in _subfield_sizes(field):
        k = field.m // (prime_power(q)[1])
        for x in field.subfield_elements(q).tolist():
            assert field.trace_to_subfield(x, q, k) == field.scale(k, x)


def test_trace_table_matches_scalar(field):
    for q in _subfield_sizes(field):
        k = field.m // prime_power(q)[1]
        table = field.trace_table(q, k)
        assert table.tolist() == [field.trace_to_subfield(x, q, k) for x in range(field.size)]


def test_trace_shape_mismatch():
    with pytest.raises(ValueError):
        build_field(5, 2).trace_to_subfield(1, 5, 3)


def test_alternate_primitive_element():
    F = build_field(7, 2)
    alt = F.exp(5)  # gcd(5, 48) = 1
    G = build_field(7, 2, primitive_element=alt)
    assert G.primitive_element == alt
    assert G.modulus == F.modulus
    assert G.element_order(alt) == 48
    # same multiplication, different logs
    assert all(G.mul(x, y) == F.mul(x, y) for x in range(49) for y in range(49))
    with pytest.raises(ValueError):
        build_field(7, 2, primitive_element=F.exp(2))


@settings(max_examples=200, deadline=None)
@given(
    pm=st.sampled_from([(2, 8), (3, 5), (5, 3), (7, 3), (13, 2), (2, 12)]),
    data=st.data(),
)
def test_field_axioms_random(pm, data):
    F = build_field(*pm)
    el = st.integers(0, F.size - 1)
    x, y, z = data.draw(el), data.draw(el), data.draw(el)
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.add(F.add(x, y), z) == F.add(x, F.add(y, z))
    assert F.sub(F.add(x, y), y) == x
    assert F.add(x, F.neg(x)) == 0
    if x:
        assert F.mul(x, F.inv(x)) == 1
        assert F.order % F.element_order(x) == 0
        assert F.pow(x, F.element_order(x)) == 1
    assert F.mul(x, y) == naive_mul(x, y, F.p, F.modulus)


def test_prime_power():
    assert prime_power(64) == (2, 6)
    assert prime_power(27) == (3, 3)
    assert prime_power(13) == (13, 1)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            prime_power(bad)
