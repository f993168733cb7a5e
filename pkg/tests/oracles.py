"""Slow, independent reference computations used to freeze expected values.

Nothing here imports the package under test.
"""

import itertools


def poly_mod(a, f, p):
    a = [c % p for c in a]
    while len(a) >= len(f):
        c = a[-1] * pow(f[-1], -1, p) % p
        shift = len(a) - len(f)
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        a.pop()
    return a + [0] * (len(f) - 1 - len(a))


def has_root(f, p):
    return any(sum(c * pow(x, i, p) for i, c in enumerate(f)) % p == 0 for x in range(p))


def monic_polys(p, d):
    """All monic polynomials of degree d, coefficients low -> high."""
    for low in itertools.product(range(p), repeat=d):
        yield list(low) + [1]


def irreducible_by_trial_division(f, p):
    """No monic factor of degree 1..deg(f)//2 divides f."""
    m = len(f) - 1
    for d in range(1, m // 2 + 1):
        for g in monic_polys(p, d):
            if not any(poly_mod(f, g, p)):
                return False
    return True


def smallest_irreducible_bruteforce(p, m):
    """Scan monic degree-m polynomials in the order (c_{m-1}, ..., c_0) as a base-p integer."""
    for digits in itertools.product(range(p), repeat=m):  # digits[0] = c_{m-1}
        f = list(reversed(digits)) + [1]
        if irreducible_by_trial_division(f, p):
            return tuple(f)


def code_to_poly(x, p, m):
    return [(x // p**i) % p for i in range(m)]


def poly_to_code(c, p):
    return sum(v * p**i for i, v in enumerate(c))


def naive_mul(x, y, p, modulus):
    """Schoolbook product of element codes modulo the given modulus."""
    m = len(modulus) - 1
    a, b = code_to_poly(x, p, m), code_to_poly(y, p, m)
    prod = [0] * (2 * m - 1)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            prod[i + j] += u * v
    return poly_to_code(poly_mod(prod, list(modulus), p), p)


def naive_add(x, y, p, m):
    a, b = code_to_poly(x, p, m), code_to_poly(y, p, m)
    return poly_to_code([(u + v) % p for u, v in zip(a, b)], p)
