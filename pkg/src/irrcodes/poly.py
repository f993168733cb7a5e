"""Dense polynomials over a finite field, cyclotomic cosets, minimal polynomials."""

from dataclasses import dataclass
import math

from .field import FieldSpec


@dataclass(frozen=True)
class Polynomial:
    """coeffs[i] is the coefficient of x^i; no trailing zeros (zero poly is ())."""

    field: FieldSpec
    coeffs: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"


def poly(field, coeffs):
    return Polynomial(field, tuple(coeffs))


def x_pow_minus_one(field, n):
    """x^n - 1."""
    return poly(field, [field.neg(1)] + [0] * (n - 1) + [1])


def _same_field(u, v):
    if u.field is not v.field and u.field != v.field:
        raise ValueError("polynomials over different fields")


def poly_add(u, v):
    _same_field(u, v)
    F = u.field
    a, b = u.coeffs, v.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return poly(F, out)


def poly_neg(u):
    return poly(u.field, [u.field.neg(c) for c in u.coeffs])


def poly_sub(u, v):
    return poly_add(u, poly_neg(v))


def poly_mul(u, v):
    _same_field(u, v)
    F = u.field
    if u.is_zero() or v.is_zero():
        return poly(F, [])
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(v.coeffs):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly(F, out)


def poly_divrem(u, v):
    """Return (quotient, remainder) with u = quotient*v + remainder."""
    _same_field(u, v)
    if v.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    F = u.field
    r = list(u.coeffs)
    dv = v.degree
    if len(r) - 1 < dv:
        return poly(F, []), u
    lead_inv = F.inv(v.coeffs[-1])
    quot = [0] * (len(r) - dv)
    for i in range(len(r) - 1, dv - 1, -1):
        c = r[i]
        if c == 0:
            continue
        c = F.mul(c, lead_inv)
        quot[i - dv] = c
        for j, b in enumerate(v.coeffs):
            r[i - dv + j] = F.sub(r[i - dv + j], F.mul(c, b))
    return poly(F, quot), poly(F, r[:dv])


def poly_eval(u, x):
    F = u.field
    acc = 0
    for c in reversed(u.coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


@dataclass(frozen=True)
class CyclotomicCoset:
    representative: int
    members: tuple
    modulus: int
    base: int

    def __len__(self):
        return len(self.members)

    def __contains__(self, a):
        return a % self.modulus in self.members

    def __str__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


def cyclotomic_coset(a, N, q):
    """The orbit of a mod N under multiplication by q."""
    if N < 1:
        raise ValueError(f"modulus must be >= 1, got {N}")
    if math.gcd(q, N) != 1:
        raise ValueError(f"gcd({q}, {N}) != 1")
    a %= N
    members = [a]
    x = a * q % N
    while x != a:
        members.append(x)
        x = x * q % N
    members = tuple(sorted(members))
    return CyclotomicCoset(members[0], members, N, q)


def cyclotomic_cosets(N, q):
    """All cosets mod N, ordered by representative."""
    seen = set()
    out = []
    for a in range(N):
        if a not in seen:
            c = cyclotomic_coset(a, N, q)
            seen.update(c.members)
            out.append(c)
    return out


def minimal_polynomial(F, a, q):
    """Minimal polynomial over GF(q) of gamma**(-a), with coefficients as codes of F.

    h_a(x) = prod (x - gamma^j) over j in the coset of -a mod (|F| - 1).
    """
    F.subfield_degree(q)
    N = F.order
    coset = cyclotomic_coset(-a, N, q)
    h = poly(F, [1])
    for j in coset.members:
        h = poly_mul(h, poly(F, [F.neg(F.exp(j)), 1]))
    if not all(F.is_in_subfield(c, q) for c in h.coeffs):
        raise AssertionError(f"minimal polynomial of gamma^-{a} left GF({q})")
    return h
