"""Irreducible cyclic codes and their weight distributions by exhaustive enumeration.

Two independent routes are provided:

* :func:`weight_distribution_bruteforce` multiplies every message polynomial
  over GF(q) by the generator polynomial g(x) = (x^n - 1) / h_a(x);
* :func:`weight_distribution_trace` evaluates c(y)_i = Tr(y * gamma^(a*i))
  for every y in GF(q^k) and never touches g or h_a.
"""

from dataclasses import dataclass, replace
import itertools
import math

import numpy as np

from .field import MAX_FIELD_SIZE, FieldSpec, build_field
from .poly import (
    Polynomial,
    cyclotomic_coset,
    minimal_polynomial,
    poly,
    poly_divrem,
    poly_mul,
    x_pow_minus_one,
)

#: Largest number of codewords (or trace inputs) an oracle will enumerate.
MAX_CODEWORDS = 2**21

# rows * columns materialised at once by the oracles
_CHUNK = 2**22


@dataclass(frozen=True)
class WeightDistribution:
    """Sorted (weight, frequency) pairs, zero codeword included."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(sorted((int(w), int(f)) for w, f in self.entries))
        ws = [w for w, _ in entries]
        if len(set(ws)) != len(ws):
            raise ValueError(f"repeated weight in {entries}")
        if any(f <= 0 for _, f in entries):
            raise ValueError(f"non-positive frequency in {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_counts(cls, counts):
        """From a mapping weight -> count or an array indexed by weight."""
        if isinstance(counts, dict):
            items = counts.items()
        else:
            items = enumerate(np.asarray(counts).tolist())
        return cls(tuple((w, f) for w, f in items if f))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def as_dict(self):
        return dict(self.entries)

    @property
    def total(self):
        return sum(f for _, f in self.entries)

    @property
    def nonzero_weights(self):
        return [w for w, _ in self.entries if w]

    def enumerator(self, var="z"):
        """Render as 1+24z^20 style text."""
        terms = []
        for w, f in self.entries:
            if w == 0:
                terms.append(str(f))
                continue
            coef = "" if f == 1 else str(f)
            power = var if w == 1 else f"{var}^{w}"
            terms.append(coef + power)
        return "+".join(terms)

    def validate(self, q, dimension):
        if self.total != q**dimension:
            raise ValueError(f"frequencies sum to {self.total}, expected {q}^{dimension}")
        if self.as_dict().get(0) != 1:
            raise ValueError("zero codeword must appear exactly once")
        return self


@dataclass(frozen=True)
class CodeSpec:
    """The irreducible cyclic code over GF(q) with parity-check polynomial h_a(x)."""

    p: int
    t: int
    q: int
    k: int
    a: int
    n: int
    u: int
    dimension: int
    h: Polynomial
    g: Polynomial
    field: FieldSpec

    @property
    def delta(self):
        return (self.q**self.k - 1) // (self.q - 1)

    def describe(self):
        return (
            f"CodeSpec(q={self.q}=({self.p}^{self.t}), k={self.k}, a={self.a}, n={self.n}, "
            f"u={self.u}, dimension={self.dimension}, h={list(self.h.coeffs)}, "
            f"gamma={self.field.primitive_element}, modulus={self.field.modulus})"
        )


def code_parameters(q, k, a):
    """(n, u, delta) for exponent a, all integer arithmetic."""
    N = q**k - 1
    delta = N // (q - 1)
    n = N // math.gcd(N, a)
    u = math.gcd(delta, a)
    return n, u, delta


def analyze_code(p, t, k, a, field=None, max_size=MAX_FIELD_SIZE):
    """Build the CodeSpec for (q = p^t, k, a).

    ``field`` may supply a prebuilt GF(p^(t*k)), e.g. one with a non-default
    primitive element.
    """
    if t < 1 or k < 1:
        raise ValueError("t and k must be >= 1")
    if field is None:
        field = build_field(p, t * k, max_size=max_size)
    elif (field.p, field.m) != (p, t * k):
        raise ValueError(f"field is GF({field.p}^{field.m}), need GF({p}^{t * k})")
    q = p**t
    N = q**k - 1
    a %= N
    n, u, _ = code_parameters(q, k, a)
    h = minimal_polynomial(field, a, q)
    spec = CodeSpec(p, t, q, k, a, n, u, h.degree, h, None, field)
    return replace(spec, g=generator_polynomial(spec))


def generator_polynomial(spec):
    """g(x) = (x^n - 1) / h(x); a nonzero remainder means h does not divide."""
    quot, rem = poly_divrem(x_pow_minus_one(spec.field, spec.n), spec.h)
    if not rem.is_zero():
        raise AssertionError(f"h does not divide x^{spec.n} - 1 for {spec.describe()}")
    return quot


def _scaled_generator_rows(spec):
    """Array (dimension, q, n): s * x^j g(x) for each message position j and s in GF(q)."""
    F, n, d = spec.field, spec.n, spec.dimension
    rows = np.zeros((d, n), dtype=np.int64)
    g = np.array(spec.g.coeffs, dtype=np.int64)
    for j in range(d):
        rows[j, j : j + len(g)] = g
    symbols = F.subfield_elements(spec.q)
    return F.mul_array(symbols[None, :, None], rows[:, None, :])


def _check_enumerable(spec, limit):
    if spec.q**spec.dimension > limit:
        raise ValueError(f"{spec.q}^{spec.dimension} codewords exceeds enumeration bound {limit}")


def _span(F, scaled):
    """All sums over one choice per position; the last position is most significant."""
    out = scaled[0]
    for block in scaled[1:]:
        out = F.add(block[:, None, :], out[None, :, :]).reshape(-1, out.shape[-1])
    return out


def codewords(spec, limit=2**16):
    """Materialise every codeword as a (q^dimension, n) array of element codes.

    Row order follows the message integer whose base-q digits are the message
    coefficients (highest position most significant) over the sorted GF(q) codes.
    """
    _check_enumerable(spec, limit)
    return _span(spec.field, _scaled_generator_rows(spec))


def weight_distribution_bruteforce(spec, limit=MAX_CODEWORDS):
    """Exact distribution from all q^dimension products m(x) g(x)."""
    _check_enumerable(spec, limit)
    F, n, d, q = spec.field, spec.n, spec.dimension, spec.q
    scaled = _scaled_generator_rows(spec)
    low = 1
    while low < d and q ** (low + 1) * n <= _CHUNK:
        low += 1
    base = _span(F, scaled[:low])
    counts = np.zeros(n + 1, dtype=np.int64)
    for high in itertools.product(range(q), repeat=d - low):
        offset = np.zeros(n, dtype=np.int64)
        for j, s in zip(range(d - 1, low - 1, -1), high):
            offset = F.add(offset, scaled[j, s])
        words = F.add(base, offset[None, :])
        counts += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
    return WeightDistribution.from_counts(counts).validate(q, d)


def weight_distribution_trace(spec, limit=MAX_CODEWORDS):
    """Exact distribution from the trace description, independent of g and h."""
    F, n, q, k = spec.field, spec.n, spec.q, spec.k
    if F.size > limit:
        raise ValueError(f"{F.size} trace inputs exceeds enumeration bound {limit}")
    trace = F.trace_table(q, k)
    N = F.order
    steps = (spec.a * np.arange(n, dtype=np.int64)) % N
    counts = np.zeros(n + 1, dtype=np.int64)
    counts[0] = 1  # y = 0
    rows = max(1, _CHUNK // max(n, 1))
    for start in range(0, N, rows):
        logs = np.arange(start, min(start + rows, N), dtype=np.int64)
        words = trace[F.antilog_table[(logs[:, None] + steps[None, :]) % N]]
        counts += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
    mult = q ** (k - spec.dimension)
    if np.any(counts % mult):
        raise AssertionError(f"trace multiplicities not divisible by {mult} for {spec.describe()}")
    return WeightDistribution.from_counts(counts // mult).validate(q, spec.dimension)


def coset_size(q, k, a):
    """deg h_a without building the field."""
    N = q**k - 1
    return len(cyclotomic_coset(-a, N, q))


def is_cyclic_shift_closed(words):
    """True when the set of rows is closed under the cyclic shift."""
    rows = {tuple(r) for r in np.asarray(words).tolist()}
    return all(tuple(r[-1:] + r[:-1]) in rows for r in map(list, rows))


def column_nonzero_counts(words):
    return np.count_nonzero(np.asarray(words), axis=0)


def codeword_product(spec, message):
    """m(x) * g(x) for a message coefficient sequence over GF(q)."""
    return poly_mul(poly(spec.field, message), spec.g)
