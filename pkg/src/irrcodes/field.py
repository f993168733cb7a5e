"""Table-driven arithmetic in GF(p^m).

Elements are plain integers: the code of a residue class c_0 + c_1 x + ...
+ c_{m-1} x^{m-1} is sum(c_i * p**i).  Code 0 is the additive zero and
code 1 is the multiplicative one.  Nonzero products go through log/antilog
tables built against a fixed primitive element.

Most element-wise methods accept either Python ints or integer numpy arrays.
"""

from functools import lru_cache
import math

import numpy as np

#: Largest field (number of elements) build_field will construct by default.
MAX_FIELD_SIZE = 2**21


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n):
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q):
    """Return (p, t) with q == p**t, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = prime_factors(q)
    if len(p) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = p[0]
    t = round(math.log(q, p))
    while p**t < q:
        t += 1
    while p**t > q:
        t -= 1
    return p, t


# -- GF(p)[x] helpers, coefficient lists low -> high, used only for the modulus search

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    a = _trim([c % p for c in a])
    inv_lead = pow(f[-1], -1, p)
    df = len(f) - 1
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, f, p)


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(f, p):
    """Ben-Or test: f has no factor of degree d for any d <= deg f / 2."""
    m = len(f) - 1
    x = [0, 1]
    xp = x
    for _ in range(m // 2):
        # xp <- xp^p mod f
        r, base, e = [1], xp, p
        while e:
            if e & 1:
                r = _pmulmod(r, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        xp = r
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, diff, p)) > 1:
            return False
    return True


def smallest_irreducible(p, m):
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    Coefficients are returned low -> high (length m + 1).  Candidates are
    ordered by the integer whose base-p digits are (c_{m-1}, ..., c_0).
    """
    if m == 1:
        return (0, 1)
    for r in range(p**m):
        low = [(r // p**i) % p for i in range(m)]
        if low[0] == 0:
            continue
        f = low + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


class FieldSpec:
    """A concrete GF(p^m) with log/antilog tables.

    Build instances with :func:`build_field`; treat them as read-only.
    """

    def __init__(self, p, m, modulus, primitive_element, log_table, antilog_table):
        self.p = p
        self.m = m
        self.size = p**m
        self.order = self.size - 1
        self.modulus = modulus
        self.primitive_element = primitive_element
        self.log_table = log_table
        self.antilog_table = antilog_table
        self._weights = [p**i for i in range(m)]
        self._trace_cache = {}

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={self.modulus}, gamma={self.primitive_element})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.m, self.modulus, self.primitive_element)
            == (other.p, other.m, other.modulus, other.primitive_element)
            and np.array_equal(self.antilog_table, other.antilog_table)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus, self.primitive_element))

    @property
    def one(self):
        return 1

    def elements(self):
        return np.arange(self.size, dtype=np.int64)

    def check(self, x):
        if not 0 <= x < self.size:
            raise ValueError(f"{x} is not an element code of GF({self.p}^{self.m})")
        return x

    # -- additive structure (digit-wise mod p)

    def add(self, x, y):
        if self.p == 2:
            return x ^ y
        p = self.p
        r = 0
        for w in self._weights:
            r = r + ((x // w + y // w) % p) * w
        return r

    def neg(self, x):
        if self.p == 2:
            return x
        p = self.p
        r = 0
        for w in self._weights:
            r = r + ((-(x // w)) % p) * w
        return r

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scale(self, c, x):
        """Multiply x by the prime-field integer c."""
        p = self.p
        c %= p
        r = 0
        for w in self._weights:
            r = r + ((c * (x // w)) % p) * w
        return r

    # -- multiplicative structure (log tables)

    def log(self, x):
        if x == 0:
            raise ZeroDivisionError("log of zero")
        return int(self.log_table[x])

    def exp(self, e):
        """gamma**e."""
        return int(self.antilog_table[e % self.order])

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        return int(self.antilog_table[(self.log_table[x] + self.log_table[y]) % self.order])

    def mul_array(self, x, y):
        """Element-wise product of two broadcastable code arrays."""
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        idx = (self.log_table[x] + self.log_table[y]) % self.order
        return np.where((x == 0) | (y == 0), 0, self.antilog_table[idx])

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return int(self.antilog_table[(-self.log_table[x]) % self.order])

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, e):
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return int(self.antilog_table[(int(self.log_table[x]) * e) % self.order])

    def element_order(self, x):
        if x == 0:
            raise ValueError("zero has no multiplicative order")
        return self.order // math.gcd(self.order, int(self.log_table[x]))

    # -- subfields and trace

    def subfield_degree(self, q):
        """t with q == p**t, after checking GF(q) is a subfield."""
        p, t = prime_power(q)
        if p != self.p or self.m % t:
            raise ValueError(f"GF({q}) is not a subfield of GF({self.p}^{self.m})")
        return t

    def is_in_subfield(self, x, q):
        self.subfield_degree(q)
        if x == 0:
            return True
        delta = self.order // (q - 1)
        return int(self.log_table[x]) % delta == 0

    def subfield_elements(self, q):
        """The elements of GF(q), as codes, ascending."""
        self.subfield_degree(q)
        delta = self.order // (q - 1)
        nz = self.antilog_table[np.arange(0, self.order, delta)]
        return np.sort(np.concatenate([[0], nz]).astype(np.int64))

    def frobenius(self, x, q):
        """x**q."""
        return self.pow(x, q)

    def trace_to_subfield(self, x, q, k):
        if q**k != self.size:
            raise ValueError(f"{q}^{k} != {self.size}")
        self.subfield_degree(q)
        r = 0
        for i in range(k):
            r = self.add(r, self.pow(x, q**i))
        return r

    def trace_table(self, q, k):
        """Array T with T[x] = Tr_{GF(q^k)/GF(q)}(x) for every code x."""
        key = (q, k)
        if key not in self._trace_cache:
            if q**k != self.size:
                raise ValueError(f"{q}^{k} != {self.size}")
            self.subfield_degree(q)
            logs = np.arange(self.order, dtype=np.int64)
            acc = np.zeros(self.order, dtype=np.int64)
            for i in range(k):
                acc = self.add(acc, self.antilog_table[(logs * pow(q, i, self.order)) % self.order])
            table = np.zeros(self.size, dtype=np.int64)
            table[self.antilog_table] = acc
            table.flags.writeable = False
            self._trace_cache[key] = table
        return self._trace_cache[key]


# -- construction

def _mulx(v, p, m, low_code):
    """x * v reduced modulo the monic modulus (low_code = code of its lower part)."""
    top_w = p ** (m - 1)
    top = v // top_w
    shifted = (v - top * top_w) * p
    return _add_codes(shifted, _scale_codes((-top) % p, low_code, p, m), p, m)


def _add_codes(x, y, p, m):
    if p == 2:
        return x ^ y
    r = 0
    for i in range(m):
        w = p**i
        r += ((x // w + y // w) % p) * w
    return r


def _scale_codes(c, x, p, m):
    r = 0
    for i in range(m):
        w = p**i
        r += ((c * (x // w)) % p) * w
    return r


def _raw_mul(a, b, p, m, low_code):
    """Polynomial-basis product, no tables (Horner on the digits of b)."""
    r = 0
    for i in reversed(range(m)):
        r = _mulx(r, p, m, low_code)
        r = _add_codes(r, _scale_codes((b // p**i) % p, a, p, m), p, m)
    return r


def _raw_pow(a, e, p, m, low_code):
    r = 1
    while e:
        if e & 1:
            r = _raw_mul(r, a, p, m, low_code)
        a = _raw_mul(a, a, p, m, low_code)
        e >>= 1
    return r


@lru_cache(maxsize=64)
def build_field(p, m, primitive_element=None, max_size=MAX_FIELD_SIZE):
    """Construct GF(p^m) deterministically.

    The modulus is the smallest monic irreducible of degree m (see
    :func:`smallest_irreducible`); for m == 1 it is the placeholder ``x``
    and arithmetic is plain integers mod p.  The primitive element defaults
    to the smallest code of full multiplicative order.  Pass
    ``primitive_element`` to use another generator instead.
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    size = p**m
    if size > max_size:
        raise ValueError(f"field size {p}^{m} = {size} exceeds bound {max_size}")

    modulus = smallest_irreducible(p, m)
    low_code = sum(c * p**i for i, c in enumerate(modulus[:m]))
    order = size - 1
    factors = prime_factors(order)

    def is_generator(g):
        if g == 0:
            return False
        if order == 1:
            return g == 1
        if _raw_pow(g, order, p, m, low_code) != 1:
            return False
        return all(_raw_pow(g, order // r, p, m, low_code) != 1 for r in factors)

    if primitive_element is None:
        gamma = next(g for g in range(1, size) if is_generator(g))
    else:
        if not 0 < primitive_element < size or not is_generator(primitive_element):
            raise ValueError(f"{primitive_element} is not a primitive element of GF({p}^{m})")
        gamma = primitive_element

    # x -> gamma * x for every code, built digit by digit from the basis images
    images = [_raw_mul(p**i, gamma, p, m, low_code) for i in range(m)]
    times_gamma = np.zeros(1, dtype=np.int64)
    for i in range(m):
        blocks = [_add_codes(times_gamma, _scale_codes(c, images[i], p, m), p, m) for c in range(p)]
        times_gamma = np.concatenate(blocks)
    step = times_gamma.tolist()

    antilog = [0] * order
    cur = 1
    for e in range(order):
        antilog[e] = cur
        cur = step[cur]
    if cur != 1:
        raise AssertionError("primitive element has the wrong order")

    antilog_table = np.array(antilog, dtype=np.int64)
    log_table = np.full(size, -1, dtype=np.int64)
    log_table[antilog_table] = np.arange(order, dtype=np.int64)
    log_table.flags.writeable = False
    antilog_table.flags.writeable = False
    return FieldSpec(p, m, modulus, gamma, log_table, antilog_table)
