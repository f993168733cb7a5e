"""Closed-form weight distributions of irreducible cyclic codes.

Covers one-weight codes (u = 1, full dimension), semiprimitive two-weight
codes, and the complete classification of dimension one and two codes from
either the exponent a or the length n alone.  All arithmetic is exact; any
division that does not come out even raises.
"""

from dataclasses import dataclass, replace
import math

from .codes import WeightDistribution, code_parameters, coset_size
from .field import prime_power

ONE_WEIGHT = "A"
SEMIPRIMITIVE = "B"
REPETITION = "C"

CASE_NAMES = {
    ONE_WEIGHT: "one-weight",
    SEMIPRIMITIVE: "semiprimitive two-weight",
    REPETITION: "repetition",
}


class NotClassifiable(ValueError):
    """The code falls outside the one-weight / semiprimitive families."""


def _exact_div(num, den, what):
    if num % den:
        raise ArithmeticError(f"{what}: {num} is not divisible by {den}")
    return num // den


def multiplicative_order(w, v):
    """Smallest f >= 1 with w^f = 1 (mod v); 1 when v == 1."""
    if v < 1:
        raise ValueError(f"modulus must be >= 1, got {v}")
    if math.gcd(v, w) != 1:
        raise ValueError(f"gcd({v}, {w}) != 1")
    if v == 1:
        return 1
    w %= v
    f, x = 1, w
    while x != 1:
        x = x * w % v
        f += 1
    return f


@dataclass(frozen=True)
class SemiprimitiveCheck:
    u: int
    p: int
    f: int
    s: int
    is_semiprimitive: bool


def check_semiprimitive(u, p, k, t):
    """Decide whether u = gcd(Delta, a) gives a semiprimitive two-weight code.

    True iff u == 2, or u > 2 with ord_u(p) even and p^(ord_u(p)/2) = -1 mod u.
    u == 1 is reported as not semiprimitive (f = 1 by convention).
    """
    if u < 1:
        raise ValueError(f"u must be >= 1, got {u}")
    if math.gcd(p, u) != 1:
        raise ValueError(f"gcd(p={p}, u={u}) != 1")
    f = multiplicative_order(p, u)
    if (k * t) % f:
        raise ValueError(f"ord_{u}({p}) = {f} does not divide k*t = {k * t}; u cannot divide Delta")
    s = k * t // f
    if u == 1:
        semi = False
    elif u == 2:
        semi = True
    else:
        semi = f % 2 == 0 and pow(p, f // 2, u) == u - 1
    return SemiprimitiveCheck(u, p, f, s, semi)


def lemma1_parity(u, p, t):
    """(f, s, s is even) for u >= 2 dividing q + 1, with s = 2t / ord_u(p)."""
    q = p**t
    if u < 2 or (q + 1) % u:
        raise ValueError(f"u={u} must be >= 2 and divide q+1={q + 1}")
    f = multiplicative_order(p, u)
    s = _exact_div(2 * t, f, "s = 2t/f")
    return f, s, s % 2 == 0


def one_weight_distribution(q, k, n, u=1):
    """{0: 1, n q^(k-1) / Delta: q^k - 1}."""
    if u != 1:
        raise ValueError(f"one-weight formula needs u = 1, got u = {u}")
    delta = (q**k - 1) // (q - 1)
    w = _exact_div(n * q ** (k - 1), delta, "one-weight nonzero weight")
    return WeightDistribution(((0, 1), (w, q**k - 1)))


def table1_distribution(q, k, n, u, p, t):
    """Semiprimitive two-weight distribution for general k."""
    if p**t != q:
        raise ValueError(f"{p}^{t} != {q}")
    if u < 2:
        raise ValueError(f"semiprimitive formula needs u >= 2, got u = {u}")
    chk = check_semiprimitive(u, p, k, t)
    if not chk.is_semiprimitive:
        raise ValueError(f"u={u} is not semiprimitive for p={p}, k*t={k * t}")
    if (k * t) % 2:
        raise ArithmeticError(f"k*t = {k * t} is odd; q^(k/2) is not an integer")
    delta = (q**k - 1) // (q - 1)
    half = p ** (k * t // 2)  # q^(k/2)
    scale = n * p ** (k * t // 2 - t)  # n q^(k/2 - 1)
    sign = -1 if chk.s % 2 else 1
    w1 = _exact_div(scale * (half - sign), delta, "first weight")
    w2 = _exact_div(scale * (half + sign * (u - 1)), delta, "second weight")
    if min(w1, w2) <= 0:
        raise ArithmeticError(f"non-positive weight for n={n}: h_a must have degree k")
    N = q**k - 1
    f1 = _exact_div(N * (u - 1), u, "first frequency")
    f2 = _exact_div(N, u, "second frequency")
    return WeightDistribution(((0, 1), (w1, f1), (w2, f2)))


def dim2_two_weight_distribution(q, n, u):
    """Dimension-two two-weight enumerator written directly in q, n, u."""
    N = q * q - 1
    low = _exact_div(n * (q + 1 - u), q + 1, "minimum weight")
    return WeightDistribution(
        ((0, 1), (low, _exact_div(N, u, "low-weight frequency")), (n, _exact_div(N * (u - 1), u, "weight-n frequency")))
    )


@dataclass(frozen=True)
class Prediction:
    case: str
    q: int
    p: int
    t: int
    k: int
    n: int
    u: int
    dimension: int
    distribution: WeightDistribution
    a: int = None

    @property
    def enumerator(self):
        return self.distribution.enumerator()

    @property
    def case_name(self):
        return CASE_NAMES[self.case]


def classify_dim2(q, n):
    """Weight distribution of the length-n irreducible cyclic code over GF(q) of dimension <= 2."""
    p, t = prime_power(q)
    N = q * q - 1
    if n < 1 or N % n:
        raise ValueError(f"n={n} does not divide q^2-1={N}")
    u = math.gcd(q + 1, N // n)
    if u == 1:
        return Prediction(ONE_WEIGHT, q, p, t, 2, n, u, 2, one_weight_distribution(q, 2, n))
    if u == q + 1:
        dist = WeightDistribution(((0, 1), (n, q - 1)))
        return Prediction(REPETITION, q, p, t, 2, n, u, 1, dist)
    dist = dim2_two_weight_distribution(q, n, u)
    general = table1_distribution(q, 2, n, u, p, t)
    if dist != general:
        raise AssertionError(f"two-weight formulas disagree for q={q}, n={n}, u={u}: {dist} vs {general}")
    return Prediction(SEMIPRIMITIVE, q, p, t, 2, n, u, 2, dist)


def classify_from_exponent(p, t, k, a):
    """Predict the distribution of the code with parity-check polynomial h_a.

    For k == 2 this is the length-only classification applied to n(a).  For
    other k, when deg h_a = d < k the code is the one for exponent
    a / ((q^k - 1) / (q^d - 1)) in GF(q^d) and is classified there; at full
    degree the one-weight and semiprimitive formulas apply when their
    hypotheses hold and :class:`NotClassifiable` is raised otherwise.
    """
    q = p**t
    N = q**k - 1
    a %= N
    n, u, _ = code_parameters(q, k, a)
    d = coset_size(q, k, a)

    if k == 2:
        if math.gcd(q + 1, a) != math.gcd(q + 1, N // n):
            raise AssertionError(f"gcd bridge fails for q={q}, a={a}")
        pred = classify_dim2(q, n)
        if pred.dimension != d:
            raise AssertionError(f"dimension {pred.dimension} != deg h_a = {d} for q={q}, a={a}")
        return replace(pred, k=k, u=u, a=a)

    if d < k:
        cof = _exact_div(N, q**d - 1, "subfield cofactor")
        sub_a = _exact_div(a, cof, "exponent reduction")
        if d == 1:
            dist = WeightDistribution(((0, 1), (n, q - 1)))
            return Prediction(REPETITION, q, p, t, k, n, u, 1, dist, a)
        pred = classify_from_exponent(p, t, d, sub_a)
        if pred.n != n:
            raise AssertionError("length changed under subfield reduction")
        return replace(pred, k=k, u=u, a=a)

    if k == 1:
        dist = one_weight_distribution(q, 1, n, u)
        return Prediction(REPETITION, q, p, t, k, n, u, 1, dist, a)
    if u == 1:
        return Prediction(ONE_WEIGHT, q, p, t, k, n, u, k, one_weight_distribution(q, k, n), a)
    if check_semiprimitive(u, p, k, t).is_semiprimitive:
        return Prediction(SEMIPRIMITIVE, q, p, t, k, n, u, k, table1_distribution(q, k, n, u, p, t), a)
    raise NotClassifiable(f"q={q}, k={k}, a={a}: u={u} is neither 1 nor semiprimitive")

