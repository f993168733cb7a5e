"""Report records, coset tables and the prediction-vs-enumeration sweep."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
import json

from .codes import (
    WeightDistribution,
    analyze_code,
    weight_distribution_bruteforce,
    weight_distribution_trace,
)
from .field import prime_power
from .poly import cyclotomic_cosets
from .predict import ONE_WEIGHT, REPETITION, SEMIPRIMITIVE, NotClassifiable, classify_from_exponent

CASES = (ONE_WEIGHT, SEMIPRIMITIVE, REPETITION)


@dataclass(frozen=True)
class ReportRecord:
    q: int
    p: int
    t: int
    k: int
    a: object  # int or None
    n: int
    u: int
    dimension: int
    case: object  # "A" | "B" | "C" | None
    distribution: WeightDistribution
    oracle_checked: bool = False

    @classmethod
    def from_prediction(cls, pred, oracle_checked=False):
        return cls(pred.q, pred.p, pred.t, pred.k, pred.a, pred.n, pred.u, pred.dimension,
                   pred.case, pred.distribution, oracle_checked)

    def to_dict(self):
        return {
            "q": self.q, "p": self.p, "t": self.t, "k": self.k, "a": self.a, "n": self.n,
            "u": self.u, "dimension": self.dimension, "case": self.case,
            "distribution": [{"weight": w, "frequency": f} for w, f in self.distribution],
            "oracle_checked": self.oracle_checked,
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d):
        dist = WeightDistribution(tuple((e["weight"], e["frequency"]) for e in d["distribution"]))
        return cls(d["q"], d["p"], d["t"], d["k"], d["a"], d["n"], d["u"], d["dimension"],
                   d["case"], dist, d["oracle_checked"])

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_text(self):
        case = self.case if self.case else "-"
        lines = [
            f"q={self.q} ({self.p}^{self.t})  k={self.k}  a={'-' if self.a is None else self.a}  "
            f"n={self.n}  u={self.u}  dimension={self.dimension}  case={case}",
            self.distribution.enumerator(),
            f"{'weight':>8} {'frequency':>10}",
        ]
        lines += [f"{w:>8} {f:>10}" for w, f in self.distribution]
        if self.oracle_checked:
            lines.append("confirmed by enumeration")
        return "\n".join(lines)


# -- coset tables

@dataclass
class TableRow:
    cosets: list
    degree: int
    u: int
    n: int
    distribution: WeightDistribution

    @property
    def enumerator(self):
        return self.distribution.enumerator()

    def to_dict(self):
        return {
            "cosets": [list(c.members) for c in self.cosets],
            "deg": self.degree,
            "u": self.u,
            "n": self.n,
            "enumerator": self.enumerator,
            "distribution": [{"weight": w, "frequency": f} for w, f in self.distribution],
        }


def coset_table(p, t):
    """Group every exponent a mod q^2-1 by coset; rows by u ascending, then n descending."""
    q = p**t
    rows = {}
    for coset in cyclotomic_cosets(q * q - 1, q):
        pred = classify_from_exponent(p, t, 2, coset.representative)
        key = (pred.u, -pred.n, len(coset), pred.distribution)
        if key not in rows:
            rows[key] = TableRow([], len(coset), pred.u, pred.n, pred.distribution)
        rows[key].cosets.append(coset)
    return [rows[key] for key in sorted(rows, key=lambda k: k[:3])]


def render_table(rows):
    cols = [(_join_cosets(r.cosets), str(r.degree), str(r.u), str(r.n), r.enumerator) for r in rows]
    head = ("cyclotomic cosets", "deg", "u", "n", "weight enumerator")
    widths = [max(len(x) for x in col) for col in zip(head, *cols)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return "\n".join(fmt.format(*r) for r in [head, *cols])


def _join_cosets(cosets):
    names = [str(c) for c in cosets]
    if len(names) == 1:
        return names[0]
    return ", ".join(names[:-1]) + " or " + names[-1]


# -- sweep

@dataclass
class SweepResult:
    max_q: int
    k: int
    codes: int = 0
    cases: dict = field(default_factory=lambda: {c: 0 for c in CASES})
    unclassified: int = 0
    per_q: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


def check_point(p, t, k, a):
    """Compare the prediction with both oracles for one exponent.

    Returns (case or None, mismatch description or None).
    """
    spec = analyze_code(p, t, k, a)
    by_gen = weight_distribution_bruteforce(spec)
    by_trace = weight_distribution_trace(spec)
    problems = []
    if by_gen != by_trace:
        problems.append(f"oracles disagree: generator {by_gen.enumerator()} vs trace {by_trace.enumerator()}")
    try:
        pred = classify_from_exponent(p, t, k, a)
    except NotClassifiable:
        pred = None
    if pred is not None:
        if pred.distribution != by_gen:
            problems.append(f"prediction {pred.enumerator} (case {pred.case}) vs enumeration {by_gen.enumerator()}")
        if pred.dimension != spec.dimension or pred.n != spec.n or pred.u != spec.u:
            problems.append(f"prediction parameters n={pred.n} u={pred.u} dim={pred.dimension} differ")
    case = pred.case if pred else None
    return case, (spec.describe() + ": " + "; ".join(problems)) if problems else None


def _check_chunk(args):
    p, t, k, a_values = args
    return p ** t, [check_point(p, t, k, a) for a in a_values]


def prime_powers(max_q):
    out = []
    for q in range(2, max_q + 1):
        try:
            out.append(prime_power(q))
        except ValueError:
            pass
    return out


def sweep(max_q, k=2, jobs=1, chunk=64):
    """Check every q <= max_q (prime power) and every a in [0, q^k - 1)."""
    work = []
    for p, t in prime_powers(max_q):
        N = p ** (t * k) - 1
        for start in range(0, N, chunk):
            work.append((p, t, k, range(start, min(start + chunk, N))))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_chunk, work))
    else:
        results = map(_check_chunk, work)

    res = SweepResult(max_q, k)
    for q, points in results:
        stats = res.per_q.setdefault(q, {"codes": 0, **{c: 0 for c in CASES}, "unclassified": 0})
        for case, problem in points:
            res.codes += 1
            stats["codes"] += 1
            if case is None:
                res.unclassified += 1
                stats["unclassified"] += 1
            else:
                res.cases[case] += 1
                stats[case] += 1
            if problem:
                res.mismatches.append(problem)
    return res
