"""
Beyond dimension two
====================

For k >= 3 the closed forms still cover one-weight codes (u = 1) and
semiprimitive two-weight codes.  Anything else is enumerated only.
"""

from irrcodes import NotClassifiable, analyze_code, classify_from_exponent, weight_distribution_bruteforce

for q_pt, k, a in [((2, 1), 5, 3), ((3, 1), 4, 5), ((3, 2), 3, 7), ((2, 1), 6, 7)]:
    p, t = q_pt
    spec = analyze_code(p, t, k, a)
    found = weight_distribution_bruteforce(spec)
    try:
        pred = classify_from_exponent(p, t, k, a)
        verdict = f"case {pred.case} {pred.enumerator}  {'matches' if pred.distribution == found else 'DIFFERS'}"
    except NotClassifiable:
        verdict = "no closed form"
    print(f"q={p**t} k={k} a={a}: n={spec.n} u={spec.u} enumerated {found.enumerator()}  [{verdict}]")
