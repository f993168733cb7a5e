"""
Weight distribution from the length alone
=========================================

For a divisor n of q^2 - 1, u = gcd(q + 1, (q^2 - 1)/n) decides everything.
The length 104 code over GF(27) is the classic two-weight example; we also
enumerate its 729 codewords to be sure.
"""

import time

from irrcodes import analyze_code, classify_dim2, weight_distribution_bruteforce

pred = classify_dim2(27, 104)
print(f"q=27 n=104: u={pred.u} case {pred.case} ({pred.case_name}): {pred.enumerator}")

start = time.perf_counter()
spec = analyze_code(3, 3, 2, 7)  # gcd(728, 7) = 7, so n = 104
found = weight_distribution_bruteforce(spec)
print(f"enumerated {found.total} codewords in {time.perf_counter() - start:.3f} s: {found.enumerator()}")

# every length for q = 9
q = 9
for n in [d for d in range(1, q * q) if (q * q - 1) % d == 0]:
    p = classify_dim2(q, n)
    print(f"  q={q} n={n:<3} u={p.u:<3} {p.case}  {p.enumerator}")
