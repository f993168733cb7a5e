"""
Finite fields with log tables
=============================

Build GF(25) = GF(5^2), look at its tables, its prime subfield and the
trace map down to GF(5).
"""

from irrcodes.field import build_field

F = build_field(5, 2)
print("modulus (low -> high):", F.modulus)        # x^2 + 2
print("primitive element code:", F.primitive_element)

# powers of gamma, as element codes c0 + 5*c1
print("gamma^0..gamma^7:", F.antilog_table[:8].tolist())

# GF(5) sits inside as 0 and the powers of gamma^6
print("GF(5) inside GF(25):", F.subfield_elements(5).tolist())

# trace is a balanced map onto GF(5)
values = [F.trace_to_subfield(x, 5, 2) for x in range(F.size)]
for v in F.subfield_elements(5).tolist():
    print(f"  Tr(x) = {v}: {values.count(v)} elements")
