"""
The regular birepresentation and its consequences
=================================================

Left and right translations give a birepresentation (L, R) of any Moufang
loop. Run every relation checker on it, then swap the pair to see the
defining relations break.
"""

from moufang import catalog
from moufang.birep import Birepresentation, enveloping_group, quadratic_family, regular_birepresentation, run_all_checks, validate

M = catalog.get("M_S3_2")
b = regular_birepresentation(M)
t = quadratic_family(b)

for section, reports in run_all_checks(t).items():
    print(f"[{section}]")
    for r in reports:
        print("  " + r.render())

# (R, L) is not a birepresentation of a noncommutative loop
S3 = catalog.symmetric3()
L = regular_birepresentation(S3)
swapped = validate(S3, L.T, L.S)
print(swapped[1].render())

# the enveloping group is generated by all the translations
print("enveloping group order:", enveloping_group(b).order)
