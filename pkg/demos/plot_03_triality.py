"""
Triality
========

The quadratic family P completes (S, T) to a triple. Six substitutions
permute and invert the three families; each one yields another triple.
"""

from itertools import product

from moufang import catalog
from moufang.birep import SUBSTITUTIONS, compose_substitutions, regular_triple, triality_pairs, triality_substitute

t = regular_triple(catalog.get("M_S3_2"))

for name in triality_pairs(t):
    print(name, "is a birepresentation")

# rho rotates the families: the new S is the old T
r = triality_substitute(t, "rho")
print("rho: S -> T", r.S == t.T)

# the substitutions compose like the symmetric group on three letters
names = list(SUBSTITUTIONS)
print(" " * 9 + " ".join(f"{n:>8}" for n in names))
for a in names:
    print(f"{a:>8} " + " ".join(f"{compose_substitutions(a, b):>8}" for b in names))

subs = {n: triality_substitute(t, n) for n in names}
agree = all(triality_substitute(subs[a], b) == subs[compose_substitutions(a, b)]
            for a, b in product(names, repeat=2))
print("table agrees with the triples:", agree)
