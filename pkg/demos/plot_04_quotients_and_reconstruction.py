"""
Kernels, quotients and reconstruction
=====================================

Pull back a birepresentation of a quotient, recover the quotient from its
kernel, and then decide whether a triple of permutation families forces
the underlying table to be a Moufang loop.
"""

from moufang import catalog
from moufang.birep import is_faithful, kernel, regular_birepresentation
from moufang.loops import CayleyTable
from moufang.quotient import induced_birepresentation, normal_divisors, pullback, quotient
from moufang.reconstruction import check_conditions, forge_from_translations, reconstruct_from_regular

M = catalog.get("M_S3_2")
for N in normal_divisors(M):
    print(sorted(N), "-> quotient of order", quotient(M, N).quotient_table.order)

# regular birepresentation of M/{0,1,2}, lifted back to M
qs = quotient(M, {0, 1, 2})
lifted = pullback(regular_birepresentation(qs.quotient_table), qs)
print("kernel:", sorted(kernel(lifted)), "faithful:", is_faithful(lifted))

_, induced = induced_birepresentation(lifted)
print("induced on the quotient is faithful:", is_faithful(induced))

# the translation triple of M passes every hypothesis
verdict = check_conditions(reconstruct_from_regular(M))
print(verdict.to_dict())

# a quasigroup that is not a Moufang loop does not
forged = CayleyTable([[0, 2, 1], [2, 1, 0], [1, 0, 2]])
print(check_conditions(forge_from_translations(forged)).to_dict())
