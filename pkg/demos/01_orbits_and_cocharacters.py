"""Tour of the nilpotent orbit machinery for gl_n.

Every nilpotent orbit is a partition; from the partition we read off a
canonical representative, its associated cocharacter (the weighted
Dynkin data), the instability parabolic, the centralizer dimension and
the order of the unipotent element 1 + X.  Everything is exact: F_p
entries are ints mod p, rational entries are fractions.
"""

from optsl2 import (Fp, associated_cocharacter, centralizer_report,
                    distinguished_check, instability_parabolic,
                    orbit_summary, order_formula_report,
                    parabolic_block_type, partitions_of, rep_from_partition)

p = 3
n = 5
dom = Fp(p)

print("nilpotent orbits of gl_%d over F_%d" % (n, p))
print()

for lam in partitions_of(n):
    X = rep_from_partition(dom, lam)
    data = associated_cocharacter(X)
    psi = data.psi
    creport = centralizer_report(X)
    print("partition %s" % (lam,))
    print("  cocharacter weights (Jordan basis order): %s" % (psi.weights,))
    print("  X sits in degree 2 of the grading: %s"
          % (psi.component(X, 2) == X))
    print("  dim C(X) = %d  (= sum of squared conjugate parts: %s)"
          % (creport.dim_c, creport.dim_c == creport.formula_dim))
    print("  Levi block type of P(psi): %s" % (parabolic_block_type(psi),))
    print()

# the instability parabolic contains the whole centralizer of X
lam = (3, 2)
X = rep_from_partition(dom, lam)
inst = instability_parabolic(X)
print("instability parabolic of the %s orbit:" % (lam,))
print("  dim P = %d, dim U = %d, Levi dim = %d"
      % (inst.parabolic.dim_p, inst.parabolic.dim_u, inst.parabolic.dim_z))
print("  centralizer of X contained in Lie P(psi): %s"
      % centralizer_report(X).contained_in_p_psi)
print("  P(psi) is a distinguished parabolic: %s"
      % distinguished_check(inst.psi).is_distinguished)
print()

# order of 1 + X against the three equivalent reformulations, for the
# regular orbit where the four conditions provably agree
print("order conditions for the regular orbits (n,):")
for q in (2, 3, 5):
    for m in (2, 3, 4):
        rep = order_formula_report(q, (m,))
        print("  n=%d p=%d: |1+X| = %d, X^[p]=0 %s, max weight %d,"
              " radical class %d, four conditions agree: %s"
              % (m, q, rep.unip_order, rep.x_p_zero, rep.max_ad_weight,
                 rep.radical_class, rep.all_agree))
print()

# one row of the orbit table, the same data the CLI prints
print("orbit_summary(3, (3, 2)) ->")
for key, value in orbit_summary(3, (3, 2)).items():
    print("  %s: %s" % (key, value))
