"""Tangent map of a Springer isomorphism along the regular centralizer.

For u = 1 + e regular unipotent, the centralizer of u acts on the
curve u + s Z, Z in span{e, ..., e^(n-1)}; differentiating f there
gives an endomorphism of that span (multiplication by f'(e)).  The
question explored: when is this map scalar?  This is an experiment,
so the outcomes are printed, not asserted.
"""

from fractions import Fraction

from optsl2 import Fp, QQ, SpringerCoeffs, springer_tangent_experiment

grid = [
    (QQ, (1,)), (QQ, (2,)), (QQ, (5,)),
    (QQ, (1, 0)), (QQ, (1, 1)), (QQ, (1, Fraction(1, 2))),
    (QQ, (1, 0, 0)), (QQ, (1, 0, 7)), (QQ, (2, 3, 1)),
    (Fp(5), (1, 0, 0)), (Fp(5), (1, 2, 3)), (Fp(7), (3, 0, 0, 0)),
]

scalar_runs = 0
for dom, a in grid:
    rep = springer_tangent_experiment(SpringerCoeffs(dom, a))
    name = "Q" if dom is QQ else "F_%d" % dom.p
    if rep.is_scalar:
        scalar_runs += 1
        print("n=%d %-3s a=%s: scalar, multiplication by %s"
              % (rep.n, name, a, rep.scalar))
    else:
        print("n=%d %-3s a=%s: NOT scalar, matrix rows %s"
              % (rep.n, name, a,
                 [[str(rep.matrix[i, j]) for j in range(rep.matrix.cols)]
                  for i in range(rep.matrix.rows)]))

print()
print("scalar in %d of %d runs" % (scalar_runs, len(grid)))
print()
print("pattern in this sample: the map is scalar exactly when the "
      "higher coefficients a2, ..., a_{n-1} vanish, i.e. f'(e) = a1.")
