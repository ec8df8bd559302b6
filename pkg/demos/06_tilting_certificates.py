"""Certifying adjoint modules as tilting modules for SL_2.

Pull gl_n back through an optimal homomorphism: all torus weights land
in [-(2p-2), 2p-2].  In that window the formal character admits at
most one decomposition into tilting modules T(m) (m >= p) and simples
L(d), found by peeling from the top weight; the unipotent fixed-point
dimensions then certify that the module really is that direct sum and
not some non-split extension with the same character.
"""

from optsl2 import (adjoint_descriptor, char_of, fixdim_of, partitions_of,
                    tilting_decompose)
from optsl2.errors import InconsistencyError
from optsl2.tilting import ModuleDescriptor

p = 3
print("building blocks at p = %d:" % p)
for m in (4, 3, 2):
    c = char_of("tilting", m, p)
    print("  T(%d): character %r, unipotent fixed points %d"
          % (m, c.as_dict(), fixdim_of("tilting", m, p, p)))
for d in (2, 1, 0):
    c = char_of("simple", d, p)
    print("  L(%d): character %r, unipotent fixed points %d"
          % (d, c.as_dict(), fixdim_of("simple", d, p, p)))
print()

print("adjoint modules gl_n through the optimal homomorphisms:")
for q in (2, 3, 5):
    for n in range(1, 6):
        for lam in partitions_of(n):
            if lam[0] > q:
                continue
            desc = adjoint_descriptor(lam, q)
            dec = tilting_decompose(desc, q)
            print("  p=%d %-12s -> %s   (fix = %d in both characteristics)"
                  % (q, lam, dec, desc.fix_p))
print()

# the fixed-point certificate has teeth: tamper with fix_p and the
# same character is rejected
good = adjoint_descriptor((2,), 2)
bad = ModuleDescriptor(character=good.character, fix_p=good.fix_p + 1,
                       fix_0=good.fix_0)
try:
    tilting_decompose(bad, 2)
except InconsistencyError as exc:
    print("tampered fixed-point count rejected:")
    print("   ", exc)
