"""Jordan form of nilpotent matrices over F_p or Q.

The partition is read off the nullity sequence of powers, the basis is
assembled from Jordan chains.  Both are deterministic: kernels come from
the standard RREF nullspace bases, chain seeds are taken greedily in
that order, and chains are sorted longest first.  The two routes
(nullity counting and chain extraction) are compared at the end, and the
change of basis is verified to conjugate X into the block form exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InconsistencyError
from .matrices import (IncrementalSpan, Mat, hstack, inverse, rank,
                       rank_nullspace)
from .partitions import check_partition, conjugate


@dataclass(frozen=True)
class NilpotentJordanData:
    partition: tuple
    basis: Mat  # columns are the Jordan basis, chains ordered longest first

    @property
    def n(self) -> int:
        return self.basis.rows


def jordan_block(domain, d: int) -> Mat:
    """Nilpotent Jordan block with ones on the superdiagonal."""
    data = [domain.zero()] * (d * d)
    for i in range(d - 1):
        data[i * d + i + 1] = domain.one()
    return Mat(domain, d, d, data)


def jordan_form(domain, lam) -> Mat:
    lam = check_partition(lam)
    return Mat.block_diag(domain, [jordan_block(domain, d) for d in lam])


def nilpotent_jordan(X: Mat) -> NilpotentJordanData:
    if not X.is_square():
        raise DomainError("square matrix expected")
    n = X.rows
    d = X.domain

    powers = [Mat.identity(d, n)]
    while len(powers) <= n and not powers[-1].is_zero():
        powers.append(powers[-1] * X)
    if not powers[-1].is_zero():
        raise DomainError("matrix is not nilpotent: X^%d still has rank %d"
                          % (n, rank(powers[-1])))
    m = len(powers) - 1  # nilpotency index, X^m = 0, X^(m-1) != 0

    kernels = [[]]
    nullities = [0]
    for i in range(1, m + 1):
        _, ker = rank_nullspace(powers[i])
        kernels.append(ker)
        nullities.append(len(ker))
    lam_conj = tuple(nullities[i] - nullities[i - 1] for i in range(1, m + 1))
    partition = conjugate(lam_conj)

    # Chain seeds at level L span a complement of ker X^(L-1) + X ker X^(L+1)
    # inside ker X^L; candidates are scanned in nullspace-basis order, which
    # fixes "lowest original column index" as the tie break.
    chains = []
    for L in range(m, 0, -1):
        count = lam_conj[L - 1] - (lam_conj[L] if L < m else 0)
        if count == 0:
            continue
        span = IncrementalSpan(d)
        for v in kernels[L - 1]:
            span.add_mat(v)
        if L < m:
            for v in kernels[L + 1]:
                span.add_mat(X * v)
        picked = 0
        for v in kernels[L]:
            if picked == count:
                break
            if span.add_mat(v):
                picked += 1
                chain = []
                w = v
                for _ in range(L):
                    chain.append(w)
                    w = X * w
                chain.reverse()  # X^(L-1) v first, seed last
                chains.append((L, chain))
        if picked != count:
            raise InconsistencyError("chain extraction found %d seeds of "
                                     "length %d, expected %d"
                                     % (picked, L, count))

    chain_lengths = tuple(L for L, _ in chains)
    if chain_lengths != partition:
        raise InconsistencyError(
            "chain lengths %r disagree with nullity partition %r"
            % (chain_lengths, partition))

    cols = [v for _, chain in chains for v in chain]
    basis = hstack(cols) if cols else Mat.zero(d, n, 0)
    if n == 0:
        return NilpotentJordanData(partition=(), basis=Mat.zero(d, 0, 0))
    if rank(basis) != n:
        raise InconsistencyError("Jordan chains do not form a basis")
    if inverse(basis) * X * basis != jordan_form(d, partition):
        raise InconsistencyError("basis does not conjugate X to Jordan form")
    return NilpotentJordanData(partition=partition, basis=basis)
