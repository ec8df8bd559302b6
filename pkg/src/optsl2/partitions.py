"""Partition combinatorics used by the orbit classification."""

from __future__ import annotations

from .errors import DomainError


def check_partition(lam) -> tuple:
    lam = tuple(int(x) for x in lam)
    if any(x <= 0 for x in lam):
        raise DomainError("partition parts must be positive: %r" % (lam,))
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise DomainError("partition must be nonincreasing: %r" % (lam,))
    return lam


def conjugate(lam) -> tuple:
    """Transpose of the Young diagram: lam'_i = #{j : lam_j >= i}."""
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= i)
                 for i in range(1, lam[0] + 1))


def partitions_of(n: int):
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        yield ()
        return

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    yield from gen(n, n)


def admissible(lam, p: int) -> bool:
    """Largest part at most p, the existence condition for optimal maps."""
    lam = check_partition(lam)
    return not lam or lam[0] <= p
