"""Enumeration and random generation of diagram triples for testing."""

from functools import lru_cache

from .shapes import Partition, validate_triple
from .tableaux import enumerate_lr


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n, as tuples, largest-first lex order."""
    if n == 0:
        return ((),)
    out = []

    def build(remaining, maxpart, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            acc.append(p)
            build(remaining - p, p, acc)
            acc.pop()

    build(n, n, [])
    return tuple(out)


def all_triples(max_size):
    """Every (D, E, F) with |F| <= max_size and |D| + |E| = |F|."""
    for n in range(1, max_size + 1):
        for f in partitions_of(n):
            for a in range(n + 1):
                for d in partitions_of(a):
                    for e in partitions_of(n - a):
                        yield validate_triple(d, e, f)


def random_triple(rng, max_size, require_tableaux=False, max_tries=1000):
    """A random triple, optionally resampled until it has an LR tableau."""
    for _ in range(max_tries):
        n = rng.randint(1, max_size)
        f = rng.choice(partitions_of(n))
        a = rng.randint(0, n)
        d = rng.choice(partitions_of(a))
        e = rng.choice(partitions_of(n - a))
        triple = validate_triple(d, e, f)
        if not require_tableaux or enumerate_lr(triple):
            return triple
    raise RuntimeError("could not sample a triple with tableaux")


def random_point(rng, triple, lo=-10**6, hi=10**6, avoid_zero=True):
    """Random integer values for every x and y variable of the triple."""
    from .polyring import xvar, yvar
    assignment = {}
    for i in range(1, triple.F.width + 1):
        for j in range(1, max(1, triple.D.width) + 1):
            assignment[xvar(i, j)] = _draw(rng, lo, hi, avoid_zero)
        for j in range(1, max(1, triple.E.width) + 1):
            assignment[yvar(i, j)] = _draw(rng, lo, hi, avoid_zero)
    return assignment


def _draw(rng, lo, hi, avoid_zero):
    v = rng.randint(lo, hi)
    while avoid_zero and v == 0:
        v = rng.randint(lo, hi)
    return v
