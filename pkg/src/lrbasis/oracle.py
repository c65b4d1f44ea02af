"""Independent multiplicity counts via symmetric-function expansion.

Schur polynomials are built by brute-force enumeration of semistandard
tableaux, products are expanded back into Schur polynomials by repeatedly
peeling off the lex-greatest exponent vector, and the structure constants
are read off.  Nothing here shares logic with the tableau module, so the
two can check each other.
"""

from functools import lru_cache

from .errors import NegativeCoefficient, NotSymmetric, TooFewVariables
from .polyring import Polynomial, mono, zvar
from .shapes import Partition


@lru_cache(maxsize=None)
def _ssyt_monomials(shape, nvars):
    """Weight vectors of all semistandard tableaux of the given shape.

    Returns a dict {weight tuple: multiplicity}; entries are 1..nvars,
    rows weakly increase, columns strictly increase.
    """
    shape = tuple(shape)
    cells = [(a, c) for a, width in enumerate(shape, start=1)
             for c in range(1, width + 1)]
    counts = {}
    entries = {}

    def backtrack(idx):
        if idx == len(cells):
            w = [0] * nvars
            for v in entries.values():
                w[v - 1] += 1
            w = tuple(w)
            counts[w] = counts.get(w, 0) + 1
            return
        a, c = cells[idx]
        lo = entries.get((a, c - 1), 1)
        up = entries.get((a - 1, c))
        lo = max(lo, up + 1 if up is not None else 1)
        for v in range(lo, nvars + 1):
            entries[(a, c)] = v
            backtrack(idx + 1)
            del entries[(a, c)]

    backtrack(0)
    return counts


def schur_polynomial(lam, nvars):
    """The Schur polynomial of the partition in z[1..nvars]."""
    lam = Partition(lam)
    if nvars < 1:
        raise TooFewVariables("need at least one variable")
    if lam.depth > nvars:
        return Polynomial.zero()
    out = {}
    for w, c in _ssyt_monomials(lam.parts, nvars).items():
        out[mono(*((zvar(i + 1), e) for i, e in enumerate(w) if e))] = c
    return Polynomial(out)


def _exponent_vector(m, nvars):
    w = [0] * nvars
    for (fam, i, _), e in m:
        if fam != "z" or i > nvars:
            raise NotSymmetric(f"unexpected variable {(fam, i)}")
        w[i - 1] = e
    return tuple(w)


def expand_in_schur(p, nvars):
    """Write p as a sum of Schur polynomials; {partition: coefficient}.

    Repeatedly subtracts c * s_mu where z^mu is the lex-greatest surviving
    exponent vector.  Raises NotSymmetric when that vector is not weakly
    decreasing and NegativeCoefficient when c < 0, either of which means
    p was not a nonnegative combination.
    """
    work = Polynomial(dict(p.terms))
    out = {}
    while not work.is_zero():
        top = max((_exponent_vector(m, nvars) for m in work.terms))
        mu = tuple(x for x in top if x)
        if any(top[i] < top[i + 1] for i in range(len(top) - 1)):
            raise NotSymmetric(f"leading exponent {top} is not a partition")
        c = work.terms[mono(*((zvar(i + 1), e) for i, e in enumerate(top) if e))]
        if c < 0:
            raise NegativeCoefficient(f"coefficient of s_{mu} is {c}")
        out[Partition(mu)] = c
        work = work - schur_polynomial(mu, nvars) * c
    return out


def lr_coefficient(triple, nvars=None):
    """Multiplicity of transpose(F) in s_{transpose(D)} * s_{transpose(E)}.

    The default number of variables is enough for stability; passing more
    must not change the answer.
    """
    Dt, Et, Ft = triple.Dt, triple.Et, triple.Ft
    if nvars is None:
        nvars = max(1, Dt.depth, Et.depth, Ft.depth)
    if nvars < Ft.depth:
        raise TooFewVariables(f"need at least {Ft.depth} variables")
    prod = schur_polynomial(Dt, nvars) * schur_polynomial(Et, nvars)
    return expand_in_schur(prod, nvars).get(Ft, 0)
