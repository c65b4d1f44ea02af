"""Checks that the constructed polynomials behave as claimed.

A polynomial in the x and y variables is a highest weight vector when it
is killed by every simple raising operator: the row operators sum
x[a,b] d/d(x[d,b]) + y[a,c] d/d(y[d,c]) over all columns for adjacent
rows a = d - 1, and the column operators sum v[i,b] d/d(v[i,d]) over all
rows within a single family for adjacent columns b = d - 1.
"""

import random
from dataclasses import dataclass, field

from .errors import NotHomogeneous, ZeroPolynomial
from .intlinalg import int_rank
from .hwv import delta_MT, delta_MT_eval, delta_TY
from .oracle import lr_coefficient
from .polyring import (Polynomial, leading_monomial, mono_divides,
                       mono_from_dict, mono_restrict, mono_text)
from .sampling import random_point
from .tableaux import (enumerate_lr, monomial_bigE, monomial_e, monomial_e1)


def raising_operator_rows(p, a, d, triple):
    """Row operator moving content from row d up to row a."""
    out = {}
    for m, c in p.terms.items():
        md = dict(m)
        for (fam, i, j), e in m:
            if fam not in ("x", "y") or i != d:
                continue
            src = (fam, d, j)
            dst = (fam, a, j)
            new = dict(md)
            new[src] = e - 1
            new[dst] = new.get(dst, 0) + 1
            m2 = mono_from_dict(new)
            s = out.get(m2, 0) + c * e
            if s:
                out[m2] = s
            elif m2 in out:
                del out[m2]
    return Polynomial(out)


def raising_operator_cols(p, family, b, d, triple):
    """Column operator within one family, moving column d into column b."""
    out = {}
    for m, c in p.terms.items():
        md = dict(m)
        for (fam, i, j), e in m:
            if fam != family or j != d:
                continue
            new = dict(md)
            new[(fam, i, d)] = e - 1
            dst = (fam, i, b)
            new[dst] = new.get(dst, 0) + 1
            m2 = mono_from_dict(new)
            s = out.get(m2, 0) + c * e
            if s:
                out[m2] = s
            elif m2 in out:
                del out[m2]
    return Polynomial(out)


def check_hwv(p, triple):
    """Whether every simple raising operator annihilates p."""
    for d in range(2, triple.n + 1):
        if not raising_operator_rows(p, d - 1, d, triple).is_zero():
            return False
    for d in range(2, triple.k + 1):
        if not raising_operator_cols(p, "x", d - 1, d, triple).is_zero():
            return False
    for d in range(2, triple.ell + 1):
        if not raising_operator_cols(p, "y", d - 1, d, triple).is_zero():
            return False
    return True


@dataclass(frozen=True)
class WeightProfile:
    """Degree vectors: by row, by x column, and by y column."""

    row_degrees: tuple
    x_col_degrees: tuple
    y_col_degrees: tuple

    def matches(self, triple):
        return (self.row_degrees == triple.Ft.parts
                and self.x_col_degrees == triple.Dt.parts
                and self.y_col_degrees == triple.Et.parts)


def _strip(v):
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return tuple(v)


def weight_profile(p):
    """The common multidegree of all terms; NotHomogeneous otherwise."""
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no weight profile")
    profile = None
    for m in p.terms:
        rows, xcols, ycols = {}, {}, {}
        for (fam, i, j), e in m:
            if fam == "x":
                rows[i] = rows.get(i, 0) + e
                xcols[j] = xcols.get(j, 0) + e
            elif fam == "y":
                rows[i] = rows.get(i, 0) + e
                ycols[j] = ycols.get(j, 0) + e
        cur = (
            _strip([rows.get(i, 0) for i in range(1, max(rows, default=0) + 1)]),
            _strip([xcols.get(j, 0) for j in range(1, max(xcols, default=0) + 1)]),
            _strip([ycols.get(j, 0) for j in range(1, max(ycols, default=0) + 1)]),
        )
        if profile is None:
            profile = cur
        elif profile != cur:
            raise NotHomogeneous("terms have different multidegrees")
    return WeightProfile(*profile)


def check_leading_term(triple, T):
    """Leading y-monomial of the reduced coefficient is e(T), up to sign."""
    m, c = leading_monomial(delta_TY(triple, T))
    return m == monomial_e(T) and abs(c) == 1


def check_e1_factorization(triple, T):
    """The strip-start factors account for the whole first y column."""
    e1 = monomial_e1(T)
    e = monomial_e(T)
    if not mono_divides(e1, e):
        return False
    if mono_restrict(e, {"y"}) != e:
        return False
    first_col = tuple((v, x) for v, x in e if v[2] == 1)
    if first_col != e1:
        return False
    lead, _ = leading_monomial(delta_TY(triple, T))
    return mono_divides(e1, lead)


@dataclass
class BasisReport:
    """Outcome of the spanning-family rank check for one triple."""

    lr_count: int
    oracle_count: int
    leading: list
    leading_distinct: bool
    rank: int
    mode: str
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = (self.lr_count == self.oracle_count == self.rank
                       and self.leading_distinct)

    def to_json(self):
        return {"lr_count": self.lr_count, "oracle_count": self.oracle_count,
                "leading": self.leading, "leading_distinct": self.leading_distinct,
                "rank": self.rank, "mode": self.mode, "pass": self.passed}


def check_basis(triple, seed=0, symbolic_limit=12):
    """Count, construct, and rank the tableau coefficients of a triple.

    For small |F| the rank is that of the exact coefficient matrix of the
    constructed polynomials.  For large |F| the polynomials are evaluated
    exactly at random integer points instead; the evaluation matrix has
    rank at most that of the coefficient matrix, which in turn is at most
    the tableau count, so equality of all three is still conclusive.
    """
    tabs = enumerate_lr(triple)
    oracle_count = lr_coefficient(triple)
    leading = [mono_text(monomial_bigE(T, triple)) for T in tabs]
    distinct = len(set(leading)) == len(leading)
    if not tabs:
        return BasisReport(0, oracle_count, [], True, 0, "empty")
    if triple.F.size <= symbolic_limit:
        polys = [delta_MT(triple, T) for T in tabs]
        monos = sorted({m for p in polys for m in p.terms})
        matrix = [[p.terms.get(m, 0) for m in monos] for p in polys]
        mode = "symbolic"
    else:
        rng = random.Random(seed)
        points = [random_point(rng, triple) for _ in range(len(tabs) + 4)]
        matrix = [[delta_MT_eval(triple, T, pt) for pt in points] for T in tabs]
        mode = "evaluation"
    return BasisReport(len(tabs), oracle_count, leading, distinct,
                       int_rank(matrix), mode)
