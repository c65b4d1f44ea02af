"""Sparse multivariate polynomials over the integers.

Variables are tuples (family, i, j) with family one of "x", "y", "a", "b"
("a"/"b" are the row- and column-coefficient families) plus "z" for the
auxiliary symmetric-function variables.  A monomial is a tuple of
(variable, exponent) pairs sorted by the global variable order
x < y < a < b < z, then (i, j) lexicographically.  Polynomials are dicts
mapping monomials to nonzero integer coefficients.
"""

import json
import re

from .errors import (MissingAssignment, NonSquare, UnorderedVariable,
                     ZeroPolynomial)

_FAMILY_RANK = {"x": 0, "y": 1, "a": 2, "b": 3, "z": 4}

ONE = ()  # the empty monomial


def var_key(v):
    return (_FAMILY_RANK[v[0]], v[1], v[2])


def xvar(i, j):
    return ("x", i, j)


def yvar(i, j):
    return ("y", i, j)


def avar(i, j):
    return ("a", i, j)


def bvar(i, j):
    return ("b", i, j)


def zvar(i):
    return ("z", i, 1)


def mono(*pairs):
    """Canonical monomial from (variable, exponent) pairs."""
    merged = {}
    for v, e in pairs:
        if e:
            merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items(), key=lambda p: var_key(p[0])))


def mono_from_dict(d):
    return tuple(sorted(((v, e) for v, e in d.items() if e),
                        key=lambda p: var_key(p[0])))


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    merged = dict(m1)
    for v, e in m2:
        merged[v] = merged.get(v, 0) + e
    return mono_from_dict(merged)


def mono_degree(m):
    return sum(e for _, e in m)


def mono_divides(m1, m2):
    """Whether m1 divides m2."""
    d2 = dict(m2)
    return all(d2.get(v, 0) >= e for v, e in m1)


def mono_div(m1, m2):
    """m1 / m2, assuming divisibility."""
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) - e
    return mono_from_dict(d)


def mono_restrict(m, families):
    """Sub-monomial of m supported on the given variable families."""
    return tuple((v, e) for v, e in m if v[0] in families)


class Polynomial:
    """Integer polynomial stored as {monomial: coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({ONE: c})

    @classmethod
    def variable(cls, v):
        return cls({mono((v, 1)): 1})

    @classmethod
    def monomial(cls, m, c=1):
        return cls({m: c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        res = Polynomial.__new__(Polynomial)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = Polynomial.__new__(Polynomial)
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial()
            res = Polynomial.__new__(Polynomial)
            res.terms = {m: c * other for m, c in self.terms.items()}
            return res
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        res = Polynomial.__new__(Polynomial)
        res.terms = out
        return res

    __rmul__ = __mul__

    def degree(self):
        return max((mono_degree(m) for m in self.terms), default=0)

    def variables(self):
        seen = set()
        for m in self.terms:
            for v, _ in m:
                seen.add(v)
        return seen

    def coefficient(self, m):
        return self.terms.get(m, 0)

    def __repr__(self):
        return f"Polynomial({poly_text(self)})"


def diff(p, v):
    """Partial derivative with respect to variable v."""
    out = {}
    for m, c in p.terms.items():
        d = dict(m)
        e = d.get(v, 0)
        if not e:
            continue
        d[v] = e - 1
        m2 = mono_from_dict(d)
        s = out.get(m2, 0) + c * e
        if s:
            out[m2] = s
        elif m2 in out:
            del out[m2]
    return Polynomial(out)


def evaluate(p, assignment):
    """Evaluate at an integer point; every variable of p must be assigned."""
    total = 0
    for m, c in p.terms.items():
        v = c
        for var, e in m:
            if var not in assignment:
                raise MissingAssignment(f"no value for {var}")
            v *= assignment[var] ** e
        total += v
    return total


def coefficient_of(p, m, families):
    """Terms of p whose sub-monomial in the given families equals m.

    Returns the cofactor polynomial, i.e. those terms divided by m.
    """
    m = tuple(m)
    out = {}
    for mm, c in p.terms.items():
        if mono_restrict(mm, families) == m:
            out[tuple((v, e) for v, e in mm if v[0] not in families)] = c
    return Polynomial(out)


def split_by_family(p, families):
    """Group the terms of p by their sub-monomial in the given families."""
    out = {}
    for mm, c in p.terms.items():
        key = mono_restrict(mm, families)
        rest = tuple((v, e) for v, e in mm if v[0] not in families)
        bucket = out.setdefault(key, {})
        bucket[rest] = bucket.get(rest, 0) + c
    return {k: Polynomial(v) for k, v in out.items()}


# ---------------------------------------------------------------------------
# The y-monomial order used for leading terms.
#
# Single variables are ordered y[1,1] > y[2,1] > ... > y[n,1] > y[1,2] > ...
# (columns first, then rows).  Monomials are compared by total degree first;
# ties are broken by writing each monomial as its weakly decreasing sequence
# of variables and comparing those sequences position by position, the
# larger variable winning.
# ---------------------------------------------------------------------------

def y_var_key(v):
    """Sort key under which *smaller* key means *larger* variable."""
    if v[0] != "y":
        raise UnorderedVariable(f"{v} is not a y variable")
    return (v[2], v[1])


def y_compare(m1, m2):
    """-1, 0, or 1 comparing two y-monomials."""
    d1, d2 = mono_degree(m1), mono_degree(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    s1 = sorted((y_var_key(v) for v, e in m1 for _ in range(e)))
    s2 = sorted((y_var_key(v) for v, e in m2 for _ in range(e)))
    if s1 == s2:
        return 0
    return 1 if s1 < s2 else -1


def leading_monomial(p):
    """(monomial, coefficient) maximal under the y order among terms of p."""
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no leading monomial")
    best = None
    for m in p.terms:
        if best is None or y_compare(m, best) > 0:
            best = m
    return best, p.terms[best]


# ---------------------------------------------------------------------------
# Determinants.
# ---------------------------------------------------------------------------

def _beta_prune(terms, cap):
    """Drop terms whose b-family exponents exceed the cap (default 0)."""
    return {m: c for m, c in terms.items()
            if all(v[0] != "b" or e <= cap.get(v, 0) for v, e in m)}


def determinant(matrix, beta_cap=None):
    """Determinant of a square matrix of polynomials (or ints).

    Expands along columns (sparsest first) with memoization on the set of
    unused rows.  When beta_cap is given, terms whose b-family exponents
    exceed the cap are discarded as soon as they appear; since exponents
    only grow under further multiplication this does not change any kept
    coefficient of the full determinant.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise NonSquare("matrix is not square")
    if n == 0:
        return Polynomial.const(1)
    rows = [[e if isinstance(e, Polynomial) else Polynomial.const(e) for e in row]
            for row in matrix]
    nonzero = [[not e.is_zero() for e in row] for row in rows]
    order = sorted(range(n), key=lambda c: sum(nonzero[r][c] for r in range(n)))
    # parity of the column permutation
    sign = 1
    seen = list(order)
    for i in range(n):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    memo = {}

    def minor(ci, mask):
        if ci == n:
            return Polynomial.const(1)
        key = mask
        cached = memo.get((ci, key))
        if cached is not None:
            return cached
        col = order[ci]
        acc = Polynomial()
        pos = 0
        for r in range(n):
            bit = 1 << r
            if not mask & bit:
                continue
            pos += 1
            if nonzero[r][col]:
                sub = minor(ci + 1, mask ^ bit)
                if not sub.is_zero():
                    term = rows[r][col] * sub
                    if beta_cap is not None:
                        term = Polynomial(_beta_prune(term.terms, beta_cap))
                    acc = acc + term if pos % 2 else acc - term
        memo[(ci, key)] = acc
        return acc

    result = minor(0, (1 << n) - 1)
    return result * sign


def determinant_naive(matrix):
    """Permutation-sum determinant; independent oracle for small matrices."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise NonSquare("matrix is not square")
    rows = [[e if isinstance(e, Polynomial) else Polynomial.const(e) for e in row]
            for row in matrix]
    from itertools import permutations
    total = Polynomial()
    for perm in permutations(range(n)):
        sign = 1
        p = list(perm)
        for i in range(n):
            while p[i] != i:
                j = p[i]
                p[i], p[j] = p[j], p[i]
                sign = -sign
        prod = Polynomial.const(sign)
        for r in range(n):
            prod = prod * rows[r][perm[r]]
            if prod.is_zero():
                break
        total = total + prod
    return total


# ---------------------------------------------------------------------------
# Serialization.  Text looks like "+1*x[1,1]*y[2,1] -1*x[2,1]*y[1,1]";
# JSON is {"terms": [{"c": "<int>", "m": [["y", 5, 3, 1], ...]}, ...]}.
# ---------------------------------------------------------------------------

def _term_sort_key(m):
    return (mono_degree(m), tuple((-r, -i, -j, e) for (f, i, j), e in m
                                  for r in (_FAMILY_RANK[f],)))


def mono_text(m):
    if not m:
        return "1"
    bits = []
    for (f, i, j), e in m:
        s = f"{f}[{i},{j}]" if f != "z" else f"z[{i}]"
        if e != 1:
            s += f"^{e}"
        bits.append(s)
    return "*".join(bits)


def poly_text(p):
    if p.is_zero():
        return "0"
    parts = []
    for m in sorted(p.terms, key=_term_sort_key, reverse=True):
        c = p.terms[m]
        parts.append(f"{'+' if c >= 0 else '-'}{abs(c)}*{mono_text(m)}"
                     if m else f"{'+' if c >= 0 else '-'}{abs(c)}")
    return " ".join(parts)


_VAR_RE = re.compile(r"([xyabz])\[(\d+)(?:,(\d+))?\](?:\^(\d+))?$")


def parse_mono_text(text):
    text = text.strip()
    if text in ("1", ""):
        return ONE
    pairs = []
    for tok in text.split("*"):
        m = _VAR_RE.match(tok.strip())
        if not m:
            raise ValueError(f"cannot parse variable {tok!r}")
        f, i, j, e = m.group(1), int(m.group(2)), m.group(3), m.group(4)
        pairs.append(((f, i, int(j) if j else 1), int(e) if e else 1))
    return mono(*pairs)


def poly_to_json(p):
    terms = []
    for m in sorted(p.terms, key=_term_sort_key, reverse=True):
        terms.append({"c": str(p.terms[m]),
                      "m": [[v[0], v[1], v[2], e] for v, e in m]})
    return {"terms": terms}


def poly_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    out = Polynomial()
    for t in data["terms"]:
        m = mono(*(((f, i, j), e) for f, i, j, e in t["m"]))
        out = out + Polynomial.monomial(m, int(t["c"]))
    return out
