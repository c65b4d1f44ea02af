"""Littlewood-Richardson tableaux, their enumeration, and standard peeling.

A tableau here is a filling of the skew shape transpose(F) - transpose(D)
with content transpose(E): entry c appears (transpose(E))_c times.  The two
defining conditions are

  LR1: rows weakly increase left to right, columns strictly increase top
       to bottom;
  LR2: for every row p and entry m >= 2, the number of m's in the first p
       rows is at most the number of (m-1)'s in the first p-1 rows.

Standard peeling repeatedly removes, for h = max entry down to 1, the
farthest-northeast cell containing h; each pass removes a vertical strip
that becomes one column of a "banal" tableau (the unique LR tableau of
straight shape, whose row a is all a's).  The record of which column of
the skew shape each strip cell came from is the exponent grid m, and the
record of which row each cell sat in gives the monomial e.
"""

from dataclasses import dataclass

from .errors import NoPreimage, NotLR, ShapeError
from .polyring import mono, mono_from_dict, xvar, yvar
from .shapes import Partition, SkewShape


class LRTableau:
    """A filling of a skew shape, entries keyed by (row, column)."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape, entries):
        self.shape = shape
        self.entries = dict(entries)
        if set(self.entries) != set(shape.cells):
            raise ShapeError("entries do not cover the shape exactly")
        for v in self.entries.values():
            if not isinstance(v, int) or v < 1:
                raise ShapeError(f"entries must be positive integers, got {v!r}")

    def entry(self, a, c):
        return self.entries[(a, c)]

    def row_word(self):
        """Entries read row by row, top to bottom, left to right."""
        return tuple(self.entries[cell] for cell in self.shape.cells)

    def content(self):
        """The multiplicity vector of the entries, as a tuple."""
        if not self.entries:
            return ()
        top = max(self.entries.values())
        counts = [0] * top
        for v in self.entries.values():
            counts[v - 1] += 1
        return tuple(counts)

    def to_json(self):
        rows = []
        for a in range(1, self.shape.outer.depth + 1):
            span = self.shape.row_span(a)
            rows.append([] if span is None
                        else [self.entries[(a, c)] for c in range(span[0], span[1] + 1)])
        return {"outer": list(self.shape.outer.parts),
                "inner": list(self.shape.inner.parts),
                "rows": rows}

    @classmethod
    def from_json(cls, data):
        shape = SkewShape(tuple(data["outer"]), tuple(data["inner"]))
        entries = {}
        for a, row in enumerate(data["rows"], start=1):
            span = shape.row_span(a)
            expected = 0 if span is None else span[1] - span[0] + 1
            if len(row) != expected:
                raise ShapeError(f"row {a} has {len(row)} entries, expected {expected}")
            for off, v in enumerate(row):
                entries[(a, span[0] + off)] = v
        return cls(shape, entries)

    def __eq__(self, other):
        return (isinstance(other, LRTableau)
                and self.shape == other.shape and self.entries == other.entries)

    def __hash__(self):
        return hash((self.shape, tuple(sorted(self.entries.items()))))

    def __repr__(self):
        return f"LRTableau({self.to_json()})"


def check_lr1(T):
    """Rows weakly increase, columns strictly increase."""
    for (a, c), v in T.entries.items():
        left = T.entries.get((a, c - 1))
        if left is not None and left > v:
            return False
        up = T.entries.get((a - 1, c))
        if up is not None and up >= v:
            return False
    return True


def check_lr2(T):
    """The lattice-word condition on row prefixes."""
    depth = T.shape.outer.depth
    top = max(T.entries.values(), default=0)
    prefix = [0] * (top + 1)  # counts of each value in rows seen so far
    for a in range(1, depth + 1):
        prev = list(prefix)
        for (aa, _), v in T.entries.items():
            if aa == a:
                prefix[v] += 1
        for m in range(2, top + 1):
            if prefix[m] > prev[m - 1]:
                return False
    return True


def is_lr(T):
    return check_lr1(T) and check_lr2(T)


def enumerate_lr(triple):
    """All LR tableaux of the triple, in lex order of the row word.

    Fills cells in row-major order, trying smaller entries first, pruning
    with the semistandard conditions and an incremental lattice-word check
    (valid because all rows above the current cell are already complete).
    """
    if not triple.dt_in_ft:
        return []
    shape = triple.skew_shape()
    content = triple.Et.parts
    top = len(content)
    cells = shape.cells
    if sum(content) != len(cells):
        raise ShapeError("content size does not match shape size")
    remaining = list(content)
    entries = {}
    placed = [0] * (top + 1)  # copies of each value placed so far
    out = []

    def backtrack(idx, above):
        # above[v] = copies of v in the rows strictly above the current one
        if idx == len(cells):
            out.append(LRTableau(shape, dict(entries)))
            return
        a, c = cells[idx]
        if idx > 0 and cells[idx - 1][0] != a:
            above = placed.copy()
        lo = entries.get((a, c - 1), 1)
        up = entries.get((a - 1, c))
        lo = max(lo, up + 1 if up is not None else 1)
        for v in range(lo, top + 1):
            if not remaining[v - 1]:
                continue
            if v > 1 and placed[v] + 1 > above[v - 1]:
                continue
            entries[(a, c)] = v
            remaining[v - 1] -= 1
            placed[v] += 1
            backtrack(idx + 1, above)
            placed[v] -= 1
            remaining[v - 1] += 1
            del entries[(a, c)]

    if cells:
        backtrack(0, placed.copy())
    else:
        out.append(LRTableau(shape, {}))
    return out


def count_lr(triple):
    return len(enumerate_lr(triple))


@dataclass(frozen=True)
class PeelingTrace:
    """Result of standard peeling.

    strips[h-1] lists the cells removed in pass h, in the order of the
    values 1, 2, ... they contained; the lengths of the strips, sorted,
    transpose to the content partition.
    """

    strips: tuple
    banal_shape: Partition

    def column_assignment(self):
        """(strip index h, value v) -> column of the skew shape."""
        return {(h, v): cell[1]
                for h, strip in enumerate(self.strips, start=1)
                for v, cell in enumerate(strip, start=1)}


def standard_peeling(T):
    """Peel T into vertical strips; raises NotLR on an invalid filling.

    Each pass removes, for h = (current max entry) down to 1, the topmost
    then rightmost cell containing h.  For an LR tableau the removed cells
    form a strip heading northeast (the cell for h-1 strictly above and
    weakly right of the cell for h) and the remainder is again LR.
    """
    if not is_lr(T):
        raise NotLR("standard peeling is defined only for LR tableaux")
    entries = dict(T.entries)
    strips = []
    while entries:
        top = max(entries.values())
        strip = []
        for h in range(top, 0, -1):
            cands = [cell for cell, v in entries.items() if v == h]
            if not cands:
                raise NotLR(f"no cell with entry {h} during peeling")
            cell = min(cands, key=lambda rc: (rc[0], -rc[1]))
            strip.append(cell)
            del entries[cell]
        strip.reverse()  # value 1 first
        for i in range(len(strip) - 1):
            (a1, c1), (a2, c2) = strip[i], strip[i + 1]
            if not (a1 < a2 and c1 >= c2):
                raise NotLR("peeled cells do not form a northeast strip")
        strips.append(tuple(strip))
    lengths = [len(s) for s in strips]
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        raise NotLR("strip lengths are not weakly decreasing")
    return PeelingTrace(tuple(strips), Partition(lengths).transpose())


class ExponentMatrix:
    """The grid m with m[i][h] = cells of strip h taken from column i.

    Rows are indexed by the t columns of transpose(F) (rows of F), columns
    by the s strips (rows of E).  Row i sums to F_i - D_i, column h sums
    to E_h, and the entries satisfy the shuffle inequalities
    sum_{j>k} m[j][i] >= sum_{j>=k} m[j][i+1].
    """

    __slots__ = ("m",)

    def __init__(self, m):
        self.m = tuple(tuple(row) for row in m)

    @property
    def nrows(self):
        return len(self.m)

    @property
    def ncols(self):
        return len(self.m[0]) if self.m else 0

    def row_sums(self):
        return tuple(sum(row) for row in self.m)

    def col_sums(self):
        return tuple(sum(row[h] for row in self.m) for h in range(self.ncols))

    def support(self):
        return frozenset((i + 1, h + 1)
                         for i, row in enumerate(self.m)
                         for h, v in enumerate(row) if v)

    def check(self, triple):
        """Validate the row/column sums and the shuffle inequalities."""
        if self.nrows != triple.t or (triple.s and self.ncols != triple.s):
            return False
        if self.row_sums() != tuple(triple.f(i) - triple.d(i)
                                    for i in range(1, triple.t + 1)):
            return False
        if self.col_sums() != tuple(triple.e(h) for h in range(1, self.ncols + 1)):
            return False
        t = self.nrows
        for i in range(self.ncols - 1):
            for k in range(t):
                if (sum(self.m[j][i] for j in range(k + 1, t))
                        < sum(self.m[j][i + 1] for j in range(k, t))):
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, ExponentMatrix) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"ExponentMatrix({[list(r) for r in self.m]})"


def monomial_M(T):
    """The exponent grid of T under standard peeling."""
    trace = standard_peeling(T)
    t = T.shape.outer.width  # columns of the skew shape = rows of F
    s = len(trace.strips)
    m = [[0] * s for _ in range(t)]
    for h, strip in enumerate(trace.strips):
        for (_, c) in strip:
            m[c - 1][h] += 1
    return ExponentMatrix(m)


def recover_from_M(triple, m):
    """Invert monomial_M; raises NoPreimage when no tableau maps to m.

    Rebuilds the tableau by inserting the strips in reverse peeling order;
    within a strip, values take its skew-shape columns in weakly decreasing
    order, and within a column cells are consumed top to bottom in the
    order the strips arrive.
    """
    if isinstance(m, ExponentMatrix):
        grid = m.m
    else:
        grid = tuple(tuple(row) for row in m)
    shape = triple.skew_shape()
    s = len(grid[0]) if grid else 0
    col_cells = {c: shape.column_rows(c) for c in range(1, triple.t + 1)}
    next_free = {c: 0 for c in col_cells}
    entries = {}
    for h in range(s, 0, -1):
        cols = []
        for i in range(len(grid), 0, -1):
            cols.extend([i] * grid[i - 1][h - 1])
        cols.sort(reverse=True)
        for v, c in enumerate(cols, start=1):
            rows = col_cells.get(c, [])
            if next_free[c] >= len(rows):
                raise NoPreimage(f"column {c} of the skew shape overflows")
            entries[(rows[next_free[c]], c)] = v
            next_free[c] += 1
    if set(entries) != set(shape.cells):
        raise NoPreimage("grid does not fill the skew shape")
    T = LRTableau(shape, entries)
    if not is_lr(T) or monomial_M(T) != ExponentMatrix(grid):
        raise NoPreimage("grid is not the peeling record of any LR tableau")
    return T


def monomial_e(T):
    """Product over boxes of y[row, entry], as a monomial."""
    return mono(*(((yvar(a, v)), 1) for (a, _), v in T.entries.items()))


def monomial_e1(T):
    """The factors of e(T) recording where each strip starts.

    One y[a, 1] per peeling strip, a = the skew-shape row of the strip's
    1-cell; for an LR tableau this is exactly the y[.,1]-part of e(T).
    """
    trace = standard_peeling(T)
    return mono(*(((yvar(strip[0][0], 1)), 1) for strip in trace.strips))


def monomial_bigE(T, triple):
    """e(T) times the diagonal x-monomial fixed by the triple.

    The x[j,j] exponent is the j-th column length of D, i.e. the number of
    leading principal minors of size j contributed by the left block.
    """
    d = dict(monomial_e(T))
    for j, e in enumerate(triple.Dt.parts, start=1):
        d[xvar(j, j)] = d.get(xvar(j, j), 0) + e
    return mono_from_dict(d)


def recover_from_e(triple, e_mono):
    """Invert monomial_e; raises NoPreimage when e is not in its image.

    Row a of the skew shape must consist of exactly its y[a, c] exponents
    many copies of each entry c, placed in increasing order.
    """
    shape = triple.skew_shape()
    exps = dict(e_mono)
    for v in exps:
        if v[0] != "y":
            raise NoPreimage(f"unexpected variable {v}")
    entries = {}
    for a in range(1, shape.outer.depth + 1):
        span = shape.row_span(a)
        row_vals = []
        for (fam, aa, c), e in exps.items():
            if aa == a:
                row_vals.extend([c] * e)
        row_vals.sort()
        expected = 0 if span is None else span[1] - span[0] + 1
        if len(row_vals) != expected:
            raise NoPreimage(f"row {a} degree {len(row_vals)} != length {expected}")
        for off, v in enumerate(row_vals):
            entries[(a, span[0] + off)] = v
    T = LRTableau(shape, entries)
    if not is_lr(T) or monomial_e(T) != mono(*exps.items()):
        raise NoPreimage("monomial is not e(T) for any LR tableau")
    return T
