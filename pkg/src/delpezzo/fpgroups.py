"""Finitely presented groups: coset enumeration and abelianization.

Todd-Coxeter is the deterministic HLT strategy (no lookahead), cosets
defined in scanning order, so tables and orders are reproducible.
Abelianization goes through the Smith normal form of the relator
exponent-sum matrix.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

DEFAULT_COSET_BOUND = 10_000


class CosetBoundExceeded(RuntimeError):
    def __init__(self, bound: int):
        super().__init__(f"coset table exceeded bound {bound}")
        self.bound = bound


@dataclass(frozen=True)
class Presentation:
    ngens: int
    relators: tuple  # tuples of signed 1-based generator indices

    def __post_init__(self):
        for rel in self.relators:
            if not rel:
                raise ValueError("relators must be nonempty words")
            for g in rel:
                if g == 0 or abs(g) > self.ngens:
                    raise ValueError(f"letter {g} out of range in relator {rel}")

    def __str__(self):
        return format_presentation(self)


def mumford_presentation(i: int) -> Presentation:
    """Boundary fundamental group <e2,e3 | (e2 e3)^2 = e2^3 = e3^(i-3)>.

    Only 4 <= i <= 8 is accepted: at i = 3 the group is infinite.
    """
    if not 4 <= i <= 8:
        raise ValueError(f"i must be in [4, 8], got {i} (i=3 gives an infinite group)")
    r1 = (1, 2, 1, 2) + (-1,) * 3          # (e2 e3)^2 e2^-3
    r2 = (1,) * 3 + (-2,) * (i - 3)        # e2^3 e3^-(i-3)
    return Presentation(2, (r1, r2))


# ---------------------------------------------------------------------------
# presentation text format:  gens=2; rel=(1 2)^2 * 1^-3; rel=1^3 * 2^-5
# ---------------------------------------------------------------------------

_FACTOR_RE = re.compile(r"^(?:\((?P<word>[-\d\s]+)\)|(?P<gen>-?\d+))(?:\^(?P<exp>-?\d+))?$")


def parse_presentation(text: str) -> Presentation:
    ngens = None
    relators = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        key, _, value = part.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "gens":
            ngens = int(value)
        elif key == "rel":
            word = []
            for factor in value.split("*"):
                m = _FACTOR_RE.match(factor.strip())
                if not m:
                    raise ValueError(f"bad relator factor {factor!r}")
                if m.group("word") is not None:
                    base = tuple(int(x) for x in m.group("word").split())
                else:
                    base = (int(m.group("gen")),)
                exp = int(m.group("exp")) if m.group("exp") else 1
                if exp < 0:
                    base = tuple(-g for g in reversed(base))
                    exp = -exp
                word.extend(base * exp)
            relators.append(tuple(word))
        else:
            raise ValueError(f"unknown key {key!r} in presentation text")
    if ngens is None:
        raise ValueError("presentation text must declare gens=<n>")
    return Presentation(ngens, tuple(relators))


def format_presentation(p: Presentation) -> str:
    def fmt_rel(rel):
        # run-length encode into factors
        parts = []
        i = 0
        while i < len(rel):
            g = rel[i]
            j = i
            while j < len(rel) and rel[j] == g:
                j += 1
            count = j - i
            base = abs(g)
            exp = count if g > 0 else -count
            parts.append(str(base) if exp == 1 else f"{base}^{exp}")
            i = j
        return " * ".join(parts)

    rels = "; ".join(f"rel={fmt_rel(r)}" for r in p.relators)
    return f"gens={p.ngens}; {rels}"


# ---------------------------------------------------------------------------
# Todd-Coxeter coset enumeration (HLT) over the trivial subgroup
# ---------------------------------------------------------------------------

def _letter_to_col(g: int) -> int:
    # generator k -> column 2(k-1), inverse -> 2(k-1)+1
    return 2 * (abs(g) - 1) + (0 if g > 0 else 1)


def _inverse_col(col: int) -> int:
    return col ^ 1


class CosetTable:
    """Working state for HLT enumeration; rows map coset x column -> coset."""

    def __init__(self, ngens: int, bound: int):
        self.ncols = 2 * ngens
        self.bound = bound
        self.rows = [[None] * self.ncols]
        self.parent = [0]       # union-find for coincidences
        self.defined = 1

    def find(self, c):
        while self.parent[c] != c:
            self.parent[c] = self.parent[self.parent[c]]
            c = self.parent[c]
        return c

    def define(self, c, col):
        if self.defined >= self.bound:
            raise CosetBoundExceeded(self.bound)
        new = len(self.rows)
        self.rows.append([None] * self.ncols)
        self.parent.append(new)
        self.defined += 1
        self.rows[c][col] = new
        self.rows[new][_inverse_col(col)] = c
        return new

    def set_entry(self, c, col, d):
        """Record c.col = d, merging cosets when this collides."""
        self._process([(c, col, d)])

    def coincide(self, a, b):
        """Merge cosets a and b and propagate the consequences."""
        queue = []
        self._merge(a, b, queue)
        self._process(queue)

    def _process(self, queue):
        while queue:
            c, col, d = queue.pop()
            c, d = self.find(c), self.find(d)
            cur = self.rows[c][col]
            if cur is not None and self.find(cur) != d:
                queue.append((c, col, d))
                self._merge(self.find(cur), d, queue)
                continue
            self.rows[c][col] = d
            back = self.rows[d][_inverse_col(col)]
            if back is None:
                self.rows[d][_inverse_col(col)] = c
            elif self.find(back) != c:
                self._merge(self.find(back), c, queue)

    def _merge(self, a, b, queue):
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        if b < a:
            a, b = b, a
        self.parent[b] = a
        for col in range(self.ncols):
            entry = self.rows[b][col]
            if entry is not None:
                queue.append((a, col, entry))

    def live_cosets(self):
        return [c for c in range(len(self.rows)) if self.find(c) == c]

    def scan_and_fill(self, coset, word):
        """Trace a relator word from a coset, defining cosets as needed."""
        cols = [_letter_to_col(g) for g in word]
        f, b = coset, coset
        fi, bi = 0, len(cols)
        while True:
            f = self.find(f)
            b = self.find(b)
            # scan forward as far as possible
            while fi < bi:
                nxt = self.rows[f][cols[fi]]
                if nxt is None:
                    break
                f = self.find(nxt)
                fi += 1
            if fi == bi:
                if f != b:
                    self.coincide(f, b)
                return
            # scan backward toward the forward frontier
            while bi > fi + 1:
                prev = self.rows[b][_inverse_col(cols[bi - 1])]
                if prev is None:
                    break
                b = self.find(prev)
                bi -= 1
            if bi == fi + 1:
                # deduction closes the scan
                self.set_entry(f, cols[fi], b)
                return
            # fill: define a new coset at the forward frontier
            self.define(f, cols[fi])


def coset_enumerate(p: Presentation, bound: int = DEFAULT_COSET_BOUND) -> int:
    """Order of the group presented by p, enumerating cosets of the
    trivial subgroup.  Raises CosetBoundExceeded if the table grows past
    the bound before completing."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    table = CosetTable(p.ngens, bound)
    # enumerate over the trivial subgroup: no subgroup generator scans
    c = 0
    while c < len(table.rows):
        if table.find(c) != c:
            c += 1
            continue
        for rel in p.relators:
            if table.find(c) != c:
                break
            table.scan_and_fill(c, rel)
        if table.find(c) == c:
            # HLT fill: complete the row so the enumeration keeps moving
            for col in range(table.ncols):
                if table.find(c) == c and table.rows[c][col] is None:
                    table.define(c, col)
        c += 1
    return len(table.live_cosets())


# ---------------------------------------------------------------------------
# Smith normal form and abelianization
# ---------------------------------------------------------------------------

def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(matrix):
    """Return (U, D, V) with U*M*V = D, U and V unimodular, and D diagonal
    with each diagonal entry dividing the next."""
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u = _identity(rows)
    v = _identity(cols)

    def row_op(a, b, k):      # row a += k * row b
        for j in range(cols):
            m[a][j] += k * m[b][j]
        for j in range(rows):
            u[a][j] += k * u[b][j]

    def col_op(a, b, k):      # col a += k * col b
        for i in range(rows):
            m[i][a] += k * m[i][b]
        for i in range(cols):
            v[i][a] += k * v[i][b]

    def row_swap(a, b):
        m[a], m[b] = m[b], m[a]
        u[a], u[b] = u[b], u[a]

    def col_swap(a, b):
        for i in range(rows):
            m[i][a], m[i][b] = m[i][b], m[i][a]
        for i in range(cols):
            v[i][a], v[i][b] = v[i][b], v[i][a]

    def row_negate(a):
        for j in range(cols):
            m[a][j] = -m[a][j]
        for j in range(rows):
            u[a][j] = -u[a][j]

    t = 0
    while t < min(rows, cols):
        # find pivot: entry of least nonzero absolute value in the submatrix
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        if m[t][t] < 0:
            row_negate(t)
        dirty = False
        for i in range(t + 1, rows):
            if m[i][t] % m[t][t] != 0:
                dirty = True
            row_op(i, t, -(m[i][t] // m[t][t]))
        for j in range(t + 1, cols):
            if m[t][j] % m[t][t] != 0:
                dirty = True
            col_op(j, t, -(m[t][j] // m[t][t]))
        if dirty or any(m[i][t] for i in range(t + 1, rows)) \
                or any(m[t][j] for j in range(t + 1, cols)):
            continue  # re-pick pivot; remainders shrank
        # enforce divisibility d_t | d_{t+1..}
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % m[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, 1)
            continue
        t += 1
    d = [[m[i][j] for j in range(cols)] for i in range(rows)]
    return u, d, v


def abelianization(p: Presentation):
    """Invariant factors of G^ab: (torsion_factors, free_rank).

    Works on the relator exponent-sum matrix; no coset table needed.
    """
    matrix = [[sum(1 if g == k else -1 if g == -k else 0 for g in rel)
               for k in range(1, p.ngens + 1)]
              for rel in p.relators]
    if not matrix:
        return [], p.ngens
    _, d, _ = smith_normal_form(matrix)
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    rank = sum(1 for x in diag if x != 0)
    torsion = [x for x in diag if x > 1]
    return torsion, p.ngens - rank


def hom_count_cyclic(p: Presentation, d: int) -> int:
    """|Hom(G, Z/d)| computed from the abelianization invariant factors."""
    if d < 1:
        raise ValueError("d must be >= 1")
    torsion, free_rank = abelianization(p)
    count = d ** free_rank
    for factor in torsion:
        count *= math.gcd(factor, d)
    return count
