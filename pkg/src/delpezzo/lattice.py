"""ADE Dynkin types, curve configurations and blow-down calculus.

Covers the numerical side of du Val singularities: Cartan matrices and
their determinants, local fundamental group orders (binary polyhedral
groups), recognition of ADE dual graphs from intersection matrices, and
the intersection-matrix update rule for contracting a (-1)-curve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

A_MAX = 24
D_MAX = 12


@dataclass(frozen=True, order=True)
class DynkinType:
    letter: str
    rank: int

    def __post_init__(self):
        if self.letter == "A":
            if self.rank < 1:
                raise ValueError("A_n requires n >= 1")
        elif self.letter == "D":
            if self.rank < 4:
                raise ValueError("D_n requires n >= 4")
        elif self.letter == "E":
            if self.rank not in (6, 7, 8):
                raise ValueError("E_n requires n in {6, 7, 8}")
        else:
            raise ValueError(f"unknown Dynkin letter {self.letter!r}")

    def __str__(self):
        return f"{self.letter}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        text = text.strip()
        if not text or text[0] not in "ADE":
            raise ValueError(f"bad Dynkin type {text!r}")
        return cls(text[0], int(text[1:]))


@dataclass(frozen=True)
class NotADE:
    reason: str

    def __str__(self):
        return f"NotADE({self.reason})"


def A(n):
    return DynkinType("A", n)


def D(n):
    return DynkinType("D", n)


def E(n):
    return DynkinType("E", n)


# ---------------------------------------------------------------------------
# Cartan data
# ---------------------------------------------------------------------------

def dynkin_edges(t: DynkinType):
    """Edge list of the Dynkin diagram on vertices 0..rank-1."""
    n = t.rank
    if t.letter == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if t.letter == "D":
        # chain 0..n-3, with n-2 and n-1 both attached to n-3
        edges = [(i, i + 1) for i in range(n - 3)]
        edges += [(n - 3, n - 2), (n - 3, n - 1)]
        return edges
    # E_n: chain 0..n-2, extra vertex n-1 attached to vertex 2
    edges = [(i, i + 1) for i in range(n - 2)]
    edges.append((2, n - 1))
    return edges


def cartan_matrix(t: DynkinType):
    n = t.rank
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
    for i, j in dynkin_edges(t):
        m[i][j] = -1
        m[j][i] = -1
    return m


def _int_det(matrix) -> int:
    """Determinant by fraction-free elimination (exact for integer input)."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for row in range(col, n):
            if m[row][col] != 0:
                pivot = row
                break
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for row in range(col + 1, n):
            factor = m[row][col] * inv
            if factor:
                for k in range(col, n):
                    m[row][k] -= factor * m[col][k]
    assert det.denominator == 1
    return int(det)


def cartan_determinant(t: DynkinType) -> int:
    return _int_det(cartan_matrix(t))


def local_pi1_order(t: DynkinType) -> int:
    """Order of the local fundamental group (the binary polyhedral group)."""
    if t.letter == "A":
        return t.rank + 1
    if t.letter == "D":
        return 4 * (t.rank - 2)
    return {6: 24, 7: 48, 8: 120}[t.rank]


def all_types(a_max: int = A_MAX, d_max: int = D_MAX):
    return ([A(n) for n in range(1, a_max + 1)]
            + [D(n) for n in range(4, d_max + 1)]
            + [E(n) for n in (6, 7, 8)])


def types_with_order(n: int, a_max: int = A_MAX, d_max: int = D_MAX):
    return [t for t in all_types(a_max, d_max) if local_pi1_order(t) == n]


# ---------------------------------------------------------------------------
# singularity configurations (multisets of Dynkin types)
# ---------------------------------------------------------------------------

def config_sorted(config):
    return tuple(sorted(config, key=lambda t: (t.letter, t.rank)))


def config_rank(config) -> int:
    return sum(t.rank for t in config)


def config_orders(config):
    return sorted(local_pi1_order(t) for t in config)


def config_str(config) -> str:
    if not config:
        return "smooth"
    parts = []
    for t in config_sorted(config):
        if parts and parts[-1][0] == t:
            parts[-1][1] += 1
        else:
            parts.append([t, 1])
    return "+".join(str(t) if k == 1 else f"{k}{t}" for t, k in parts)


def parse_config(text: str):
    """Parse 'A3+2A1' or 'D4+3A1' style configuration strings."""
    text = text.strip()
    if not text or text.lower() == "smooth":
        return ()
    out = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        mult = 1
        i = 0
        while i < len(chunk) and chunk[i].isdigit():
            i += 1
        if i:
            mult = int(chunk[:i])
            chunk = chunk[i:]
        out.extend([DynkinType.parse(chunk)] * mult)
    return config_sorted(out)


# ---------------------------------------------------------------------------
# curve configurations and blow-down calculus
# ---------------------------------------------------------------------------

@dataclass
class CurveConfig:
    labels: list
    matrix: list              # symmetric integer intersection matrix
    multiplicities: Optional[list] = None

    def __post_init__(self):
        n = len(self.labels)
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError("intersection matrix shape must match labels")
        for i in range(n):
            for j in range(n):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise ValueError("intersection matrix must be symmetric")
                if i != j and self.matrix[i][j] < 0:
                    raise ValueError("off-diagonal intersections must be >= 0")

    @classmethod
    def from_json(cls, data: dict) -> "CurveConfig":
        return cls(list(data["labels"]),
                   [list(r) for r in data["matrix"]],
                   list(data["multiplicities"]) if data.get("multiplicities") else None)

    def to_json(self) -> dict:
        out = {"labels": self.labels, "matrix": self.matrix}
        if self.multiplicities is not None:
            out["multiplicities"] = self.multiplicities
        return out

    def index_of(self, label) -> int:
        return self.labels.index(label)

    def self_intersection(self, i: int) -> int:
        return self.matrix[i][i]

    def remove(self, i: int) -> "CurveConfig":
        keep = [k for k in range(len(self.labels)) if k != i]
        return CurveConfig(
            [self.labels[k] for k in keep],
            [[self.matrix[a][b] for b in keep] for a in keep],
            [self.multiplicities[k] for k in keep] if self.multiplicities else None)


def blow_down(c: CurveConfig, i: int) -> CurveConfig:
    """Contract curve i; requires self-intersection -1.

    New C.D = C.D + (C.E)(D.E) for the surviving curves, E the contracted one.
    """
    if c.matrix[i][i] != -1:
        raise ValueError(
            f"cannot contract curve {c.labels[i]!r}: self-intersection "
            f"{c.matrix[i][i]} != -1")
    keep = [k for k in range(len(c.labels)) if k != i]
    new_matrix = [[c.matrix[a][b] + c.matrix[a][i] * c.matrix[b][i] for b in keep]
                  for a in keep]
    return CurveConfig([c.labels[k] for k in keep], new_matrix,
                       [c.multiplicities[k] for k in keep] if c.multiplicities else None)


def recognize_dynkin(c: CurveConfig):
    """Recognize a configuration of (-2)-curves as an ADE dual graph.

    Returns the DynkinType, or NotADE with the reason (wrong
    self-intersection, disconnected, cycle, branching too high, or a
    diagram shape outside the ADE list).
    """
    n = len(c.labels)
    if n == 0:
        return NotADE("empty configuration")
    for i in range(n):
        if c.matrix[i][i] != -2:
            return NotADE(
                f"curve {c.labels[i]!r} has self-intersection {c.matrix[i][i]}, not -2")
    adj = {i: [] for i in range(n)}
    edge_count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if c.matrix[i][j] > 1:
                return NotADE(f"multiple edge between {c.labels[i]!r} and {c.labels[j]!r}")
            if c.matrix[i][j] == 1:
                adj[i].append(j)
                adj[j].append(i)
                edge_count += 1
    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) < n:
        return NotADE("disconnected")
    if edge_count != n - 1:
        return NotADE("contains a cycle")
    degrees = [len(adj[i]) for i in range(n)]
    if max(degrees) > 3:
        return NotADE("branch vertex of degree > 3")
    branches = [i for i in range(n) if degrees[i] == 3]
    if len(branches) > 1:
        return NotADE("more than one branch vertex")
    if not branches:
        return A(n)
    # arm lengths from the unique branch vertex
    b = branches[0]
    arms = []
    for start in adj[b]:
        length = 1
        prev, cur = b, start
        while degrees[cur] == 2:
            nxt = [x for x in adj[cur] if x != prev][0]
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    a1, a2, a3 = arms
    if a1 == 1 and a2 == 1:
        return D(a3 + 3)
    if a1 == 1 and a2 == 2 and a3 in (2, 3, 4):
        return E(a3 + 4)
    return NotADE(f"branch arms {arms} are not an ADE shape")


def dynkin_curve_config(t: DynkinType) -> CurveConfig:
    """The configuration of (-2)-curves whose dual graph is the given type."""
    n = t.rank
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        matrix[i][i] = -2
    for i, j in dynkin_edges(t):
        matrix[i][j] = matrix[j][i] = 1
    return CurveConfig([f"{t}#{i}" for i in range(n)], matrix)


def ii_star_fiber() -> CurveConfig:
    """The type II* fibre: affine E8 with labelled components and multiplicities.

    C1-...-C6-C4'-C2' is an ordered linear chain and C3' hangs off C6;
    multiplicities are 1..6, 4, 2, 3.
    """
    labels = ["C1", "C2", "C3", "C4", "C5", "C6", "C4'", "C2'", "C3'"]
    mult = [1, 2, 3, 4, 5, 6, 4, 2, 3]
    n = 9
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        matrix[i][i] = -2
    chain = list(range(8))  # C1..C6, C4', C2'
    for a, b in zip(chain, chain[1:]):
        matrix[a][b] = matrix[b][a] = 1
    c6, c3p = 5, 8
    matrix[c6][c3p] = matrix[c3p][c6] = 1
    return CurveConfig(labels, matrix, mult)
