"""Finite monomial group actions on the projective plane.

Group elements are monomial matrices (permutation times diagonal, with
root-of-unity entries) considered up to a global scalar, i.e. as elements
of PGL(3).  Everything downstream is exact: eigenvalues come cycle-wise
as roots of unity, fixed points are cyclotomic, stabilizers are
classified through Hirzebruch-Jung reduction or the binary polyhedral
dictionary, and the quotient's K^2 and singularity configuration are
assembled with integer arithmetic throughout.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicNumber, RootOfUnity
from .lattice import A, D, E, DynkinType, config_sorted, config_str

GROUP_CAP = 720


class ActionError(ValueError):
    pass


class GroupCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"group closure exceeded cap {cap}")
        self.cap = cap


# ---------------------------------------------------------------------------
# monomial matrices modulo global scalar
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialMatrix:
    """Matrix with entry scalars[j] at position (perm[j], j), zero elsewhere."""

    perm: tuple
    scalars: tuple          # three RootOfUnity values

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2]:
            raise ActionError(f"perm {self.perm} is not a permutation of 0,1,2")
        if len(self.scalars) != 3:
            raise ActionError("exactly three scalars required")

    @classmethod
    def identity(cls) -> "MonomialMatrix":
        one = RootOfUnity.one()
        return cls((0, 1, 2), (one, one, one))

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        # (self*other) x = self(other x)
        perm = tuple(self.perm[other.perm[j]] for j in range(3))
        scalars = tuple(other.scalars[j] * self.scalars[other.perm[j]]
                        for j in range(3))
        return MonomialMatrix(perm, scalars)

    def inverse(self) -> "MonomialMatrix":
        inv_perm = tuple(self.perm.index(i) for i in range(3))
        scalars = tuple(self.scalars[inv_perm[i]].inverse() for i in range(3))
        return MonomialMatrix(inv_perm, scalars)

    def canonical(self) -> "MonomialMatrix":
        """Projective normal form: divide out the first column's scalar."""
        s0 = self.scalars[0]
        return MonomialMatrix(self.perm, tuple(s / s0 for s in self.scalars))

    def is_identity(self) -> bool:
        c = self.canonical()
        return c.perm == (0, 1, 2) and all(s.is_one() for s in c.scalars)

    def order(self) -> int:
        """Projective order (order in PGL(3))."""
        power = self
        for k in range(1, 721):
            if power.is_identity():
                return k
            power = power * self
        raise ActionError("element order exceeds sanity bound")

    def apply(self, coords):
        """Image of a coordinate vector (list of CyclotomicNumber)."""
        out = [None, None, None]
        for j in range(3):
            out[self.perm[j]] = coords[j] * self.scalars[j]
        return out

    def normal_action(self) -> "MonomialMatrix":
        """The induced action on line normals (inverse transpose)."""
        return MonomialMatrix(self.perm, tuple(s.inverse() for s in self.scalars))

    def sort_key(self):
        c = self.canonical()
        return (c.perm, tuple(s.exponent for s in c.scalars))

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "scalars": [str(s) for s in self.scalars]}

    def __str__(self):
        rows = [["0"] * 3 for _ in range(3)]
        for j in range(3):
            rows[self.perm[j]][j] = f"z({self.scalars[j]})"
        return "[" + "; ".join(" ".join(r) for r in rows) + "]"


def parse_action(text: str):
    """Parse action JSON into a list of generator matrices.

    Accepts either {"name":..., "generators":[...]} or a bare list of
    generator objects {"perm":[...], "scalars":["k/m",...]}.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ActionError(f"invalid JSON: {exc}") from None
    if isinstance(data, dict):
        data = data.get("generators")
        if data is None:
            raise ActionError('action object is missing the "generators" key')
    if not isinstance(data, list):
        raise ActionError("generators must be a list")
    gens = []
    for i, g in enumerate(data):
        where = f"generator {i}"
        if not isinstance(g, dict) or "perm" not in g or "scalars" not in g:
            raise ActionError(f'{where}: expected {{"perm":..., "scalars":...}}')
        perm = g["perm"]
        if not (isinstance(perm, list) and sorted(perm) == [0, 1, 2]):
            raise ActionError(f"{where}: perm {perm!r} is not a permutation of 0,1,2")
        scalars = g["scalars"]
        if not (isinstance(scalars, list) and len(scalars) == 3):
            raise ActionError(f"{where}: exactly three scalars required")
        parsed = []
        for k, s in enumerate(scalars):
            try:
                parsed.append(RootOfUnity.parse(str(s)))
            except (ValueError, ZeroDivisionError) as exc:
                raise ActionError(f"{where}, scalar {k}: {exc}") from None
        gens.append(MonomialMatrix(tuple(perm), tuple(parsed)))
    return gens


# ---------------------------------------------------------------------------
# group closure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteActionGroup:
    generators: tuple
    elements: tuple        # canonical projective forms, sorted

    @property
    def order(self) -> int:
        return len(self.elements)

    def non_identity(self):
        return [g for g in self.elements if not g.is_identity()]


def close_group(gens, cap: int = GROUP_CAP) -> FiniteActionGroup:
    gens = [g.canonical() for g in gens]
    seen = {MonomialMatrix.identity().sort_key(): MonomialMatrix.identity()}
    frontier = [MonomialMatrix.identity()]
    while frontier:
        current = frontier.pop()
        for g in gens:
            nxt = (g * current).canonical()
            key = nxt.sort_key()
            if key not in seen:
                if len(seen) >= cap:
                    raise GroupCapExceeded(cap)
                seen[key] = nxt
                frontier.append(nxt)
    elements = tuple(seen[k] for k in sorted(seen))
    return FiniteActionGroup(tuple(gens), elements)


# ---------------------------------------------------------------------------
# projective points and lines
# ---------------------------------------------------------------------------

class ProjectivePoint:
    """Point of P^2 with cyclotomic coordinates, scalar-normalized so the
    first nonzero coordinate is 1 and each coordinate sits in its minimal
    cyclotomic field -- equal points have identical representations."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = [CyclotomicNumber._coerce(c) for c in coords]
        if len(coords) != 3:
            raise ActionError("a projective point needs three coordinates")
        lead = next((c for c in coords if not c.is_zero()), None)
        if lead is None:
            raise ActionError("all coordinates are zero")
        inv = lead.inverse()
        self.coords = tuple((c * inv).reduce_conductor() for c in coords)

    def key(self):
        return tuple((c.conductor, c.coeffs) for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def transformed(self, m: MonomialMatrix) -> "ProjectivePoint":
        return ProjectivePoint(m.apply(list(self.coords)))

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"ProjectivePoint({self})"


class Line:
    """Line in P^2 stored by its normal vector (same normalization)."""

    __slots__ = ("normal",)

    def __init__(self, normal_coords):
        if isinstance(normal_coords, ProjectivePoint):
            self.normal = normal_coords
        else:
            self.normal = ProjectivePoint(normal_coords)

    def contains(self, p: ProjectivePoint) -> bool:
        total = CyclotomicNumber.zero()
        for a, b in zip(self.normal.coords, p.coords):
            total = total + a * b
        return total.is_zero()

    def transformed(self, m: MonomialMatrix) -> "Line":
        return Line(self.normal.transformed(m.normal_action()))

    def meet(self, other: "Line") -> ProjectivePoint:
        return ProjectivePoint(_cross(self.normal.coords, other.normal.coords))

    def __eq__(self, other):
        return isinstance(other, Line) and self.normal == other.normal

    def __hash__(self):
        return hash(("line", self.normal.key()))

    def __str__(self):
        return f"{{{self.normal} . x = 0}}"


def _cross(u, v):
    return [u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]]


# ---------------------------------------------------------------------------
# eigen data and fixed loci
# ---------------------------------------------------------------------------

def eigen_data(m: MonomialMatrix):
    """Three (eigenvalue, eigenvector) pairs, computed cycle by cycle.

    A permutation cycle of length c whose scalars multiply to rho
    contributes the c c-th roots of rho; the eigenvector for each is
    supported on the cycle and solved exactly.
    """
    pairs = []
    seen = set()
    for start in range(3):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        j = m.perm[start]
        while j != start:
            cycle.append(j)
            seen.add(j)
            j = m.perm[j]
        c = len(cycle)
        rho = RootOfUnity.one()
        for j in cycle:
            rho = rho * m.scalars[j]
        for t in range(c):
            lam = RootOfUnity((rho.exponent + t) / c)
            coords = [CyclotomicNumber.zero() for _ in range(3)]
            coords[start] = CyclotomicNumber.from_rational(1)
            value = CyclotomicNumber.from_rational(1)
            j = start
            for _ in range(c - 1):
                # v[perm(j)] = scalars[j] * v[j] / lambda
                value = value * (m.scalars[j] / lam)
                j = m.perm[j]
                coords[j] = value
            pairs.append((lam, ProjectivePoint(coords)))
    return pairs


@dataclass
class FixedLocus:
    points: list            # isolated fixed points
    line: object            # pointwise-fixed Line or None


def fixed_locus(g: MonomialMatrix) -> FixedLocus:
    """Isolated fixed points and the pointwise-fixed line (if any) of a
    non-identity projective transformation."""
    if g.is_identity():
        raise ActionError("fixed_locus of the identity is everything")
    pairs = eigen_data(g)
    values = [lam for lam, _ in pairs]
    counts = {lam: values.count(lam) for lam in values}
    if max(counts.values()) == 1:
        return FixedLocus([v for _, v in pairs], None)
    # multiplicity 3 would force g scalar = identity; so exactly one double
    double = next(lam for lam, c in counts.items() if c == 2)
    plane = [v for lam, v in pairs if lam == double]
    isolated = [v for lam, v in pairs if lam != double]
    return FixedLocus(isolated, Line(_cross(plane[0].coords, plane[1].coords)))


def tangent_eigenvalues(g: MonomialMatrix, p: ProjectivePoint):
    """Eigenvalues of the induced action on the tangent plane at a fixed
    point: the two other matrix eigenvalues divided by the one at p."""
    image = g.apply(list(p.coords))
    i = next(k for k in range(3) if not p.coords[k].is_zero())
    lam_value = image[i] / p.coords[i]
    for k in range(3):
        if not (image[k] - lam_value * p.coords[k]).is_zero():
            raise ActionError(f"point {p} is not fixed by the element")
    lam = lam_value.as_root_of_unity()
    assert lam is not None, "eigenvalue of a finite-order element must be a root of unity"
    values = [v for v, _ in eigen_data(g)]
    values.remove(lam)       # one copy only: multiplicity matters
    return (values[0] / lam, values[1] / lam)


# ---------------------------------------------------------------------------
# Hirzebruch-Jung reduction and stabilizer classification
# ---------------------------------------------------------------------------

def hj_normalize(r: int, a: int, b: int):
    """Reduce cyclic quotient data 1/r(a,b) by dividing out reflections.

    While gcd(r, a) > 1 divide it out of r and a (and symmetrically for
    b); requires gcd(r, a, b) = 1.  Returns the reduced (r', a', b') with
    a', b' in [0, r'); r' = 1 means the quotient is smooth.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    a %= r
    b %= r
    if math.gcd(r, math.gcd(a, b)) != 1 and r > 1:
        raise ValueError(f"non-faithful cyclic data 1/{r}({a},{b})")
    changed = True
    while changed and r > 1:
        changed = False
        g = math.gcd(r, a)
        if g > 1:
            r //= g
            a //= g
            b %= r
            changed = True
        g = math.gcd(r, b)
        if g > 1:
            r //= g
            b //= g
            a %= r
            changed = True
    if r == 1:
        return (1, 0, 0)
    return (r, a % r, b % r)


@dataclass(frozen=True)
class NonGorensteinCyclic:
    r: int
    a: int
    b: int

    def __str__(self):
        return f"NonGorensteinCyclic(1/{self.r}({self.a},{self.b}))"


@dataclass(frozen=True)
class Unsupported:
    reason: str

    def __str__(self):
        return f"Unsupported({self.reason})"


SMOOTH = "Smooth"


def _stabilizer(group: FiniteActionGroup, p: ProjectivePoint):
    return [g for g in group.elements if p.transformed(g) == p]


def _subgroup_closure(elements):
    """Closure (as canonical forms) of a set of group elements."""
    seen = {g.sort_key(): g for g in elements}
    frontier = list(seen.values())
    while frontier:
        x = frontier.pop()
        for y in list(seen.values()):
            for z in ((x * y).canonical(), (y * x).canonical()):
                if z.sort_key() not in seen:
                    seen[z.sort_key()] = z
                    frontier.append(z)
    return list(seen.values())


def _abelianization_order(elements):
    """|H / [H,H]| for a finite group given as a list of elements."""
    commutators = []
    for x in elements:
        for y in elements:
            c = (x * y * x.inverse() * y.inverse()).canonical()
            commutators.append(c)
    derived = _subgroup_closure(commutators)
    return len(elements) // len(derived)


def classify_stabilizer(group: FiniteActionGroup, p: ProjectivePoint):
    """Local classification of the quotient singularity at the image of p.

    Returns SMOOTH, a DynkinType, NonGorensteinCyclic, or Unsupported.
    """
    stab = _stabilizer(group, p)
    if len(stab) == 1:
        raise ActionError(f"point {p} has trivial stabilizer")
    nontrivial = [g for g in stab if not g.is_identity()]
    orders = {g.sort_key(): g.order() for g in nontrivial}
    n = len(stab)
    generator = next((g for g in sorted(nontrivial, key=MonomialMatrix.sort_key)
                      if orders[g.sort_key()] == n), None)
    if generator is not None:
        # cyclic stabilizer: read 1/r(a,b) off the generator's tangent action
        t1, t2 = tangent_eigenvalues(generator, p)
        r = math.lcm(t1.exponent.denominator, t2.exponent.denominator)
        a = int(t1.exponent * r)
        b = int(t2.exponent * r)
        r2, a2, b2 = hj_normalize(r, a, b)
        if r2 == 1:
            return SMOOTH
        if (a2 + b2) % r2 == 0:
            return A(r2 - 1)
        return NonGorensteinCyclic(r2, a2, b2)
    # non-cyclic: decide whether the tangent representation lies in SL(2)
    abelian = all((x * y).canonical().sort_key() == (y * x).canonical().sort_key()
                  for x, y in itertools.combinations(nontrivial, 2))
    in_sl2 = True
    for g in nontrivial:
        t1, t2 = tangent_eigenvalues(g, p)
        if not (t1 * t2).is_one():
            in_sl2 = False
            break
    if abelian:
        # finite abelian subgroups of SL(2) are cyclic, so this is neither
        # cyclic nor small: a reflection-laden abelian group
        return Unsupported(f"non-cyclic abelian stabilizer of order {n} at {p}")
    if not in_sl2:
        return Unsupported(f"non-abelian stabilizer with reflections at {p}")
    ab = _abelianization_order(stab)
    if n % 4 == 0 and ab == 4:
        return D(n // 4 + 2)              # binary dihedral of order 4m -> D_{m+2}
    if (n, ab) == (24, 3):
        return E(6)
    if (n, ab) == (48, 2):
        return E(7)
    if (n, ab) == (120, 1):
        return E(8)
    return Unsupported(f"unrecognized SL(2) stabilizer: order {n}, ab {ab} at {p}")


# ---------------------------------------------------------------------------
# quotient profile
# ---------------------------------------------------------------------------

@dataclass
class OrbitData:
    representative: ProjectivePoint
    size: int
    stabilizer_order: int
    classification: object

    def to_json(self):
        return {"representative": str(self.representative),
                "size": self.size,
                "stabilizer_order": self.stabilizer_order,
                "classification": str(self.classification)}


@dataclass
class BranchLineData:
    line: Line
    e: int                  # ramification index: order of the pointwise stabilizer
    orbit_size: int

    def to_json(self):
        return {"line": str(self.line), "e": self.e, "orbit_size": self.orbit_size}


@dataclass
class QuotientProfile:
    group_order: int
    k2: int
    config: tuple
    orbits: list            # OrbitData, all special orbits incl. smooth images
    branch_lines: list      # BranchLineData
    euler_check: dict

    def to_json(self):
        return {"group_order": self.group_order,
                "k2": self.k2,
                "config": [str(t) for t in self.config],
                "orbits": [o.to_json() for o in self.orbits],
                "branch_lines": [b.to_json() for b in self.branch_lines],
                "euler_check": self.euler_check}


def quotient_profile(group: FiniteActionGroup) -> QuotientProfile:
    """Singularity configuration and K^2 of P^2 / G.

    Candidate points are the isolated fixed points of all non-identity
    elements plus intersections of every pointwise-fixed line with the
    other elements' fixed loci; candidates are grouped into orbits and
    classified; branch lines get their ramification index from the order
    of their pointwise stabilizer.
    """
    n = group.order
    loci = [(g, fixed_locus(g)) for g in group.non_identity()]

    # gather pointwise-fixed lines with their pointwise stabilizer orders
    lines = []
    for g, loc in loci:
        if loc.line is not None and loc.line not in lines:
            lines.append(loc.line)
    line_e = {}
    for line in lines:
        fixers = 1 + sum(1 for g, loc in loci if loc.line == line)
        line_e[line] = fixers

    # candidate points
    candidates = []

    def add(p):
        if p not in candidates:
            candidates.append(p)

    for g, loc in loci:
        for p in loc.points:
            add(p)
    for line in lines:
        for h, loc in loci:
            if loc.line == line:
                continue
            for p in loc.points:
                if line.contains(p):
                    add(p)
            if loc.line is not None:
                add(line.meet(loc.line))

    # group candidates into orbits
    orbits = []
    orbit_points = []        # parallel to orbits: the full point orbit
    unassigned = list(candidates)
    while unassigned:
        rep = unassigned[0]
        orbit = []
        for g in group.elements:
            q = rep.transformed(g)
            if q not in orbit:
                orbit.append(q)
        unassigned = [p for p in unassigned if p not in orbit]
        rep = min(orbit, key=lambda p: p.key())
        stab = _stabilizer(group, rep)
        if len(stab) == 1:
            continue        # free orbit: never a singular image
        cls = classify_stabilizer(group, rep)
        if isinstance(cls, Unsupported):
            raise ActionError(str(cls))
        orbits.append(OrbitData(rep, len(orbit), len(stab), cls))
        orbit_points.append(orbit)
    order = sorted(range(len(orbits)), key=lambda i: orbits[i].representative.key())
    orbits = [orbits[i] for i in order]
    orbit_points = [orbit_points[i] for i in order]

    # branch line orbits
    branch = []
    line_orbits = []         # parallel to branch: the full line orbit
    remaining = list(lines)
    while remaining:
        line = remaining[0]
        orbit = []
        for g in group.elements:
            img = line.transformed(g)
            if img not in orbit:
                orbit.append(img)
        remaining = [l for l in remaining if l not in orbit]
        rep = min(orbit, key=lambda l: l.normal.key())
        branch.append(BranchLineData(rep, line_e[line], len(orbit)))
        line_orbits.append(orbit)
    order = sorted(range(len(branch)), key=lambda i: branch[i].line.normal.key())
    branch = [branch[i] for i in order]
    line_orbits = [line_orbits[i] for i in order]

    # K^2 bookkeeping: K_{P^2} = f^* K_V + sum (e-1) Gamma over branch lines
    total = 3 + sum((b.e - 1) * b.orbit_size for b in branch)
    if (total * total) % n != 0:
        raise ActionError(f"K^2 = {total}^2/{n} is not an integer")
    k2 = total * total // n

    config = config_sorted([o.classification for o in orbits
                            if isinstance(o.classification, DynkinType)])
    euler = _euler_stratification(n, orbit_points, branch, line_orbits)
    return QuotientProfile(n, k2, config, orbits, branch, euler)


def _euler_stratification(n, orbit_points, branch, line_orbits):
    """Euler-number multiplicativity, stratum by stratum.

    P^2 splits into the free locus, the pointwise-fixed lines minus
    special points, and the special point orbits.  Each stratum covers
    its image with constant degree (|G|, |G|/e, |G|/|stab|), so
    chi(P^2) = 3 upstairs must reassemble to chi(quotient) = 3.

    With no branch lines this is exactly
    3 - #special points = |G| * (3 - #special orbits).
    """
    special = [p for orbit in orbit_points for p in orbit]
    chi_line_strata = 0      # upstairs
    chi_line_images = Fraction(0)
    for b, orbit_lines in zip(branch, line_orbits):
        chi = 0
        for l in orbit_lines:
            on_line = sum(1 for p in special if l.contains(p))
            chi += 2 - on_line
        chi_line_strata += chi
        chi_line_images += Fraction(chi * b.e, n)
    chi_free = 3 - chi_line_strata - len(special)
    ok = chi_free % n == 0 and chi_line_images.denominator == 1
    chi_quotient = Fraction(chi_free, n) + chi_line_images + len(orbit_points)
    ok = ok and chi_quotient == 3
    return {"chi_free": chi_free,
            "chi_line_strata": chi_line_strata,
            "special_points": len(special),
            "special_orbits": len(orbit_points),
            "chi_quotient": int(chi_quotient) if chi_quotient.denominator == 1
            else str(chi_quotient),
            "pass": bool(ok)}


# ---------------------------------------------------------------------------
# built-in actions
# ---------------------------------------------------------------------------

def builtin_actions():
    """The six named actions used throughout: generator lists keyed by name."""
    def ru(text):
        return RootOfUnity.parse(text)

    def mono(perm, scalars):
        return MonomialMatrix(tuple(perm), tuple(ru(s) for s in scalars))

    return {
        # [-x, -y, z]: quotient is the quadric cone (A1, K^2 = 8)
        "z2_cone": [mono((0, 1, 2), ("1/2", "1/2", "0"))],
        # [x0, w*x1, -x2]: order 6, quotient has A1 + A2, K^2 = 6
        "z6": [mono((0, 1, 2), ("0", "1/3", "1/2"))],
        # diag(1, w, w^2): three A2 points, K^2 = 3
        "z3": [mono((0, 1, 2), ("0", "1/3", "2/3"))],
        # diag(1, w, w^2) and the coordinate 3-cycle: four A2 points, K^2 = 1
        "z3xz3": [mono((0, 1, 2), ("0", "1/3", "2/3")),
                  mono((1, 2, 0), ("0", "0", "0"))],
        # diag(1, i, -i): A3 + 2A1, K^2 = 4
        "z4": [mono((0, 1, 2), ("0", "1/4", "3/4"))],
        # adds [X, iZ, iY]: projective order 8, D4 + 3A1, K^2 = 2
        "quaternion8": [mono((0, 1, 2), ("0", "1/4", "3/4")),
                        mono((0, 2, 1), ("0", "1/4", "1/4"))],
    }
