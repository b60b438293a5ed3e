"""Artin-Mumford and van der Geer - van der Vlugt curve models.

Points of the Artin-Mumford curve come in two kinds: affine solutions of
(x^p - x)(y^p - y) = c over a chosen extension, and the 2p branch places
of the nonsingular model over the two ordinary p-fold points at infinity.
A branch place is labelled by its tangent line: y = t at O1 = (1:0:0),
x = t at O2 = (0:1:0), with t in F_p.  That labelling makes the group
action on branch places a finite combinatorial computation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldElement, FieldSpec, make_field, artin_schreier_solve
from .grp import GroupElement, Subgroup, canonical_lambda
from .poly import Poly1, Poly2, RationalFunction, substitute2


class CurveError(ValueError):
    pass


class BudgetError(RuntimeError):
    """An enumeration was asked to exceed its configured budget."""


DEFAULT_BUDGET = 10 ** 7


@dataclass(frozen=True)
class AMCurve:
    """(x^p - x)(y^p - y) = c over F_p, c != 0."""

    spec: FieldSpec
    c: FieldElement

    def __post_init__(self):
        if self.spec.k != 1:
            raise CurveError("the curve model lives over a prime field")
        if self.c.spec != self.spec or self.c.is_zero():
            raise CurveError("c must be a nonzero element of F_p")

    @classmethod
    def of(cls, p: int, c: int = 1) -> "AMCurve":
        spec = make_field(p, 1)
        return cls(spec, spec.element(c))

    @property
    def p(self) -> int:
        return self.spec.p

    def defining_poly(self) -> Poly2:
        p = self.p
        x = Poly2.var_x(self.spec)
        y = Poly2.var_y(self.spec)
        return (x ** p - x) * (y ** p - y) - Poly2.constant(self.spec, self.c)

    def eta(self) -> Poly1:
        """x^p - x."""
        return Poly1.x(self.spec) ** self.p - Poly1.x(self.spec)


@dataclass(frozen=True)
class VGVCurve:
    """y^p - y = a*x + 1/x over F_p, a != 0."""

    spec: FieldSpec
    a: FieldElement

    def __post_init__(self):
        if self.spec.k != 1:
            raise CurveError("the curve model lives over a prime field")
        if self.a.spec != self.spec or self.a.is_zero():
            raise CurveError("a must be a nonzero element of F_p")

    @classmethod
    def of(cls, p: int, a: int = 1) -> "VGVCurve":
        spec = make_field(p, 1)
        return cls(spec, spec.element(a))

    @property
    def p(self) -> int:
        return self.spec.p

    def rhs(self) -> RationalFunction:
        """a*x + 1/x as a reduced rational function."""
        x = Poly1.x(self.spec)
        return RationalFunction(Poly1(self.spec, [self.spec.one()]) + x * x * self.a, x)


O1 = "O1"
O2 = "O2"


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y) or branch place (center, tangent label)."""

    kind: str                       # "affine" | "branch"
    x: FieldElement | None = None
    y: FieldElement | None = None
    center: str | None = None       # O1 | O2
    tangent: int | None = None      # label in [0, p-1]

    @classmethod
    def affine(cls, x: FieldElement, y: FieldElement) -> "CurvePoint":
        return cls("affine", x=x, y=y)

    @classmethod
    def branch(cls, center: str, tangent: int, p: int) -> "CurvePoint":
        if center not in (O1, O2):
            raise CurveError(f"unknown singular center {center!r}")
        return cls("branch", center=center, tangent=tangent % p)

    def is_rational(self) -> bool:
        """F_p-rational: branch places always, affine iff both coords lie in F_p."""
        if self.kind == "branch":
            return True
        return all(c == 0 for c in self.x.coeffs[1:]) and \
            all(c == 0 for c in self.y.coeffs[1:])

    def sort_key(self):
        if self.kind == "branch":
            return (0, 0 if self.center == O1 else 1, self.tangent)
        return (1, self.x.coeffs, self.y.coeffs)

    def to_json_dict(self) -> dict:
        if self.kind == "branch":
            return {"kind": "branch", "center": self.center, "tangent": self.tangent}
        return {"kind": "affine", "x": list(self.x.coeffs), "y": list(self.y.coeffs)}

    def __repr__(self):
        if self.kind == "branch":
            return f"{self.center}[t={self.tangent}]"
        return f"({self.x!r},{self.y!r})"


def branch_places(curve: AMCurve) -> list[CurvePoint]:
    p = curve.p
    return ([CurvePoint.branch(O1, t, p) for t in range(p)]
            + [CurvePoint.branch(O2, t, p) for t in range(p)])


def enumerate_points(curve: AMCurve, k: int, budget: int = DEFAULT_BUDGET) -> list[CurvePoint]:
    """All points over F_{p^k}: affine pairs plus the 2p branch places.

    Solves y^p - y = c/(x^p - x) per x by exact linear algebra, so the
    scan is O(p^k) fields elements rather than O(p^2k) pairs.
    """
    p = curve.p
    if p ** (2 * k) > budget:
        raise BudgetError(f"field pair count {p}^{2 * k} exceeds budget {budget}")
    ext = make_field(p, k)
    points = branch_places(curve)
    c_ext = curve.c.lift(ext) if k > 1 else curve.c
    shifts = [ext.element(j) for j in range(p)]
    for x in ext.elements():
        eta = x ** p - x
        if eta.is_zero():
            continue
        y0 = artin_schreier_solve(c_ext / eta)
        if y0 is None:
            continue
        for j in shifts:
            points.append(CurvePoint.affine(x, y0 + j))
    return points


def apply_automorphism(g: GroupElement, point: CurvePoint, curve: AMCurve) -> CurvePoint:
    """Image of a point under tau_{a,b} * U^i * V^s.

    On branch places each generator acts on the tangent labels:
    tau_{a,b} shifts O1 labels by b and O2 labels by a, the swap exchanges
    O1[t] and O2[t], and theta_d rescales labels by d^{-1} at O1 and d at O2.
    """
    p = curve.p
    if g.p != p:
        raise CurveError("automorphism over a different prime")
    if point.kind == "affine":
        gx, gy = g.apply_xy(point.x, point.y)
        ex = gx ** p - gx
        ey = gy ** p - gy
        target = gx.spec
        c_t = curve.c if target == curve.spec else curve.c.lift(target)
        if ex * ey != c_t:
            raise CurveError(f"image of {point!r} under {g!r} left the curve; "
                             "this indicates a bug in the action")
        return CurvePoint.affine(gx, gy)

    center, t = point.center, point.tangent
    # V^s first, then theta_{lam^i}, then the translation
    if g.s:
        center = O2 if center == O1 else O1
    d = pow(canonical_lambda(p), g.i, p)
    if center == O1:
        t = (t * pow(d, p - 2, p)) % p
        t = (t + g.b) % p
    else:
        t = (t * d) % p
        t = (t + g.a) % p
    return CurvePoint.branch(center, t, p)


def verify_invariance(g: GroupElement, curve: AMCurve) -> bool:
    """Symbolic test: substituting g's coordinate action fixes the curve."""
    spec = curve.spec
    p = curve.p
    lam = canonical_lambda(p)
    d = pow(lam, g.i, p)
    dinv = pow(d, p - 2, p)
    x = Poly2.var_x(spec)
    y = Poly2.var_y(spec)
    base_x, base_y = (y, x) if g.s else (x, y)
    gx = Poly2.constant(spec, d) * base_x + Poly2.constant(spec, g.a)
    gy = Poly2.constant(spec, dinv) * base_y + Poly2.constant(spec, g.b)
    f = curve.defining_poly()
    return substitute2(f, gx, gy) == f


def substitution_is_invariance(curve: AMCurve, gx: Poly2, gy: Poly2) -> bool:
    """Invariance test for an arbitrary substitution (the negative corpus)."""
    f = curve.defining_poly()
    return substitute2(f, gx, gy) == f


@dataclass
class ShortOrbit:
    size: int
    points: list[CurvePoint]
    stabilizer_order: int
    stabilizer_generators: list[GroupElement]
    stabilizer_name: str

    def to_json_dict(self) -> dict:
        return {
            "size": self.size,
            "points": [pt.to_json_dict() for pt in sorted(self.points, key=lambda q: q.sort_key())],
            "stabilizer": {
                "order": self.stabilizer_order,
                "generators": [g.to_json_dict() for g in self.stabilizer_generators],
                "name": self.stabilizer_name,
            },
        }


@dataclass
class OrbitReport:
    group_order: int
    orbit_sizes: list[int]
    short_orbits: list[ShortOrbit]
    points_seen: int

    def to_json_dict(self) -> dict:
        return {
            "group_order": self.group_order,
            "orbit_sizes": sorted(self.orbit_sizes),
            "short_orbits": [o.to_json_dict() for o in self.short_orbits],
            "points_seen": self.points_seen,
        }


def _stabilizer(sub: Subgroup, point: CurvePoint, curve: AMCurve) -> list[GroupElement]:
    return [g for g in sub if apply_automorphism(g, point, curve) == point]


def _describe_cyclic(stab: list[GroupElement]) -> str:
    nontrivial = [g for g in stab if g != GroupElement.identity(g.p)]
    if not nontrivial:
        return "trivial"
    gen = min(nontrivial, key=lambda g: (g.a, g.b, g.i, g.s))
    return f"<{gen!r}>"


def short_orbits(curve: AMCurve, sub: Subgroup, k: int = 1,
                 budget: int = DEFAULT_BUDGET) -> OrbitReport:
    """Orbit decomposition of a subgroup on branch places and affine points.

    Branch places are always included; affine points over F_{p^k} join the
    scan when the enumeration fits the budget.
    """
    pts = enumerate_points(curve, k, budget=budget)
    seen: set = set()
    sizes = []
    shorts = []
    order = len(sub)
    index = {pt: n for n, pt in enumerate(pts)}
    for pt in pts:
        if index[pt] in seen:
            continue
        orbit = {pt}
        frontier = [pt]
        while frontier:
            nxt = []
            for q in frontier:
                for g in sub.gens:
                    img = apply_automorphism(g, q, curve)
                    if img not in orbit:
                        orbit.add(img)
                        nxt.append(img)
            frontier = nxt
        for q in orbit:
            if q in index:
                seen.add(index[q])
        sizes.append(len(orbit))
        stab = _stabilizer(sub, pt, curve)
        if len(orbit) * len(stab) != order:
            raise CurveError("orbit-stabilizer identity failed; bug in the action")
        if len(orbit) < order:
            stabs = [_stabilizer(sub, q, curve) for q in orbit]
            shared = all(set(s) == set(stab) for s in stabs)
            shorts.append(ShortOrbit(
                size=len(orbit),
                points=sorted(orbit, key=lambda q: q.sort_key()),
                stabilizer_order=len(stab),
                stabilizer_generators=sorted(
                    (g for g in stab if g != GroupElement.identity(g.p)),
                    key=lambda g: (g.a, g.b, g.i, g.s))[:1],
                stabilizer_name=_describe_cyclic(stab) + ("" if shared else " (NOT shared)"),
            ))
    return OrbitReport(order, sizes, shorts, len(pts))


def hyperelliptic_witness(curve: VGVCurve) -> Poly2:
    """Minimal polynomial of x over F_p(y): a*x^2 - (y^p - y)*x + 1.

    Clearing x through the defining relation gives a degree-2 equation
    for x, the witness that the curve is a double cover of the y-line.
    """
    spec = curve.spec
    p = curve.p
    x = Poly2.var_x(spec)
    y = Poly2.var_y(spec)
    w = Poly2.constant(spec, curve.a) * x ** 2 - (y ** p - y) * x + Poly2.constant(spec, 1)
    if w.degree_in(0) != 2:
        raise CurveError("witness is not quadratic in x")
    # the witness must be exactly x * (rhs(x) - (y^p - y)) up to sign
    cleared = (Poly2.constant(spec, curve.a) * x ** 2 + Poly2.constant(spec, 1)
               - x * (y ** p - y))
    if w != cleared:
        raise CurveError("witness does not vanish on the curve relation")
    return w
