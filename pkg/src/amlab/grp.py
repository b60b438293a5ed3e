"""The group H = (C_p x C_p) : D_{p-1} in canonical words, and GL(2,p).

Every element of H is written uniquely as tau_{a,b} * U^i * V^s where
tau_{a,b} is the translation (x,y) -> (x+a, y+b), U is the scaling
(x,y) -> (lam*x, lam^{-1}*y) for the canonical primitive root lam, and
V is the coordinate swap.  Words compose by one matrix-vector twist, so
the canonical form is closed under multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf import make_field, primitive_element


class GroupError(ValueError):
    pass


@lru_cache(maxsize=None)
def canonical_lambda(p: int) -> int:
    return primitive_element(make_field(p, 1)).as_int()


@dataclass(frozen=True)
class GroupElement:
    """tau_{a,b} * U^i * V^s with 0<=a,b<p, 0<=i<p-1, s in {0,1}."""

    p: int
    a: int
    b: int
    i: int
    s: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)
        object.__setattr__(self, "i", self.i % (self.p - 1))
        object.__setattr__(self, "s", self.s % 2)

    @classmethod
    def identity(cls, p: int) -> "GroupElement":
        return cls(p, 0, 0, 0, 0)

    @classmethod
    def translation(cls, p: int, a: int, b: int) -> "GroupElement":
        return cls(p, a, b, 0, 0)

    @classmethod
    def swap(cls, p: int) -> "GroupElement":
        """V: (x,y) -> (y,x)."""
        return cls(p, 0, 0, 0, 1)

    @classmethod
    def scaling(cls, p: int, d: int) -> "GroupElement":
        """theta_d: (x,y) -> (d*x, d^{-1}*y), as a power of U."""
        lam = canonical_lambda(p)
        d %= p
        if d == 0:
            raise GroupError("scaling factor must be nonzero")
        cur, i = 1, 0
        while cur != d:
            cur = (cur * lam) % p
            i += 1
        return cls(p, 0, 0, i, 0)

    @classmethod
    def u_power(cls, p: int, i: int) -> "GroupElement":
        return cls(p, 0, 0, i, 0)

    @classmethod
    def central_w(cls, p: int) -> "GroupElement":
        """W = U^{(p-1)/2} = theta_{-1}."""
        return cls(p, 0, 0, (p - 1) // 2, 0)

    def is_translation(self) -> bool:
        return self.i == 0 and self.s == 0

    def linear_part(self) -> "Mat2":
        lam = canonical_lambda(self.p)
        d = pow(lam, self.i, self.p)
        dinv = pow(d, self.p - 2, self.p)
        m = Mat2(self.p, d, 0, 0, dinv)
        if self.s:
            m = m * Mat2(self.p, 0, 1, 1, 0)
        return m

    def apply_xy(self, x, y):
        """Image of the coordinate pair under the map; inputs support * and +."""
        if self.s:
            x, y = y, x
        lam = canonical_lambda(self.p)
        d = pow(lam, self.i, self.p)
        dinv = pow(d, self.p - 2, self.p)
        return x * d + self.a, y * dinv + self.b

    def compose(self, other: "GroupElement") -> "GroupElement":
        """self o other: apply other first, then self."""
        if self.p != other.p:
            raise GroupError("elements over different primes")
        p = self.p
        u, v = (other.b, other.a) if self.s else (other.a, other.b)
        lam = canonical_lambda(p)
        d = pow(lam, self.i, p)
        dinv = pow(d, p - 2, p)
        a = (self.a + u * d) % p
        b = (self.b + v * dinv) % p
        i = (self.i + (other.i if self.s == 0 else -other.i)) % (p - 1)
        s = (self.s + other.s) % 2
        return GroupElement(p, a, b, i, s)

    def __mul__(self, other):
        return self.compose(other)

    def inverse(self) -> "GroupElement":
        p = self.p
        j = (-self.i if self.s == 0 else self.i) % (p - 1)
        lin_inv = GroupElement(p, 0, 0, j, self.s)
        ta, tb = lin_inv.apply_xy(-self.a % p, -self.b % p)
        # apply_xy added the (zero) translation of lin_inv, so ta,tb are the twist
        return GroupElement(p, ta, tb, j, self.s)

    def order(self) -> int:
        n = 1
        cur = self
        e = GroupElement.identity(self.p)
        while cur != e:
            cur = cur * self
            n += 1
        return n

    def __repr__(self):
        if self == GroupElement.identity(self.p):
            return "id"
        parts = []
        if self.a or self.b:
            parts.append(f"tau({self.a},{self.b})")
        if self.i:
            parts.append(f"U^{self.i}" if self.i > 1 else "U")
        if self.s:
            parts.append("V")
        return "*".join(parts)

    def to_json_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "i": self.i, "s": self.s}


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    return g.compose(h)


def generators(p: int) -> list[GroupElement]:
    """tau_{1,0}, tau_{0,1}, U, V generate H."""
    return [GroupElement.translation(p, 1, 0),
            GroupElement.translation(p, 0, 1),
            GroupElement.u_power(p, 1),
            GroupElement.swap(p)]


def mulclose(gens: list[GroupElement]) -> frozenset[GroupElement]:
    """Closure of a generating set under composition (BFS)."""
    if not gens:
        raise GroupError("need at least one generator")
    seen = {GroupElement.identity(gens[0].p)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                e = g * h
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return frozenset(seen)


def full_group(p: int) -> list[GroupElement]:
    """All 2*p^2*(p-1) elements in deterministic parameter order."""
    return [GroupElement(p, a, b, i, s)
            for a in range(p) for b in range(p)
            for i in range(p - 1) for s in range(2)]


class Subgroup:
    """A subgroup of H, closed from generators, with a printable name."""

    def __init__(self, gens: list[GroupElement], name: str | None = None):
        self.p = gens[0].p
        self.gens = list(gens)
        self.elements = mulclose(gens)
        self.name = name or "<" + ", ".join(repr(g) for g in gens) + ">"

    @classmethod
    def translations(cls, p: int) -> "Subgroup":
        return cls([GroupElement.translation(p, 1, 0),
                    GroupElement.translation(p, 0, 1)], name="CpxCp")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g: GroupElement):
        return g in self.elements

    def __iter__(self):
        return iter(sorted(self.elements, key=lambda g: (g.a, g.b, g.i, g.s)))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over F_p, row major."""

    p: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for f in "abcd":
            object.__setattr__(self, f, getattr(self, f) % self.p)

    @classmethod
    def identity(cls, p):
        return cls(p, 1, 0, 0, 1)

    @classmethod
    def diag(cls, p, x, y):
        return cls(p, x, 0, 0, y)

    @classmethod
    def antidiag(cls, p, x, y):
        return cls(p, 0, x, y, 0)

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.p

    def trace(self) -> int:
        return (self.a + self.d) % self.p

    def __mul__(self, other: "Mat2") -> "Mat2":
        if self.p != other.p:
            raise GroupError("matrices over different primes")
        p = self.p
        return Mat2(p,
                    self.a * other.a + self.b * other.c,
                    self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c,
                    self.c * other.b + self.d * other.d)

    def inverse(self) -> "Mat2":
        dt = self.det()
        if dt == 0:
            raise GroupError("singular matrix")
        di = pow(dt, self.p - 2, self.p)
        return Mat2(self.p, self.d * di, -self.b * di, -self.c * di, self.a * di)

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            return self.inverse() ** (-n)
        r = Mat2.identity(self.p)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        return ((self.a * v[0] + self.b * v[1]) % self.p,
                (self.c * v[0] + self.d * v[1]) % self.p)

    def order(self) -> int:
        n = 1
        cur = self
        e = Mat2.identity(self.p)
        while cur != e:
            cur = cur * self
            n += 1
            if n > self.p ** 4:
                raise GroupError("order loop overran the group size")
        return n

    def __repr__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def canonical_pair(p: int) -> tuple[Mat2, Mat2]:
    """(diag(lam, lam^{-1}), antidiag(1,1)) for the canonical primitive lam."""
    lam = canonical_lambda(p)
    lami = pow(lam, p - 2, p)
    return Mat2.diag(p, lam, lami), Mat2.antidiag(p, 1, 1)


def _kernel_vector(m: Mat2) -> tuple[int, int]:
    """A canonical nonzero kernel vector of a singular 2x2 matrix."""
    p = m.p
    if m.det() != 0:
        raise GroupError("matrix is invertible, kernel is trivial")
    for row in ((m.a, m.b), (m.c, m.d)):
        if row != (0, 0):
            return (row[1] % p, (-row[0]) % p)
    return (1, 0)  # zero matrix: pick a canonical basis vector


def _scale_first_nonzero(v: tuple[int, int], p: int) -> tuple[int, int]:
    lead = v[0] if v[0] else v[1]
    inv = pow(lead, p - 2, p)
    return ((v[0] * inv) % p, (v[1] * inv) % p)


def dihedral_normal_form(u: Mat2, v: Mat2) -> tuple[Mat2, Mat2, Mat2, bool]:
    """Conjugate a qualifying dihedral generator pair to the canonical one.

    Returns (conjugator C, normalU, normalV, v_replaced) with
    C * u * C^{-1} = normalU and C * v' * C^{-1} = normalV, where
    v' = u^{(p-1)/2} * v when v_replaced else v.

    A pair qualifies when u^{p-1} = v^2 = I, v*u*v = u^{-1}, the generated
    group is dihedral of order 2(p-1), and u has the canonical eigenvalue
    pair {lam, lam^{-1}} (char poly t^2 - (lam+lam^{-1})t + 1): that is,
    the pair is a GL(2,p)-conjugate of the canonical generators.
    """
    p = u.p
    if p != v.p:
        raise GroupError("matrices over different primes")
    lam = canonical_lambda(p)
    lami = pow(lam, p - 2, p)
    ident = Mat2.identity(p)

    if u ** (p - 1) != ident or u.order() != p - 1:
        raise GroupError("U must have order exactly p-1")
    if v * v != ident or v == ident:
        raise GroupError("V must be an involution")
    if v * u * v != u.inverse():
        raise GroupError("relation V*U*V = U^{-1} fails")
    upow = {u ** n for n in range(p - 1)}
    if v in upow:
        raise GroupError("V lies in <U>: group is not dihedral of order 2(p-1)")
    if u.det() != 1 or u.trace() != (lam + lami) % p:
        raise GroupError("U is not conjugate to diag(lam, lam^{-1}) "
                         "for the canonical primitive root")

    w_in = u ** ((p - 1) // 2)

    if lam == lami:
        # p = 3: U = -I is central; the conjugator is pinned by V alone
        c1 = _eigen_conjugator_for_involution(v)
        v1 = c1 * v * c1.inverse()
        replaced = False
        if v1 == Mat2.antidiag(p, p - 1, p - 1):
            v1 = (c1 * w_in * c1.inverse()) * v1
            replaced = True
        normal_u, normal_v = canonical_pair(p)
        if c1 * u * c1.inverse() != normal_u or v1 != normal_v:
            raise GroupError("normal form failed")  # pragma: no cover
        return c1, normal_u, normal_v, replaced

    # eigenbasis of u, lam-eigenvector first, each scaled to lead with 1
    e1 = _scale_first_nonzero(_kernel_vector(
        Mat2(p, u.a - lam, u.b, u.c, u.d - lam)), p)
    e2 = _scale_first_nonzero(_kernel_vector(
        Mat2(p, u.a - lami, u.b, u.c, u.d - lami)), p)
    basis = Mat2(p, e1[0], e2[0], e1[1], e2[1])
    c = basis.inverse()
    v1 = c * v * c.inverse()
    if v1.a != 0 or v1.d != 0 or (v1.b * v1.c) % p != 1:
        raise GroupError("V does not invert U on its eigenbasis")  # pragma: no cover

    # v1 = antidiag(t, t^{-1}); a diagonal conjugation moves t to +-1 and
    # the smaller-representative root is the canonical choice
    t = v1.b
    d_plus = pow(t, p - 2, p)            # d*t = 1
    d_minus = (-d_plus) % p              # d*t = -1
    d = min(d_plus, d_minus)
    delta = Mat2.diag(p, d, 1)
    c = delta * c
    v2 = c * v * c.inverse()
    replaced = False
    if v2 == Mat2.antidiag(p, p - 1, p - 1):
        # the sign came out negative: replace V by U^{(p-1)/2} V as a generator
        v2 = (c * w_in * c.inverse()) * v2
        replaced = True
    normal_u, normal_v = canonical_pair(p)
    if c * u * c.inverse() != normal_u or v2 != normal_v:
        raise GroupError("normal form failed")  # pragma: no cover
    return c, normal_u, normal_v, replaced


def _eigen_conjugator_for_involution(v: Mat2) -> Mat2:
    """C with C*v*C^{-1} = antidiag(1,1), for a noncentral involution v."""
    p = v.p
    f_plus = _scale_first_nonzero(_kernel_vector(
        Mat2(p, v.a - 1, v.b, v.c, v.d - 1)), p)
    f_minus = _scale_first_nonzero(_kernel_vector(
        Mat2(p, v.a + 1, v.b, v.c, v.d + 1)), p)
    e = Mat2(p, f_plus[0], f_minus[0], f_plus[1], f_minus[1])
    if e.det() == 0:
        raise GroupError("V is not a diagonalizable involution")
    # canonical target eigenvectors of antidiag(1,1): (1,1) and (1,-1)
    e0 = Mat2(p, 1, 1, 1, p - 1)
    return e0 * e.inverse()


def verify_presentation(p: int) -> list[dict]:
    """Exhaustive check of the defining relations and word identities of H.

    Returns one {"identity": ..., "status": "pass"|"fail"} entry per check;
    a failed identity is reported, never raised.
    """
    if p > 13:
        raise GroupError("verify_presentation is desk-scale: p <= 13")
    checks = []

    def record(name: str, ok: bool):
        checks.append({"identity": name, "status": "pass" if ok else "fail"})

    e = GroupElement.identity(p)
    u = GroupElement.u_power(p, 1)
    v = GroupElement.swap(p)
    w = GroupElement.central_w(p)
    t11 = GroupElement.translation(p, 1, 1)

    closure = mulclose(generators(p))
    record(f"|H| == 2*p^2*(p-1) == {2 * p * p * (p - 1)}",
           len(closure) == 2 * p * p * (p - 1) == len(full_group(p)))

    upow = u
    for _ in range(p - 2):
        upow = upow * u
    record("U^(p-1) == 1", upow == e and u.order() == p - 1)
    record("V^2 == 1", v * v == e)
    record("V*U*V == U^-1", v * u * v == u.inverse())

    t1m1_set = frozenset(GroupElement.translation(p, a, -a) for a in range(p))
    left = frozenset(t11 * t for t in t1m1_set)
    right = frozenset(t * t11 for t in t1m1_set)
    record("tau(1,1)*T2 == T2*tau(1,1)", left == right)
    record("tau(1,1)*V == V*tau(1,1)", t11 * v == v * t11)

    ok = all(w * GroupElement.translation(p, a, b) * w
             == GroupElement.translation(p, -a, -b)
             for a in range(p) for b in range(p))
    record("W*tau(a,b)*W == tau(-a,-b) for all a,b", ok)

    record("V*T2 == T2*V",
           frozenset(v * t for t in t1m1_set) == frozenset(t * v for t in t1m1_set))
    record("W*V == V*W", w * v == v * w)

    # <tau(1,1), V, W> = D_p x <V>: dihedral relations and direct product
    sub = mulclose([t11, v, w])
    dp = mulclose([t11, w])
    record("|<tau(1,1),V,W>| == 4p", len(sub) == 4 * p)
    record("|<tau(1,1),W>| == 2p (dihedral part)", len(dp) == 2 * p)
    record("W inverts tau(1,1)", w * t11 * w == t11.inverse())
    record("V commutes with the dihedral part", all(v * g == g * v for g in dp))
    record("V not in <tau(1,1),W>", v not in dp)
    record("direct product decomposition D_p x <V>",
           sub == frozenset(list(dp) + [g * v for g in dp]))
    return checks
