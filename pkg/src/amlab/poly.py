"""Exact polynomial and rational-function algebra over a FieldSpec.

Univariate polynomials are dense coefficient lists; bivariate ones are
sparse (i, j) -> coefficient maps.  Rational functions are kept reduced
with a monic denominator, so equality is plain structural equality.
Places of the rational function field are monic irreducibles plus the
infinite place; geometric points never appear here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .gf import FieldElement, FieldSpec, FieldError


class PolyError(ValueError):
    pass


def _same_spec(*specs: FieldSpec) -> FieldSpec:
    s0 = specs[0]
    for s in specs[1:]:
        if s != s0:
            raise FieldError("operands live over different fields")
    return s0


class Poly1:
    """Dense univariate polynomial; coeffs[i] is the x^i coefficient."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs):
        cs = [c if isinstance(c, FieldElement) else spec.element(c) for c in coeffs]
        for c in cs:
            if c.spec != spec:
                raise FieldError("coefficient from a different field")
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly1 is immutable")

    @classmethod
    def zero(cls, spec):
        return cls(spec, [])

    @classmethod
    def one(cls, spec):
        return cls(spec, [1])

    @classmethod
    def x(cls, spec):
        return cls(spec, [0, 1])

    @classmethod
    def monomial(cls, spec, c, i):
        return cls(spec, [0] * i + [c])

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with deg 0 = -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading(self) -> FieldElement:
        if self.is_zero():
            raise PolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (isinstance(other, Poly1) and self.spec == other.spec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.spec.zero()
        return Poly1(self.spec, [
            (self.coeffs[i] if i < len(self.coeffs) else z)
            + (other.coeffs[i] if i < len(other.coeffs) else z)
            for i in range(n)])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        return Poly1(self.spec, [-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly1.zero(self.spec)
        z = self.spec.zero()
        r = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                r[i + j] = r[i + j] + a * b
        return Poly1(self.spec, r)

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative power of a polynomial")
        r = Poly1.one(self.spec)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def _coerce(self, other) -> "Poly1":
        if isinstance(other, Poly1):
            _same_spec(self.spec, other.spec)
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly1(self.spec, [other])
        raise TypeError(f"cannot combine Poly1 with {type(other)}")

    def divmod(self, other: "Poly1") -> tuple["Poly1", "Poly1"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [self.spec.zero()] * max(0, len(rem) - len(other.coeffs) + 1)
        inv = other.leading().inverse()
        d = other.degree
        while len(rem) - 1 >= d and rem:
            c = rem[-1] * inv
            shift = len(rem) - 1 - d
            q[shift] = c
            for i in range(d + 1):
                rem[shift + i] = rem[shift + i] - c * other.coeffs[i]
            while rem and rem[-1].is_zero():
                rem.pop()
        return Poly1(self.spec, q), Poly1(self.spec, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def gcd(self, other: "Poly1") -> "Poly1":
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def monic(self) -> "Poly1":
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return Poly1(self.spec, [c * inv for c in self.coeffs])

    def evaluate(self, x: FieldElement) -> FieldElement:
        """Horner evaluation; x may live in an extension of a prime base."""
        if x.spec != self.spec:
            if self.spec.k == 1 and x.spec.p == self.spec.p:
                acc = x.spec.zero()
                for c in reversed(self.coeffs):
                    acc = acc * x + c.as_int()
                return acc
            raise FieldError("evaluation point in an incompatible field")
        acc = self.spec.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute(self, g: "Poly1") -> "Poly1":
        acc = Poly1.zero(self.spec)
        for c in reversed(self.coeffs):
            acc = acc * g + Poly1(self.spec, [c])
        return acc

    def multiplicity_of(self, factor: "Poly1") -> int:
        """Exact power of a nonconstant factor dividing self."""
        if self.is_zero():
            raise PolyError("zero polynomial")
        n = 0
        cur = self
        while True:
            q, r = cur.divmod(factor)
            if not r.is_zero():
                return n
            n += 1
            cur = q

    def factor(self) -> list[tuple["Poly1", int]]:
        """Monic irreducible factors with multiplicities, by trial division.

        Deterministic: divisors are tried in lexicographic modulus order.
        Desk-scale degrees only.
        """
        if self.is_zero():
            raise PolyError("cannot factor the zero polynomial")
        out = []
        cur = self.monic()
        d = 1
        while cur.degree >= 2 * d:
            for cand in _monic_irreducibles(self.spec, d):
                if cur.degree < 2 * d:
                    break
                m = cur.multiplicity_of(cand)
                if m:
                    out.append((cand, m))
                    for _ in range(m):
                        cur = cur.divmod(cand)[0]
            d += 1
        if cur.degree >= 1:
            out.append((cur, 1))
        return out

    def is_irreducible(self) -> bool:
        if self.degree < 1:
            return False
        if self.degree == 1:
            return True
        f = self.factor()
        return len(f) == 1 and f[0][1] == 1

    def __repr__(self):
        return render_poly1(self, "x")


@lru_cache(maxsize=None)
def _monic_irreducibles(spec: FieldSpec, d: int) -> tuple[Poly1, ...]:
    """All monic irreducibles of degree d over spec, lexicographic order."""
    if spec.k != 1:
        raise PolyError("factorization is supported over prime fields")
    out = []
    for tail in product(range(spec.p), repeat=d):
        cand = Poly1(spec, list(tail) + [1])
        if d == 1:
            out.append(cand)
            continue
        if not any(cand.divmod(q)[1].is_zero()
                   for dd in range(1, d // 2 + 1)
                   for q in _monic_irreducibles(spec, dd)):
            out.append(cand)
    return tuple(out)


# ---------------------------------------------------------------------------


class RationalFunction:
    """num/den, reduced, den monic.  Field operations and valuations."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly1, den: Poly1 | None = None):
        if den is None:
            den = Poly1.one(num.spec)
        _same_spec(num.spec, den.spec)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not num.is_zero():
            g = num.gcd(den)
            if g.degree >= 1:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
        lead = den.leading().inverse()
        num = Poly1(num.spec, [c * lead for c in num.coeffs])
        den = den.monic()
        if num.is_zero():
            den = Poly1.one(num.spec)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @property
    def spec(self):
        return self.num.spec

    @classmethod
    def of(cls, spec: FieldSpec, num, den=None):
        n = num if isinstance(num, Poly1) else Poly1(spec, num if isinstance(num, list) else [num])
        d = None
        if den is not None:
            d = den if isinstance(den, Poly1) else Poly1(spec, den if isinstance(den, list) else [den])
        return cls(n, d)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            _same_spec(self.spec, other.spec)
            return other
        if isinstance(other, Poly1):
            return RationalFunction(other)
        if isinstance(other, (int, FieldElement)):
            return RationalFunction(Poly1(self.spec, [other]))
        raise TypeError(f"cannot combine RationalFunction with {type(other)}")

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __pow__(self, n: int):
        if n < 0:
            return (RationalFunction(self.den, self.num)) ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def evaluate(self, x: FieldElement) -> FieldElement:
        d = self.den.evaluate(x)
        if d.is_zero():
            raise ZeroDivisionError("pole at evaluation point")
        return self.num.evaluate(x) / d

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __repr__(self):
        if self.is_polynomial():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Place:
    """Closed point of the projective x-line: monic irreducible or infinity."""

    kind: str                      # "finite" | "infinite"
    minimal_polynomial: Poly1 | None = None

    def __post_init__(self):
        if self.kind == "finite":
            mp = self.minimal_polynomial
            if mp is None or mp.degree < 1 or mp.leading() != mp.spec.one():
                raise PolyError("finite place needs a monic nonconstant polynomial")
            if not mp.is_irreducible():
                raise PolyError("finite place polynomial must be irreducible")
        elif self.kind != "infinite":
            raise PolyError(f"unknown place kind {self.kind!r}")

    @classmethod
    def infinite(cls):
        return cls("infinite")

    @classmethod
    def at(cls, spec: FieldSpec, a) -> "Place":
        """The rational place x = a."""
        e = a if isinstance(a, FieldElement) else spec.element(a)
        return cls("finite", Poly1(spec, [-e, spec.one()]))

    @property
    def degree(self) -> int:
        return 1 if self.kind == "infinite" else self.minimal_polynomial.degree

    def __repr__(self):
        if self.kind == "infinite":
            return "(x=infinity)"
        return f"({self.minimal_polynomial!r})"


def valuation(f: RationalFunction, place: Place) -> int:
    """Order of vanishing of f at the place (negative at poles)."""
    if f.is_zero():
        raise PolyError("valuation of the zero function is undefined")
    if place.kind == "infinite":
        return f.den.degree - f.num.degree
    pi = place.minimal_polynomial
    return f.num.multiplicity_of(pi) - f.den.multiplicity_of(pi)


def divisor(f: RationalFunction) -> list[tuple[Place, int]]:
    """All places of nonzero valuation, zeros and poles, plus infinity."""
    if f.is_zero():
        raise PolyError("divisor of the zero function is undefined")
    out = []
    for pol, mult in f.num.factor():
        out.append((Place("finite", pol.monic()), mult))
    for pol, mult in f.den.factor():
        out.append((Place("finite", pol.monic()), -mult))
    v_inf = f.den.degree - f.num.degree
    if v_inf:
        out.append((Place.infinite(), v_inf))
    return out


def pole_divisor(f: RationalFunction) -> list[tuple[Place, int]]:
    """Places of negative valuation with positive multiplicities."""
    return [(pl, -v) for pl, v in divisor(f) if v < 0]


# ---------------------------------------------------------------------------


class Poly2:
    """Sparse bivariate polynomial over a FieldSpec.

    terms maps (i, j) -> nonzero coefficient of u^i v^j; variable names are
    carried for rendering only and do not take part in equality.
    """

    __slots__ = ("spec", "terms", "vars")

    def __init__(self, spec: FieldSpec, terms: dict, vars: tuple[str, str] = ("x", "y")):
        clean = {}
        for (i, j), c in terms.items():
            ce = c if isinstance(c, FieldElement) else spec.element(c)
            if ce.spec != spec:
                raise FieldError("coefficient from a different field")
            if not ce.is_zero():
                if i < 0 or j < 0:
                    raise PolyError("negative exponent in Poly2")
                clean[(i, j)] = ce
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "vars", tuple(vars))

    def __setattr__(self, *a):
        raise AttributeError("Poly2 is immutable")

    @classmethod
    def zero(cls, spec, vars=("x", "y")):
        return cls(spec, {}, vars)

    @classmethod
    def constant(cls, spec, c, vars=("x", "y")):
        return cls(spec, {(0, 0): c}, vars)

    @classmethod
    def var_x(cls, spec, vars=("x", "y")):
        return cls(spec, {(1, 0): 1}, vars)

    @classmethod
    def var_y(cls, spec, vars=("x", "y")):
        return cls(spec, {(0, 1): 1}, vars)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, Poly2) and self.spec == other.spec
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.spec, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, Poly2):
            _same_spec(self.spec, other.spec)
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly2.constant(self.spec, other, self.vars)
        raise TypeError(f"cannot combine Poly2 with {type(other)}")

    def __add__(self, other):
        o = self._coerce(other)
        t = dict(self.terms)
        for k, c in o.terms.items():
            t[k] = t.get(k, self.spec.zero()) + c
        return Poly2(self.spec, t, self.vars)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Poly2(self.spec, {k: -c for k, c in self.terms.items()}, self.vars)

    def __mul__(self, other):
        o = self._coerce(other)
        t = {}
        z = self.spec.zero()
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t.get(k, z) + c1 * c2
        return Poly2(self.spec, t, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative power of a Poly2")
        r = Poly2.constant(self.spec, 1, self.vars)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def degree_in(self, axis: int) -> int:
        if not self.terms:
            return -1
        return max(k[axis] for k in self.terms)

    def coefficient_in(self, axis: int, d: int) -> "Poly2":
        """Coefficient of (axis variable)^d, as a Poly2 in the other variable."""
        t = {}
        for (i, j), c in self.terms.items():
            k = (i, j)
            if k[axis] == d:
                nk = (0, j) if axis == 0 else (i, 0)
                t[nk] = c
        return Poly2(self.spec, t, self.vars)

    def evaluate(self, x: FieldElement, y: FieldElement) -> FieldElement:
        target = x.spec
        acc = target.zero()
        for (i, j), c in self.terms.items():
            cv = c if c.spec == target else target.element(c.as_int())
            acc = acc + cv * x ** i * y ** j
        return acc

    def swap_vars(self) -> "Poly2":
        return Poly2(self.spec, {(j, i): c for (i, j), c in self.terms.items()},
                     (self.vars[1], self.vars[0]))

    def lift(self, target: FieldSpec) -> "Poly2":
        """Base-change a prime-field Poly2 into an extension of the same p."""
        return Poly2(target, {k: c.lift(target) for k, c in self.terms.items()},
                     self.vars)

    def __repr__(self):
        return render_poly2(self)


def substitute2(f: Poly2, gx: Poly2, gy: Poly2) -> Poly2:
    """f with its first variable replaced by gx and second by gy, expanded."""
    _same_spec(f.spec, gx.spec, gy.spec)
    # memoized powers keep repeated exponents cheap for curve-sized inputs
    px = {0: Poly2.constant(f.spec, 1, gx.vars)}
    py = {0: Poly2.constant(f.spec, 1, gx.vars)}
    out = Poly2.zero(f.spec, gx.vars)
    for (i, j), c in sorted(f.terms.items()):
        if i not in px:
            px[i] = gx ** i
        if j not in py:
            py[j] = gy ** j
        out = out + Poly2.constant(f.spec, c, gx.vars) * px[i] * py[j]
    return out


def divides2(f: Poly2, g: Poly2, axis: int = 1) -> tuple[bool, Poly2 | None]:
    """Exact bivariate divisibility test: is g a polynomial multiple of f?

    Divides along the given axis, requiring exact division of the leading
    coefficients at every step; sound and complete for f primitive in that
    axis (content 1), which holds for all curve polynomials used here.
    Returns (divides, quotient or None).
    """
    _same_spec(f.spec, g.spec)
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_zero():
        return True, Poly2.zero(f.spec, g.vars)
    df = f.degree_in(axis)
    lead_f = f.coefficient_in(axis, df)
    rem = g
    quo = Poly2.zero(f.spec, g.vars)
    while not rem.is_zero() and rem.degree_in(axis) >= df:
        dr = rem.degree_in(axis)
        lead_r = rem.coefficient_in(axis, dr)
        ok, q1 = _divide_uni(lead_f, lead_r, 1 - axis)
        if not ok:
            return False, None
        shift = {(0, dr - df) if axis == 1 else (dr - df, 0): f.spec.one()}
        term = q1 * Poly2(f.spec, shift, g.vars)
        quo = quo + term
        rem = rem - term * f
    return rem.is_zero(), (quo if rem.is_zero() else None)


def _divide_uni(den: Poly2, num: Poly2, axis: int) -> tuple[bool, Poly2 | None]:
    """Exact division num/den of Poly2s that involve only one variable."""
    spec = den.spec
    dn = [spec.zero()] * (num.degree_in(axis) + 1)
    dd = [spec.zero()] * (den.degree_in(axis) + 1)
    for (i, j), c in num.terms.items():
        dn[(i, j)[axis]] = c
    for (i, j), c in den.terms.items():
        dd[(i, j)[axis]] = c
    a, b = Poly1(spec, dn), Poly1(spec, dd)
    q, r = a.divmod(b)
    if not r.is_zero():
        return False, None
    t = {}
    for i, c in enumerate(q.coeffs):
        if not c.is_zero():
            t[(i, 0) if axis == 0 else (0, i)] = c
    return True, Poly2(spec, t, num.vars)


# ---------------------------------------------------------------------------
# text grammar: terms "c*x^i*y^j" joined by "+"; the cover grammar also
# accepts "c/x^i" so rational right-hand sides like "2x + 1/x" parse.

def render_poly1(f: Poly1, var: str) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c.is_zero():
            continue
        parts.append(_render_term(c.as_int(), ((var, i),)))
    return " + ".join(parts)


def render_poly2(f: Poly2) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for (i, j) in sorted(f.terms, key=lambda k: (-(k[0] + k[1]), -k[0])):
        c = f.terms[(i, j)].as_int()
        parts.append(_render_term(c, ((f.vars[0], i), (f.vars[1], j))))
    return " + ".join(parts)


def _render_term(c: int, powers) -> str:
    factors = [f"{v}^{e}" if e > 1 else v for v, e in powers if e > 0]
    if not factors:
        return str(c)
    if c == 1:
        return "*".join(factors)
    return f"{c}*" + "*".join(factors)


_TERM_RE = re.compile(
    r"^\s*(?P<coef>\d+)?\s*\*?\s*"
    r"(?P<xpart>[a-zA-Z]\w*(\^\d+)?)?\s*"
    r"(/\s*(?P<dpart>[a-zA-Z]\w*(\^\d+)?))?\s*$")


def _var_pow(tok: str) -> tuple[str, int]:
    if "^" in tok:
        v, e = tok.split("^")
        return v, int(e)
    return tok, 1


def parse_rational(spec: FieldSpec, text: str) -> RationalFunction:
    """Parse a univariate rational expression such as "2x + 1/x^2 - 3".

    Integer coefficients reduce mod p; a single variable name is allowed.
    """
    s = text.replace("-", "+-").replace("++", "+")
    chunks = [c for c in s.split("+") if c.strip()]
    if not chunks:
        raise PolyError(f"empty expression {text!r}")
    total = RationalFunction(Poly1.zero(spec))
    varname = None
    for chunk in chunks:
        neg = chunk.strip().startswith("-")
        body = chunk.strip().lstrip("-").strip()
        m = _TERM_RE.match(body)
        if not m or (m.group("coef") is None and m.group("xpart") is None):
            raise PolyError(f"cannot parse term {chunk.strip()!r} in {text!r}")
        coef = int(m.group("coef")) if m.group("coef") else 1
        num_pow = 0
        den_pow = 0
        if m.group("xpart"):
            v, e = _var_pow(m.group("xpart"))
            varname = _check_var(varname, v, text)
            num_pow = e
        if m.group("dpart"):
            v, e = _var_pow(m.group("dpart"))
            varname = _check_var(varname, v, text)
            den_pow = e
        num = Poly1.monomial(spec, spec.element(-coef if neg else coef), num_pow)
        den = Poly1.monomial(spec, spec.one(), den_pow)
        total = total + RationalFunction(num, den)
    return total


def _check_var(seen: str | None, v: str, text: str) -> str:
    if seen is not None and seen != v:
        raise PolyError(f"more than one variable in {text!r}")
    return v


def parse_poly2(spec: FieldSpec, text: str, vars: tuple[str, str] = ("x", "y")) -> Poly2:
    """Parse the report grammar: terms c*x^i*y^j joined by + or -."""
    s = text.replace("-", "+-").replace("++", "+")
    chunks = [c for c in s.split("+") if c.strip()]
    total = Poly2.zero(spec, vars)
    term_re = re.compile(
        rf"^\s*(?P<coef>\d+)?\s*\*?\s*"
        rf"(?P<a>{vars[0]}(\^\d+)?)?\s*\*?\s*"
        rf"(?P<b>{vars[1]}(\^\d+)?)?\s*$")
    for chunk in chunks:
        neg = chunk.strip().startswith("-")
        body = chunk.strip().lstrip("-").strip()
        m = term_re.match(body)
        if not m or (m.group("coef") is None and m.group("a") is None
                     and m.group("b") is None):
            raise PolyError(f"cannot parse term {chunk.strip()!r} in {text!r}")
        coef = int(m.group("coef")) if m.group("coef") else 1
        i = _var_pow(m.group("a"))[1] if m.group("a") else 0
        j = _var_pow(m.group("b"))[1] if m.group("b") else 0
        c = spec.element(-coef if neg else coef)
        total = total + Poly2(spec, {(i, j): c}, vars)
    return total
