"""Exact arithmetic in F_p and F_{p^k} for small odd primes p.

Fields are pinned to a deterministic modulus (the lexicographically least
monic irreducible, constant coefficient first) so every downstream report
is reproducible bit for bit.  Elements are immutable and carry their field;
mixing elements of different fields is an error, never a coercion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product


class FieldError(ValueError):
    """Invalid field construction or cross-field arithmetic."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# internal coefficient-list helpers (little-endian lists of ints mod p)

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polmul(a, b, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] + ai * bj) % p
    return _trim(r)


def _polmod(a, m, p):
    # m monic
    a = list(a)
    while len(a) >= len(m):
        c = a.pop()
        if c:
            off = len(a) - (len(m) - 1)
            for i in range(len(m) - 1):
                a[off + i] = (a[off + i] - c * m[i]) % p
    return _trim(a)


def _polpowmod(a, n, m, p):
    r = [1]
    a = _polmod(a, m, p)
    while n:
        if n & 1:
            r = _polmod(_polmul(r, a, p), m, p)
        a = _polmod(_polmul(a, a, p), m, p)
        n >>= 1
    return r


def _is_irreducible(m: list[int], p: int) -> bool:
    """Rabin test on a monic polynomial given little-endian with leading 1."""
    k = len(m) - 1
    if k < 1:
        return False
    x = [0, 1]
    # x^(p^k) must equal x mod m
    f = _polmod(x, m, p)
    for _ in range(k):
        f = _polpowmod(f, p, m, p)
    if _trim(list(f)) != _polmod(x, m, p):
        return False
    # for each prime r | k:  gcd(x^(p^(k/r)) - x, m) must be 1
    for r in _prime_divisors(k):
        g = _polmod(x, m, p)
        for _ in range(k // r):
            g = _polpowmod(g, p, m, p)
        diff = _polsub(g, _polmod(x, m, p), p)
        if _gcd_with(m, diff, p):
            return False
    return True


def _polsub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def _gcd_with(m, diff, p) -> bool:
    """True if gcd(m, diff) is a nonconstant polynomial."""
    a, b = list(m), list(diff)
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [(c * inv) % p for c in b]
        r = a
        while len(r) >= len(bm):
            c = r.pop()
            if c:
                off = len(r) - (len(bm) - 1)
                for i in range(len(bm) - 1):
                    r[off + i] = (r[off + i] - c * bm[i]) % p
            _trim(r)
        a, b = b, _trim(r)
    return len(a) > 1


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """F_{p^k} pinned to an explicit monic irreducible modulus.

    modulus is a (k+1)-tuple, constant term first, leading coefficient 1.
    For k = 1 the modulus is the placeholder x, never used by arithmetic.
    """

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p ** self.k

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.k)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def element(self, coeffs) -> "FieldElement":
        """Element from an int (prime-subfield value) or coefficient list."""
        if isinstance(coeffs, int):
            c = [coeffs % self.p] + [0] * (self.k - 1)
        else:
            c = [int(v) % self.p for v in coeffs]
            if len(c) > self.k:
                c = _polmod(c, list(self.modulus), self.p)
            c = c + [0] * (self.k - len(c))
        return FieldElement(self, tuple(c))

    def elements(self):
        """All p^k elements, in lexicographic coefficient order."""
        for tail in product(range(self.p), repeat=self.k):
            yield FieldElement(self, tail)

    def generator(self) -> "FieldElement":
        """The degree-k modulus root (k>1), or primitive_element for k=1."""
        if self.k == 1:
            return primitive_element(self)
        return FieldElement(self, (0, 1) + (0,) * (self.k - 2))

    def to_json_dict(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldSpec:
    """F_{p^k} with the lexicographically least monic irreducible modulus."""
    if p % 2 == 0:
        raise FieldError("p must be odd")
    if not is_prime(p):
        raise FieldError(f"p must be prime, got {p}")
    if k < 1:
        raise FieldError(f"extension degree must be >= 1, got {k}")
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    for tail in product(range(p), repeat=k):
        m = list(tail) + [1]
        if _is_irreducible(m, p):
            return FieldSpec(p, k, tuple(m))
    raise FieldError("unreachable: irreducible polynomials exist in every degree")


def field_with_modulus(p: int, modulus) -> FieldSpec:
    """Extension field on an explicitly chosen monic irreducible modulus."""
    if p % 2 == 0 or not is_prime(p):
        raise FieldError("p must be an odd prime")
    m = [int(c) % p for c in modulus]
    if not m or m[-1] != 1:
        raise FieldError("modulus must be monic")
    k = len(m) - 1
    if k >= 2 and not _is_irreducible(m, p):
        raise FieldError("modulus is reducible")
    return FieldSpec(p, k, tuple(m))


class FieldElement:
    """Immutable element of a FieldSpec, coefficients little-endian."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", tuple(c % spec.p for c in coeffs))
        if len(self.coeffs) != spec.k:
            raise FieldError(f"need {spec.k} coefficients, got {len(self.coeffs)}")

    def __setattr__(self, *a):
        raise AttributeError("FieldElement is immutable")

    def _check(self, other) -> "FieldElement":
        if isinstance(other, int):
            return self.spec.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.spec != self.spec:
            raise FieldError("cross-field arithmetic between "
                             f"F_{self.spec.order} and F_{other.spec.order}")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, (a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, (a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return self.spec.element(other) - self

    def __neg__(self):
        return FieldElement(self.spec, (-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        p = self.spec.p
        r = _polmul(list(self.coeffs), list(o.coeffs), p)
        if self.spec.k > 1:
            r = _polmod(r, list(self.spec.modulus), p)
        else:
            r = _trim(r)  # degree-0 product, nothing to reduce
        return self.spec.element(r)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        p = self.spec.p
        if self.spec.k == 1:
            return self.spec.element(pow(self.coeffs[0], p - 2, p))
        # q is desk-scale here, so Fermat beats bookkeeping an extended Euclid
        return self ** (self.spec.order - 2)

    def __truediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.spec.element(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        r = self.spec.one()
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.spec.element(other)
        return (isinstance(other, FieldElement)
                and self.spec == other.spec and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.spec.p, self.spec.k, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def frobenius(self) -> "FieldElement":
        return self ** self.spec.p

    def lift(self, target: FieldSpec) -> "FieldElement":
        """Embed a prime-field element into an extension with the same p."""
        if self.spec.k != 1 or target.p != self.spec.p:
            raise FieldError("lift is only defined from F_p into F_{p^k}")
        return target.element(self.coeffs[0])

    def as_int(self) -> int:
        """Canonical representative in [0, p-1]; prime-field elements only."""
        if any(self.coeffs[1:]):
            raise FieldError("element is not in the prime subfield")
        return self.coeffs[0]

    def __repr__(self):
        if self.spec.k == 1:
            return f"{self.coeffs[0]}"
        return f"GF({self.spec.p}^{self.spec.k}){list(self.coeffs)}"


def primitive_element(spec: FieldSpec) -> FieldElement:
    """Least positive integer generating F_p^* (prime fields only)."""
    if spec.k != 1:
        raise FieldError("primitive_element is defined for prime fields")
    p = spec.p
    factors = _prime_divisors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in factors):
            return spec.element(g)
    raise FieldError("unreachable: F_p^* is cyclic")


def trace(e: FieldElement) -> FieldElement:
    """Absolute trace down to F_p: e + e^p + ... + e^(p^(k-1))."""
    acc = e
    frob = e
    for _ in range(e.spec.k - 1):
        frob = frob.frobenius()
        acc = acc + frob
    base = make_field(e.spec.p, 1)
    return base.element(acc.coeffs[0])


def artin_schreier_solve(rhs: FieldElement) -> FieldElement | None:
    """One solution y of y^p - y = rhs in rhs's field, or None.

    Solvable exactly when the absolute trace of rhs vanishes; solves the
    F_p-linear system of the map y -> y^p - y in the power basis.
    """
    spec = rhs.spec
    p, k = spec.p, spec.k
    if k == 1:
        return spec.zero() if rhs.is_zero() else None
    cols = []
    for i in range(k):
        basis = spec.element([0] * i + [1])
        img = basis.frobenius() - basis
        cols.append(list(img.coeffs))
    # augmented system M y = rhs over F_p, M given by columns
    m = [[cols[j][i] for j in range(k)] + [rhs.coeffs[i]] for i in range(k)]
    row = 0
    pivots = []
    for col in range(k):
        piv = next((r for r in range(row, k) if m[r][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [(v * inv) % p for v in m[row]]
        for r in range(k):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [(m[r][j] - f * m[row][j]) % p for j in range(k + 1)]
        pivots.append(col)
        row += 1
    for r in range(row, k):
        if m[r][k]:
            return None
    y = [0] * k
    for r, col in enumerate(pivots):
        y[col] = m[r][k]
    return spec.element(y)
