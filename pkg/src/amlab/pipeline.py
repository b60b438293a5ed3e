"""End-to-end machine verification of the Artin-Mumford constructions.

Each check verifies one link of the chain that pins the curve down by its
automorphism group: the rational quotients by the two coordinate
translations, the diagonal quotient onto a hyperelliptic genus-(p-1)
curve, the fixed field of the full translation group, the fibered system
in two Artin-Schreier coordinates and its eliminant, and the closing
birational substitution back to the defining equation.

Every check result carries the exact claim it verified, so a report is
self-describing.  Reports are deterministic for fixed (p, a, b, seed):
sampled checks draw from a seeded generator and say so in their mode.

The converse direction of the characterization (that every curve with the
right genus and automorphisms arises this way) is represented only by
these forward constructions; the report header states that explicitly to
prevent overclaiming.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .ascover import ASCover, composite_report, riemann_hurwitz, deuring_shafarevich
from .curve import (AMCurve, BudgetError, DEFAULT_BUDGET, VGVCurve,
                    enumerate_points, hyperelliptic_witness, short_orbits,
                    verify_invariance, substitution_is_invariance)
from .gf import field_with_modulus, make_field, trace, artin_schreier_solve
from .grp import Subgroup, full_group, verify_presentation
from .poly import (Poly1, Poly2, RationalFunction, divides2,
                   pole_divisor, substitute2)
from .zeta import count_points, fit_l_polynomial


HEADER = ("forward constructions only: every conclusion used by the "
          "characterization is re-verified on the curve itself; the "
          "universal converse over all curves is not searched")


@dataclass
class CheckResult:
    name: str
    status: str                   # "pass" | "fail" | "skipped"
    claim: str
    mode: str = "symbolic"        # "symbolic" | "exhaustive" | "sampled"
    details: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "claim": self.claim,
            "mode": self.mode,
            "details": self.details,
        }


@dataclass
class TheoremReport:
    p: int
    header: str
    checks: list[CheckResult]
    overall_pass: bool
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "header": self.header,
            "seed": self.seed,
            "overall_pass": self.overall_pass,
            "checks": [c.to_json_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"p = {self.p}   ({self.header})"]
        width = max(len(c.name) for c in self.checks)
        for c in self.checks:
            lines.append(f"  {c.name:<{width}}  {c.status.upper():<7} [{c.mode}] {c.claim}")
        lines.append(f"overall: {'PASS' if self.overall_pass else 'FAIL'}")
        return "\n".join(lines)


def _result(name, ok, claim, mode="symbolic", **details) -> CheckResult:
    return CheckResult(name, "pass" if ok else "fail", claim, mode, details)


# ---------------------------------------------------------------------------


def check_quotient_by_translation(p: int, c: int = 1) -> list[CheckResult]:
    """The quotients by the two coordinate translations are rational.

    For tau_{1,0}: eta = x^p - x and y are invariant, the p translates of
    x are exactly the roots of X^p - X - eta, and the quotient relation
    eta * (y^p - y) = c defines a genus-0 cover of the eta-line.  The
    companion check swaps the roles of x and y for tau_{0,1}.
    """
    if p > 13:
        raise BudgetError("desk-scale checks stop at p = 13")
    spec = make_field(p, 1)
    out = []
    for which, shift in (("tau(1,0)", (1, 0)), ("tau(0,1)", (0, 1))):
        x = Poly2.var_x(spec)
        y = Poly2.var_y(spec)
        gx = x + Poly2.constant(spec, shift[0])
        gy = y + Poly2.constant(spec, shift[1])
        inv_coord = (x ** p - x) if which == "tau(1,0)" else (y ** p - y)
        free_coord = y if which == "tau(1,0)" else x
        ok_eta = substitute2(inv_coord, gx, gy) == inv_coord
        ok_free = substitute2(free_coord, gx, gy) == free_coord
        out.append(_result(
            f"quotient-{which}-invariants", ok_eta and ok_free,
            "the power-minus-identity coordinate and the free coordinate "
            f"are fixed by {which}"))

        curve = AMCurve.of(p, c)
        f = curve.defining_poly()
        relation = inv_coord * ((y ** p - y) if which == "tau(1,0)" else (x ** p - x)) \
            - Poly2.constant(spec, c)
        div_ok, quot = divides2(f, relation)
        out.append(_result(
            f"quotient-{which}-relation", div_ok and quot == Poly2.constant(spec, 1),
            "eta * (other-coordinate power map) - c lies in the curve ideal "
            "with cofactor 1",
            relation=repr(relation), curve=repr(f)))

        # the orbit of the moving coordinate is a full root set:
        # prod_j (X - (t + j)) = X^p - X - (t^p - t)
        bigx = Poly2.var_x(spec, vars=("X", "t"))
        t = Poly2.var_y(spec, vars=("X", "t"))
        prod = Poly2.constant(spec, 1, vars=("X", "t"))
        for j in range(p):
            prod = prod * (bigx - t - Poly2.constant(spec, j, vars=("X", "t")))
        target = bigx ** p - bigx - (t ** p - t)
        out.append(_result(
            f"quotient-{which}-galois-orbit", prod == target,
            "the p translates of the moving coordinate are the full root "
            "set of X^p - X - eta, so the fixed field has index p"))

        quot_cover = ASCover.of(p, RationalFunction(
            Poly1(spec, [spec.element(c)]), Poly1.x(spec)))
        rep = riemann_hurwitz(quot_cover)
        out.append(_result(
            f"quotient-{which}-genus", rep.genus == 0,
            "the quotient relation (power map) = c/eta defines a rational curve",
            genus=rep.genus))
    return out


def check_diagonal_quotient(p: int, c: int = 1, budget: int = DEFAULT_BUDGET) -> list[CheckResult]:
    """Quotient by the diagonal translation tau_{1,-1} is a hyperelliptic
    genus-(p-1) curve in van der Geer - van der Vlugt form."""
    if p > 13:
        raise BudgetError("desk-scale checks stop at p = 13")
    spec = make_field(p, 1)
    x = Poly2.var_x(spec)
    y = Poly2.var_y(spec)
    out = []
    gx = x + Poly2.constant(spec, 1)
    gy = y - Poly2.constant(spec, 1)
    s = x + y
    w = x ** p - x
    ok_s = substitute2(s, gx, gy) == s
    ok_w = substitute2(w, gx, gy) == w
    out.append(_result("diagonal-invariants", ok_s and ok_w,
                       "s = x + y and w = x^p - x are fixed by tau(1,-1)"))

    curve = AMCurve.of(p, c)
    f = curve.defining_poly()
    relation = w * ((s ** p - s) - w) - Poly2.constant(spec, c)
    div_ok, quot = divides2(f, relation)
    out.append(_result(
        "diagonal-relation", div_ok and quot == Poly2.constant(spec, 1),
        "w*((s^p - s) - w) - c lies in the curve ideal with cofactor 1",
        relation=repr(relation), curve=repr(f)))

    # pointwise oracle over F_{p^2} where the budget allows
    if p ** 4 <= budget:
        ok_pts = True
        ext = make_field(p, 2)
        c_e = curve.c.lift(ext)
        for q in enumerate_points(curve, 2, budget=budget):
            if q.kind != "affine":
                continue
            w0 = q.x ** p - q.x
            s0 = q.x + q.y
            if (s0 ** p - s0) * w0 != w0 * w0 + c_e:
                ok_pts = False
                break
        out.append(_result("diagonal-pointwise", ok_pts,
                           "s^p - s = w + c/w holds at every affine point "
                           "over the quadratic extension", mode="exhaustive"))

    # the quotient relation s^p - s = w + c/w, rescaled by w -> c*w,
    # is the hyperelliptic model with a = c
    t = Poly1.x(spec)
    fq = RationalFunction(t * t + spec.element(c), t)          # w + c/w
    ca = spec.element(c)
    rescaled = RationalFunction(t * ca) + RationalFunction(
        Poly1(spec, [c]), t * ca)
    target = RationalFunction(t * t * ca + spec.one(), t)      # c*w + 1/w
    out.append(_result("diagonal-vgvv-form", rescaled == target,
                       "substituting w -> c*w turns the quotient into "
                       "(power map) = a*x + 1/x with a = c"))

    cov = ASCover.of(p, fq)
    rh = riemann_hurwitz(cov)
    ds = deuring_shafarevich(cov)
    out.append(_result("diagonal-genus", rh.genus == p - 1,
                       f"the diagonal quotient has genus p - 1 = {p - 1}",
                       genus=rh.genus))
    out.append(_result("diagonal-ordinary", ds.p_rank == p - 1,
                       f"the diagonal quotient has p-rank p - 1 = {p - 1} (ordinary)",
                       p_rank=ds.p_rank))
    wit = hyperelliptic_witness(VGVCurve.of(p, c))
    out.append(_result("diagonal-hyperelliptic", wit.degree_in(0) == 2,
                       "x satisfies a quadratic over the y-line: the quotient "
                       "is a double cover, hence hyperelliptic"))
    return out


def check_fixed_field_translations(p: int, a: int = 1, b: int = 0) -> list[CheckResult]:
    """The base coordinate of the fibered model is the full fixed field of
    the translation group: x is invariant and the tower has degree p^2."""
    if p > 13:
        raise BudgetError("desk-scale checks stop at p = 13")
    spec = make_field(p, 1)
    x = Poly2.var_x(spec)
    out = []

    # R1(x, y) = x*(y^p - y) - a*x^2 - 1, R2(x, z) = x*(z^p - z) - b*x - 1
    y = Poly2.var_y(spec)
    r1 = x * (y ** p - y) - Poly2.constant(spec, a) * x ** 2 - Poly2.constant(spec, 1)
    z = Poly2.var_y(spec, vars=("x", "z"))
    xz = Poly2.var_x(spec, vars=("x", "z"))
    r2 = xz * (z ** p - z) - Poly2.constant(spec, b, vars=("x", "z")) * xz \
        - Poly2.constant(spec, 1, vars=("x", "z"))

    ok = True
    for cshift in range(p):
        gy = y + Poly2.constant(spec, cshift)
        if substitute2(r1, x, gy) != r1 or substitute2(x, x, gy) != x:
            ok = False
    for dshift in range(p):
        gz = z + Poly2.constant(spec, dshift, vars=("x", "z"))
        if substitute2(r2, xz, gz) != r2 or substitute2(xz, xz, gz) != xz:
            ok = False
    out.append(_result(
        "fixed-field-invariance", ok,
        "x and both defining relations are fixed by all p^2 translations "
        "(y, z) -> (y + c, z + d)", mode="exhaustive"))

    moved = substitute2(y, x, y + Poly2.constant(spec, 1)) != y
    out.append(_result(
        "fixed-field-negative-witness", moved,
        "the moving coordinate itself is correctly reported non-invariant"))

    f1 = RationalFunction(Poly1(spec, [1]) + Poly1.x(spec) ** 2 * spec.element(a),
                          Poly1.x(spec))
    f2 = RationalFunction(Poly1(spec, [b]) * Poly1.x(spec) + Poly1(spec, [1]),
                          Poly1.x(spec))
    red1 = ASCover.of(p, f1).is_reduced()
    red2 = ASCover.of(p, f2).is_reduced()
    poles1 = {repr(pl) for pl, _ in pole_divisor(f1)}
    poles2 = {repr(pl) for pl, _ in pole_divisor(f2)}
    distinct = poles1 != poles2
    out.append(_result(
        "fixed-field-tower-degree", red1 and red2 and distinct,
        "each level is a degree-p extension in reduced form and their pole "
        "sets differ, so the two levels are distinct and the tower has "
        "degree p * p = p^2",
        poles_first=sorted(poles1), poles_second=sorted(poles2)))
    return out


def _sylvester_resultant_x(cf: list[Poly2], cg: list[Poly2], spec) -> Poly2:
    """Resultant in x of two polynomials whose x-coefficients are Poly2s."""
    m = len(cf) - 1
    n = len(cg) - 1
    size = m + n
    zero = Poly2.zero(spec, cf[0].vars)
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(reversed(cf)) + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(reversed(cg)) + [zero] * (m - 1 - i))
    return _det(rows, spec, size)


def _det(rows: list[list[Poly2]], spec, size: int) -> Poly2:
    if size == 1:
        return rows[0][0]
    acc = Poly2.zero(spec, rows[0][0].vars)
    for j in range(size):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [[rows[i][jj] for jj in range(size) if jj != j]
                 for i in range(1, size)]
        sub = _det(minor, spec, size - 1)
        term = entry * sub
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def check_fibered_system_and_substitution(p: int, a: int = 1, b: int = 0) -> list[CheckResult]:
    """Eliminate x from the fibered system, recover its single (y,z)
    relation, and for b = 0 pull it back to the defining curve equation."""
    if p > 13:
        raise BudgetError("desk-scale checks stop at p = 13")
    spec = make_field(p, 1)
    if spec.element(a).is_zero():
        raise ValueError("parameter a must be nonzero")
    out = []
    yz = ("y", "z")
    yv = Poly2.var_x(spec, vars=yz)
    zv = Poly2.var_y(spec, vars=yz)
    bigy = yv ** p - yv
    bigz = zv ** p - zv - Poly2.constant(spec, b, vars=yz)
    target = bigz * bigy - bigz ** 2 - Poly2.constant(spec, a, vars=yz)

    # x-coefficient vectors of x*(y^p-y) - a*x^2 - 1 and x*(z^p-z-b) - 1
    cf = [Poly2.constant(spec, -1, vars=yz), bigy, Poly2.constant(spec, -a, vars=yz)]
    cg = [Poly2.constant(spec, -1, vars=yz), bigz]
    res = _sylvester_resultant_x(cf, cg, spec)
    scalar = None
    for k, coef in target.terms.items():
        if k in res.terms:
            scalar = res.terms[k] / coef
            break
    ok = scalar is not None and not scalar.is_zero() \
        and res == Poly2.constant(spec, scalar, vars=yz) * target
    out.append(_result(
        "fibered-eliminant", ok,
        "the x-resultant of the two fibered relations equals "
        "(z^p - z - b)*(y^p - y) - (z^p - z - b)^2 - a up to a unit",
        scalar=scalar.as_int() if scalar is not None else None,
        resultant=repr(res), target=repr(target)))

    if b % p == 0:
        inv_a = spec.element(a).inverse()
        u = Poly2.var_x(spec, vars=("u", "v"))
        v = Poly2.var_y(spec, vars=("u", "v"))
        product = (u ** p - u) * (v ** p - v)
        gx = Poly2.constant(spec, inv_a, vars=yz) * zv          # x' = z/a
        gy = yv - zv                                            # y' = y - z
        substituted = substitute2(product, gx, gy)
        lhs = Poly2.constant(spec, a, vars=yz) * (substituted - Poly2.constant(spec, 1, vars=yz))
        ok2 = lhs == target
        out.append(_result(
            "fibered-substitution", ok2,
            "with x' = z/a and y' = y - z, a*((x'^p - x')(y'^p - y') - 1) "
            "equals the eliminant exactly: the relation is the defining "
            "curve equation with c = 1",
            pulled_back=repr(lhs), target=repr(target)))

    # involution (y, z) -> (-y, -z + delta) with delta^p - delta = 2b
    two_b = spec.element(2 * b)
    solvable_fp = two_b.is_zero()
    ext2 = make_field(p, 2)
    in_ext2 = artin_schreier_solve(two_b.lift(ext2))
    tr2 = trace(two_b.lift(ext2)).as_int()
    if solvable_fp:
        delta = Poly2.zero(spec, vars=yz)
        wimg = substitute2(target, -yv, -zv + delta)
        ok3 = wimg == target
        out.append(_result(
            "involution-rational", ok3 and in_ext2 is not None,
            "b = 0: delta = 0 lies in the prime field and "
            "(y, z) -> (-y, -z) fixes the eliminant exactly"))
    else:
        # delta generates the degree-p extension cut out by its equation
        modulus = [(-2 * b) % p, (p - 1)] + [0] * (p - 2) + [1]
        ext = field_with_modulus(p, modulus)
        delta_el = ext.element([0, 1] + [0] * (p - 2))
        delta_ok = (delta_el ** p - delta_el) == ext.element(2 * b)
        t_lift = target.lift(ext)
        yv_e = Poly2.var_x(ext, vars=yz)
        zv_e = Poly2.var_y(ext, vars=yz)
        delta_c = Poly2.constant(ext, delta_el, vars=yz)
        wimg = substitute2(t_lift, -yv_e, -zv_e + delta_c)
        ok3 = delta_ok and wimg == t_lift
        out.append(_result(
            "involution-obstruction", ok3 and in_ext2 is None and tr2 != 0,
            "b != 0: delta is not in the prime field (trace of 2b is "
            f"{(2 * b) % p} != 0), not even in the quadratic extension "
            f"(trace {tr2} != 0); it generates a degree-p extension, over "
            "which (y,z) -> (-y, -z + delta) does fix the eliminant",
            solvable_in_prime_field=False,
            solvable_in_quadratic_extension=in_ext2 is not None,
            delta_degree=p))
    return out


# ---------------------------------------------------------------------------


def _member_coordinate_forms(p: int) -> set:
    """All (gx, gy) term-dicts realized by elements of H, for exclusion."""
    forms = set()
    spec = make_field(p, 1)
    for g in full_group(p):
        x = Poly2.var_x(spec)
        y = Poly2.var_y(spec)
        bx, by = (y, x) if g.s else (x, y)
        from .grp import canonical_lambda
        d = pow(canonical_lambda(p), g.i, p)
        dinv = pow(d, p - 2, p)
        gx = Poly2.constant(spec, d) * bx + Poly2.constant(spec, g.a)
        gy = Poly2.constant(spec, dinv) * by + Poly2.constant(spec, g.b)
        forms.add((frozenset((k, c.as_int()) for k, c in gx.terms.items()),
                   frozenset((k, c.as_int()) for k, c in gy.terms.items())))
    return forms


def negative_substitution_corpus(p: int, size: int, seed: int) -> list[tuple[Poly2, Poly2]]:
    """Seeded random low-degree substitutions that are not members of H."""
    spec = make_field(p, 1)
    rng = random.Random(seed)
    member = _member_coordinate_forms(p)
    corpus = []
    while len(corpus) < size:
        def rand_poly():
            t = {}
            for _ in range(rng.randint(1, 3)):
                t[(rng.randint(0, 2), rng.randint(0, 2))] = rng.randint(0, p - 1)
            return Poly2(spec, t)
        gx, gy = rand_poly(), rand_poly()
        if gx.is_zero() or gy.is_zero():
            continue
        key = (frozenset((k, c.as_int()) for k, c in gx.terms.items()),
               frozenset((k, c.as_int()) for k, c in gy.terms.items()))
        if key in member:
            continue
        corpus.append((gx, gy))
    return corpus


def run_all(p: int, budget: int = DEFAULT_BUDGET, seed: int = 0) -> TheoremReport:
    """Execute the full verification chain at one prime."""
    if p not in (3, 5, 7, 11, 13):
        raise ValueError("supported primes: 3, 5, 7, 11, 13")
    checks: list[CheckResult] = []

    pres = verify_presentation(p)
    ok = all(r["status"] == "pass" for r in pres)
    checks.append(CheckResult(
        "group-presentation", "pass" if ok else "fail",
        "group order, dihedral relations, and word identities all hold",
        "exhaustive", {"identities": pres}))

    curve = AMCurve.of(p, 1)
    elements = full_group(p)
    if p <= 7:
        ok = all(verify_invariance(g, curve) for g in elements)
        checks.append(_result("automorphisms", ok,
                              f"all {len(elements)} group elements fix the curve "
                              "polynomial under substitution", mode="exhaustive"))
    else:
        rng = random.Random(seed)
        sample = rng.sample(elements, 200)
        ok = all(verify_invariance(g, curve) for g in sample)
        checks.append(_result("automorphisms", ok,
                              f"200 of {len(elements)} group elements sampled "
                              "(budget downgrade), all fix the curve polynomial",
                              mode="sampled"))

    corpus = negative_substitution_corpus(p, 100, seed)
    ok = not any(substitution_is_invariance(curve, gx, gy) for gx, gy in corpus)
    checks.append(_result("non-automorphism-corpus", ok,
                          "100 seeded random low-degree substitutions outside "
                          "the group all fail invariance", mode="sampled"))

    k_orbit = 2 if p ** 4 <= budget and p <= 7 else 1
    rep = short_orbits(curve, Subgroup.translations(p), k=k_orbit, budget=budget)
    shorts = rep.short_orbits
    stab_names = {o.stabilizer_name for o in shorts}
    ok = (len(shorts) == 2 and all(o.size == p for o in shorts)
          and stab_names == {"<tau(1,0)>", "<tau(0,1)>"}
          and all(sz in (p, p * p) for sz in rep.orbit_sizes))
    checks.append(CheckResult(
        "short-orbits", "pass" if ok else "fail",
        "the translation group has exactly two short orbits of size p with "
        "distinct prime-order stabilizers; affine orbits are long",
        "exhaustive", {"orbit_sizes": sorted(rep.orbit_sizes),
                       "stabilizers": sorted(stab_names),
                       "extension_degree": k_orbit}))

    comp = composite_report(p)
    ok = comp.genus == comp.p_rank == (p - 1) ** 2
    checks.append(_result("genus-p-rank-formulas", ok,
                          f"plane-curve genus and translation p-rank both give "
                          f"(p-1)^2 = {(p - 1) ** 2}",
                          genus=comp.genus, p_rank=comp.p_rank))

    spec = make_field(p, 1)
    ok = True
    for a in range(1, p):
        f = RationalFunction(Poly1(spec, [1]) + Poly1.x(spec) ** 2 * spec.element(a),
                             Poly1.x(spec))
        cov = ASCover.of(p, f)
        if riemann_hurwitz(cov).genus != p - 1 or deuring_shafarevich(cov).p_rank != p - 1:
            ok = False
    checks.append(_result("hyperelliptic-family", ok,
                          "every a*x + 1/x cover has genus = p-rank = p - 1",
                          mode="exhaustive"))

    ok = True
    for b in range(p):
        f = RationalFunction(Poly1(spec, [b]) * Poly1.x(spec) + Poly1(spec, [1]),
                             Poly1.x(spec))
        if riemann_hurwitz(ASCover.of(p, f)).genus != 0:
            ok = False
    checks.append(_result("rational-quotient-family", ok,
                          "every b + 1/x cover is rational", mode="exhaustive"))

    checks.extend(check_quotient_by_translation(p))
    checks.extend(check_diagonal_quotient(p, budget=budget))
    for a in range(1, p):
        checks.extend(check_fixed_field_translations(p, a=a, b=0))
        checks.extend(check_fibered_system_and_substitution(p, a=a, b=0))
    checks.extend(check_fibered_system_and_substitution(p, a=1, b=1))

    if p == 3:
        g = (p - 1) ** 2
        counts = [count_points(curve, k, budget=budget) for k in range(1, g + 1)]
        zrep = fit_l_polynomial(counts, p, g)
        ok = (zrep.functional_equation_ok and zrep.genus_from_zeta == g
              and zrep.p_rank_from_zeta == g)
        checks.append(CheckResult(
            "zeta-cross-check", "pass" if ok else "fail",
            "counts over the first four extensions fit a degree-8 "
            "functional-equation L-polynomial with mod-p degree 4, an "
            "independent confirmation of genus = p-rank = 4",
            "exhaustive", {"counts": counts,
                           "l_coefficients": [str(v) for v in zrep.l_coefficients]}))
    else:
        checks.append(CheckResult(
            "zeta-cross-check", "skipped",
            "needs counts over fields up to p^(p-1)^2 elements: out of "
            "desk-scale budget; the formula-level checks above stand alone",
            "exhaustive", {}))

    # deduplicate names from the per-a loops for a stable report
    seen: dict[str, int] = {}
    for c in checks:
        n = seen.get(c.name, 0)
        seen[c.name] = n + 1
        if n:
            c.name = f"{c.name}#{n + 1}"

    overall = all(c.status == "pass" for c in checks if c.status != "skipped")
    return TheoremReport(p, HEADER, checks, overall, seed)
