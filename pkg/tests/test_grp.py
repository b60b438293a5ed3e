import random

import pytest

from amlab.gf import make_field, primitive_element
from amlab.grp import (GroupElement, GroupError, Mat2, Subgroup,
                       canonical_lambda, canonical_pair, dihedral_normal_form,
                       full_group, generators, mulclose, verify_presentation)


def gl2_elements(p):
    return [Mat2(p, a, b, c, d)
            for a in range(p) for b in range(p)
            for c in range(p) for d in range(p)
            if (a * d - b * c) % p != 0]


# --- composition -----------------------------------------------------------

def test_translation_addition():
    p = 5
    t10 = GroupElement.translation(p, 1, 0)
    t01 = GroupElement.translation(p, 0, 1)
    assert t10 * t01 == GroupElement.translation(p, 1, 1)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_swap_conjugation_matches_matrix_oracle(p):
    # oracle: conjugating a translation applies the swap matrix to (a, b)
    v = GroupElement.swap(p)
    swap_m = Mat2.antidiag(p, 1, 1)
    for a in range(p):
        for b in range(p):
            t = GroupElement.translation(p, a, b)
            na, nb = swap_m.apply((a, b))
            assert v * t * v == GroupElement.translation(p, na, nb)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_w_conjugation_negates_translations(p):
    w = GroupElement.central_w(p)
    for a in range(p):
        for b in range(p):
            t = GroupElement.translation(p, a, b)
            assert w * t * w == GroupElement.translation(p, -a, -b)


def test_u_conjugation_matches_diagonal_matrix_oracle():
    p = 7
    lam = canonical_lambda(p)
    u = GroupElement.u_power(p, 1)
    m = Mat2.diag(p, lam, pow(lam, p - 2, p))
    for a in range(p):
        for b in range(p):
            t = GroupElement.translation(p, a, b)
            na, nb = m.apply((a, b))
            assert u * t * u.inverse() == GroupElement.translation(p, na, nb)


def test_associativity_exhaustive_p3():
    els = full_group(3)
    assert len(els) == 36
    for g in els:
        for h in els:
            gh = g * h
            for k in els:
                assert gh * k == g * (h * k)


@pytest.mark.parametrize("p", [5, 7])
def test_associativity_randomized(p):
    els = full_group(p)
    rng = random.Random(p)
    for _ in range(500):
        g, h, k = (rng.choice(els) for _ in range(3))
        assert (g * h) * k == g * (h * k)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_every_element_has_inverse(p):
    e = GroupElement.identity(p)
    for g in full_group(p):
        assert g * g.inverse() == e
        assert g.inverse() * g == e


def test_p_mismatch_rejected():
    with pytest.raises(GroupError):
        GroupElement.identity(3) * GroupElement.identity(5)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_action_on_plane_is_faithful_homomorphism(p):
    pts = [(x, y) for x in range(p) for y in range(p)]

    def perm(g):
        return tuple((a % p, b % p) for a, b in (g.apply_xy(x, y) for x, y in pts))

    els = full_group(p)
    images = {g: perm(g) for g in els}
    assert len(set(images.values())) == len(els)  # faithful
    gens = generators(p)
    rng = random.Random(p * 3)
    pairs = [(g, h) for g in gens for h in gens]
    pairs += [(rng.choice(els), rng.choice(els)) for _ in range(200)]
    for g, h in pairs:
        composed = tuple((a % p, b % p)
                         for a, b in (g.apply_xy(*h.apply_xy(x, y)) for x, y in pts))
        assert composed == images[g * h]


# --- presentation ----------------------------------------------------------

@pytest.mark.parametrize("p,order", [(3, 36), (5, 200), (7, 588),
                                     (11, 2420), (13, 4056)])
def test_verify_presentation_passes(p, order):
    assert order == 2 * p * p * (p - 1)
    report = verify_presentation(p)
    assert all(r["status"] == "pass" for r in report), report
    assert any(str(order) in r["identity"] for r in report)


def test_subgroup_tau11_v_w_has_order_4p():
    for p in (3, 5, 7):
        sub = mulclose([GroupElement.translation(p, 1, 1),
                        GroupElement.swap(p),
                        GroupElement.central_w(p)])
        assert len(sub) == 4 * p


def test_closure_equals_canonical_parameter_space():
    for p in (3, 5):
        assert mulclose(generators(p)) == frozenset(full_group(p))


def test_subgroup_helper():
    s = Subgroup.translations(5)
    assert len(s) == 25
    assert GroupElement.translation(5, 3, 4) in s
    assert GroupElement.swap(5) not in s


# --- matrices and the normal form ------------------------------------------

def test_mat2_inverse_and_pow():
    m = Mat2(7, 1, 2, 3, 4)
    assert m * m.inverse() == Mat2.identity(7)
    assert m ** 3 == m * m * m


def test_dihedral_normal_form_trivial():
    for p in (3, 5, 7, 11, 13):
        u0, v0 = canonical_pair(p)
        c, nu, nv, replaced = dihedral_normal_form(u0, v0)
        assert nu == u0 and nv == v0
        assert c * u0 * c.inverse() == u0
        assert not replaced


@pytest.mark.parametrize("p", [5, 7, 11])
def test_dihedral_normal_form_random_conjugates(p):
    u0, v0 = canonical_pair(p)
    rng = random.Random(p)
    for _ in range(200):
        while True:
            m = Mat2(p, rng.randrange(p), rng.randrange(p),
                     rng.randrange(p), rng.randrange(p))
            if m.det() != 0:
                break
        u = m * u0 * m.inverse()
        v = m * v0 * m.inverse()
        c, nu, nv, replaced = dihedral_normal_form(u, v)
        assert c * u * c.inverse() == nu == u0
        v_star = (u ** ((p - 1) // 2)) * v if replaced else v
        assert c * v_star * c.inverse() == nv == v0


def test_dihedral_normal_form_replacement_branch_occurs():
    # the sign normalization genuinely takes both branches over a sample
    p = 7
    u0, v0 = canonical_pair(p)
    rng = random.Random(99)
    seen = set()
    for _ in range(100):
        while True:
            m = Mat2(p, rng.randrange(p), rng.randrange(p),
                     rng.randrange(p), rng.randrange(p))
            if m.det() != 0:
                break
        _, _, _, replaced = dihedral_normal_form(m * u0 * m.inverse(),
                                                 m * v0 * m.inverse())
        seen.add(replaced)
    assert seen == {True, False}


def qualifies(u, v, p):
    ident = Mat2.identity(p)
    lam = canonical_lambda(p)
    lami = pow(lam, p - 2, p)
    if u ** (p - 1) != ident or u.order() != p - 1:
        return False
    if v * v != ident or v == ident:
        return False
    if v * u * v != u.inverse():
        return False
    if v in {u ** n for n in range(p - 1)}:
        return False
    return u.det() == 1 and u.trace() == (lam + lami) % p


def test_dihedral_normal_form_exhaustive_gl2_3():
    # independent qualification filter, then every qualifying pair normalizes
    p = 3
    gl = gl2_elements(p)
    assert len(gl) == 48
    qualifying = 0
    for u in gl:
        for v in gl:
            if not qualifies(u, v, p):
                with pytest.raises(GroupError):
                    dihedral_normal_form(u, v)
                continue
            qualifying += 1
            c, nu, nv, replaced = dihedral_normal_form(u, v)
            u0, v0 = canonical_pair(p)
            assert c * u * c.inverse() == nu == u0
            v_star = (u ** 1) * v if replaced else v
            assert c * v_star * c.inverse() == nv == v0
    # U must be the central involution -I and V any of the 12 det=-1
    # involutions, so exactly 12 pairs qualify
    assert qualifying == 12


def test_dihedral_normal_form_rejects_wrong_eigenvalues():
    # diag(1,-1) with diag(-1,1) satisfies the naive relations but is not
    # conjugate to the canonical pair; it must be rejected, not mangled
    p = 3
    u = Mat2.diag(p, 1, p - 1)
    v = Mat2.diag(p, p - 1, 1)
    with pytest.raises(GroupError):
        dihedral_normal_form(u, v)


def test_canonical_lambda_matches_primitive_element():
    for p in (3, 5, 7, 11, 13):
        assert canonical_lambda(p) == primitive_element(make_field(p, 1)).as_int()
