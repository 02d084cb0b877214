import random
from fractions import Fraction

import pytest

from hopfcheck.catalog import build_algebra
from hopfcheck.cyclotomic import CycField
from hopfcheck.errors import NotCosemisimple
from hopfcheck.hopf import (
    HopfStarAlgebra,
    LinearEndo,
    check_axioms,
    compute_haar,
    convolve,
    dual,
    linear_quotient,
    sub_hopf_algebra,
)
from hopfcheck.linalg import Subspace, basis_vec, zero_vec

AXIOM_NAMES = {
    "antipode_involutive",
    "antipode_left",
    "antipode_right",
    "antipode_star_involution",
    "associativity",
    "coassociativity",
    "comult_multiplicative",
    "comult_unital",
    "counit",
    "counit_multiplicative",
    "counit_unital",
    "haar_exists",
    "haar_positive",
    "haar_star",
    "haar_tracial",
    "star_antimultiplicative",
    "star_comultiplicative",
    "star_counit",
    "star_involution",
    "unit",
}


def sweedler_four_dim():
    """The smallest Hopf algebra that is neither commutative nor cocommutative.

    Basis (1, g, x, gx) with g*g = 1, x*x = 0, x g = -g x; the star slot is
    filled with the identity map, which is not a valid involution here.
    """
    field = CycField(1)
    one, zero = field.one, field.zero
    d = 4
    mult = [[[zero] * d for _ in range(d)] for _ in range(d)]

    def setm(i, j, k, v):
        mult[i][j][k] = field.from_rational(Fraction(v))

    for j in range(d):
        setm(0, j, j, 1)
        setm(j, 0, j, 1)
    setm(1, 1, 0, 1)
    setm(1, 2, 3, 1)
    setm(1, 3, 2, 1)
    setm(2, 1, 3, -1)
    setm(3, 1, 2, -1)

    comult = [[[zero] * d for _ in range(d)] for _ in range(d)]
    comult[0][0][0] = one
    comult[1][1][1] = one
    comult[2][2][0] = one
    comult[2][1][2] = one
    comult[3][3][1] = one
    comult[3][0][3] = one

    unit = [one, zero, zero, zero]
    counit = [one, one, zero, zero]
    anti = [[zero] * d for _ in range(d)]
    anti[0][0] = one
    anti[1][1] = one
    anti[3][2] = -one
    anti[2][3] = one
    star = [[one if i == j else zero for i in range(d)] for j in range(d)]
    return HopfStarAlgebra(
        field, mult, unit, comult, counit, anti, star, labels=["1", "g", "x", "gx"]
    )


# --- axiom report ---------------------------------------------------------


def test_axiom_report_names_and_pass(algebras):
    rep = check_axioms(algebras["f_s3"])
    assert rep.ok
    assert set(c.name for c in rep.checks) == AXIOM_NAMES
    rep2 = check_axioms(algebras["c_s3"])
    assert rep2.ok and len(rep2.checks) == 20


def test_broken_antipode_is_named():
    F = build_algebra("f_z3")
    ident = [
        [F.field.one if i == j else F.field.zero for i in range(3)] for j in range(3)
    ]
    broken = HopfStarAlgebra(
        F.field, F.mult, F.unit, F.comult, F.counit, ident, F.star.rows, labels=F.labels
    )
    rep = check_axioms(broken)
    assert not rep.ok
    assert sorted(c.name for c in rep.checks if not c.ok) == [
        "antipode_left",
        "antipode_right",
    ]


def test_broken_multiplication_is_named(algebras):
    F = algebras["f_z2"]
    mult = [[list(row) for row in plane] for plane in F.mult]
    mult[1][1][1] = F.field.zero  # second indicator no longer idempotent
    broken = HopfStarAlgebra(
        F.field,
        mult,
        F.unit,
        F.comult,
        F.counit,
        F.antipode.rows,
        F.star.rows,
        labels=F.labels,
    )
    rep = check_axioms(broken)
    failed = set(c.name for c in rep.checks if not c.ok)
    assert "unit" in failed and "comult_multiplicative" in failed
    assert "associativity" not in failed  # zero products stay associative


# --- Haar functional ------------------------------------------------------


def test_haar_uniform_on_function_algebra(algebras):
    h = compute_haar(algebras["f_s3"])
    sixth = algebras["f_s3"].field.from_rational(Fraction(1, 6))
    assert h == [sixth] * 6


def test_haar_point_mass_on_group_algebra(algebras):
    H = algebras["c_s3"]
    h = compute_haar(H)
    assert h[0].is_one()
    assert all(c.is_zero() for c in h[1:])


def test_haar_invariance_directly(algebras):
    # (id (x) h) Delta(a) = h(a) 1 and symmetrically, checked from raw tensors
    for name in ("f_s3", "c_s3", "f_d4"):
        H = algebras[name]
        h = H.haar
        for i in range(H.dim):
            left = zero_vec(H.field, H.dim)
            right = zero_vec(H.field, H.dim)
            for j in range(H.dim):
                for k in range(H.dim):
                    c = H.comult[i][j][k]
                    if c.is_zero():
                        continue
                    left[j] = left[j] + c * h[k]
                    right[k] = right[k] + c * h[j]
            expect = [h[i] * u for u in H.unit_vec()]
            assert left == expect and right == expect


def test_haar_normalized_and_star_invariant(algebras):
    for H in algebras.values():
        h = H.haar
        assert H.counit_of(H.unit_vec()).is_one()
        one_val = sum(
            (h[i] * c for i, c in enumerate(H.unit_vec())), H.field.zero
        )
        assert one_val.is_one()
        # h(S(x)) = h(x) on basis vectors
        for i in range(H.dim):
            sx = H.antipode_vec(basis_vec(H.field, H.dim, i))
            assert H.haar_of(sx) == h[i]


def test_haar_positive_on_random_elements(algebras):
    rng = random.Random(20260815)
    for name in ("f_s3", "c_s3", "f_d4", "f_z3_rtimes_z2"):
        H = algebras[name]
        for _ in range(10):
            x = [
                H.field.from_rational(Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
                for _ in range(H.dim)
            ]
            if all(c.is_zero() for c in x):
                continue
            val = H.haar_of(H.product(H.star_vec(x), x))
            assert val.is_real() and val.sign() == 1


def test_haar_of_trivial_algebra():
    from hopfcheck.constructions import FiniteGroup, function_algebra

    H = function_algebra(FiniteGroup.cyclic(1))
    assert H.dim == 1
    assert compute_haar(H) == [H.field.one]


def test_sweedler_has_no_haar():
    H4 = sweedler_four_dim()
    rep = check_axioms(H4)
    failed = set(c.name for c in rep.checks if not c.ok)
    assert "haar_exists" in failed
    assert "antipode_involutive" in failed
    with pytest.raises(NotCosemisimple):
        compute_haar(H4)


# --- convolution algebra of endomorphisms ---------------------------------


def test_convolution_unit_and_antipode_inverse(algebras):
    for name in ("f_z6", "f_s3", "c_s3"):
        H = algebras[name]
        ident = LinearEndo.identity(H)
        S = LinearEndo.antipode(H)
        cu = LinearEndo.counit_unit(H)
        assert convolve(H, S, ident).matrix == cu.matrix
        assert convolve(H, ident, S).matrix == cu.matrix
        assert convolve(H, cu, ident).matrix == ident.matrix
        assert convolve(H, ident, cu).matrix == ident.matrix


def test_convolution_associative_on_random_endos(algebras):
    rng = random.Random(7)
    H = algebras["f_s3"]
    from hopfcheck.linalg import Matrix

    def rand_endo():
        rows = [
            [H.field.from_rational(Fraction(rng.randint(-2, 2))) for _ in range(H.dim)]
            for _ in range(H.dim)
        ]
        return LinearEndo(H, Matrix.from_rows(H.field, rows))

    for _ in range(5):
        f, g, k = rand_endo(), rand_endo(), rand_endo()
        assert (f.convolve(g)).convolve(k).matrix == f.convolve(g.convolve(k)).matrix


def test_identity_convolved_with_itself():
    H = build_algebra("f_z2")
    sq = LinearEndo.identity(H).convolve(LinearEndo.identity(H))
    assert sq.matrix.column(0) == H.unit_vec()
    assert sq.matrix.column(1) == zero_vec(H.field, 2)


# --- duality ---------------------------------------------------------------


def test_dual_of_group_algebra_is_function_algebra(algebras):
    D = dual(algebras["c_z3"])
    F = algebras["f_z3"]
    assert D.mult == F.mult
    assert D.comult == F.comult
    assert D.unit == F.unit
    assert D.counit == F.counit
    assert D.antipode == F.antipode
    assert D.star == F.star


def test_dual_swaps_commutativity(algebras):
    F = algebras["f_s3"]
    assert F.is_commutative() and not F.is_cocommutative()
    D = dual(F)
    assert not D.is_commutative() and D.is_cocommutative()
    assert check_axioms(D).ok


def test_double_dual_is_identity(algebras):
    for name in ("f_s3", "c_s3", "f_d4"):
        H = algebras[name]
        DD = dual(dual(H))
        assert DD.mult == H.mult and DD.comult == H.comult
        assert DD.antipode == H.antipode and DD.star == H.star


# --- sub-objects and linear quotients --------------------------------------


def test_sub_hopf_algebra_of_group_algebra(algebras):
    H = algebras["c_s3"]
    # span{e, (123), (132)} is the group algebra of the rotation subgroup
    idx = [H.labels.index(l) for l in ("e", "(123)", "(132)")]
    B = Subspace.from_vectors(
        H.field, H.dim, [basis_vec(H.field, H.dim, i) for i in idx]
    )
    sub, incl = sub_hopf_algebra(H, B)
    assert sub.dim == 3
    assert check_axioms(sub).ok
    assert sub.is_commutative()
    # inclusion intertwines products
    for a in range(3):
        for b in range(3):
            xa = basis_vec(sub.field, 3, a)
            xb = basis_vec(sub.field, 3, b)
            assert incl.apply(sub.product(xa, xb)) == H.product(
                incl.apply(xa), incl.apply(xb)
            )


def test_trivial_sub_hopf_algebra(algebras):
    H = algebras["f_s3"]
    B = Subspace.from_vectors(H.field, H.dim, [H.unit_vec()])
    sub, incl = sub_hopf_algebra(H, B)
    assert sub.dim == 1
    assert check_axioms(sub).ok
    assert incl.apply([sub.field.one]) == H.unit_vec()


def test_linear_quotient_identities():
    field = CycField(1)
    B = Subspace.from_vectors(
        field,
        4,
        [
            [field.one, field.one, field.zero, field.zero],
            [field.zero, field.zero, field.one, -field.one],
        ],
    )
    proj, reps = linear_quotient(B)
    assert proj.nrows == 2 and proj.ncols == 4
    for v in B.basis():
        assert proj.apply(v) == zero_vec(field, 2)
    for out, amb in enumerate(reps):
        assert proj.apply(basis_vec(field, 4, amb)) == basis_vec(field, 2, out)
    assert proj.rank() == 2
