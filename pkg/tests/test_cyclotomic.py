import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcheck.cyclotomic import CycField, cyclotomic_polynomial
from hopfcheck.errors import FieldOrderMismatch

ORDERS = (1, 2, 3, 4, 6, 8, 12)


def numeric(x):
    return x.embed()


def close(a, b, tol=1e-9):
    return abs(a - b) < tol


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def scalars(n):
    phi = len(cyclotomic_polynomial(n)) - 1
    field = CycField(n)

    def build(coeffs):
        out = field.zero
        for k, c in enumerate(coeffs):
            out = out + field.from_rational(c) * field.zeta(k)
        return out

    return st.lists(rationals, min_size=phi, max_size=phi).map(build)


# --- basic identities ---------------------------------------------------


def test_zeta_is_primitive_root():
    for n in ORDERS:
        field = CycField(n)
        z = field.zeta()
        acc = field.one
        for k in range(1, n):
            acc = acc * z
            assert not acc.is_one()
        assert (acc * z).is_one()


def test_known_powers():
    assert CycField(6).zeta(3) == -CycField(6).one
    assert CycField(4).zeta(2) == -CycField(4).one
    assert CycField(8).zeta(4) == -CycField(8).one
    z3 = CycField(3).zeta()
    assert (z3 * z3 * z3).is_one()


def test_fields_are_cached():
    assert CycField(6) is CycField(6)
    assert CycField(6) is not CycField(12)


def test_embedding_of_zeta_matches_exponential():
    for n in ORDERS:
        z = CycField(n).zeta()
        assert close(numeric(z), cmath.exp(2j * cmath.pi / n))


def test_mixed_order_arithmetic_rejected():
    with pytest.raises(FieldOrderMismatch):
        CycField(3).zeta() + CycField(4).zeta()


# --- field axioms, checked via hypothesis -------------------------------


@settings(max_examples=60, deadline=None)
@given(scalars(12), scalars(12), scalars(12))
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(scalars(8))
def test_additive_and_multiplicative_units(a):
    field = CycField(8)
    assert a + field.zero == a
    assert a * field.one == a
    assert a - a == field.zero


@settings(max_examples=60, deadline=None)
@given(scalars(12))
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert (a * a.inverse()).is_one()


@settings(max_examples=60, deadline=None)
@given(scalars(12), scalars(12))
def test_embedding_is_homomorphism(a, b):
    assert close(numeric(a + b), numeric(a) + numeric(b))
    assert close(numeric(a * b), numeric(a) * numeric(b))


# --- conjugation --------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(scalars(12), scalars(12))
def test_conjugation_involutive_and_multiplicative(a, b):
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@settings(max_examples=60, deadline=None)
@given(scalars(12))
def test_conjugation_matches_complex_conjugate(a):
    assert close(numeric(a.conjugate()), numeric(a).conjugate())


@settings(max_examples=60, deadline=None)
@given(scalars(12))
def test_norm_is_real_nonnegative(a):
    norm = a * a.conjugate()
    assert norm.is_real()
    if a.is_zero():
        assert norm.is_zero()
    else:
        assert norm.sign() == 1


# --- real scalars: sign and ordering ------------------------------------


def test_sign_of_rationals():
    field = CycField(6)
    assert field.from_rational(Fraction(3, 7)).sign() == 1
    assert field.from_rational(Fraction(-2, 5)).sign() == -1
    assert field.zero.sign() == 0


def test_sign_of_irrational_reals():
    # z8 + z8^7 = sqrt(2), z12 + z12^11 = sqrt(3)
    f8 = CycField(8)
    root2 = f8.zeta() + f8.zeta(7)
    assert root2.is_real() and root2.sign() == 1
    assert (-root2).sign() == -1
    f12 = CycField(12)
    root3 = f12.zeta() + f12.zeta(11)
    assert (root3 - f12.one).sign() == 1
    assert (root3 - f12.from_rational(2)).sign() == -1


def test_sign_rejects_non_real():
    with pytest.raises(ValueError):
        CycField(4).zeta().sign()


def test_sign_agrees_with_numeric_oracle():
    rng = random.Random(20260815)
    field = CycField(12)
    for _ in range(50):
        coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)]
        a = field.zero
        for k, c in enumerate(coeffs):
            a = a + field.from_rational(c) * field.zeta(k)
        x = a + a.conjugate()
        assert x.is_real()
        val = numeric(x).real
        if abs(val) > 1e-8:
            assert x.sign() == (1 if val > 0 else -1)


def test_sort_key_total_order():
    field = CycField(6)
    xs = [field.zeta(k) for k in range(6)] + [field.zero, field.one + field.zeta()]
    keys = [x.sort_key() for x in xs]
    assert len(set(keys)) == len(set(repr(x) for x in xs))
    # equal scalars share a key
    assert (field.zeta(3)).sort_key() == (-field.one).sort_key()


# --- rational detection and lifting -------------------------------------


def test_rational_round_trip():
    field = CycField(12)
    for q in (Fraction(0), Fraction(5, 3), Fraction(-7, 2)):
        x = field.from_rational(q)
        assert x.is_rational()
        assert x.as_fraction() == q


def test_hidden_rational_is_detected():
    # z6 + z6^5 = 1 even though both summands are irrational
    field = CycField(6)
    x = field.zeta() + field.zeta(5)
    assert x.is_rational()
    assert x.as_fraction() == 1


def test_as_fraction_rejects_irrational():
    with pytest.raises(ValueError):
        CycField(8).zeta().as_fraction()


def test_lift_preserves_value():
    small = CycField(6)
    big = CycField(12)
    x = small.one + small.zeta() * small.from_rational(Fraction(1, 2))
    y = big.lift(x)
    assert y.field is big
    assert close(numeric(x), numeric(y))
    assert big.lift(small.zeta()) == big.zeta(2)


def test_lift_requires_divisibility():
    with pytest.raises(FieldOrderMismatch):
        CycField(8).lift(CycField(6).zeta())


def test_lift_is_ring_homomorphism():
    small, big = CycField(4), CycField(12)
    a = small.one + small.zeta()
    b = small.zeta() - small.from_rational(3)
    assert big.lift(a * b) == big.lift(a) * big.lift(b)
    assert big.lift(a + b) == big.lift(a) + big.lift(b)


# --- cyclotomic polynomial table ----------------------------------------


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_degree_matches_euler_phi():
    phi = {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 8: 4, 12: 4}
    for n, d in phi.items():
        assert len(cyclotomic_polynomial(n)) == d + 1


def test_repr_round_trip_examples():
    field = CycField(6)
    half = field.from_rational(Fraction(1, 2))
    assert repr(field.one + field.zeta()) == "1 + z6"
    assert repr(-half + half * field.zeta()) == "-1/2 + 1/2*z6"
