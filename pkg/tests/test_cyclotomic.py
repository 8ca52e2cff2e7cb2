import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from artifact.cyclotomic import (
    RationalPolynomial,
    context_for_polygon,
    cyclotomic_polynomial,
    deserialize,
    embed_numeric,
    euler_phi,
    express_in_generator,
    integrality,
    make_context,
    minimal_polynomial,
    serialize,
    sqrt_exact,
    trig_exact,
    zeta_polynomial_form,
)

CTX = make_context(44)
small = st.integers(-6, 6)
elements = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=CTX.phi, max_size=CTX.phi).map(
    CTX.from_coeffs
)


@pytest.mark.parametrize("m,expected", [(1, (-1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)), (12, (1, 0, -1, 0, 1))])
def test_cyclotomic_polynomials(m, expected):
    assert cyclotomic_polynomial(m) == expected


@pytest.mark.parametrize("m", [5, 12, 28, 44, 105])
def test_phi_matches_degree(m):
    assert euler_phi(m) == len(cyclotomic_polynomial(m)) - 1


@pytest.mark.parametrize("n,M", [(3, 12), (4, 8), (7, 28), (11, 44), (12, 24), (24, 48)])
def test_polygon_context(n, M):
    assert context_for_polygon(n).M == M


@given(elements, elements, elements)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a


@given(elements)
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == CTX.one()


@given(elements)
def test_numeric_embedding_is_a_homomorphism(a):
    b = a * a + a
    assert abs(complex(embed_numeric(b, 30)) - (complex(a) ** 2 + complex(a))) < 1e-9 * (1 + abs(complex(a)) ** 2)


@given(elements)
def test_serialize_round_trip(a):
    assert deserialize(serialize(a)) == a


@pytest.mark.parametrize("kind,f", [("sin", mpmath.sin), ("cos", mpmath.cos), ("tan", mpmath.tan)])
@pytest.mark.parametrize("k,d", [(1, 11), (3, 22), (5, 22), (2, 11)])
def test_trig_values(kind, f, k, d):
    x = trig_exact(kind, k, d, CTX)
    assert x.is_real()
    with mpmath.workdps(50):
        assert abs(embed_numeric(x, 45).real - f(k * mpmath.pi / d)) < mpmath.mpf(10) ** -40


def test_trig_rejects_foreign_denominator():
    with pytest.raises(ValueError):
        trig_exact("tan", 1, 7, CTX)


def test_sqrt3_squares_to_3():
    ctx = context_for_polygon(12)
    r = sqrt_exact(3, ctx)
    assert r * r == ctx.rational(3) and r.sign() > 0


@pytest.mark.parametrize(
    "N,expected",
    [(5, (-1, 4, 1)), (8, (1, -6, 1)), (12, (1, -14, 1))],
)
def test_genscale_minimal_polynomials(N, expected):
    from artifact.geometry import gen_scale

    assert minimal_polynomial(gen_scale(N)).primitive() == expected


def test_integrality_classes():
    from artifact.geometry import gen_scale

    assert integrality(gen_scale(12)) == "unit"
    assert integrality(gen_scale(6)) == "nonintegral"
    ctx = context_for_polygon(4)
    assert integrality(ctx.rational(2)) == "integer_nonunit"


def test_express_in_generator_round_trip():
    from artifact.geometry import gen_scale, scale_of

    g = gen_scale(11)
    for k in range(1, 6):
        s = scale_of(11, k, ctx=g.ctx)
        poly = express_in_generator(s, g)
        assert poly(g) == s
        assert poly.degree <= 4


def test_express_outside_subfield():
    with pytest.raises(ValueError):
        express_in_generator(CTX.i(), trig_exact("cos", 2, 11, CTX))


def test_zeta_polynomial_form_subfield():
    z11 = CTX.zeta(4)
    p = zeta_polynomial_form(z11 * z11 + 3, 11)
    assert p.coeffs == (Fraction(3), Fraction(0), Fraction(1))


@given(st.lists(st.fractions(max_denominator=7), min_size=1, max_size=5))
def test_polynomial_trim_and_eval(cs):
    p = RationalPolynomial(tuple(cs) + (Fraction(0),))
    x = Fraction(3, 2)
    assert p(x) == sum(c * x**i for i, c in enumerate(cs))


def test_ordering_uses_real_embedding():
    a, b = trig_exact("tan", 1, 11, CTX), trig_exact("tan", 2, 11, CTX)
    assert a < b and math.isclose(float(a), math.tan(math.pi / 11))


@pytest.mark.parametrize("digits", [30, 60, 120])
def test_embedding_keeps_exact_reals_real(digits):
    ctx = context_for_polygon(11)
    a = trig_exact("tan", 3, 22, ctx) - trig_exact("cos", 1, 11, ctx)
    assert embed_numeric(a, digits).imag == 0
    assert embed_numeric(a * ctx.i(), digits).real == 0
