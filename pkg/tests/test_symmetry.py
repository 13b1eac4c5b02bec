from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from booldeg.boolfn import BooleanFunction, family, negate
from booldeg.degrees import deg, ndeg, partial_interpolant
from booldeg.polynomials import MultilinearPoly, UnivariatePoly, parse_poly
from booldeg.symmetry import (
    CheckVerdict,
    SymmetrizedPoly,
    bernoulli_expectation,
    bernoulli_symmetrize,
    corollary_approx_check,
    format_symmetrized,
    level_average,
    markov_grid_check,
    minsky_papert_symmetrize,
    nonzero_probability,
)

EXPECTATION_POINTS = (0, Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), 1)


def test_bernoulli_examples():
    assert bernoulli_symmetrize(parse_poly("x1 x2")) == UnivariatePoly.make([0, 0, 1])
    assert bernoulli_symmetrize(parse_poly("x1 + x2")) == UnivariatePoly.make([0, 2])
    par2 = parse_poly("x1 + x2 - 2 x1 x2")
    sym = bernoulli_symmetrize(par2)
    assert sym == UnivariatePoly.make([0, 2, -2])
    assert sym.evaluate(Fraction(1, 2)) == Fraction(1, 2)
    assert bernoulli_expectation(par2, Fraction(1, 2)) == Fraction(1, 2)


def test_minsky_papert_linear():
    p = MultilinearPoly.variable(3, 1)
    sp = minsky_papert_symmetrize(p, [1, 2, 3])
    assert sp.to_univariate() == UnivariatePoly.make([0, Fraction(1, 3)])


def test_minsky_papert_quadratic():
    p = parse_poly("x1 x2")
    sp = minsky_papert_symmetrize(p, [1, 2])
    # i(i-1)/2 has coefficients [0, -1/2, 1/2]
    assert sp.to_univariate() == UnivariatePoly.make(
        [0, Fraction(-1, 2), Fraction(1, 2)]
    )


def test_minsky_papert_partial_block():
    p = parse_poly("x1 x2 + x3")
    sp = minsky_papert_symmetrize(p, [1, 2])
    assert sp.remaining == (3,)
    # exhaustive averaging over the block assignments at each level i
    for i in range(3):
        for x3 in (0, 1):
            pts = [
                (b1, b2)
                for b1 in (0, 1)
                for b2 in (0, 1)
                if b1 + b2 == i
            ]
            if not pts:
                continue
            avg = Fraction(
                sum(
                    p.evaluate(b1 | (b2 << 1) | (x3 << 2)) for b1, b2 in pts
                ),
                len(pts),
            )
            assert sp.evaluate({3: x3}, [i]) == avg


def test_minsky_papert_errors():
    p = parse_poly("x1 x2")
    with pytest.raises(ValueError):
        minsky_papert_symmetrize(p, [])
    with pytest.raises(ValueError):
        minsky_papert_symmetrize(p, [3])
    sp = minsky_papert_symmetrize(p, [1], fresh="s")
    with pytest.raises(ValueError):
        minsky_papert_symmetrize(sp, [2], fresh="s")


def test_minsky_papert_full_block_averaging_identity():
    for text in ("x1 x2 + x2 x3 - x1", "1/2 - x1 x2 x3", "x1 + x2 + x3"):
        p = parse_poly(text, arity=3)
        sp = minsky_papert_symmetrize(p, [1, 2, 3])
        uni = sp.to_univariate()
        for i in range(4):
            assert uni.evaluate(i) == level_average(p, i)


def test_nonzero_probability_examples():
    assert nonzero_probability(parse_poly("x1 x2")) == Fraction(1, 4)
    assert nonzero_probability(MultilinearPoly.constant(3, 5)) == 1
    assert nonzero_probability(parse_poly("2 - x1 - x2")) == Fraction(3, 4)


def test_markov_examples():
    linear = UnivariatePoly.make([0, 1])
    assert markov_grid_check(linear, (0, 1), (0, 1), 11).passed
    cheb = UnivariatePoly.make([-1, 0, 2])
    verdict = markov_grid_check(cheb, (-1, 1), (-1, 1), 21)
    assert verdict.passed
    # the bound 4 is attained at the endpoints: |P'(±1)| = 4 = deg² (b2-b1)/(a2-a1)
    assert abs(cheb.derivative().evaluate(1)) == 4
    bad = markov_grid_check(UnivariatePoly.make([0, 10]), (0, 1), (0, 1), 5)
    assert not bad.passed and not bad.hypotheses_ok


def test_markov_malformed_interval():
    p = UnivariatePoly.make([0, 1])
    with pytest.raises(ValueError):
        markov_grid_check(p, (1, 0), (0, 1), 5)
    with pytest.raises(ValueError):
        markov_grid_check(p, (0, 1), (0, 1), 1)


def test_corollary_approx_examples():
    assert corollary_approx_check(parse_poly("1 - 2 x1"), 1).passed
    or4 = family("OR", 4)
    p = MultilinearPoly.constant(4, 1) - deg(or4)[1].scale(2)
    verdict = corollary_approx_check(p, 1)
    assert verdict.passed and p.degree() >= 2
    # violating (iii): same sign at a weight-1 point
    bad = corollary_approx_check(parse_poly("1 - x1 x2"), 1)
    assert not bad.passed and not bad.hypotheses_ok
    with pytest.raises(ValueError):
        corollary_approx_check(parse_poly("x1"), 0)


def test_double_symmetrization_counterexample():
    for n in (2, 3):
        pf = family("COUNTEREXAMPLE", n)
        p = partial_interpolant(pf)
        sp = minsky_papert_symmetrize(p, list(range(1, n + 1)), fresh="s")
        sp = minsky_papert_symmetrize(sp, list(range(n + 1, 2 * n + 1)), fresh="t")
        assert sp.remaining == () and sp.fresh == ("s", "t")
        for t in range(n + 1):
            assert sp.evaluate({}, [0, t]) == 0
        for s in range(1, n + 1):
            assert sp.evaluate({}, [s, n + 1 - s]) == 1


def test_format_symmetrized():
    sp = minsky_papert_symmetrize(parse_poly("x1 x2"), [1, 2], fresh="s")
    text = format_symmetrized(sp)
    assert "s" in text and "s^2" in text
    empty = SymmetrizedPoly((), (), {})
    assert format_symmetrized(empty) == "0"


# --- properties -------------------------------------------------------------

@st.composite
def multilinear_polys(draw, max_arity=5):
    n = draw(st.integers(1, max_arity))
    nterms = draw(st.integers(0, 6))
    coeffs = {}
    for _ in range(nterms):
        mask = draw(st.integers(0, (1 << n) - 1))
        num = draw(st.integers(-9, 9))
        den = draw(st.integers(1, 4))
        coeffs[mask] = coeffs.get(mask, Fraction(0)) + Fraction(num, den)
    return MultilinearPoly.make(n, coeffs)


@given(multilinear_polys())
@settings(max_examples=200, deadline=None)
def test_bernoulli_expectation_identity(p):
    sym = bernoulli_symmetrize(p)
    for y in EXPECTATION_POINTS:
        assert sym.evaluate(y) == bernoulli_expectation(p, y)


@given(multilinear_polys())
@settings(max_examples=100, deadline=None)
def test_symmetrization_never_raises_degree(p):
    assert bernoulli_symmetrize(p).degree() <= p.degree()
    sp = minsky_papert_symmetrize(p, range(1, p.arity + 1))
    assert sp.degree() <= p.degree()


@given(multilinear_polys(max_arity=4))
@settings(max_examples=100, deadline=None)
def test_full_block_averaging_identity_random(p):
    uni = minsky_papert_symmetrize(p, range(1, p.arity + 1)).to_univariate()
    for i in range(p.arity + 1):
        assert uni.evaluate(i) == level_average(p, i)


@given(multilinear_polys())
@settings(max_examples=100, deadline=None)
def test_ns94_bound_random(p):
    if p.is_zero():
        return
    assert nonzero_probability(p) >= Fraction(1, 2 ** p.degree())


def test_ns94_bound_on_ndeg_witnesses():
    for k in range(1, 1 << 8):
        f = BooleanFunction.from_int(3, k)
        w = ndeg(f)
        assert nonzero_probability(w.polynomial) >= Fraction(1, 2**w.degree)
