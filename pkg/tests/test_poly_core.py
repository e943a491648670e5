"""Kernel tests: the block order, exact arithmetic, JSON round-trips."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from asl_forge import (
    CoefficientField,
    ContextMismatchError,
    FpElement,
    RingContext,
    Variable,
    ZeroPolynomialError,
    build_order,
    polynomial_from_json,
    variable_from_name,
)

CONTEXTS = [RingContext(n) for n in range(1, 5)]


def mono(ctx, positions):
    exps = {}
    for p in positions:
        v = ctx.variables[p % len(ctx.variables)]
        exps[v] = exps.get(v, 0) + 1
    return ctx.monomial(exps)


@st.composite
def ctx_with_monomials(draw, count, max_degree=6):
    ctx = draw(st.sampled_from(CONTEXTS))
    ms = tuple(
        mono(ctx, draw(st.lists(st.integers(0, 40), max_size=max_degree)))
        for _ in range(count))
    return (ctx,) + ms


@st.composite
def ctx_with_polys(draw, count, max_terms=4):
    ctx = draw(st.sampled_from(CONTEXTS))
    polys = []
    for _ in range(count):
        terms = {}
        for _ in range(draw(st.integers(0, max_terms))):
            m = mono(ctx, draw(st.lists(st.integers(0, 40), max_size=4)))
            c = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 9)))
            terms[m] = terms.get(m, 0) + c
        polys.append(ctx.polynomial(terms))
    return (ctx,) + tuple(polys)


class TestOrderConditions:
    def test_diagonal_descending_and_dominant(self):
        # single-variable comparisons pinned for every n up to 8
        for n in range(1, 9):
            ctx = RingContext(n)
            order = build_order(ctx)
            for i in range(1, n):
                a = ctx.monomial({ctx.x(i, i): 1})
                b = ctx.monomial({ctx.x(i + 1, i + 1): 1})
                assert order.compare(a, b) == 1
            xnn = ctx.monomial({ctx.x(n, n): 1})
            for v in ctx.variables:
                if v.is_diagonal:
                    continue
                assert order.compare(ctx.monomial({v: 1}), xnn) == -1

    def test_examples_n2(self):
        ctx = RingContext(2)
        order = ctx.order
        m = ctx.monomial
        assert order.compare(m({ctx.x(1, 1): 1}), m({ctx.x(2, 2): 1})) == 1
        assert order.compare(m({ctx.x(1, 2): 1}), m({ctx.x(2, 2): 1})) == -1
        assert order.compare(m({ctx.y(2): 1}), m({ctx.x(2, 2): 1})) == -1
        assert order.compare(ctx.one, ctx.one) == 0
        # any monomial with a diagonal factor beats any without
        assert order.compare(m({ctx.x(1, 1): 1, ctx.y(1): 1}),
                             m({ctx.x(1, 2): 1, ctx.y(2): 1})) == 1

    def test_tail_tiebreak_is_pinned(self):
        # x_1_2*y_1 < x_1_2*y_2 under the documented tail order
        ctx = RingContext(2)
        a = ctx.monomial({ctx.x(1, 2): 1, ctx.y(1): 1})
        b = ctx.monomial({ctx.x(1, 2): 1, ctx.y(2): 1})
        assert ctx.order.compare(a, b) == -1

    def test_degree2_tail_monomials_totally_ordered(self):
        # brute force: every pair of distinct degree-2 tail monomials
        # compares strictly, and the order is transitive
        ctx = RingContext(2)
        tail = [ctx.x(1, 2), ctx.x(2, 1), ctx.y(1), ctx.y(2)]
        ms = []
        for a in range(4):
            for b in range(a, 4):
                exps = {tail[a]: 1}
                exps[tail[b]] = exps.get(tail[b], 0) + 1
                ms.append(ctx.monomial(exps))
        keys = [ctx.order.sort_key(m) for m in ms]
        assert len(set(keys)) == len(ms)
        ranked = sorted(ms, key=ctx.order.sort_key)
        for i in range(len(ranked)):
            for j in range(i + 1, len(ranked)):
                assert ctx.order.compare(ranked[i], ranked[j]) == -1

    @settings(max_examples=150)
    @given(ctx_with_monomials(2))
    def test_antisymmetry_and_totality(self, data):
        ctx, a, b = data
        c = ctx.order.compare(a, b)
        assert c in (-1, 0, 1)
        assert ctx.order.compare(b, a) == -c
        assert (c == 0) == (a == b)

    @settings(max_examples=150)
    @given(ctx_with_monomials(3))
    def test_transitivity(self, data):
        ctx, a, b, c = data
        ms = sorted([a, b, c], key=ctx.order.sort_key)
        assert ctx.order.compare(ms[0], ms[2]) <= 0
        if ctx.order.compare(ms[0], ms[1]) <= 0 <= ctx.order.compare(ms[2], ms[1]):
            assert ctx.order.compare(ms[0], ms[2]) <= 0

    @settings(max_examples=150)
    @given(ctx_with_monomials(3))
    def test_multiplicativity(self, data):
        ctx, a, b, w = data
        assert ctx.order.compare(a, b) == ctx.order.compare(a.mul(w), b.mul(w))

    @settings(max_examples=150)
    @given(ctx_with_monomials(1))
    def test_one_is_minimum(self, data):
        ctx, m = data
        assert ctx.order.compare(ctx.one, m) <= 0
        grown = m.mul(ctx.monomial({ctx.variables[0]: 1}))
        assert ctx.order.compare(m, grown) == -1

    @settings(max_examples=200)
    @given(ctx_with_monomials(2))
    def test_agrees_with_scan_oracle(self, data):
        ctx, a, b = data
        assert ctx.order.compare(a, b) == oracles.block_compare(ctx, a, b)


class TestMonomialAlgebra:
    def test_div_lcm_coprime(self):
        ctx = RingContext(2)
        a = ctx.monomial({ctx.x(1, 1): 2, ctx.y(1): 1})
        b = ctx.monomial({ctx.x(1, 1): 1, ctx.y(2): 3})
        lcm = a.lcm(b)
        assert a.divides(lcm) and b.divides(lcm)
        assert lcm.div(a).mul(a) == lcm
        assert not a.is_coprime_with(b)
        assert ctx.monomial({ctx.y(1): 1}).is_coprime_with(
            ctx.monomial({ctx.y(2): 1}))
        with pytest.raises(ValueError):
            a.div(b)

    def test_context_mismatch_rejected(self):
        a = RingContext(2).monomial({Variable.x(1, 1): 1})
        b = RingContext(3).monomial({Variable.x(1, 1): 1})
        with pytest.raises(ContextMismatchError):
            a.mul(b)

    @settings(max_examples=100)
    @given(ctx_with_monomials(2))
    def test_exponent_accessors(self, data):
        ctx, a, b = data
        prod = a.mul(b)
        assert prod.total_degree == a.total_degree + b.total_degree
        for v in ctx.variables:
            assert prod.exponent(v) == a.exponent(v) + b.exponent(v)


class TestPolynomialArithmetic:
    @settings(max_examples=100)
    @given(ctx_with_polys(3))
    def test_ring_axioms(self, data):
        ctx, f, g, h = data
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f + ctx.zero == f
        assert not (f - f)

    @settings(max_examples=100)
    @given(ctx_with_polys(1))
    def test_terms_strictly_descending(self, data):
        ctx, f = data
        keys = [ctx.order.sort_key(m) for _, m in f.terms]
        assert keys == sorted(keys, reverse=True)
        assert all(c for c, _ in f.terms)

    @settings(max_examples=100)
    @given(ctx_with_polys(2))
    def test_leading_term_of_product(self, data):
        ctx, f, g = data
        if not f or not g:
            return
        cf, mf = f.leading_term()
        cg, mg = g.leading_term()
        assert (f * g).leading_monomial() == mf.mul(mg)
        assert (f * g).leading_coefficient() == cf * cg

    def test_leading_term_examples(self):
        ctx = RingContext(2)
        g1 = ctx.polynomial({
            ctx.monomial({ctx.x(1, 1): 1, ctx.y(1): 1}): 1,
            ctx.monomial({ctx.x(1, 2): 1, ctx.y(2): 1}): 1,
        })
        c, m = g1.leading_term()
        assert c == 1 and m == ctx.monomial({ctx.x(1, 1): 1, ctx.y(1): 1})
        g2 = ctx.polynomial({
            ctx.monomial({ctx.x(2, 1): 1, ctx.y(1): 1}): 1,
            ctx.monomial({ctx.x(2, 2): 1, ctx.y(2): 1}): 1,
        })
        prod = g1 * g2
        assert prod.leading_monomial() == ctx.monomial(
            {ctx.x(1, 1): 1, ctx.x(2, 2): 1, ctx.y(1): 1, ctx.y(2): 1})

    def test_zero_polynomial_has_no_leading_term(self):
        ctx = RingContext(2)
        with pytest.raises(ZeroPolynomialError):
            ctx.zero.leading_term()
        assert ctx.constant(0) == ctx.zero
        assert str(ctx.zero) == "0"

    def test_scale_and_monic(self):
        ctx = RingContext(2)
        f = ctx.polynomial({ctx.monomial({ctx.x(1, 1): 1}): Fraction(3, 2),
                            ctx.one: -3})
        assert f.scale(Fraction(2, 3)).leading_coefficient() == 1
        assert f.monic().leading_coefficient() == 1
        assert f.scale(0) == ctx.zero

    def test_str_rendering(self):
        ctx = RingContext(2)
        f = ctx.polynomial({
            ctx.monomial({ctx.x(1, 1): 2, ctx.y(1): 1}): Fraction(1, 2),
            ctx.monomial({ctx.y(2): 1}): -1,
        })
        assert str(f) == "1/2*x_1_1^2*y_1 - y_2"


class TestSerialization:
    def test_variable_names(self):
        assert Variable.x(1, 2).name == "x_1_2"
        assert Variable.y(3).name == "y_3"
        assert variable_from_name("x_2_3") == Variable.x(2, 3)
        assert variable_from_name("y_1") == Variable.y(1)
        with pytest.raises(ValueError):
            variable_from_name("z_1")

    def test_generator_shape(self):
        ctx = RingContext(2)
        g1 = ctx.polynomial({
            ctx.monomial({ctx.x(1, 1): 1, ctx.y(1): 1}): 1,
            ctx.monomial({ctx.x(1, 2): 1, ctx.y(2): 1}): 1,
        })
        assert g1.to_json_list() == [
            {"c": "1", "m": {"x_1_1": 1, "y_1": 1}},
            {"c": "1", "m": {"x_1_2": 1, "y_2": 1}},
        ]

    def test_fraction_coefficients_render_num_den(self):
        ctx = RingContext(1)
        f = ctx.polynomial({ctx.monomial({ctx.x(1, 1): 1}): Fraction(-3, 7)})
        assert f.to_json_list() == [{"c": "-3/7", "m": {"x_1_1": 1}}]

    @settings(max_examples=100)
    @given(ctx_with_polys(1))
    def test_json_round_trip(self, data):
        ctx, f = data
        assert polynomial_from_json(ctx, f.to_json_list()) == f


class TestCoefficientFields:
    def test_rationals_coercion(self):
        field = CoefficientField.rationals()
        assert field.name == "QQ"
        assert field.coerce("2/3") == Fraction(2, 3)
        assert field.coerce(5) == Fraction(5)
        with pytest.raises(TypeError):
            field.coerce(1.5)

    def test_prime_field(self):
        field = CoefficientField.prime(7)
        assert field.name == "GF(7)"
        a = field.coerce(10)
        assert a == FpElement(3, 7)
        assert a + field.coerce(4) == field.zero
        assert (a / field.coerce(5)) * field.coerce(5) == a
        assert -field.coerce(1) == field.coerce(6)
        with pytest.raises(ZeroDivisionError):
            a / field.zero

    def test_nonprime_rejected(self):
        for bad in (0, 1, 4, 9, 15):
            with pytest.raises(ValueError):
                CoefficientField.prime(bad)
        # primality by trial division holds up a bit further out
        CoefficientField.prime(97)
        CoefficientField.prime(10007)

    def test_gf_polynomials_normalize(self):
        ctx = RingContext(2, field=CoefficientField.prime(3))
        m = ctx.monomial({ctx.x(1, 1): 1})
        f = ctx.polynomial({m: 2}) + ctx.polynomial({m: 1})
        assert f == ctx.zero

    def test_context_equality_includes_field(self):
        assert RingContext(2) == RingContext(2)
        assert RingContext(2) != RingContext(2, field=CoefficientField.prime(5))
        assert RingContext(2) != RingContext(2, symmetric=True)
        assert RingContext(2) != RingContext(3)


def test_symmetric_context_drops_subdiagonal():
    ctx = RingContext(3, symmetric=True)
    names = [v.name for v in ctx.variables]
    assert "x_2_1" not in names and "x_3_2" not in names
    assert "x_1_2" in names and "x_3_3" in names
    assert len(ctx.variables) == 6 + 3
    with pytest.raises(ValueError):
        ctx.x(2, 1)


def test_variable_validation():
    with pytest.raises(ValueError):
        Variable("z", None, 1)
    with pytest.raises(ValueError):
        Variable.x(0, 1)
    with pytest.raises(ValueError):
        Variable.y(0)
    with pytest.raises(ValueError):
        RingContext(0)
    with pytest.raises(ValueError):
        RingContext(2).monomial({Variable.x(1, 1): -1})
