#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <superchain/basis.hpp>
#include <superchain/text.hpp>

using namespace superchain;

namespace {

Element el(const std::string& text, int n = 1) { return parse_element(text, n); }

/// Value of x^P at a rational sample point.
Rational eval_monomial(const Monomial& m, const std::vector<Rational>& at) {
    Rational v(1);
    for (int k = 1; k <= m.dimension(); ++k)
        for (int e = 0; e < m.exponent(k); ++e) v *= at[static_cast<size_t>(k - 1)];
    return v;
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
    const Rational half(BigInt(2), BigInt(4));
    CHECK(half.str() == "1/2");
    CHECK((half + half).str() == "1");
    CHECK((Rational(3) / Rational(-6)).str() == "-1/2");
    CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("exterior derivative on one variable") {
    CHECK(exterior_derivative(el("x^2")) == el("2 x dx"));
    CHECK(exterior_derivative(el("x dx")).is_zero());
    CHECK_THROWS_AS(exterior_derivative(el("d/dx")), std::invalid_argument);
}

TEST_CASE("exterior derivative product rule at n=2, finite-difference oracle") {
    const Element d = exterior_derivative(el("x1 x2", 2));
    CHECK(d == el("x2 dx1 + x1 dx2", 2));

    // symmetric difference is exact on quadratics: coefficient of dx_k in
    // d(x1 x2) at a sample point p must equal (f(p + h e_k) - f(p - h e_k)) / 2h
    const Monomial f({1, 1});
    const std::vector<std::vector<Rational>> samples = {
        {Rational(2), Rational(3)}, {Rational(-1), Rational(5)},
        {Rational(BigInt(1), BigInt(2)), Rational(7)}};
    const Rational h(BigInt(1), BigInt(3));
    for (const auto& p : samples) {
        for (int k = 1; k <= 2; ++k) {
            auto hi = p, lo = p;
            hi[static_cast<size_t>(k - 1)] += h;
            lo[static_cast<size_t>(k - 1)] -= h;
            const Rational diff =
                (eval_monomial(f, hi) - eval_monomial(f, lo)) / (h * Rational(2));
            Rational coeff;
            for (const auto& [g, c] : d.terms)
                if (g.form_indices == IntSeq{k}) coeff = c * eval_monomial(g.mono, p);
            CHECK(coeff == diff);
        }
    }
}

TEST_CASE("interior product") {
    CHECK(interior_product(el("d/dx"), el("x^2 dx")) == el("x^2"));
    CHECK(interior_product(el("d/dx"), el("x^3")).is_zero());
    CHECK_THROWS_AS(interior_product(el("x"), el("dx")), std::invalid_argument);
    CHECK_THROWS_AS(interior_product(el("d/dx"), el("d/dx")), std::invalid_argument);
}

TEST_CASE("interior product sign at n=2, bilinear-form oracle") {
    const Element got = interior_product(el("d/dx2", 2), el("dx1*dx2", 2));
    CHECK(got == -el("dx1", 2));

    // the 2-form as a bilinear form: (dx1^dx2)(u, v) = u1 v2 - u2 v1;
    // contracting with e2 must reproduce its value on (e2, e_v)
    auto dx1dx2 = [](int u, int v) { return (u == 1 ? 1 : 0) * (v == 2 ? 1 : 0) -
                                            (u == 2 ? 1 : 0) * (v == 1 ? 1 : 0); };
    for (int v = 1; v <= 2; ++v) {
        Rational got_at_v;
        for (const auto& [g, c] : got.terms)
            if (g.form_indices == IntSeq{v}) got_at_v = c;
        CHECK(got_at_v == Rational(dx1dx2(2, v)));
    }
}

TEST_CASE("lie derivative via Cartan's formula") {
    CHECK(lie_derivative(el("x d/dx"), el("dx")) == el("dx"));
    CHECK(lie_derivative(el("d/dx"), el("x")) == el("1"));
    CHECK(lie_derivative(el("d/dx"), el("dx")).is_zero());
}

TEST_CASE("super bracket, all four kind cases") {
    CHECK(bracket(el("d/dx"), el("x^2 d/dx")) == el("2 x d/dx"));
    CHECK(bracket(el("x d/dx"), el("1")).is_zero());
    for (int j = 1; j <= 5; ++j) {
        const std::string xj = "x^" + std::to_string(j);
        CHECK(bracket(el("1"), el(xj)) ==
              el(std::to_string(j) + " x^" + std::to_string(j - 1) + " dx"));
    }
    // form-form case against the exterior-derivative oracle
    for (int p = 0; p <= 4; ++p) {
        for (int q = 0; q <= 4; ++q) {
            const Element a(fn1(p)), b(fn1(q));
            CHECK(bracket(a, b) == exterior_derivative(Element(fn1(p + q))));
            if (p + q > 0)
                CHECK(bracket(a, b) == Element(fm1(p + q - 1), Rational(p + q)));
        }
    }
}

TEST_CASE("euler field eigenvalues") {
    const Element e = euler_field(1);
    CHECK(e == el("x d/dx"));
    CHECK(bracket(e, el("x^2 dx")) == el("3 x^2 dx"));
    CHECK(bracket(e, el("x d/dx")).is_zero());
    CHECK(bracket(e, el("x^3 d/dx")) == el("2 x^3 d/dx"));
    CHECK(euler_field(2) == el("x1 d/dx1 + x2 d/dx2", 2));
}

TEST_CASE("double weight") {
    auto check = [](const std::string& text, int w, int h, int parity) {
        const Generator g = el(text).terms.begin()->first;
        const DoubleWeight dw = double_weight(g);
        CHECK(dw.w == w);
        CHECK(dw.h == h);
        CHECK(dw.parity == parity);
        CHECK(g.original_primary_weight() == -w);
    };
    check("x^2 d/dx", 0, 1, 0);
    check("1", 1, -1, 1);
    check("x dx", 2, 0, 0);
}

TEST_CASE("parser maps the golden notations") {
    CHECK(el("x^2 d/dx") == Element(vf1(2)));
    CHECK(el("3/2 x dx") == Element(fm1(1), Rational(BigInt(3), BigInt(2))));
    CHECK(el("1") == Element(fn1(0)));
    CHECK(el("d/dx2", 2) == Element(make_vector_field(2, Monomial(2))));
    CHECK(el("x1^2 x3 dx1*dx3", 3) ==
          Element(make_form({1, 3}, Monomial({2, 0, 1}))));
    CHECK_THROWS_AS(el("dx2*dx1", 2), parse_error);
    CHECK_THROWS_AS(el("x5", 2), parse_error);
    CHECK_THROWS_AS(el("3 +"), parse_error);
    CHECK_THROWS_AS(el("x^9999999"), parse_error);
}

TEST_CASE("formatter is canonical and parse is its inverse") {
    CHECK(format_element(el("x dx + d/dx")) == "d/dx + x dx");
    CHECK(format_element(Element()) == "0");
    CHECK(format_element(el("1/2 x - x")) == "-1/2 x");

    std::mt19937 rng(991);
    std::uniform_int_distribution<int> deg(0, 5), kind(0, 2), nterms(1, 6),
        num(-9, 9), den(1, 9);
    for (int iter = 0; iter < 300; ++iter) {
        Element e;
        const int t = nterms(rng);
        for (int i = 0; i < t; ++i) {
            const int d = deg(rng);
            const Generator g = kind(rng) == 0 ? vf1(d) : kind(rng) == 1 ? fn1(d) : fm1(d);
            e.add(g, Rational(BigInt(num(rng)), BigInt(den(rng))));
        }
        CHECK(parse_element(format_element(e)) == e);
    }
}

TEST_CASE("bracket weight invariance, n in {1,2}, degree <= 4") {
    for (int n = 1; n <= 2; ++n) {
        const auto pool = detail::generator_pool(n, 4);
        for (const auto& a : pool) {
            for (const auto& b : pool) {
                for (const auto& [g, c] : bracket(Element(a), Element(b)).terms) {
                    (void)c;
                    REQUIRE(g.kind() == a.kind() + b.kind());
                    REQUIRE(g.degree() == a.degree() + b.degree() - 1);
                }
            }
        }
    }
}

TEST_CASE("super antisymmetry and super Jacobi on sampled triples") {
    std::mt19937 rng(4721);
    for (int n = 1; n <= 2; ++n) {
        const auto pool = detail::generator_pool(n, 3);
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (int iter = 0; iter < 400; ++iter) {
            const Element a(pool[pick(rng)]), b(pool[pick(rng)]), c(pool[pick(rng)]);
            const int pa = a.terms.begin()->first.parity();
            const int pb = b.terms.begin()->first.parity();
            const int pc = c.terms.begin()->first.parity();
            auto sgn = [](int e) { return Rational(e % 2 == 0 ? 1 : -1); };
            REQUIRE((bracket(a, b) + bracket(b, a) * sgn(pa * pb)).is_zero());
            const Element jac = bracket(a, bracket(b, c)) * sgn(pa * pc) +
                                bracket(b, bracket(c, a)) * sgn(pb * pa) +
                                bracket(c, bracket(a, b)) * sgn(pc * pb);
            REQUIRE(jac.is_zero());
        }
    }
}

TEST_CASE("lie derivative splits into the two Cartan halves") {
    const auto pool = detail::generator_pool(1, 4);
    for (const auto& x : pool) {
        if (!x.is_vector_field()) continue;
        for (const auto& f : pool) {
            if (f.is_vector_field()) continue;
            const Element X(x), e(f);
            CHECK(lie_derivative(X, e) ==
                  interior_product(X, exterior_derivative(e)) +
                      exterior_derivative(interior_product(X, e)));
        }
    }
}
