#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "lepoly/germ.hpp"
#include "lepoly/parser.hpp"

using namespace lepoly;
using cplx = std::complex<double>;

TEST_CASE("critical_set_h hand values") {
    // f=x, g=y: h = |x*0|^2 - |y*1|^2 = -y*ybar
    MixedRealPoly h = critical_set_h(poly_parse("x"), poly_parse("y"));
    MixedRealPoly expected;
    expected.add({0, 0, 1, 1}, GaussianRational(-1));
    CHECK(h == expected);

    // g == 1: h = -|df/dx|^2
    MixedRealPoly h2 = critical_set_h(poly_parse("x^2+y^3"), poly_parse("1"));
    MixedRealPoly e2;
    e2.add({1, 1, 0, 0}, GaussianRational(-4));  // -(2x)(2xbar)
    CHECK(h2 == e2);

    // f=x^2+y^3, g=y: h = -y*ybar*(2x)*(2xbar)
    MixedRealPoly h3 = critical_set_h(poly_parse("x^2+y^3"), poly_parse("y"));
    MixedRealPoly e3;
    e3.add({1, 1, 1, 1}, GaussianRational(-4));
    CHECK(h3 == e3);
}

TEST_CASE("h is real valued at sampled points") {
    BivariatePoly f = poly_parse("x^2+(1+i)*x*y+y^3");
    BivariatePoly g = poly_parse("y^2-y");
    MixedRealPoly h = critical_set_h(f, g);
    CHECK(h.is_conjugation_symmetric());
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        cplx x{u(rng), u(rng)}, y{u(rng), u(rng)};
        cplx v = h.eval(x, y);
        CHECK(std::abs(v.imag()) <= 1e-10 * std::max(1.0, std::abs(v.real())));
    }
}

TEST_CASE("h agrees with |f g_x|^2 - |g f_x|^2 pointwise") {
    BivariatePoly f = poly_parse("x^2+y^3");
    BivariatePoly g = poly_parse("y");
    MixedRealPoly h = critical_set_h(f, g);
    BivariatePoly fx = f.derivative(Var::x);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        cplx x{u(rng), u(rng)}, y{u(rng), u(rng)};
        double direct = -std::norm(g.eval(x, y) * fx.eval(x, y));
        cplx via = h.eval(x, y);
        CHECK(std::abs(via.real() - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("polar_curve examples") {
    CHECK(polar_curve(poly_parse("x^2+y^3"), poly_parse("1")) == poly_parse("x"));

    std::vector<std::string> warn;
    CHECK(polar_curve(poly_parse("x*y+y^2"), poly_parse("1"), &warn) == BivariatePoly::one());
    CHECK(warn.size() == 1);

    warn.clear();
    CHECK(polar_curve(poly_parse("x"), poly_parse("y"), &warn) == BivariatePoly::one());

    // shared factor with g is removed too
    CHECK(polar_curve(poly_parse("x^2*y+x"), poly_parse("y")).deg_x() >= 0);
}

TEST_CASE("polar curve output is coprime to f*g") {
    const char* fs[] = {"x^2+y^3", "x^3+y^4", "x^2+x*y^2+y^5", "x^3+x*y+y^2"};
    for (const char* fstr : fs) {
        BivariatePoly f = poly_parse(fstr);
        for (const char* gstr : {"1", "y"}) {
            BivariatePoly g = poly_parse(gstr);
            BivariatePoly c = polar_curve(f, g);
            if (!c.is_constant()) CHECK(poly_gcd(c, f * g).is_constant());
        }
    }
}

TEST_CASE("sigma_decomposition examples") {
    SigmaDecomposition d = sigma_decomposition(poly_parse("x"), poly_parse("y"));
    CHECK(d.sigma_f.status == PolynomialSystem::Status::empty);
    CHECK(d.sigma_g.status == PolynomialSystem::Status::empty);
    CHECK(d.intersection.status == PolynomialSystem::Status::finite_at_origin);

    SigmaDecomposition d2 = sigma_decomposition(poly_parse("x^2+y^3"), poly_parse("1"));
    CHECK(d2.sigma_f.status == PolynomialSystem::Status::finite_at_origin);
    CHECK(d2.sigma_g.status == PolynomialSystem::Status::empty);
    CHECK(d2.intersection.status == PolynomialSystem::Status::empty);

    CHECK_THROWS_AS(sigma_decomposition(poly_parse("x^2"), poly_parse("1")),
                    std::invalid_argument);
}

TEST_CASE("check_hypotheses examples") {
    HypothesisReport r1 = check_hypotheses(poly_parse("x^2+y^3"), poly_parse("1"));
    CHECK(r1.mode == GermMode::holomorphic);
    CHECK(r1.pass());

    HypothesisReport r2 = check_hypotheses(poly_parse("x"), poly_parse("y"));
    CHECK(r2.mode == GermMode::fgbar);
    CHECK(r2.pass());

    HypothesisReport r3 = check_hypotheses(poly_parse("x*y"), poly_parse("y"));
    CHECK(!r3.coprime);
    CHECK(!r3.pass());

    HypothesisReport r4 = check_hypotheses(poly_parse("x^2"), poly_parse("1"));
    CHECK(!r4.f_reduced);

    // g must depend on y only
    HypothesisReport r5 = check_hypotheses(poly_parse("x^2+y^3"), poly_parse("x"));
    CHECK(!r5.g_univariate);
}

TEST_CASE("rank-deficient Jacobian points lie near the critical union") {
    // For each pair the union Sigma(f) u Sigma(g) u {f=g=0} is exactly {0}.
    struct Case {
        const char* f;
        const char* g;
    } cases[] = {{"x", "y"}, {"x^2+y^3", "y"}, {"x^2-y^2", "y"}};
    for (const auto& c : cases) {
        BivariatePoly f = poly_parse(c.f), g = poly_parse(c.g);
        std::mt19937 rng(20240915);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::uniform_real_distribution<double> logr(-14.0, -0.6);
        int flagged = 0;
        for (int k = 0; k < 1000; ++k) {
            double r1 = std::pow(10.0, logr(rng)), r2 = std::pow(10.0, logr(rng));
            cplx x = std::polar(r1, 3.14159 * u(rng));
            cplx y = std::polar(r2, 3.14159 * u(rng));
            auto [smin, smax] = fgbar_jacobian_singular_values(f, g, x, y);
            bool deficient = smin <= 1e-6 * std::max(smax, 1e-6);
            if (deficient) {
                ++flagged;
                CHECK(std::sqrt(std::norm(x) + std::norm(y)) <= 1e-4);
            }
        }
        // points at tiny radii must actually be flagged
        CHECK(flagged > 0);
        // and the origin itself is always deficient
        auto [s0min, s0max] = fgbar_jacobian_singular_values(f, g, {0, 0}, {0, 0});
        CHECK(s0min <= 1e-6 * std::max(s0max, 1e-6));
    }
}
