#include "doctest.h"

#include <cmath>
#include <complex>

#include "lepoly/errors.hpp"
#include "lepoly/parser.hpp"
#include "lepoly/puiseux.hpp"

using namespace lepoly;
using cplx = std::complex<double>;

TEST_CASE("newton polygon of x^2+y^3 is a single edge") {
    NewtonPolygon np = newton_polygon(poly_parse("x^2+y^3"));
    REQUIRE(np.edges.size() == 1);
    const auto& e = np.edges[0];
    CHECK(e.a_lo == 0);
    CHECK(e.b_hi == 3);
    CHECK(e.a_hi == 2);
    CHECK(e.b_lo == 0);
    CHECK(e.num == 3);
    CHECK(e.den == 2);
    CHECK(np.x_multiplicity == 0);
    CHECK(np.y_multiplicity == 0);
    // compressed edge polynomial: y^3-vertex first, then the x^2-vertex
    REQUIRE(e.edge_poly.size() == 2);
    CHECK(e.edge_poly[0] == GaussianRational(1));
    CHECK(e.edge_poly[1] == GaussianRational(1));
}

TEST_CASE("newton polygon of 2x is a vertex with the x=0 branch flagged") {
    NewtonPolygon np = newton_polygon(poly_parse("2*x"));
    CHECK(np.edges.empty());
    CHECK(np.x_multiplicity == 1);
    CHECK(np.y_multiplicity == 0);
}

TEST_CASE("newton polygon of x^2*y + y^4 reports the edge and the y factor") {
    NewtonPolygon np = newton_polygon(poly_parse("x^2*y+y^4"));
    REQUIRE(np.edges.size() == 1);
    const auto& e = np.edges[0];
    CHECK(e.a_lo == 0);
    CHECK(e.b_hi == 4);
    CHECK(e.a_hi == 2);
    CHECK(e.b_lo == 1);
    CHECK(np.y_multiplicity == 1);
}

TEST_CASE("newton polygon rejects units and zero") {
    CHECK_THROWS_AS(newton_polygon(poly_parse("1+x")), std::invalid_argument);
    CHECK_THROWS_AS(newton_polygon(BivariatePoly::zero()), std::invalid_argument);
}

TEST_CASE("puiseux: cusp x^2-y^3 has one branch with n=2, x=w^3") {
    auto bs = puiseux_branches(poly_parse("x^2-y^3"));
    REQUIRE(bs.size() == 1);
    const auto& b = bs[0];
    CHECK(b.kind == BranchKind::series);
    CHECK(b.ramification == 2);
    CHECK(b.exact);
    REQUIRE(b.terms.size() == 1);
    CHECK(b.terms[0].exponent == 3);
    CHECK(std::abs(b.terms[0].coeff - cplx{1, 0}) < 1e-12);
    // substitute back: residual 0 up to roundoff
    CHECK(branch_residual(b, poly_parse("x^2-y^3"), {1e-2, 0}) < 1e-12);
}

TEST_CASE("puiseux: polar curve of the cusp is the single branch x=0") {
    auto bs = puiseux_branches(poly_parse("x"));
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].kind == BranchKind::axis_x);
    CHECK(bs[0].terms.empty());
}

TEST_CASE("puiseux: x^2-y^2 splits into two smooth branches") {
    auto bs = puiseux_branches(poly_parse("x^2-y^2"));
    REQUIRE(bs.size() == 2);
    for (const auto& b : bs) {
        CHECK(b.ramification == 1);
        REQUIRE(b.terms.size() == 1);
        CHECK(b.terms[0].exponent == 1);
    }
    CHECK(std::abs(bs[0].terms[0].coeff + bs[1].terms[0].coeff) < 1e-12);
}

TEST_CASE("puiseux rejects non-squarefree input") {
    CHECK_THROWS_AS(puiseux_branches(poly_parse("x^2")), std::invalid_argument);
    CHECK_THROWS_AS(puiseux_branches(poly_parse("(x-y)^2*(x+y)")), std::invalid_argument);
}

TEST_CASE("sum of ramification indices matches the polygon extent") {
    struct Case {
        const char* p;
        int expected;  // deg_x of the x-primitive part for Weierstrass-type germs
    } cases[] = {
        {"x^2-y^3", 2}, {"x^2-y^2", 2}, {"x^3+y^4", 3}, {"x^2+x*y^2+y^5", 2},
        {"(x^2-y^3)*(x-y)", 3},
    };
    for (const auto& c : cases) {
        auto bs = puiseux_branches(poly_parse(c.p));
        int sum = 0;
        for (const auto& b : bs)
            if (b.kind == BranchKind::series) sum += b.ramification;
        CHECK(sum == c.expected);
    }
}

TEST_CASE("truncated branch residual scales like r^order") {
    // x^2 - y^2 (1+y): x = +- y sqrt(1+y): infinite series, truncation real.
    // A shallow truncation keeps the residual far above evaluation noise so
    // the slope is actually measurable.
    BivariatePoly p = poly_parse("x^2 - y^2 - y^3");
    PuiseuxOptions opts;
    opts.trunc_gap = 3;
    auto bs = puiseux_branches(p, opts);
    REQUIRE(bs.size() == 2);
    for (const auto& b : bs) {
        CHECK(!b.exact);
        double r1 = branch_residual(b, p, {1e-2, 0});
        double r2 = branch_residual(b, p, {1e-3, 0});
        CHECK(r1 <= 1e-8);
        if (r1 > 0 && r2 > 0) {
            double slope = (std::log(r1) - std::log(r2)) / (std::log(1e-2) - std::log(1e-3));
            CHECK(slope >= b.truncation_order - 0.5);
        }
    }
}

TEST_CASE("re-expansion determinism") {
    BivariatePoly p = poly_parse("(x^2-y^3)*(x^2-2*y^3)*(x-y)");
    auto a = puiseux_branches(p);
    auto b = puiseux_branches(p);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].ramification == b[k].ramification);
        REQUIRE(a[k].terms.size() == b[k].terms.size());
        for (std::size_t t = 0; t < a[k].terms.size(); ++t) {
            CHECK(a[k].terms[t].exponent == b[k].terms[t].exponent);
            CHECK(a[k].terms[t].coeff == b[k].terms[t].coeff);
        }
    }
}

TEST_CASE("ramified branch needing recursion: (x^2-y^3)^2 - x*y^5") {
    // squarefree but with a repeated edge root, forcing a second level
    BivariatePoly p = poly_parse("(x^2-y^3)^2 - x*y^5");
    REQUIRE(is_squarefree(p));
    auto bs = puiseux_branches(p);
    int sum = 0;
    for (const auto& b : bs) sum += b.ramification;
    CHECK(sum == 4);
    for (const auto& b : bs) {
        double res = branch_residual(b, p, {1e-2, 0});
        CHECK(res <= 1e-8);
    }
}

TEST_CASE("branch evaluation helpers") {
    auto bs = puiseux_branches(poly_parse("x^2-y^3"));
    const auto& b = bs[0];
    cplx w{0.01, 0.02};
    CHECK(std::abs(b.y_at(w) - w * w) < 1e-15);
    CHECK(std::abs(b.x_at(w) - w * w * w) < 1e-15);
}
