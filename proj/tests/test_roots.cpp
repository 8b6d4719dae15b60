#include "doctest.h"

#include <algorithm>
#include <complex>

#include "lepoly/errors.hpp"
#include "lepoly/roots.hpp"

using namespace lepoly;
using cplx = std::complex<double>;

namespace {

bool contains_root(const std::vector<cplx>& roots, cplx v, double tol = 1e-8) {
    return std::any_of(roots.begin(), roots.end(),
                       [&](cplx r) { return std::abs(r - v) <= tol; });
}

}  // namespace

TEST_CASE("x^2+1 has roots +-i") {
    auto r = univariate_roots({{1, 0}, {0, 0}, {1, 0}});
    REQUIRE(r.size() == 2);
    CHECK(contains_root(r, {0, 1}));
    CHECK(contains_root(r, {0, -1}));
}

TEST_CASE("double root of x^2-2x+1") {
    auto r = univariate_roots({{1, 0}, {-2, 0}, {1, 0}});
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - cplx{1, 0}) < 1e-7);
    CHECK(r[0] == r[1]);  // clustered to a common centre
}

TEST_CASE("cube roots of unity") {
    auto r = univariate_roots({{-1, 0}, {0, 0}, {0, 0}, {1, 0}});
    REQUIRE(r.size() == 3);
    CHECK(contains_root(r, {1, 0}));
    CHECK(contains_root(r, std::polar(1.0, 2.0943951023931953)));
    CHECK(contains_root(r, std::polar(1.0, -2.0943951023931953)));
}

TEST_CASE("residual bound holds for every returned root") {
    std::vector<cplx> c = {{-3, 2}, {0.5, -1}, {0, 0}, {2, 0}, {0, 0}, {1, 1}};
    auto roots = univariate_roots(c);
    REQUIRE(roots.size() == 5);
    for (cplx z : roots) {
        double scale = 0, zp = 1;
        for (auto& ck : c) {
            scale += std::abs(ck) * zp;
            zp *= std::abs(z);
        }
        CHECK(std::abs(poly_eval(c, z)) <= 1e-10 * scale);
    }
}

TEST_CASE("multiset size equals degree and root sum matches -c_{n-1}/c_n") {
    std::vector<cplx> c = {{1, -2}, {3, 0.25}, {-0.5, 1}, {2, 2}, {4, 0}};
    auto roots = univariate_roots(c);
    REQUIRE(roots.size() == 4);
    cplx sum{0, 0};
    for (cplx z : roots) sum += z;
    cplx expected = -c[3] / c[4];
    CHECK(std::abs(sum - expected) <= 1e-8 * std::max(1.0, std::abs(expected)));
}

TEST_CASE("degree drop and degenerate inputs are distinct errors") {
    CHECK_THROWS_AS(univariate_roots({{1, 0}, {1, 0}, {1e-15, 0}}), DegreeDropError);
    CHECK_THROWS_AS(univariate_roots({{1, 0}}), DegreeDropError);
    CHECK_THROWS_AS(univariate_roots({}), DegreeDropError);
}

TEST_CASE("roots at the origin with multiplicity") {
    // z^3 (z - 1)
    auto r = univariate_roots({{0, 0}, {0, 0}, {0, 0}, {-1, 0}, {1, 0}});
    REQUIRE(r.size() == 4);
    int zero_count = 0;
    for (cplx z : r) zero_count += (std::abs(z) < 1e-12) ? 1 : 0;
    CHECK(zero_count == 3);
    CHECK(contains_root(r, {1, 0}));
}

TEST_CASE("triple root clustering") {
    // (z-2)^3 = z^3 - 6z^2 + 12z - 8
    auto r = univariate_roots({{-8, 0}, {12, 0}, {-6, 0}, {1, 0}});
    REQUIRE(r.size() == 3);
    for (cplx z : r) CHECK(std::abs(z - cplx{2, 0}) < 1e-4);
    CHECK(r[0] == r[1]);
    CHECK(r[1] == r[2]);
}
