#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "lepoly/bivariate_poly.hpp"
#include "lepoly/mixed_poly.hpp"

namespace lepoly {

enum class GermMode { holomorphic, fgbar };

struct HypothesisReport {
    GermMode mode = GermMode::holomorphic;
    bool g_univariate = false;
    bool f_reduced = false;
    bool g_reduced = false;
    bool coprime = false;
    bool fg_isolated_singularity = false;
    bool germ_valid = false;  // f (and nonconstant g) vanish at the origin
    std::vector<std::string> messages;

    bool pass() const {
        return g_univariate && f_reduced && g_reduced && coprime &&
               fg_isolated_singularity && germ_valid;
    }
};

/// One of the three defining systems of the critical-locus decomposition.
struct PolynomialSystem {
    std::string name;
    std::vector<BivariatePoly> equations;
    enum class Status { empty, finite_at_origin, uncertified } status = Status::uncertified;
    std::string certificate;  // how the status was established
};

struct SigmaDecomposition {
    PolynomialSystem sigma_f;       // {f = f_x = f_y = 0}
    PolynomialSystem sigma_g;       // {g = g_x = g_y = 0}
    PolynomialSystem intersection;  // {f = g = 0}
};

/// h = |f dg/dx|^2 - |g df/dx|^2, exact in x, xbar, y, ybar.
MixedRealPoly critical_set_h(const BivariatePoly& f, const BivariatePoly& g);

/// df/dx with every irreducible factor shared with f*g removed and the
/// result made grlex-monic.  A constant result means the polar curve is
/// empty; when df/dx vanishes identically this is reported through
/// *warnings and the constant 1 is returned.
BivariatePoly polar_curve(const BivariatePoly& f, const BivariatePoly& g,
                          std::vector<std::string>* warnings = nullptr);

SigmaDecomposition sigma_decomposition(const BivariatePoly& f, const BivariatePoly& g);

HypothesisReport check_hypotheses(const BivariatePoly& f, const BivariatePoly& g);

/// Wirtinger partials (h_x, h_xbar, h_y, h_ybar) of h = f * conj(g) at (x,y).
std::array<std::complex<double>, 4> fgbar_wirtinger(const BivariatePoly& f,
                                                    const BivariatePoly& g,
                                                    std::complex<double> x,
                                                    std::complex<double> y);

/// Singular values (min, max) of the real 2x4 Jacobian of f*conj(g).
std::pair<double, double> fgbar_jacobian_singular_values(const BivariatePoly& f,
                                                         const BivariatePoly& g,
                                                         std::complex<double> x,
                                                         std::complex<double> y);

}  // namespace lepoly
