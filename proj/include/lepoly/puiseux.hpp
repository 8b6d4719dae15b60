#pragma once

#include <complex>
#include <string>
#include <vector>

#include "lepoly/bivariate_poly.hpp"

namespace lepoly {

/// Edge of the lower Newton polygon.  Walking the edge from the low-a end
/// (a_lo, b_hi) to the high-a end (a_hi, b_lo) steps by (den, -num) per
/// lattice point, where the normalized slope is num/den (lowest terms); the
/// attached polynomial is the compressed edge polynomial E~(beta) whose
/// coefficient of beta^j sits at lattice point (a_lo + j*den, b_hi - j*num).
struct NewtonPolygonEdge {
    int a_lo = 0, b_hi = 0;
    int a_hi = 0, b_lo = 0;
    int num = 0, den = 1;  // slope num/den, gcd(num,den)=1, both positive
    std::vector<GaussianRational> edge_poly;  // constant-first, degree = lattice steps
};

struct NewtonPolygon {
    std::vector<NewtonPolygonEdge> edges;  // ordered by increasing slope
    int x_multiplicity = 0;                // x^k factor: the x=0 branch
    int y_multiplicity = 0;                // y^m factor: the y=0 branch
};

/// Lower Newton polygon of the support at the origin.
/// pre: p != 0 and p(0,0) = 0.
NewtonPolygon newton_polygon(const BivariatePoly& p);

enum class BranchKind { series, axis_x, axis_y };

struct PuiseuxTerm {
    int exponent;                 // m_j, in w units
    std::complex<double> coeff;   // alpha_j
};

/// One branch of {p=0} at the origin: x(w) = sum alpha_j w^(m_j), y = w^n.
/// axis_x is the branch x=0 (empty term list); axis_y is y=0 parametrized
/// by (x,y) = (w,0).
struct PuiseuxBranch {
    BranchKind kind = BranchKind::series;
    int ramification = 1;  // n_i
    std::vector<PuiseuxTerm> terms;
    int truncation_order = 0;  // exponents kept satisfy m_j <= truncation_order
    bool exact = false;        // the series terminates; no truncation error

    std::complex<double> x_at(std::complex<double> w) const;
    std::complex<double> y_at(std::complex<double> w) const;
};

struct PuiseuxOptions {
    int trunc_gap = 20;        // keep exponents with m_j - m_0 <= trunc_gap
    int max_depth = 64;
    double prune_rel = 1e-13;  // drop substitution noise below this (relative)
    double separation_tol = 1e-9;
};

/// Newton-Puiseux expansion of every branch of {p=0} at the origin.
/// pre: p squarefree, p(0,0) = 0.
std::vector<PuiseuxBranch> puiseux_branches(const BivariatePoly& p,
                                            const PuiseuxOptions& opts = {});

/// |p(x(w), y(w))| for the truncated parametrization.
double branch_residual(const PuiseuxBranch& branch, const BivariatePoly& p,
                       std::complex<double> w);

}  // namespace lepoly
