#pragma once

#include <complex>
#include <vector>

namespace lepoly {

struct RootOptions {
    double tol_root = 1e-10;       // residual <= tol_root * coefficient scale
    double tol_lead = 1e-12;       // leading coefficient relative threshold
    double cluster_rel = 1e-6;     // multiplicity clustering: 1e-6 * max(1,|z|)
    int max_iterations = 400;
};

/// All complex roots of sum_k coeffs[k] z^k (constant-first), with
/// multiplicity, by Aberth-Ehrlich simultaneous iteration from deterministic
/// circle guesses.  Result is sorted by (Re, Im).
/// Throws DegreeDropError when the leading coefficient is below tolerance
/// and NonConvergenceError when iteration stalls.
std::vector<std::complex<double>> univariate_roots(
    const std::vector<std::complex<double>>& coeffs, const RootOptions& opts = {});

/// Horner evaluation of the same coefficient convention.
std::complex<double> poly_eval(const std::vector<std::complex<double>>& coeffs,
                               std::complex<double> z);

std::vector<std::complex<double>> poly_derivative(
    const std::vector<std::complex<double>>& coeffs);

}  // namespace lepoly
