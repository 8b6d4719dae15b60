#include "lepoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lepoly/errors.hpp"

namespace lepoly {

using cplx = std::complex<double>;

std::complex<double> poly_eval(const std::vector<cplx>& coeffs, cplx z) {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<cplx> poly_derivative(const std::vector<cplx>& coeffs) {
    std::vector<cplx> d;
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        d.push_back(coeffs[k] * static_cast<double>(k));
    return d;
}

namespace {

double coeff_scale_at(const std::vector<cplx>& c, double r) {
    double s = 0.0, rp = 1.0;
    for (const auto& ck : c) {
        s += std::abs(ck) * rp;
        rp *= r;
    }
    return s;
}

void sort_complex(std::vector<cplx>& v) {
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

// Deflating by (z - center) m times must leave small remainders at every step.
bool deflation_validates(const std::vector<cplx>& coeffs, cplx center, std::size_t m) {
    std::vector<cplx> work = coeffs;
    for (std::size_t s = 0; s < m; ++s) {
        cplx rem{0.0, 0.0};
        std::vector<cplx> quot(work.size() > 1 ? work.size() - 1 : 0);
        cplx acc{0.0, 0.0};
        for (std::size_t k = work.size(); k-- > 0;) {
            acc = acc * center + work[k];
            if (k > 0)
                quot[k - 1] = acc;
            else
                rem = acc;
        }
        double scale = coeff_scale_at(work, std::abs(center));
        if (std::abs(rem) > 1e-5 * std::max(scale, 1e-300)) return false;
        work = quot;
    }
    return true;
}

// Multiplicity assignment: greedy validated merging.  The base radius is the
// declared clustering rule; multiple roots computed in doubles spread like
// (residual/|lead|)^(1/m), so candidate merges may use the wider adaptive
// radius but only survive when synthetic deflation accepts the common centre.
std::vector<cplx> cluster_multiplicities(std::vector<cplx> roots,
                                         const std::vector<cplx>& coeffs,
                                         const RootOptions& opts) {
    sort_complex(roots);
    std::vector<std::vector<cplx>> groups;
    for (cplx z : roots) groups.push_back({z});

    auto centroid = [](const std::vector<cplx>& g) {
        cplx c{0.0, 0.0};
        for (cplx z : g) c += z;
        return c / static_cast<double>(g.size());
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < groups.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < groups.size() && !changed; ++j) {
                cplx ci = centroid(groups[i]), cj = centroid(groups[j]);
                std::size_t m = groups[i].size() + groups[j].size();
                double base = opts.cluster_rel * std::max({1.0, std::abs(ci), std::abs(cj)});
                double scale = coeff_scale_at(coeffs, std::abs(ci)) /
                               std::max(std::abs(coeffs.back()), 1e-300);
                double adaptive =
                    3.0 * std::pow(opts.tol_root * std::max(scale, 1e-300),
                                   1.0 / static_cast<double>(m));
                if (std::abs(ci - cj) > std::max(base, adaptive)) continue;
                std::vector<cplx> merged = groups[i];
                merged.insert(merged.end(), groups[j].begin(), groups[j].end());
                cplx c = centroid(merged);
                if (std::abs(ci - cj) > base && !deflation_validates(coeffs, c, merged.size()))
                    continue;
                groups[i] = merged;
                groups.erase(groups.begin() + static_cast<long>(j));
                changed = true;
            }
        }
    }

    std::vector<cplx> out;
    for (const auto& g : groups) {
        if (g.size() == 1) {
            out.push_back(g[0]);
        } else {
            cplx c = centroid(g);
            for (std::size_t k = 0; k < g.size(); ++k) out.push_back(c);
        }
    }
    sort_complex(out);
    return out;
}

}  // namespace

std::vector<cplx> univariate_roots(const std::vector<cplx>& coeffs, const RootOptions& opts) {
    double cmax = 0.0;
    for (const auto& c : coeffs) cmax = std::max(cmax, std::abs(c));
    if (coeffs.size() < 2) throw DegreeDropError("univariate_roots: degree < 1");
    if (cmax == 0.0) throw DegreeDropError("univariate_roots: zero polynomial");
    if (std::abs(coeffs.back()) <= opts.tol_lead * cmax)
        throw DegreeDropError("univariate_roots: leading coefficient below tolerance");

    // normalize to monic
    std::vector<cplx> c(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) c[k] = coeffs[k] / coeffs.back();

    // exact zeros at the origin peel off directly
    std::vector<cplx> zeros;
    while (c.size() > 1 && c.front() == cplx{0.0, 0.0}) {
        zeros.emplace_back(0.0, 0.0);
        c.erase(c.begin());
    }
    const std::size_t n = c.size() - 1;
    if (n == 0) {
        auto out = zeros;
        return cluster_multiplicities(out, coeffs, opts);
    }

    // deterministic initial guesses on a circle
    double cauchy = 0.0;
    for (std::size_t k = 0; k < n; ++k) cauchy = std::max(cauchy, std::abs(c[k]));
    cauchy = 1.0 + cauchy;
    double r0 = std::abs(c[0]) > 0 ? std::pow(std::abs(c[0]), 1.0 / static_cast<double>(n))
                                   : cauchy * 0.5;
    r0 = std::min(std::max(r0, 1e-12), cauchy);
    std::vector<cplx> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        double th = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.3729) /
                    static_cast<double>(n);
        z[j] = std::polar(r0, th);
    }

    std::vector<cplx> d = poly_derivative(c);
    bool converged = false;
    for (int it = 0; it < opts.max_iterations && !converged; ++it) {
        converged = true;
        for (std::size_t j = 0; j < n; ++j) {
            cplx pj = poly_eval(c, z[j]);
            double scale = coeff_scale_at(c, std::abs(z[j]));
            if (std::abs(pj) <= 0.1 * opts.tol_root * std::max(scale, 1e-300)) continue;
            converged = false;
            cplx dj = poly_eval(d, z[j]);
            cplx newton = (std::abs(dj) > 0) ? pj / dj : cplx{1e-3, 0};
            cplx sum{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                cplx diff = z[j] - z[k];
                if (std::abs(diff) < 1e-300) diff = cplx{1e-300, 0};
                sum += 1.0 / diff;
            }
            cplx denom = 1.0 - newton * sum;
            cplx step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
            z[j] -= step;
        }
    }

    // final residual check
    for (std::size_t j = 0; j < n; ++j) {
        double scale = coeff_scale_at(c, std::abs(z[j]));
        if (std::abs(poly_eval(c, z[j])) > opts.tol_root * std::max(scale, 1e-300))
            throw NonConvergenceError("univariate_roots: no convergence after max iterations");
    }

    // polish sweeps: multiple roots converge only linearly, so the residual
    // gate alone leaves them ~ (tol_root)^(1/m) wide
    for (int sweep = 0; sweep < 24; ++sweep) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx pj = poly_eval(c, z[j]);
            double noise = 4.0 * 2.2e-16 * coeff_scale_at(c, std::abs(z[j]));
            if (std::abs(pj) <= noise) continue;
            cplx dj = poly_eval(d, z[j]);
            if (std::abs(dj) == 0.0) continue;
            cplx newton = pj / dj;
            cplx sum{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                cplx diff = z[j] - z[k];
                if (std::abs(diff) < 1e-300) diff = cplx{1e-300, 0};
                sum += 1.0 / diff;
            }
            cplx denom = 1.0 - newton * sum;
            if (std::abs(denom) > 1e-300) z[j] -= newton / denom;
        }
    }

    std::vector<cplx> all = zeros;
    all.insert(all.end(), z.begin(), z.end());
    return cluster_multiplicities(all, coeffs, opts);
}

}  // namespace lepoly
