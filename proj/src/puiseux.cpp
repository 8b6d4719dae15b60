#include "lepoly/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <cstdio>

#include "lepoly/errors.hpp"
#include "lepoly/roots.hpp"

namespace lepoly {

using cplx = std::complex<double>;

namespace {

cplx ipow(cplx z, int e) {
    cplx r{1.0, 0.0};
    for (int k = 0; k < e; ++k) r *= z;
    return r;
}

}  // namespace

std::complex<double> PuiseuxBranch::x_at(std::complex<double> w) const {
    if (kind == BranchKind::axis_x) return {0.0, 0.0};
    if (kind == BranchKind::axis_y) return w;
    cplx s{0.0, 0.0};
    for (const auto& t : terms) s += t.coeff * ipow(w, t.exponent);
    return s;
}

std::complex<double> PuiseuxBranch::y_at(std::complex<double> w) const {
    if (kind == BranchKind::axis_y) return {0.0, 0.0};
    return ipow(w, ramification);
}

// ---------------------------------------------------------------------------
// Newton polygon (exact, reported form)
// ---------------------------------------------------------------------------

namespace {

// lower hull of (a, min_b(a)) between the extreme vertices, slopes > 0 only
template <typename CoeffAt>
std::vector<std::array<int, 4>> lower_hull_edges(const std::vector<std::pair<int, int>>& pts) {
    // pts: (a, b) support, arbitrary order
    std::map<int, int> minb;
    for (auto [a, b] : pts) {
        auto it = minb.find(a);
        if (it == minb.end() || b < it->second) minb[a] = b;
    }
    std::vector<std::pair<int, int>> v(minb.begin(), minb.end());  // sorted by a
    // monotone lower hull
    std::vector<std::pair<int, int>> hull;
    for (auto& p : v) {
        while (hull.size() >= 2) {
            auto& A = hull[hull.size() - 2];
            auto& B = hull[hull.size() - 1];
            long cross = static_cast<long>(B.first - A.first) * (p.second - A.second) -
                         static_cast<long>(B.second - A.second) * (p.first - A.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<std::array<int, 4>> edges;  // a_lo, b_hi, a_hi, b_lo
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        auto [a1, b1] = hull[k];
        auto [a2, b2] = hull[k + 1];
        if (b1 > b2)  // negative slope in (a,b): gamma > 0
            edges.push_back({a1, b1, a2, b2});
    }
    // hull walks a ascending = gamma decreasing; report by increasing slope
    std::reverse(edges.begin(), edges.end());
    return edges;
}

}  // namespace

NewtonPolygon newton_polygon(const BivariatePoly& p) {
    if (p.is_zero()) throw std::invalid_argument("newton_polygon: zero polynomial");
    if (!p.constant_term().is_zero())
        throw std::invalid_argument("newton_polygon: unit germ (p(0,0) != 0)");

    NewtonPolygon np;
    np.x_multiplicity = p.x_multiplicity();
    np.y_multiplicity = p.y_multiplicity();

    std::vector<std::pair<int, int>> pts;
    for (const auto& [m, c] : p.terms()) pts.emplace_back(m.a, m.b);
    auto edges = lower_hull_edges<void>(pts);
    for (auto [a1, b1, a2, b2] : edges) {
        NewtonPolygonEdge e;
        e.a_lo = a1;
        e.b_hi = b1;
        e.a_hi = a2;
        e.b_lo = b2;
        int da = a2 - a1, db = b1 - b2;
        int g = std::gcd(da, db);
        e.den = da / g;
        e.num = db / g;
        e.edge_poly.resize(static_cast<std::size_t>(g) + 1);
        for (int j = 0; j <= g; ++j)
            e.edge_poly[j] = p.coeff(a1 + j * e.den, b1 - j * e.num);
        np.edges.push_back(std::move(e));
    }
    return np;
}

// ---------------------------------------------------------------------------
// Numeric expansion
// ---------------------------------------------------------------------------

namespace {

// support map with complex coefficients; key (a = x exponent, b = w exponent)
using CSupport = std::map<std::pair<int, int>, cplx>;

double max_abs(const CSupport& s) {
    double m = 0;
    for (const auto& [k, c] : s) m = std::max(m, std::abs(c));
    return m;
}

void prune(CSupport& s, double rel) {
    double thr = rel * max_abs(s);
    for (auto it = s.begin(); it != s.end();) {
        if (std::abs(it->second) <= thr)
            it = s.erase(it);
        else
            ++it;
    }
}

int x_mult(const CSupport& s) {
    int k = 1 << 28;
    for (const auto& [m, c] : s) k = std::min(k, m.first);
    return k;
}

bool constant_term_nonzero(const CSupport& s) {
    auto it = s.find({0, 0});
    return it != s.end();
}

struct NumEdge {
    int q, n;                 // slope q/n, lowest terms
    std::vector<cplx> poly;   // compressed edge polynomial, constant-first
};

std::vector<NumEdge> numeric_edges(const CSupport& s) {
    std::vector<std::pair<int, int>> pts;
    for (const auto& [m, c] : s) pts.emplace_back(m.first, m.second);
    auto raw = lower_hull_edges<void>(pts);
    std::vector<NumEdge> out;
    for (auto [a1, b1, a2, b2] : raw) {
        NumEdge e;
        int da = a2 - a1, db = b1 - b2;
        int g = std::gcd(da, db);
        e.n = da / g;
        e.q = db / g;
        e.poly.resize(static_cast<std::size_t>(g) + 1, cplx{0, 0});
        for (int j = 0; j <= g; ++j) {
            auto it = s.find({a1 + j * e.n, b1 - j * e.q});
            if (it != s.end()) e.poly[j] = it->second;
        }
        out.push_back(std::move(e));
    }
    return out;
}

// substitute x -> w^q (c + x), y -> w^n, divide by w^sigma
CSupport substitute(const CSupport& s, cplx c, int q, int n, double prune_rel) {
    int sigma = 1 << 28;
    for (const auto& [m, coeff] : s) sigma = std::min(sigma, q * m.first + n * m.second);
    CSupport out;
    for (const auto& [m, coeff] : s) {
        int a = m.first;
        int wexp = q * a + n * m.second - sigma;
        // coeff * (c + x)^a expanded
        cplx binom = ipow(c, a);  // C(a,0) c^a
        for (int k = 0; k <= a; ++k) {
            if (std::abs(binom) > 0) out[{k, wexp}] += coeff * binom;
            // next: C(a,k+1) c^(a-k-1) = binom * (a-k)/(k+1) / c
            if (k < a) {
                if (std::abs(c) > 0)
                    binom = binom * static_cast<double>(a - k) /
                            static_cast<double>(k + 1) / c;
                else
                    binom = (k + 1 == a) ? cplx{1, 0} : cplx{0, 0};  // only x^a survives
            }
        }
    }
    prune(out, prune_rel);
    // substitution noise can wipe out the w^0 layer; renormalize
    if (!out.empty()) {
        int minw = 1 << 28;
        for (const auto& [m, coeff] : out) minw = std::min(minw, m.second);
        if (minw > 0) {
            CSupport shifted;
            for (const auto& [m, coeff] : out) shifted[{m.first, m.second - minw}] = coeff;
            out = std::move(shifted);
        }
    }
    return out;
}

struct ExpandState {
    CSupport P;
    int n_acc = 1;
    int shift = 0;  // remainder enters as w^shift * xtilde
    std::vector<PuiseuxTerm> terms;
    int depth = 0;
};

// A multiplicity-m cluster centre is only ~(tol)^(1/m) accurate, which would
// leave garbage terms after substitution and corrupt the next polygon.
// Newton on the (m-1)-th derivative recovers full precision.
cplx polish_edge_root(const std::vector<cplx>& poly, cplx beta, std::size_t mult) {
    std::vector<cplx> d = poly;
    for (std::size_t k = 1; k < mult; ++k) d = poly_derivative(d);
    std::vector<cplx> dd = poly_derivative(d);
    for (int it = 0; it < 6; ++it) {
        cplx num = poly_eval(d, beta);
        cplx den = poly_eval(dd, beta);
        if (std::abs(den) < 1e-300) break;
        cplx step = num / den;
        beta -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(beta))) break;
    }
    return beta;
}

int gcd_all(const PuiseuxBranch& b) {
    int g = b.ramification;
    for (const auto& t : b.terms) g = std::gcd(g, t.exponent);
    return g;
}

}  // namespace

std::vector<PuiseuxBranch> puiseux_branches(const BivariatePoly& p, const PuiseuxOptions& opts) {
    if (p.is_zero()) throw std::invalid_argument("puiseux_branches: zero polynomial");
    if (!p.constant_term().is_zero())
        throw std::invalid_argument("puiseux_branches: unit germ");
    if (!is_squarefree(p))
        throw std::invalid_argument("puiseux_branches: non-squarefree input");

    std::vector<PuiseuxBranch> out;
    BivariatePoly work = p;
    int xk = work.x_multiplicity();
    if (xk > 0) {
        work = work.shift_down_x(xk);
        PuiseuxBranch b;
        b.kind = BranchKind::axis_x;
        b.exact = true;
        out.push_back(b);
    }
    int ym = work.y_multiplicity();
    if (ym > 0) {
        work = work.shift_down_y(ym);
        PuiseuxBranch b;
        b.kind = BranchKind::axis_y;
        b.exact = true;
        out.push_back(b);
    }
    if (work.is_constant() || !work.constant_term().is_zero()) {
        // nothing further passes through the origin
        return out;
    }

    int budget = opts.trunc_gap;
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<PuiseuxBranch> series;
        std::vector<ExpandState> stack;
        ExpandState init;
        for (const auto& [m, c] : work.terms()) init.P[{m.a, m.b}] = c.to_complex();
        stack.push_back(std::move(init));

        while (!stack.empty()) {
            ExpandState st = std::move(stack.back());
            stack.pop_back();
            if (st.depth > opts.max_depth)
                throw NonConvergenceError(
                    "puiseux_branches: failure to separate branches at max depth");
            if (st.P.empty())
                throw NonConvergenceError("puiseux_branches: expansion degenerated");

            // exact termination: xtilde divides P
            int k = x_mult(st.P);
            if (k >= 1) {
                if (st.terms.empty())
                    throw std::logic_error("puiseux_branches: unexpected x factor");
                PuiseuxBranch b;
                b.kind = BranchKind::series;
                b.ramification = st.n_acc;
                b.terms = st.terms;
                b.exact = true;
                b.truncation_order = st.terms.back().exponent;
                series.push_back(std::move(b));
                CSupport rest;
                for (const auto& [m, c] : st.P) rest[{m.first - k, m.second}] = c;
                st.P = std::move(rest);
            }
            if (constant_term_nonzero(st.P)) { fprintf(stderr, "[dbg] depth=%d unit dead end\n", st.depth); continue; }

            for (const auto& e : numeric_edges(st.P)) {
                fprintf(stderr, "[dbg] depth=%d edge q=%d n=%d polydeg=%zu\n", st.depth, e.q, e.n, e.poly.size()-1);
                std::vector<cplx> roots;
                try {
                    roots = univariate_roots(e.poly);
                } catch (const DegreeDropError&) {
                    continue;
                }
                // group multiplicities (roots arrive clustered and sorted)
                std::size_t i = 0;
                while (i < roots.size()) {
                    std::size_t j = i;
                    while (j < roots.size() && roots[j] == roots[i]) ++j;
                    const std::size_t mult = j - i;
                    cplx beta = roots[i];
                    i = j;
                    if (std::abs(beta) == 0.0) continue;  // vertex handled separately
                    beta = polish_edge_root(e.poly, beta, mult);
                    cplx c = std::pow(beta, 1.0 / static_cast<double>(e.n));
                    fprintf(stderr, "[dbg]   beta=%g%+gi mult=%zu c=%g%+gi\n", beta.real(), beta.imag(), mult, c.real(), c.imag());

                    int new_first = st.terms.empty()
                                        ? st.shift * e.n + e.q
                                        : st.terms.front().exponent * e.n;
                    int new_exp = st.shift * e.n + e.q;
                    bool over_budget = new_exp - new_first > budget;
                    if (over_budget && mult == 1) {
                        PuiseuxBranch b;
                        b.kind = BranchKind::series;
                        b.ramification = st.n_acc;  // no further ramification needed
                        b.terms = st.terms;
                        b.exact = false;
                        b.truncation_order = st.terms.front().exponent + budget;
                        series.push_back(std::move(b));
                        continue;
                    }

                    ExpandState next;
                    next.P = substitute(st.P, c, e.q, e.n, opts.prune_rel);
                    next.n_acc = st.n_acc * e.n;
                    next.shift = st.shift * e.n + e.q;
                    next.depth = st.depth + 1;
                    next.terms.reserve(st.terms.size() + 1);
                    for (const auto& t : st.terms)
                        next.terms.push_back({t.exponent * e.n, t.coeff});
                    next.terms.push_back({next.shift, c});
                    stack.push_back(std::move(next));
                }
            }
        }

        // truncated branches keep only exponents within budget of the first
        for (auto& b : series) {
            if (b.exact || b.terms.empty()) continue;
            int first = b.terms.front().exponent;
            while (!b.terms.empty() && b.terms.back().exponent - first > budget)
                b.terms.pop_back();
        }

        // primitivity: safe to reduce exact branches
        for (auto& b : series) {
            if (!b.exact || b.terms.empty()) continue;
            int g = gcd_all(b);
            if (g > 1) {
                b.ramification /= g;
                for (auto& t : b.terms) t.exponent /= g;
                b.truncation_order = b.terms.back().exponent;
            }
        }

        // pairwise separation of the truncations
        bool separated = true;
        for (std::size_t a = 0; a < series.size() && separated; ++a)
            for (std::size_t b = a + 1; b < series.size() && separated; ++b) {
                const auto &A = series[a], &B = series[b];
                if (A.ramification != B.ramification) continue;
                if (A.terms.size() != B.terms.size()) continue;
                bool same = true;
                for (std::size_t t = 0; t < A.terms.size() && same; ++t) {
                    if (A.terms[t].exponent != B.terms[t].exponent ||
                        std::abs(A.terms[t].coeff - B.terms[t].coeff) >
                            opts.separation_tol *
                                std::max(1.0, std::abs(A.terms[t].coeff)))
                        same = false;
                }
                if (same) separated = false;
            }
        bool primitive = true;
        for (const auto& b : series)
            if (!b.exact && gcd_all(b) > 1) primitive = false;

        if (separated && primitive) {
            std::sort(series.begin(), series.end(),
                      [](const PuiseuxBranch& A, const PuiseuxBranch& B) {
                          long la = A.terms.empty() ? 0 : A.terms.front().exponent;
                          long lb = B.terms.empty() ? 0 : B.terms.front().exponent;
                          long lhs = la * B.ramification, rhs = lb * A.ramification;
                          if (lhs != rhs) return lhs < rhs;
                          double aa = A.terms.empty() ? 0 : std::arg(A.terms.front().coeff);
                          double ab = B.terms.empty() ? 0 : std::arg(B.terms.front().coeff);
                          if (aa != ab) return aa < ab;
                          return A.ramification < B.ramification;
                      });
            out.insert(out.end(), series.begin(), series.end());
            return out;
        }
        budget *= 2;
    }
    throw NonConvergenceError("puiseux_branches: failure to separate branches");
}

double branch_residual(const PuiseuxBranch& branch, const BivariatePoly& p,
                       std::complex<double> w) {
    return std::abs(p.eval(branch.x_at(w), branch.y_at(w)));
}

}  // namespace lepoly
