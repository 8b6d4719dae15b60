#include "lepoly/bivariate_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lepoly {

bool BivariatePoly::is_univariate_y() const {
    for (const auto& [m, c] : terms_)
        if (m.a != 0) return false;
    return true;
}

GaussianRational BivariatePoly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void BivariatePoly::set_coeff(int a, int b, const GaussianRational& c) {
    if (c.is_zero())
        terms_.erase({a, b});
    else
        terms_[{a, b}] = c;
}

int BivariatePoly::deg_x() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.a);
    return d;
}

int BivariatePoly::deg_y() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.b);
    return d;
}

int BivariatePoly::total_degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.total();
}

int BivariatePoly::order_at_origin() const {
    if (terms_.empty()) return -1;
    int o = terms_.begin()->first.total();
    for (const auto& [m, c] : terms_) o = std::min(o, m.total());
    return o;
}

const GaussianRational& BivariatePoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return terms_.begin()->second;
}

BivariatePoly BivariatePoly::normalized() const {
    if (terms_.empty()) return {};
    return scaled(GaussianRational(1) / leading_coeff());
}

BivariatePoly BivariatePoly::conj_coeffs() const {
    BivariatePoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c.conj();
    return r;
}

BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q) {
    BivariatePoly r = p;
    for (const auto& [m, c] : q.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

BivariatePoly operator-(const BivariatePoly& p) {
    BivariatePoly r;
    for (const auto& [m, c] : p.terms_) r.terms_[m] = -c;
    return r;
}

BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q) { return p + (-q); }

BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q) {
    BivariatePoly r;
    for (const auto& [mp, cp] : p.terms_) {
        for (const auto& [mq, cq] : q.terms_) {
            Monomial m{mp.a + mq.a, mp.b + mq.b};
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                GaussianRational c = cp * cq;
                if (!c.is_zero()) r.terms_[m] = c;
            } else {
                it->second += cp * cq;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

BivariatePoly BivariatePoly::scaled(const GaussianRational& c) const {
    BivariatePoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

BivariatePoly BivariatePoly::pow(int e) const {
    if (e < 0) throw std::domain_error("negative exponent");
    BivariatePoly r = one();
    BivariatePoly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

BivariatePoly BivariatePoly::derivative(Var v) const {
    BivariatePoly r;
    for (const auto& [m, c] : terms_) {
        if (v == Var::x && m.a > 0)
            r.terms_[{m.a - 1, m.b}] = c * GaussianRational(m.a);
        else if (v == Var::y && m.b > 0)
            r.terms_[{m.a, m.b - 1}] = c * GaussianRational(m.b);
    }
    return r;
}

std::vector<BivariatePoly> BivariatePoly::coeffs_in_x() const {
    std::vector<BivariatePoly> cs(static_cast<std::size_t>(std::max(deg_x(), 0)) + 1);
    for (const auto& [m, c] : terms_) cs[m.a].set_coeff(0, m.b, c);
    return cs;
}

BivariatePoly BivariatePoly::from_coeffs_in_x(const std::vector<BivariatePoly>& cs) {
    BivariatePoly r;
    for (std::size_t k = 0; k < cs.size(); ++k)
        for (const auto& [m, c] : cs[k].terms_) r.set_coeff(static_cast<int>(k) + m.a, m.b, c);
    return r;
}

BivariatePoly BivariatePoly::substitute_y(const GaussianRational& v) const {
    BivariatePoly r;
    for (const auto& [m, c] : terms_) {
        GaussianRational pw(1);
        for (int k = 0; k < m.b; ++k) pw *= v;
        auto it = r.terms_.find({m.a, 0});
        GaussianRational add = c * pw;
        if (it == r.terms_.end()) {
            if (!add.is_zero()) r.terms_[{m.a, 0}] = add;
        } else {
            it->second += add;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

BivariatePoly BivariatePoly::linear_change(const GaussianRational& m00, const GaussianRational& m01,
                                           const GaussianRational& m10, const GaussianRational& m11) const {
    BivariatePoly X = BivariatePoly::variable(Var::x).scaled(m00) +
                      BivariatePoly::variable(Var::y).scaled(m01);
    BivariatePoly Y = BivariatePoly::variable(Var::x).scaled(m10) +
                      BivariatePoly::variable(Var::y).scaled(m11);
    BivariatePoly r;
    for (const auto& [m, c] : terms_) r += (X.pow(m.a) * Y.pow(m.b)).scaled(c);
    return r;
}

int BivariatePoly::x_multiplicity() const {
    if (terms_.empty()) return 0;
    int k = terms_.begin()->first.a;
    for (const auto& [m, c] : terms_) k = std::min(k, m.a);
    return k;
}

int BivariatePoly::y_multiplicity() const {
    if (terms_.empty()) return 0;
    int k = terms_.begin()->first.b;
    for (const auto& [m, c] : terms_) k = std::min(k, m.b);
    return k;
}

BivariatePoly BivariatePoly::shift_down_x(int k) const {
    BivariatePoly r;
    for (const auto& [m, c] : terms_) {
        if (m.a < k) throw std::domain_error("shift_down_x: not divisible");
        r.terms_[{m.a - k, m.b}] = c;
    }
    return r;
}

BivariatePoly BivariatePoly::shift_down_y(int k) const {
    BivariatePoly r;
    for (const auto& [m, c] : terms_) {
        if (m.b < k) throw std::domain_error("shift_down_y: not divisible");
        r.terms_[{m.a, m.b - k}] = c;
    }
    return r;
}

GaussianRational BivariatePoly::eval_exact(const GaussianRational& x,
                                           const GaussianRational& y) const {
    GaussianRational s(0);
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (int k = 0; k < m.a; ++k) t *= x;
        for (int k = 0; k < m.b; ++k) t *= y;
        s += t;
    }
    return s;
}

std::complex<double> BivariatePoly::eval(std::complex<double> x, std::complex<double> y) const {
    return CompiledPoly(*this).eval(x, y);
}

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        GaussianRational cc = c;
        if (!first && cc.is_real() && cc.re() < 0) {
            os << " - ";
            cc = -cc;
        } else if (!first) {
            os << " + ";
        }
        std::string vars;
        if (m.a > 0) vars += "x" + (m.a > 1 ? "^" + std::to_string(m.a) : "");
        if (m.b > 0) {
            if (!vars.empty()) vars += "*";
            vars += "y" + (m.b > 1 ? "^" + std::to_string(m.b) : "");
        }
        if (vars.empty()) {
            os << cc.to_string();
        } else if (cc == GaussianRational(1)) {
            os << vars;
        } else if (cc == GaussianRational(-1)) {
            os << "-" << vars;
        } else {
            os << cc.to_string() << "*" << vars;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Division, gcd, resultant
// ---------------------------------------------------------------------------

namespace {

// Multivariate exact division in grlex order; returns false when not exact.
bool try_exact_divide(const BivariatePoly& p, const BivariatePoly& d, BivariatePoly* out) {
    if (d.is_zero()) throw std::domain_error("exact_divide: division by zero");
    BivariatePoly rem = p, q;
    const Monomial dm = d.terms().begin()->first;
    const GaussianRational dc = d.terms().begin()->second;
    while (!rem.is_zero()) {
        const Monomial rm = rem.terms().begin()->first;
        if (rm.a < dm.a || rm.b < dm.b) return false;
        Monomial qm{rm.a - dm.a, rm.b - dm.b};
        GaussianRational qc = rem.terms().begin()->second / dc;
        BivariatePoly t = BivariatePoly::monomial(qm.a, qm.b, qc);
        q += t;
        rem -= t * d;  // grlex leading term cancels exactly, so this terminates
    }
    *out = q;
    return true;
}

// Univariate polynomials in y: represented as BivariatePoly without x.
BivariatePoly gcd_univariate_y(BivariatePoly p, BivariatePoly q) {
    while (!q.is_zero()) {
        // monic Euclid
        q = q.normalized();
        // remainder of p by q
        while (!p.is_zero() && p.deg_y() >= q.deg_y()) {
            int sh = p.deg_y() - q.deg_y();
            GaussianRational lc = p.coeff(0, p.deg_y());
            BivariatePoly t = BivariatePoly::monomial(0, sh, lc);
            p -= t * q;
        }
        std::swap(p, q);
    }
    if (p.is_zero()) return p;
    return p.normalized();
}

// Content of p with respect to x: gcd in Q(i)[y] of the x-coefficients.
BivariatePoly content_x(const BivariatePoly& p) {
    BivariatePoly c;
    for (const auto& cy : p.coeffs_in_x()) {
        if (cy.is_zero()) continue;
        c = c.is_zero() ? cy.normalized() : gcd_univariate_y(c, cy);
        if (c.is_constant()) return BivariatePoly::one();
    }
    return c;
}

// Pseudo-remainder of p by q in (Q(i)[y])[x].
BivariatePoly pseudo_rem_x(BivariatePoly p, const BivariatePoly& q) {
    const int dq = q.deg_x();
    const BivariatePoly lq = q.coeffs_in_x()[dq];
    while (!p.is_zero() && p.deg_x() >= dq) {
        int dp = p.deg_x();
        BivariatePoly lp = p.coeffs_in_x()[dp];
        BivariatePoly xs = BivariatePoly::monomial(dp - dq, 0, GaussianRational(1));
        p = p * lq - q * xs * lp;
        if (!p.is_zero() && p.deg_x() >= dp) {
            // cancellation must strictly reduce the x-degree
            throw std::logic_error("pseudo_rem_x: degree did not drop");
        }
    }
    return p;
}

}  // namespace

BivariatePoly exact_divide(const BivariatePoly& p, const BivariatePoly& d) {
    BivariatePoly q;
    if (!try_exact_divide(p, d, &q)) throw std::domain_error("exact_divide: not divisible");
    return q;
}

BivariatePoly poly_gcd(const BivariatePoly& p, const BivariatePoly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("poly_gcd: both inputs are zero");
    if (p.is_zero()) return q.normalized();
    if (q.is_zero()) return p.normalized();
    if (p.is_constant() || q.is_constant()) return BivariatePoly::one();

    if (p.is_univariate_y() && q.is_univariate_y()) return gcd_univariate_y(p, q);
    if (p.is_univariate_y()) return gcd_univariate_y(p, content_x(q));
    if (q.is_univariate_y()) return gcd_univariate_y(q, content_x(p));

    // both involve x: primitive PRS in (Q(i)[y])[x]
    BivariatePoly cp = content_x(p), cq = content_x(q);
    BivariatePoly a = exact_divide(p, cp), b = exact_divide(q, cq);
    if (a.deg_x() < b.deg_x()) std::swap(a, b);
    while (!b.is_zero()) {
        BivariatePoly r = pseudo_rem_x(a, b);
        a = b;
        if (r.is_zero()) {
            b = BivariatePoly::zero();
        } else {
            BivariatePoly cr = content_x(r);
            b = cr.is_constant() ? r : exact_divide(r, cr);
        }
    }
    BivariatePoly ca = content_x(a);
    BivariatePoly prim = ca.is_constant() ? a : exact_divide(a, ca);
    BivariatePoly cont = gcd_univariate_y(cp, cq);
    return (prim * cont).normalized();
}

BivariatePoly resultant_x(const BivariatePoly& p, const BivariatePoly& q) {
    const int dp = p.deg_x(), dq = q.deg_x();
    if (dp <= 0 || dq <= 0)
        throw std::domain_error("resultant_x: both arguments need positive degree in x");

    // Sylvester matrix over Q(i)[y], Bareiss fraction-free elimination.
    const int n = dp + dq;
    std::vector<std::vector<BivariatePoly>> m(n, std::vector<BivariatePoly>(n));
    auto pc = p.coeffs_in_x();
    auto qc = q.coeffs_in_x();
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) m[r][r + dp - k] = pc[k];
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k) m[dq + r][r + dq - k] = qc[k];

    BivariatePoly prev = BivariatePoly::one();
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) { piv = r; break; }
            if (piv < 0) return BivariatePoly::zero();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                BivariatePoly num = m[r][c] * m[k][k] - m[r][k] * m[k][c];
                m[r][c] = exact_divide(num, prev);
            }
            m[r][k] = BivariatePoly::zero();
        }
        prev = m[k][k];
    }
    BivariatePoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

bool is_squarefree(const BivariatePoly& p) {
    if (p.is_zero()) return false;
    if (p.is_constant()) return true;
    BivariatePoly px = p.derivative(Var::x), py = p.derivative(Var::y);
    BivariatePoly g = px.is_zero() ? poly_gcd(p, py)
                    : py.is_zero() ? poly_gcd(p, px)
                                   : poly_gcd(poly_gcd(p, px), py);
    return g.is_constant();
}

BivariatePoly squarefree_part(const BivariatePoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part of zero");
    if (p.is_constant()) return BivariatePoly::one();
    if (p.is_univariate_y()) {
        BivariatePoly g = poly_gcd(p, p.derivative(Var::y));
        return exact_divide(p, g).normalized();
    }
    BivariatePoly c = content_x(p);
    BivariatePoly pp = c.is_constant() ? p : exact_divide(p, c);
    BivariatePoly g = poly_gcd(pp, pp.derivative(Var::x));
    BivariatePoly sf = exact_divide(pp, g);
    if (!c.is_constant()) sf *= squarefree_part(c);
    return sf.normalized();
}

// ---------------------------------------------------------------------------
// CompiledPoly
// ---------------------------------------------------------------------------

CompiledPoly::CompiledPoly(const BivariatePoly& p) {
    nx_ = std::max(p.deg_x(), 0) + 1;
    ny_ = std::max(p.deg_y(), 0) + 1;
    c_.assign(static_cast<std::size_t>(nx_) * ny_, {0.0, 0.0});
    for (const auto& [m, coeff] : p.terms()) {
        std::complex<double> v = coeff.to_complex();
        c_[static_cast<std::size_t>(m.a) * ny_ + m.b] = v;
        coeff_norm_ += std::abs(v);
    }
}

std::complex<double> CompiledPoly::eval(std::complex<double> x, std::complex<double> y) const {
    std::complex<double> acc{0.0, 0.0};
    for (int a = nx_ - 1; a >= 0; --a) {
        std::complex<double> row{0.0, 0.0};
        for (int b = ny_ - 1; b >= 0; --b)
            row = row * y + c_[static_cast<std::size_t>(a) * ny_ + b];
        acc = acc * x + row;
    }
    return acc;
}

std::vector<std::complex<double>> CompiledPoly::x_coeffs_at(std::complex<double> y) const {
    std::vector<std::complex<double>> out(static_cast<std::size_t>(nx_));
    for (int a = 0; a < nx_; ++a) {
        std::complex<double> row{0.0, 0.0};
        for (int b = ny_ - 1; b >= 0; --b)
            row = row * y + c_[static_cast<std::size_t>(a) * ny_ + b];
        out[a] = row;
    }
    return out;
}

double CompiledPoly::magnitude_bound(double R, double eta) const {
    double s = 0.0;
    for (int a = 0; a < nx_; ++a)
        for (int b = 0; b < ny_; ++b) {
            double v = std::abs(c_[static_cast<std::size_t>(a) * ny_ + b]);
            if (v == 0.0) continue;
            s += v * std::pow(R, a) * std::pow(eta, b);
        }
    return s;
}

}  // namespace lepoly
