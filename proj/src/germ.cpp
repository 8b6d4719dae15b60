#include "lepoly/germ.hpp"

#include <cmath>
#include <stdexcept>

#include "lepoly/errors.hpp"

namespace lepoly {

MixedRealPoly critical_set_h(const BivariatePoly& f, const BivariatePoly& g) {
    BivariatePoly a = f * g.derivative(Var::x);
    BivariatePoly b = g * f.derivative(Var::x);
    return MixedRealPoly::norm_squared(a) - MixedRealPoly::norm_squared(b);
}

BivariatePoly polar_curve(const BivariatePoly& f, const BivariatePoly& g,
                          std::vector<std::string>* warnings) {
    if (f.is_constant()) throw std::invalid_argument("polar_curve: f is constant");
    if (!g.is_univariate_y())
        throw std::invalid_argument("polar_curve: g must depend only on y");
    BivariatePoly fx = f.derivative(Var::x);
    if (fx.is_zero()) {
        if (warnings) warnings->push_back("df/dx vanishes identically; empty polar curve");
        return BivariatePoly::one();
    }
    BivariatePoly fg = f * g;
    BivariatePoly curve = fx;
    if (!fg.is_zero()) {
        for (;;) {
            BivariatePoly d = poly_gcd(curve, fg);
            if (d.is_constant()) break;
            curve = exact_divide(curve, d);
            if (curve.is_constant()) break;
        }
    }
    if (curve.is_constant() && warnings)
        warnings->push_back("every component of {df/dx=0} lies in {fg=0}; empty polar curve");
    return curve.normalized();
}

namespace {

BivariatePoly swap_xy(const BivariatePoly& p) {
    BivariatePoly r;
    for (const auto& [m, c] : p.terms()) r.set_coeff(m.b, m.a, c);
    return r;
}

// 0 isolated in V(p, q)?  Exact: the gcd must not vanish at the origin, and
// the cofactors meet in finitely many points.
bool isolated_origin(const BivariatePoly& p, const BivariatePoly& q, std::string* how) {
    if (p.is_zero() && q.is_zero()) {
        if (how) *how = "both equations vanish identically";
        return false;
    }
    if (p.is_zero() || q.is_zero()) {
        const BivariatePoly& nz = p.is_zero() ? q : p;
        bool through_origin = nz.constant_term().is_zero();
        if (how)
            *how = through_origin ? "solution set is a curve through the origin"
                                  : "solution set misses the origin";
        return !through_origin;
    }
    if (!p.constant_term().is_zero() || !q.constant_term().is_zero()) {
        if (how) *how = "an equation does not vanish at the origin";
        return true;  // origin is not a solution at all
    }
    BivariatePoly G = poly_gcd(p, q);
    bool ok = !G.eval_exact(GaussianRational(0), GaussianRational(0)).is_zero();
    if (how) {
        *how = "gcd(p,q) = " + G.to_string() +
               (ok ? " does not vanish at 0; common zeros near 0 are isolated"
                   : " vanishes at 0; a common curve passes through 0");
    }
    return ok;
}

std::string resultant_order_note(const BivariatePoly& p, const BivariatePoly& q) {
    std::string note;
    if (p.deg_x() > 0 && q.deg_x() > 0) {
        BivariatePoly r = resultant_x(p, q);
        if (r.is_zero()) {
            note += "Res_x = 0; ";
        } else {
            note += "ord_0 Res_x = " + std::to_string(r.y_multiplicity()) + "; ";
        }
    }
    BivariatePoly ps = swap_xy(p), qs = swap_xy(q);
    if (ps.deg_x() > 0 && qs.deg_x() > 0) {
        BivariatePoly r = resultant_x(ps, qs);
        if (r.is_zero()) {
            note += "Res_y = 0";
        } else {
            note += "ord_0 Res_y = " + std::to_string(r.y_multiplicity());
        }
    }
    return note.empty() ? "resultants degenerate (an equation has degree 0)" : note;
}

PolynomialSystem classify_system(std::string name, std::vector<BivariatePoly> eqs) {
    PolynomialSystem sys;
    sys.name = std::move(name);
    sys.equations = std::move(eqs);

    bool origin_solves = true;
    for (const auto& e : sys.equations)
        if (!e.constant_term().is_zero()) origin_solves = false;
    if (!origin_solves) {
        sys.status = PolynomialSystem::Status::empty;
        sys.certificate = "an equation does not vanish at the origin";
        return sys;
    }
    std::vector<const BivariatePoly*> nz;
    for (const auto& e : sys.equations)
        if (!e.is_zero()) nz.push_back(&e);
    if (nz.size() < 2) {
        sys.status = PolynomialSystem::Status::uncertified;
        sys.certificate = "fewer than two independent equations";
        return sys;
    }
    for (std::size_t i = 0; i < nz.size(); ++i)
        for (std::size_t j = i + 1; j < nz.size(); ++j) {
            std::string how;
            if (isolated_origin(*nz[i], *nz[j], &how)) {
                sys.status = PolynomialSystem::Status::finite_at_origin;
                sys.certificate = how + "; " + resultant_order_note(*nz[i], *nz[j]);
                return sys;
            }
        }
    sys.status = PolynomialSystem::Status::uncertified;
    sys.certificate = "no coprime pair of equations found";
    return sys;
}

}  // namespace

SigmaDecomposition sigma_decomposition(const BivariatePoly& f, const BivariatePoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("sigma_decomposition: zero input");
    if (!is_squarefree(f)) throw std::invalid_argument("sigma_decomposition: f non-reduced");
    if (!g.is_constant() && !is_squarefree(g))
        throw std::invalid_argument("sigma_decomposition: g non-reduced");
    if (!f.is_constant() && !g.is_constant() && !poly_gcd(f, g).is_constant())
        throw std::invalid_argument("sigma_decomposition: gcd(f,g) != 1");

    SigmaDecomposition d;
    d.sigma_f = classify_system(
        "Sigma(f)", {f, f.derivative(Var::x), f.derivative(Var::y)});
    if (g.is_constant()) {
        PolynomialSystem sys;
        sys.name = "Sigma(g)";
        sys.equations = {g};
        sys.status = PolynomialSystem::Status::empty;
        sys.certificate = "g is a nonzero constant";
        d.sigma_g = sys;
        PolynomialSystem inter;
        inter.name = "{f=0} n {g=0}";
        inter.equations = {f, g};
        inter.status = PolynomialSystem::Status::empty;
        inter.certificate = "g is a nonzero constant";
        d.intersection = inter;
    } else {
        d.sigma_g = classify_system(
            "Sigma(g)", {g, g.derivative(Var::x), g.derivative(Var::y)});
        d.intersection = classify_system("{f=0} n {g=0}", {f, g});
    }
    return d;
}

HypothesisReport check_hypotheses(const BivariatePoly& f, const BivariatePoly& g) {
    HypothesisReport rep;
    auto& msg = rep.messages;

    if (f.is_zero() || g.is_zero()) {
        msg.push_back("f and g must be nonzero");
        return rep;
    }
    const bool g_const = g.is_constant();
    rep.mode = g_const ? GermMode::holomorphic : GermMode::fgbar;
    msg.push_back(g_const ? "mode: holomorphic (g constant)" : "mode: fgbar (g nonconstant)");

    rep.g_univariate = g.is_univariate_y();
    if (!rep.g_univariate) msg.push_back("g does not depend only on y");

    bool germ_ok = true;
    if (!f.constant_term().is_zero()) {
        msg.push_back("f(0,0) != 0: not a germ at the origin");
        germ_ok = false;
    }
    if (!g_const && !g.constant_term().is_zero()) {
        msg.push_back("g(0,0) != 0: nonconstant g must vanish at the origin");
        germ_ok = false;
    }
    if (f.is_constant()) {
        msg.push_back("f is constant");
        germ_ok = false;
    }

    rep.f_reduced = !f.is_constant() && is_squarefree(f);
    if (!rep.f_reduced) msg.push_back("f is not reduced (gcd(f, f_x, f_y) nonconstant)");
    rep.g_reduced = g_const || is_squarefree(g);
    if (!rep.g_reduced) msg.push_back("g is not reduced");

    if (g_const || f.is_constant()) {
        rep.coprime = true;
    } else {
        BivariatePoly G = poly_gcd(f, g);
        rep.coprime = G.is_constant();
        if (!rep.coprime) msg.push_back("gcd(f,g) = " + G.to_string() + " != 1");
    }

    rep.fg_isolated_singularity = false;
    if (germ_ok && rep.f_reduced && rep.g_reduced && rep.coprime) {
        BivariatePoly fg = g_const ? f : f * g;
        if (!is_squarefree(fg)) {
            msg.push_back("fg is not squarefree");
        } else {
            BivariatePoly p = fg.derivative(Var::x), q = fg.derivative(Var::y);
            std::string how;
            rep.fg_isolated_singularity = isolated_origin(p, q, &how);
            msg.push_back("critical system of fg: " + how + "; " + resultant_order_note(p, q));
        }
    } else if (germ_ok) {
        msg.push_back("isolated-singularity check skipped (earlier checks failed)");
    }
    if (!germ_ok) rep.fg_isolated_singularity = false;
    rep.germ_valid = germ_ok;
    return rep;
}

std::array<std::complex<double>, 4> fgbar_wirtinger(const BivariatePoly& f,
                                                    const BivariatePoly& g,
                                                    std::complex<double> x,
                                                    std::complex<double> y) {
    std::complex<double> fv = f.eval(x, y);
    std::complex<double> gv = g.eval(x, y);
    std::complex<double> fxv = f.derivative(Var::x).eval(x, y);
    std::complex<double> fyv = f.derivative(Var::y).eval(x, y);
    std::complex<double> gxv = g.derivative(Var::x).eval(x, y);
    std::complex<double> gyv = g.derivative(Var::y).eval(x, y);
    return {fxv * std::conj(gv), fv * std::conj(gxv), fyv * std::conj(gv),
            fv * std::conj(gyv)};
}

std::pair<double, double> fgbar_jacobian_singular_values(const BivariatePoly& f,
                                                         const BivariatePoly& g,
                                                         std::complex<double> x,
                                                         std::complex<double> y) {
    auto [hx, hxb, hy, hyb] = fgbar_wirtinger(f, g, x, y);
    const std::complex<double> I{0.0, 1.0};
    std::complex<double> cols[4] = {hx + hxb, I * (hx - hxb), hy + hyb, I * (hy - hyb)};
    double m00 = 0, m01 = 0, m11 = 0;
    for (const auto& c : cols) {
        m00 += c.real() * c.real();
        m01 += c.real() * c.imag();
        m11 += c.imag() * c.imag();
    }
    double t = m00 + m11;
    double disc = std::sqrt(std::max((m00 - m11) * (m00 - m11) + 4 * m01 * m01, 0.0));
    double lmax = std::max((t + disc) / 2, 0.0);
    double lmin = std::max((t - disc) / 2, 0.0);
    return {std::sqrt(lmin), std::sqrt(lmax)};
}

}  // namespace lepoly
