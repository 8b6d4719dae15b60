#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "lepoly/gaussian_rational.hpp"

namespace lepoly {

enum class Var { x, y };

/// Exponent pair of a monomial x^a y^b.
struct Monomial {
    int a = 0;  // x exponent
    int b = 0;  // y exponent

    int total() const { return a + b; }
    friend bool operator==(const Monomial& l, const Monomial& r) {
        return l.a == r.a && l.b == r.b;
    }
};

/// Graded-lex with x > y, descending, so the map begins at the leading term.
struct GrlexDesc {
    bool operator()(const Monomial& l, const Monomial& r) const {
        if (l.total() != r.total()) return l.total() > r.total();
        return l.a > r.a;
    }
};

/// Polynomial in x, y over Q(i).  Zero coefficients are never stored; the
/// zero polynomial is the empty map.
class BivariatePoly {
public:
    using TermMap = std::map<Monomial, GaussianRational, GrlexDesc>;

    BivariatePoly() = default;
    explicit BivariatePoly(const GaussianRational& c) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }

    static BivariatePoly zero() { return {}; }
    static BivariatePoly one() { return BivariatePoly(GaussianRational(1)); }
    static BivariatePoly variable(Var v) {
        BivariatePoly p;
        p.terms_[{v == Var::x ? 1 : 0, v == Var::x ? 0 : 1}] = GaussianRational(1);
        return p;
    }
    static BivariatePoly monomial(int a, int b, const GaussianRational& c) {
        BivariatePoly p;
        if (!c.is_zero()) p.terms_[{a, b}] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
    }
    /// True when no term involves x (univariate in y, constants included).
    bool is_univariate_y() const;

    GaussianRational coeff(int a, int b) const;
    GaussianRational constant_term() const { return coeff(0, 0); }
    void set_coeff(int a, int b, const GaussianRational& c);

    int deg_x() const;
    int deg_y() const;
    int total_degree() const;  // -1 for the zero polynomial
    /// Smallest total degree among terms (order of vanishing at 0); -1 if zero.
    int order_at_origin() const;

    const GaussianRational& leading_coeff() const;  // grlex leading term
    /// Divides by the grlex leading coefficient.
    BivariatePoly normalized() const;

    BivariatePoly conj_coeffs() const;  // conjugate every coefficient

    friend BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q);
    friend BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q);
    friend BivariatePoly operator-(const BivariatePoly& p);
    friend BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q);
    BivariatePoly& operator+=(const BivariatePoly& o) { return *this = *this + o; }
    BivariatePoly& operator-=(const BivariatePoly& o) { return *this = *this - o; }
    BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }
    friend bool operator==(const BivariatePoly& p, const BivariatePoly& q) {
        return p.terms_ == q.terms_;
    }

    BivariatePoly scaled(const GaussianRational& c) const;
    BivariatePoly pow(int e) const;

    BivariatePoly derivative(Var v) const;

    /// Coefficients of x^k as polynomials in y, k = 0..deg_x.
    std::vector<BivariatePoly> coeffs_in_x() const;
    static BivariatePoly from_coeffs_in_x(const std::vector<BivariatePoly>& cs);
    /// Substitute y -> value (exact), leaving a polynomial in x.
    BivariatePoly substitute_y(const GaussianRational& v) const;
    /// Linear change of coordinates x -> m00*x + m01*y, y -> m10*x + m11*y.
    BivariatePoly linear_change(const GaussianRational& m00, const GaussianRational& m01,
                                const GaussianRational& m10, const GaussianRational& m11) const;

    /// Largest k with x^k | p (0 for p=0), and the quotient by x^k / y^k.
    int x_multiplicity() const;
    int y_multiplicity() const;
    BivariatePoly shift_down_x(int k) const;  // divide by x^k, must be exact
    BivariatePoly shift_down_y(int k) const;

    GaussianRational eval_exact(const GaussianRational& x, const GaussianRational& y) const;
    std::complex<double> eval(std::complex<double> x, std::complex<double> y) const;

    std::string to_string() const;

private:
    TermMap terms_;
};

/// Exact quotient p / d; throws std::domain_error when d does not divide p.
BivariatePoly exact_divide(const BivariatePoly& p, const BivariatePoly& d);

/// Normalized gcd (grlex-monic).  Errors when both arguments are zero.
BivariatePoly poly_gcd(const BivariatePoly& p, const BivariatePoly& q);

/// Sylvester resultant eliminating x; both arguments need positive x-degree.
BivariatePoly resultant_x(const BivariatePoly& p, const BivariatePoly& q);

/// gcd(p, p_x, p_y) is constant  <=>  p squarefree.
bool is_squarefree(const BivariatePoly& p);

/// Product of the distinct irreducible factors (monic).
BivariatePoly squarefree_part(const BivariatePoly& p);

/// Fast repeated evaluation: dense coefficient grid, Horner in both variables.
class CompiledPoly {
public:
    CompiledPoly() = default;
    explicit CompiledPoly(const BivariatePoly& p);
    std::complex<double> eval(std::complex<double> x, std::complex<double> y) const;
    /// Coefficients in x of p(., y), constant-first.
    std::vector<std::complex<double>> x_coeffs_at(std::complex<double> y) const;
    int deg_x() const { return nx_ - 1; }
    double coeff_norm() const { return coeff_norm_; }
    /// Sum_k |a_k(y)| R^a eta^b upper bound used for escape certificates.
    double magnitude_bound(double R, double eta) const;

private:
    int nx_ = 0, ny_ = 0;  // grid extents (deg+1)
    std::vector<std::complex<double>> c_;  // row-major [a*ny_+b]
    double coeff_norm_ = 0.0;
};

}  // namespace lepoly
