#pragma once

#include <complex>
#include <map>
#include <string>

#include "lepoly/bivariate_poly.hpp"

namespace lepoly {

/// Exponent quadruple of x^a xbar^ab y^b ybar^bb.
struct MixedMonomial {
    int a = 0, ab = 0, b = 0, bb = 0;
    friend bool operator==(const MixedMonomial& l, const MixedMonomial& r) {
        return l.a == r.a && l.ab == r.ab && l.b == r.b && l.bb == r.bb;
    }
    friend bool operator<(const MixedMonomial& l, const MixedMonomial& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.ab != r.ab) return l.ab < r.ab;
        if (l.b != r.b) return l.b < r.b;
        return l.bb < r.bb;
    }
};

/// Polynomial in x, xbar, y, ybar over Q(i).  Real-valued iff closed under
/// the conjugation symmetry (a,ab,b,bb) -> (ab,a,bb,b) with conjugated
/// coefficients.
class MixedRealPoly {
public:
    using TermMap = std::map<MixedMonomial, GaussianRational>;

    MixedRealPoly() = default;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const MixedMonomial& m, const GaussianRational& c);

    /// p(x,y) viewed as a mixed polynomial (no conjugate exponents).
    static MixedRealPoly holomorphic(const BivariatePoly& p);
    /// conj(p)(x,y): conjugated coefficients on xbar/ybar exponents.
    static MixedRealPoly antiholomorphic(const BivariatePoly& p);
    /// |p|^2 = p * conj(p), exact.
    static MixedRealPoly norm_squared(const BivariatePoly& p);

    friend MixedRealPoly operator+(const MixedRealPoly& p, const MixedRealPoly& q);
    friend MixedRealPoly operator-(const MixedRealPoly& p, const MixedRealPoly& q);
    friend MixedRealPoly operator*(const MixedRealPoly& p, const MixedRealPoly& q);
    friend bool operator==(const MixedRealPoly& p, const MixedRealPoly& q) {
        return p.terms_ == q.terms_;
    }

    bool is_conjugation_symmetric() const;

    std::complex<double> eval(std::complex<double> x, std::complex<double> y) const;

    std::string to_string() const;

private:
    TermMap terms_;
};

}  // namespace lepoly
