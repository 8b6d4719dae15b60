#include "lepoly/mixed_poly.hpp"

#include <sstream>

namespace lepoly {

void MixedRealPoly::add(const MixedMonomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MixedRealPoly MixedRealPoly::holomorphic(const BivariatePoly& p) {
    MixedRealPoly r;
    for (const auto& [m, c] : p.terms()) r.add({m.a, 0, m.b, 0}, c);
    return r;
}

MixedRealPoly MixedRealPoly::antiholomorphic(const BivariatePoly& p) {
    MixedRealPoly r;
    for (const auto& [m, c] : p.terms()) r.add({0, m.a, 0, m.b}, c.conj());
    return r;
}

MixedRealPoly MixedRealPoly::norm_squared(const BivariatePoly& p) {
    return holomorphic(p) * antiholomorphic(p);
}

MixedRealPoly operator+(const MixedRealPoly& p, const MixedRealPoly& q) {
    MixedRealPoly r = p;
    for (const auto& [m, c] : q.terms_) r.add(m, c);
    return r;
}

MixedRealPoly operator-(const MixedRealPoly& p, const MixedRealPoly& q) {
    MixedRealPoly r = p;
    for (const auto& [m, c] : q.terms_) r.add(m, -c);
    return r;
}

MixedRealPoly operator*(const MixedRealPoly& p, const MixedRealPoly& q) {
    MixedRealPoly r;
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_)
            r.add({mp.a + mq.a, mp.ab + mq.ab, mp.b + mq.b, mp.bb + mq.bb}, cp * cq);
    return r;
}

bool MixedRealPoly::is_conjugation_symmetric() const {
    for (const auto& [m, c] : terms_) {
        MixedMonomial mirror{m.ab, m.a, m.bb, m.b};
        auto it = terms_.find(mirror);
        if (it == terms_.end() || it->second != c.conj()) return false;
    }
    return true;
}

std::complex<double> MixedRealPoly::eval(std::complex<double> x, std::complex<double> y) const {
    std::complex<double> s{0.0, 0.0};
    std::complex<double> xb = std::conj(x), yb = std::conj(y);
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int k = 0; k < m.a; ++k) t *= x;
        for (int k = 0; k < m.ab; ++k) t *= xb;
        for (int k = 0; k < m.b; ++k) t *= y;
        for (int k = 0; k < m.bb; ++k) t *= yb;
        s += t;
    }
    return s;
}

std::string MixedRealPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << c.to_string();
        if (m.a) os << "*x^" << m.a;
        if (m.ab) os << "*xb^" << m.ab;
        if (m.b) os << "*y^" << m.b;
        if (m.bb) os << "*yb^" << m.bb;
        first = false;
    }
    return os.str();
}

}  // namespace lepoly
