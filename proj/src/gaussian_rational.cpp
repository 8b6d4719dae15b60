#include "lepoly/gaussian_rational.hpp"

#include <stdexcept>

namespace lepoly {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    mpq_class n = b.norm();
    return GaussianRational((a.re_ * b.re_ + a.im_ * b.im_) / n,
                            (a.im_ * b.re_ - a.re_ * b.im_) / n);
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string GaussianRational::to_string() const {
    if (im_ == 0) return rat_str(re_);
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = rat_str(im_) + "*i";
    }
    if (re_ == 0) return imag;
    std::string s = "(" + rat_str(re_);
    if (imag[0] != '-') s += "+";
    s += imag + ")";
    return s;
}

}  // namespace lepoly
