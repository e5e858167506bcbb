#include "sl2bir/scalar.hpp"

#include <stdexcept>

namespace sl2bir {

Scalar::Scalar(long num, long den) : re_(num, den), im_(0), gaussian_(false) {
    if (den == 0) throw std::domain_error("zero denominator");
    re_.canonicalize();
}

Scalar::Scalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im), gaussian_(true) {
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.re_ = -r.re_;
    r.im_ = -r.im_;
    return r;
}

Scalar Scalar::conj() const {
    Scalar r(*this);
    r.im_ = -r.im_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    mpq_class n = norm();
    Scalar r(*this);
    r.re_ = re_ / n;
    r.im_ = -im_ / n;
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc(1);
    acc.gaussian_ = gaussian_;
    Scalar base(*this);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.re_ = a.re_ + b.re_;
    r.im_ = a.im_ + b.im_;
    r.gaussian_ = a.gaussian_ || b.gaussian_;
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.re_ = a.re_ - b.re_;
    r.im_ = a.im_ - b.im_;
    r.gaussian_ = a.gaussian_ || b.gaussian_;
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.re_ = a.re_ * b.re_ - a.im_ * b.im_;
    r.im_ = a.re_ * b.im_ + a.im_ * b.re_;
    r.gaussian_ = a.gaussian_ || b.gaussian_;
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

namespace {

// One summand: [sign] digits [/digits] [i], or [sign] i.
std::size_t parse_term(const std::string& s, std::size_t pos, mpq_class& rat, bool& imag) {
    std::size_t n = s.size();
    bool neg = false;
    if (pos < n && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    while (pos < n && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
        digits += s[pos++];
    imag = false;
    if (pos < n && (s[pos] == 'i' || s[pos] == 'I')) {
        imag = true;
        ++pos;
    }
    if (digits.empty()) {
        if (!imag) throw std::invalid_argument("bad scalar literal: " + s);
        rat = 1;
    } else {
        if (digits.front() == '/' || digits.back() == '/') throw std::invalid_argument("bad scalar literal: " + s);
        rat = mpq_class(digits);
        rat.canonicalize();
    }
    if (neg) rat = -rat;
    return pos;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar literal");
    mpq_class re = 0, im = 0;
    bool saw_imag = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        mpq_class rat;
        bool imag = false;
        pos = parse_term(s, pos, rat, imag);
        if (imag) {
            im += rat;
            saw_imag = true;
        } else {
            re += rat;
        }
    }
    if (saw_imag) return Scalar(re, im);
    return Scalar(re);
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string Scalar::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rat_str(im_) + "i";
    if (re_ == 0) return imag;
    if (im_ > 0) return rat_str(re_) + "+" + imag;
    return rat_str(re_) + imag;
}

}  // namespace sl2bir
