#pragma once

#include <gmpxx.h>

#include <string>

namespace sl2bir {

// Element of Q or of the Gaussian field Q(i), exact.  The `gaussian` flag
// records which field the value was constructed in; it is sticky under
// arithmetic (any Gaussian operand makes a Gaussian result) so purely
// rational computations stay visibly rational.  When the flag is off the
// imaginary part is zero.
class Scalar {
public:
    Scalar() : re_(0), im_(0), gaussian_(false) {}
    Scalar(long n) : re_(n), im_(0), gaussian_(false) {}
    Scalar(long num, long den);
    explicit Scalar(const mpq_class& re) : re_(re), im_(0), gaussian_(false) { re_.canonicalize(); }
    Scalar(const mpq_class& re, const mpq_class& im);

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    // Accepts "n", "n/d", "a+b/c*i", "i", "-i", "3i", "1/2i".
    static Scalar parse(const std::string& text);

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }
    bool is_gaussian() const { return gaussian_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    // Real and strictly positive; the hypothesis checks want this.
    bool is_positive_real() const { return im_ == 0 && re_ > 0; }

    Scalar operator-() const;
    Scalar conj() const;
    // re^2 + im^2, as a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;  // throws std::domain_error on zero
    Scalar pow(long e) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // "3/2", "i", "1/2-i", "2+3/4i"; exact, parseable back.
    std::string str() const;
    double approx_real() const { return re_.get_d(); }

private:
    mpq_class re_, im_;
    bool gaussian_;
};

}  // namespace sl2bir
