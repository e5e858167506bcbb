#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace sl2bir {

// Closed interval with rational endpoints.
struct RatInterval {
    mpq_class lo, hi;
    mpq_class width() const { return hi - lo; }
    double mid() const { return mpq_class((lo + hi) / 2).get_d(); }
};

// Dense univariate polynomial over Q, for characteristic polynomials and
// root certification.  Coefficient k multiplies t^k.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<mpq_class> coeffs);
    static UniPoly constant(const mpq_class& c) { return UniPoly({c}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    mpq_class coeff(int k) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const mpq_class& s) const;
    UniPoly monic() const;
    UniPoly derivative() const;
    // Remainder of *this by d (field division).
    UniPoly rem(const UniPoly& d) const;
    static UniPoly gcd(UniPoly a, UniPoly b);  // monic
    UniPoly squarefree_part() const;

    mpq_class eval(const mpq_class& x) const;
    // p(s*t) as a polynomial in t.
    UniPoly scale_arg(const mpq_class& s) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

// True iff every complex root of p lies in the open disk |z| < radius.
// Exact (Schur recursion on reflection coefficients, rational arithmetic).
bool roots_in_open_disk(const UniPoly& p, const mpq_class& radius);

// Count of distinct real roots of p in (a, b], by Sturm sequences on the
// square-free part.
int count_real_roots(const UniPoly& p, const mpq_class& a, const mpq_class& b);

// Interval of width <= tol around the largest real root, or nullopt when p
// has none.
std::optional<RatInterval> max_real_root(const UniPoly& p, const mpq_class& tol);

// Interval of width <= tol certified to contain max |root| over all complex
// roots, by bisection on the disk predicate.
RatInterval max_abs_root(const UniPoly& p, const mpq_class& tol);

}  // namespace sl2bir
