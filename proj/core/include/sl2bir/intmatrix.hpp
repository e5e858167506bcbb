#pragma once

#include <gmpxx.h>

#include <vector>

#include "sl2bir/unipoly.hpp"

namespace sl2bir {

// Small square matrix with exact integer entries (lattice actions and
// word products live here; n stays at most 5).
class IntMatrix {
public:
    explicit IntMatrix(int n);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(int n);

    int size() const { return n_; }
    mpz_class& at(int r, int c) { return e_[r * n_ + c]; }
    const mpz_class& at(int r, int c) const { return e_[r * n_ + c]; }

    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    IntMatrix pow(int e) const;
    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;

    bool is_identity() const;
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    int n_;
    std::vector<mpz_class> e_;
};

// det(tI - m), exact (Faddeev-LeVerrier; the divisions are exact).
UniPoly char_poly(const IntMatrix& m);

// Interval of width <= tol certified to contain the largest eigenvalue
// modulus, via the exact disk test on char_poly.
RatInterval spectral_radius(const IntMatrix& m, const mpq_class& tol);

// Primitive integer basis (content 1, first nonzero entry positive) of the
// common eigenvalue-1 space of all the matrices.
std::vector<std::vector<mpz_class>> fixed_subspace(const std::vector<IntMatrix>& ms);

}  // namespace sl2bir
