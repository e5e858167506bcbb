#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sl2bir/errors.hpp"
#include "sl2bir/scalar.hpp"

namespace sl2bir {

// Exponent vector; entries past the variable count stay zero.
using Exp = std::array<int, 4>;

// Graded lexicographic order, ascending (total degree first, then lex with
// earlier variables heavier).  The leading term of a polynomial is the
// largest one, i.e. rbegin() of a map with this comparator.
struct GradedLexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        int da = a[0] + a[1] + a[2] + a[3];
        int db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da < db;
        for (int v = 0; v < 4; ++v)
            if (a[v] != b[v]) return a[v] < b[v];
        return false;
    }
};

// Homogeneity metadata, recomputed on construction.  `bi` splits four
// variables as (x1,x2 | y1,y2), the two projective factors of P1xP1.
struct Grading {
    bool total = false;
    int d = 0;
    bool bi = false;
    int d1 = 0, d2 = 0;
};

// Budget for term-explosion-prone operations.  Work units are pairwise term
// products weighted by operand coefficient size, so the estimate tracks wall
// time even when term counts stay modest but coefficients balloon.
// `work_cap` bounds one multiplication, so a doomed product fails before
// thrashing rather than after; `total_cap` bounds the work accumulated
// across a whole computation, so a run of individually legal steps cannot
// thrash either.
struct Budget {
    std::size_t term_cap;
    std::size_t work_cap;
    std::size_t total_cap;
    mutable std::size_t work_used = 0;
    explicit Budget(std::size_t terms)
        : term_cap(terms), work_cap(terms * 8), total_cap(terms * 1024) {}
};

// Routes a budget into the composite helpers (gcd, exact division) that run
// inside other operations and would otherwise escape accounting.  Applies to
// the current thread for the scope's lifetime; scopes nest, the innermost
// one wins.
class BudgetScope {
public:
    explicit BudgetScope(const Budget* b);
    ~BudgetScope();
    BudgetScope(const BudgetScope&) = delete;
    BudgetScope& operator=(const BudgetScope&) = delete;

private:
    const Budget* prev_;
};

// Sparse multivariate polynomial over Q(i) in 1..4 variables.
class MultiPoly {
public:
    using TermMap = std::map<Exp, Scalar, GradedLexLess>;

    explicit MultiPoly(int nvars = 1);
    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, const Scalar& c);
    static MultiPoly variable(int nvars, int v);
    static MultiPoly monomial(int nvars, const Exp& e, const Scalar& c);
    static MultiPoly from_terms(int nvars, const std::vector<std::pair<Exp, Scalar>>& ts);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Grading& grading() const { return grading_; }

    int total_degree() const;  // max over terms; -1 for zero
    int degree_in(int v) const;
    Scalar leading_coeff() const;  // graded-lex; zero for the zero polynomial
    Scalar coeff(const Exp& e) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Scalar& c) const;
    MultiPoly pow(int e) const;

    // Product with an explicit budget; throws resource_error when either the
    // work estimate or the result size exceeds it.
    static MultiPoly mul(const MultiPoly& a, const MultiPoly& b, const Budget* budget);

    // Leading coefficient 1 (no-op on zero).
    MultiPoly normalized() const;
    // Quotient when division is exact, nullopt otherwise.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

    Scalar eval(const std::vector<Scalar>& point) const;
    // Plug images[v] in for variable v; all images share a variable count,
    // which becomes the result's.  Budget may be null for unlimited.
    MultiPoly substitute(const std::vector<MultiPoly>& images, const Budget* budget) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void insert_term(const Exp& e, const Scalar& c);
    void regrade();

    int nvars_;
    Grading grading_;
    TermMap terms_;
};

// GCD by content/primitive-part reduction to univariate subresultant
// remainder sequences along the variable of highest degree; result has
// leading coefficient 1 under graded lex.  gcd(0, q) = q normalized.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

// Fast one-sided coprimality certificate: reduces both polynomials modulo a
// word-size prime congruent to 3 mod 4 (so Z[i]/p is a field) and computes
// the gcd there.  A constant modular gcd proves the rational gcd is constant
// provided both inputs are homogeneous or bihomogeneous (a primitive common
// factor would survive reduction with its degree intact).  Returns true only
// with that certificate; false means "unknown, do the exact gcd".
bool certified_coprime(const MultiPoly& p, const MultiPoly& q);

}  // namespace sl2bir
