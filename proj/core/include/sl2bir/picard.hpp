#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sl2bir/intmatrix.hpp"

namespace sl2bir {

// Free Z-module with a chosen ordered basis, its intersection form, and
// (when meaningful) the canonical class in coordinates.
struct MarkedLattice {
    std::vector<std::string> labels;
    std::vector<std::vector<mpq_class>> gram;  // symmetric, rank x rank
    std::vector<mpz_class> K;                  // empty when the basis spans K-perp

    int rank() const { return static_cast<int>(labels.size()); }
    mpq_class pair(const std::vector<mpq_class>& u, const std::vector<mpq_class>& v) const;
    mpq_class kk() const;  // K.K; usage_error when K is unset
};

// One of the built-in lattice isometries, acting by matrix times column
// vector on the marked basis.
struct IsometryAction {
    std::string tag;
    IntMatrix m;
    MarkedLattice lattice;
    int declared_order;
    bool geometric;  // false for the case ruled out by the classification
    // Where a companion square is printed alongside, it is carried here so
    // the square identity can be checked against the transcription.
    std::optional<IntMatrix> printed_square;
    std::string note;
};

// Known tags: M6-i, M6-ii, M4-i, M4-ii, Zj1-alpha, Zj1-beta, Zj23-alpha,
// Zj23-beta, Zj1-red-alpha, Zj1-red-beta, Zj23-red-alpha, Zj23-red-beta.
std::vector<std::string> builtin_tags();
IsometryAction builtin_action(const std::string& tag);

// Exact check M^T G M = G.
bool preserves_form(const IsometryAction& act);
// Exact check M K = K; usage_error when the lattice has no K.
bool fixes_canonical(const IsometryAction& act);
// Smallest p <= 12 with M^p = I, or 0 when none.
int order_check(const IsometryAction& act);

// Product of the reduced 4x4 isometries rho_i = alpha^i beta along the
// letters; the first letter of the list acts first, so it is the rightmost
// factor of the product.  j is 1 or 23.
IntMatrix word_isometry(int j, const std::vector<int>& letters);

// Step record of the H_n recursion, coordinates (-a, -b, -c, l).
struct InequalityReport {
    bool ok = true;
    int first_violation_step = 0;   // 1-based; 0 when ok
    std::string violated;           // label of the first failed inequality
    std::vector<std::array<mpz_class, 4>> steps;  // H_1 .. H_n
    std::vector<mpz_class> ells;
};

// Iterates H_0 = (0,0,0,1) through rho_{i_1}, rho_{i_2}, ... and checks the
// case's inequalities at every step.  With n_max > letters.size() the word
// repeats cyclically until n_max steps are done.
InequalityReport verify_inequalities(int j, const std::vector<int>& letters, int n_max = 0);

// Sound lower-bound certificate spectral_radius(word_isometry) >= bound,
// via root isolation on the characteristic polynomial.
bool word_lambda_at_least(int j, const std::vector<int>& letters, const mpq_class& bound);

// Outcome of solving for the unknown pairings among E, E', E_tau on the
// 5-dimensional lattice, constrained by both 5x5 isometries and K.K, then
// auditing the claimed orthogonal basis of K-perp against the solution.
struct GramResult {
    bool solved;                        // all six unknown pairings determined
    MarkedLattice lattice;              // with the solved values filled in
    std::vector<std::string> violated;  // claim labels failing under the solution
    bool consistent() const { return solved && violated.empty(); }
};

GramResult derive_gram(int j);

}  // namespace sl2bir
