#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sl2bir/birmap.hpp"
#include "sl2bir/word.hpp"

namespace sl2bir {

// A family of homomorphisms SL(2,Z) -> Bir(P2) or Bir(P1xP1) together with
// its parameters.  Build one through the named factories; validate() checks
// the parameter constraints.
struct EmbeddingSpec {
    enum Family { theta_s, theta_minus, theta_eps, theta_e, theta_n, theta_P, theta_k };

    Family family = theta_s;
    Scalar eps = Scalar(1);        // theta_eps; nonzero
    bool eps_positive = true;      // hypothesis flag, recorded but not enforced
    long n = 0;                    // theta_n
    MultiPoly p_num{2}, p_den{2};  // theta_P: P = p_num/p_den, polynomials in x
    long k = 2;                    // theta_k; even, positive
    Scalar mu = Scalar(5);         // theta_k

    static EmbeddingSpec standard();                 // theta_s
    static EmbeddingSpec twisted();                  // theta_minus
    static EmbeddingSpec epsilon(const Scalar& e);   // theta_eps
    static EmbeddingSpec elliptic();                 // theta_e
    static EmbeddingSpec elliptic_n(long n);         // theta_n
    static EmbeddingSpec parabolic();                // theta_P with P = (x-2)/(x-3)
    static EmbeddingSpec parabolic(MultiPoly num, MultiPoly den);
    static EmbeddingSpec hyperbolic(long k, const Scalar& mu = Scalar(5));

    void validate() const;  // throws usage_error on bad parameters
    Ambient ambient() const;
    // Whether evaluation goes through the syllable decomposition (families
    // whose defining display is on S and RS) rather than letter by letter.
    bool on_rs() const { return family == theta_P || family == theta_k; }

    std::string family_name() const;
    static Family family_from_name(const std::string& name);

    std::string to_json() const;
    static EmbeddingSpec from_json(const std::string& text);
};

// The images of the defining generators: S paired with R, or S paired with
// RS for the families defined on (S, RS).
struct GeneratorImages {
    BirMap s;
    BirMap second;
    bool second_is_rs;
    Ambient ambient;
};

GeneratorImages generator_images(const EmbeddingSpec& spec);

// Image of a word under the family, in lowest terms.
BirMap evaluate(const EmbeddingSpec& spec, const GroupWord& w, const Budget* budget = nullptr);

// Presentation relations S^4 = (RS)^3 = 1, S^2(RS) = (RS)S^2, checked on the
// generator images, plus the non-triviality witness theta(S^2) != id.
struct RelationReport {
    bool s4_id;
    bool rs3_id;
    bool central_commutes;
    bool s2_nontrivial;
    bool all() const { return s4_id && rs3_id && central_commutes && s2_nontrivial; }
};

RelationReport verify_relations(const EmbeddingSpec& spec, const Budget* budget = nullptr);

// Bounded certificate that the listed values of P1 sit on pairwise distinct
// SL(2,Z)-orbits under x -> (ax+b)/(cx+d) and that none has isotropy, over
// all group elements of word length at most depth (mod the center, which
// acts trivially).  Points at infinity are handled projectively.
bool orbit_disjointness_check(const std::vector<Scalar>& values, int depth);

// The degree-3 quotient map P1xP1 -> P3 whose image is the Cayley cubic
// surface XYZ + WXY + WXZ + WYZ = 0; four 2-variable components in affine
// (x, y), order (W, X, Y, Z).
std::vector<MultiPoly> cayley_quotient();

// Whether the quotient map is invariant under the given self-map of P1xP1
// (equal tuples up to projective scale after substitution).
bool cayley_invariant_under(const BirMap& tau);

struct CayleyReport {
    bool involution_invariant;  // invariance under (x, y) -> (1/x, 1/y)
    bool on_cubic;              // components satisfy the cubic identically
    bool all() const { return involution_invariant && on_cubic; }
};

CayleyReport cayley_check();

// Univariate polynomial in x over Q(i), e.g. "x^2 - 3/2x + i"; returned
// with two variable slots so it can feed the affine map builders.
MultiPoly parse_poly_x(const std::string& text);
// "num/den" with each side parenthesized when both are present, e.g.
// "(x-2)/(x-3)"; a bare polynomial means denominator 1.
std::pair<MultiPoly, MultiPoly> parse_rational_x(const std::string& text);

}  // namespace sl2bir
