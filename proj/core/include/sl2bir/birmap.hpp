#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2bir/poly.hpp"

namespace sl2bir {

enum class Ambient { P2, P1xP1 };

// Homogeneous coordinates: 3 entries for P2, 2+2 for P1xP1 (per-factor
// tuples never simultaneously zero).
struct ProjPoint {
    Ambient ambient;
    std::vector<Scalar> coords;

    static ProjPoint p2(Scalar x, Scalar y, Scalar z);
    static ProjPoint p1xp1(Scalar x1, Scalar x2, Scalar y1, Scalar y2);
    // (x, y) as a point of either ambient.
    static ProjPoint affine(Ambient amb, const Scalar& x, const Scalar& y);

    friend bool operator==(const ProjPoint& p, const ProjPoint& q);  // projective equality
    std::string str() const;
};

struct Quadridegree {
    int d1, d2, d3, d4;
    int total() const { return d1 + d2 + d3 + d4; }
    friend bool operator==(const Quadridegree& a, const Quadridegree& b) {
        return a.d1 == b.d1 && a.d2 == b.d2 && a.d3 == b.d3 && a.d4 == b.d4;
    }
    std::string str() const;
};

// Birational self-map, stored in lowest terms: for P2 three homogeneous
// components of a common degree with gcd 1; for P1xP1 four bihomogeneous
// components ((P1:P2),(P3:P4)) with gcd(P1,P2) = gcd(P3,P4) = 1 and common
// bidegrees within each pair.
class BirMap {
public:
    static BirMap p2(MultiPoly c0, MultiPoly c1, MultiPoly c2);
    static BirMap p1xp1(MultiPoly p1, MultiPoly p2, MultiPoly p3, MultiPoly p4);
    static BirMap identity(Ambient amb);

    // Affine entry: coordinate functions given as fractions of 2-variable
    // polynomials in (x, y); homogenized here.
    static BirMap affine_p2(const MultiPoly& nx, const MultiPoly& dx, const MultiPoly& ny,
                            const MultiPoly& dy);
    static BirMap affine_p1xp1(const MultiPoly& nx, const MultiPoly& dx, const MultiPoly& ny,
                               const MultiPoly& dy);

    Ambient ambient() const { return ambient_; }
    const std::vector<MultiPoly>& comps() const { return comps_; }

    int degree() const;                // P2 only
    Quadridegree quadridegree() const;  // P1xP1 only
    // Degree for growth bookkeeping: the P2 degree, or the sum of the four
    // quadridegree entries.
    long total_degree() const;

    // g after f (substitution, then division by the component gcd).
    static BirMap compose(const BirMap& g, const BirMap& f, const Budget* budget = nullptr);

    bool is_base_point(const ProjPoint& p) const;
    ProjPoint apply(const ProjPoint& p) const;  // throws degenerate_error on base-points
    // Equality as rational maps (cross-multiplication per projective factor).
    static bool equals(const BirMap& f, const BirMap& g);
    bool is_identity() const { return equals(*this, identity(ambient_)); }

    const std::optional<std::string>& inverse_tag() const { return inverse_tag_; }
    void set_inverse_tag(std::string tag) { inverse_tag_ = std::move(tag); }

    std::string str() const;
    std::string to_json() const;
    static BirMap from_json(const std::string& text);

private:
    BirMap(Ambient amb, std::vector<MultiPoly> comps);
    void reduce();  // divide out common factors (per pair on P1xP1)

    Ambient ambient_;
    std::vector<MultiPoly> comps_;
    std::optional<std::string> inverse_tag_;
};

// Total degrees of f^1 .. f^N by repeated left-composition.  Throws
// resource_error naming the iterate reached when the budget runs out.
std::vector<long> iterate_degrees(const BirMap& f, int N, const Budget* budget = nullptr);

struct GrowthClass {
    enum Tag { bounded, linear, quadratic, exponential, undetermined } tag;
    std::vector<long> window;   // the tail entries the decision looked at
    double tail_ratio = 0.0;    // smallest consecutive ratio over the tail

    std::string str() const;
};

// Window/threshold defaults: tail of 4 entries, exponential when every
// consecutive tail ratio is at least 1 + 1/10.
GrowthClass classify_growth(const std::vector<long>& seq, int window = 4,
                            const mpq_class& delta = mpq_class(1, 10));

struct LambdaEstimate {
    int N;
    double root_estimate;       // (deg f^N)^(1/N)
    double last_ratio;          // deg f^N / deg f^(N-1)
    mpq_class exact_last_ratio;
    std::vector<long> degrees;
};

LambdaEstimate dynamical_degree_estimate(const BirMap& f, int N, const Budget* budget = nullptr);

}  // namespace sl2bir
