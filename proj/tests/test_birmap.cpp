#include <doctest.h>

#include "sl2bir/birmap.hpp"
#include "sl2bir/errors.hpp"

using namespace sl2bir;

namespace {

MultiPoly v3(int i) { return MultiPoly::variable(3, i); }
MultiPoly v2(int i) { return MultiPoly::variable(2, i); }
MultiPoly c2(long n) { return MultiPoly::constant(2, Scalar(n)); }

// Quadratic involution (yz : xz : xy).
BirMap cremona_involution() { return BirMap::p2(v3(1) * v3(2), v3(0) * v3(2), v3(0) * v3(1)); }

}  // namespace

TEST_SUITE("birmap") {

TEST_CASE("projective points") {
    ProjPoint p = ProjPoint::p2(Scalar(1), Scalar(2), Scalar(3));
    ProjPoint q = ProjPoint::p2(Scalar(2), Scalar(4), Scalar(6));
    CHECK(p == q);
    CHECK_FALSE(p == ProjPoint::p2(Scalar(1), Scalar(2), Scalar(4)));
    ProjPoint a = ProjPoint::p1xp1(Scalar(1), Scalar(2), Scalar(3), Scalar(1));
    CHECK(a == ProjPoint::affine(Ambient::P1xP1, Scalar(1, 2), Scalar(3)));
    CHECK_THROWS_AS(ProjPoint::p2(Scalar(0), Scalar(0), Scalar(0)), usage_error);
    CHECK_THROWS_AS(ProjPoint::p1xp1(Scalar(0), Scalar(0), Scalar(1), Scalar(1)), usage_error);
}

TEST_CASE("construction reduces to lowest terms") {
    // Common factor x divides out, leaving the identity.
    BirMap m = BirMap::p2(v3(0) * v3(0), v3(0) * v3(1), v3(0) * v3(2));
    CHECK(m.degree() == 1);
    CHECK(m.is_identity());
    // Scaling the components does not change the map.
    BirMap twice = BirMap::p2(v3(0).scaled(Scalar(2)), v3(1).scaled(Scalar(2)),
                              v3(2).scaled(Scalar(2)));
    CHECK(BirMap::equals(twice, BirMap::identity(Ambient::P2)));
    CHECK_THROWS_AS(BirMap::p2(v3(0), v3(0), v3(0) * v3(1)), usage_error);
}

TEST_CASE("affine entry and quadridegree") {
    // (x, y) -> (y, 1/x) on P1xP1.
    BirMap m = BirMap::affine_p1xp1(v2(1), c2(1), c2(1), v2(0));
    CHECK(m.quadridegree() == Quadridegree{0, 1, 1, 0});
    CHECK(m.total_degree() == 2);
    ProjPoint img = m.apply(ProjPoint::affine(Ambient::P1xP1, Scalar(2), Scalar(5)));
    CHECK(img == ProjPoint::affine(Ambient::P1xP1, Scalar(5), Scalar(1, 2)));
    CHECK_THROWS_AS(m.degree(), usage_error);

    BirMap a = BirMap::affine_p2(v2(0) + c2(1), c2(1), v2(1), v2(0));
    CHECK(a.degree() == 2);
    CHECK_THROWS_AS(a.quadridegree(), usage_error);
}

TEST_CASE("composition and involution") {
    BirMap s = cremona_involution();
    CHECK(s.degree() == 2);
    BirMap ss = BirMap::compose(s, s);
    CHECK(ss.is_identity());
    ProjPoint p = ProjPoint::p2(Scalar(1), Scalar(2), Scalar(3));
    CHECK(s.apply(s.apply(p)) == p);
}

TEST_CASE("base points") {
    BirMap s = cremona_involution();
    CHECK(s.is_base_point(ProjPoint::p2(Scalar(1), Scalar(0), Scalar(0))));
    CHECK(s.is_base_point(ProjPoint::p2(Scalar(0), Scalar(1), Scalar(0))));
    CHECK_FALSE(s.is_base_point(ProjPoint::p2(Scalar(1), Scalar(1), Scalar(1))));
    CHECK_THROWS_AS(s.apply(ProjPoint::p2(Scalar(1), Scalar(0), Scalar(0))), degenerate_error);
}

TEST_CASE("json round trip") {
    BirMap m = BirMap::affine_p1xp1(v2(0) + v2(1).scaled(Scalar(1, 2)), c2(1),
                                    v2(1).scaled(Scalar(-3)), c2(1));
    BirMap back = BirMap::from_json(m.to_json());
    CHECK(back.ambient() == m.ambient());
    CHECK(BirMap::equals(back, m));
    BirMap g = BirMap::p2(v3(1) * v3(2), v3(0) * v3(2), v3(0) * v3(1).scaled(Scalar::i()));
    CHECK(BirMap::equals(BirMap::from_json(g.to_json()), g));
}

TEST_CASE("iterate degrees") {
    BirMap s = cremona_involution();
    CHECK(iterate_degrees(s, 4) == std::vector<long>{2, 1, 2, 1});
    // Monomial square map on P1xP1 doubles degrees every step.
    BirMap sq = BirMap::p1xp1(MultiPoly::monomial(4, Exp{2, 0, 0, 0}, Scalar(1)),
                              MultiPoly::monomial(4, Exp{0, 2, 0, 0}, Scalar(1)),
                              MultiPoly::variable(4, 2), MultiPoly::variable(4, 3));
    CHECK(iterate_degrees(sq, 5) == std::vector<long>{3, 5, 9, 17, 33});
}

TEST_CASE("budget exhaustion names the iterate") {
    // Dense quadratic plane map whose iterates blow up in term count.
    BirMap f = BirMap::p2((v3(0) + v3(1)) * (v3(0) + v3(2)), (v3(1) + v3(2)) * (v3(0) + v3(1)),
                          v3(2) * (v3(0) + v3(2)));
    Budget tiny(25);
    try {
        iterate_degrees(f, 10, &tiny);
        FAIL("expected resource_error");
    } catch (const resource_error& e) {
        CHECK(std::string(e.what()).find("iterate") != std::string::npos);
        CHECK(e.iterate > 1);
    }
}

TEST_CASE("growth classification") {
    CHECK(classify_growth({1, 1, 1, 1, 1, 1, 1, 1}).tag == GrowthClass::bounded);
    CHECK(classify_growth({2, 1, 2, 1, 2, 1, 2, 1}).tag == GrowthClass::bounded);
    CHECK(classify_growth({1, 2, 3, 4, 5, 6, 7, 8}).tag == GrowthClass::linear);
    CHECK(classify_growth({1, 4, 9, 16, 25, 36, 49, 64}).tag == GrowthClass::quadratic);
    CHECK(classify_growth({2, 4, 8, 16, 32, 64, 128, 256}).tag == GrowthClass::exponential);
    CHECK(classify_growth({100, 101, 102, 104, 107, 111}).tag == GrowthClass::undetermined);
    CHECK_THROWS_AS(classify_growth({1, 2, 3}), usage_error);
    GrowthClass g = classify_growth({2, 4, 8, 16, 32, 64, 128, 256});
    CHECK(g.tail_ratio == doctest::Approx(2.0));
}

TEST_CASE("dynamical degree estimate") {
    BirMap sq = BirMap::p1xp1(MultiPoly::monomial(4, Exp{2, 0, 0, 0}, Scalar(1)),
                              MultiPoly::monomial(4, Exp{0, 2, 0, 0}, Scalar(1)),
                              MultiPoly::monomial(4, Exp{0, 0, 2, 0}, Scalar(1)),
                              MultiPoly::monomial(4, Exp{0, 0, 0, 2}, Scalar(1)));
    LambdaEstimate est = dynamical_degree_estimate(sq, 6);
    CHECK(est.exact_last_ratio == 2);
    CHECK(est.last_ratio == doctest::Approx(2.0));
    CHECK(est.degrees == std::vector<long>{4, 8, 16, 32, 64, 128});
}

}  // TEST_SUITE
