#include <doctest.h>

#include "sl2bir/unipoly.hpp"

using namespace sl2bir;

TEST_SUITE("unipoly") {

TEST_CASE("arithmetic and helpers") {
    UniPoly p({1, -3, 1});  // t^2 - 3t + 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(mpq_class(3)) == 1);
    CHECK(p.derivative() == UniPoly({-3, 2}));
    UniPoly q({-1, 1});  // t - 1
    CHECK(p * q == UniPoly({-1, 4, -4, 1}));
    CHECK((p - p).is_zero());
    CHECK(p.scale_arg(mpq_class(2)) == UniPoly({1, -6, 4}));
    CHECK(UniPoly({2, 4}).monic() == UniPoly({mpq_class(1, 2), 1}));
}

TEST_CASE("gcd and squarefree part") {
    UniPoly a = UniPoly({-1, 1}) * UniPoly({-1, 1}) * UniPoly({2, 1});  // (t-1)^2 (t+2)
    CHECK(UniPoly::gcd(a, a.derivative()) == UniPoly({-1, 1}));
    CHECK(a.squarefree_part() == UniPoly({-1, 1}) * UniPoly({2, 1}));
}

TEST_CASE("real root counting") {
    UniPoly p({1, -3, 1});  // roots (3 +- sqrt5)/2
    CHECK(count_real_roots(p, 0, 3) == 2);
    CHECK(count_real_roots(p, 1, 3) == 1);
    CHECK(count_real_roots(p, 3, 100) == 0);
    UniPoly no_real({1, 0, 1});  // t^2 + 1
    CHECK(count_real_roots(no_real, -10, 10) == 0);
    // Repeated roots count once.
    UniPoly sq = UniPoly({-1, 1}) * UniPoly({-1, 1});
    CHECK(count_real_roots(sq, 0, 2) == 1);
}

TEST_CASE("largest real root isolation") {
    mpq_class tol(1, 1000000000);
    auto iv = max_real_root(UniPoly({1, -3, 1}), tol);
    REQUIRE(iv.has_value());
    CHECK(iv->width() <= tol);
    CHECK(iv->mid() == doctest::Approx(2.6180339887498949).epsilon(1e-8));
    CHECK_FALSE(max_real_root(UniPoly({1, 0, 1}), tol).has_value());
}

TEST_CASE("open disk predicate") {
    UniPoly p({1, -3, 1});
    CHECK(roots_in_open_disk(p, 3));
    CHECK_FALSE(roots_in_open_disk(p, 2));
    UniPoly circle({1, 0, 1});  // roots on |z| = 1
    CHECK(roots_in_open_disk(circle, 2));
    CHECK_FALSE(roots_in_open_disk(circle, 1));
}

TEST_CASE("largest root modulus") {
    mpq_class tol(1, 100000000);
    RatInterval iv = max_abs_root(UniPoly({1, -3, 1}), tol);
    CHECK(iv.width() <= tol);
    CHECK(iv.mid() == doctest::Approx(2.6180339887498949).epsilon(1e-7));
}

}  // TEST_SUITE
