#include <doctest.h>

#include "sl2bir/intmatrix.hpp"

using namespace sl2bir;

TEST_SUITE("intmatrix") {

TEST_CASE("basic operations") {
    IntMatrix m{{2, 1}, {1, 1}};
    CHECK(m.transpose() == m);
    CHECK(m.pow(0) == IntMatrix::identity(2));
    CHECK(m.pow(3) == m * m * m);
    CHECK((m - m) == IntMatrix(2));
    auto v = m.apply({mpz_class(1), mpz_class(2)});
    CHECK(v[0] == 4);
    CHECK(v[1] == 3);
}

TEST_CASE("characteristic polynomial") {
    IntMatrix m{{2, 1}, {1, 1}};
    CHECK(char_poly(m) == UniPoly({1, -3, 1}));
    IntMatrix id3 = IntMatrix::identity(3);
    CHECK(char_poly(id3) == UniPoly({-1, 3, -3, 1}));
    IntMatrix nil{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    CHECK(char_poly(nil) == UniPoly({0, 0, 0, 1}));
}

TEST_CASE("spectral radius certification") {
    IntMatrix m{{2, 1}, {1, 1}};
    RatInterval iv = spectral_radius(m, mpq_class(1, 100000000));
    CHECK(iv.width() <= mpq_class(1, 100000000));
    CHECK(iv.mid() == doctest::Approx(2.6180339887498949).epsilon(1e-7));
    RatInterval rot = spectral_radius(IntMatrix{{0, 1}, {-1, 0}}, mpq_class(1, 1000));
    CHECK(rot.mid() == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("common fixed subspace") {
    auto full = fixed_subspace({IntMatrix::identity(2)});
    CHECK(full.size() == 2);
    auto diag = fixed_subspace({IntMatrix{{0, 1}, {1, 0}}});
    REQUIRE(diag.size() == 1);
    CHECK(diag[0] == std::vector<mpz_class>{1, 1});
    // Primitive and sign-normalized basis.
    auto scaled = fixed_subspace({IntMatrix{{-1, 0}, {0, 1}}});
    REQUIRE(scaled.size() == 1);
    CHECK(scaled[0] == std::vector<mpz_class>{0, 1});
}

}  // TEST_SUITE
