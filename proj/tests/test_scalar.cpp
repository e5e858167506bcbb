#include <doctest.h>

#include <stdexcept>

#include "sl2bir/scalar.hpp"

using namespace sl2bir;

TEST_SUITE("scalar") {

TEST_CASE("parse and print round trip") {
    for (const char* s : {"0", "-7", "3/2", "i", "-i", "1/2-i", "2+3/4i", "3i", "1/2i", "-5/3+2i"}) {
        Scalar v = Scalar::parse(s);
        CHECK(Scalar::parse(v.str()) == v);
    }
    CHECK(Scalar::parse("3/2").real() == mpq_class(3, 2));
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("2+3/4i").imag() == mpq_class(3, 4));
}

TEST_CASE("field arithmetic") {
    Scalar one_plus_i(mpq_class(1), mpq_class(1));
    Scalar one_minus_i(mpq_class(1), mpq_class(-1));
    CHECK(one_plus_i * one_minus_i == Scalar(2));
    CHECK(Scalar::i().inverse() == -Scalar::i());
    CHECK(Scalar::i().pow(4) == Scalar(1));
    CHECK(Scalar(2, 3) + Scalar(1, 3) == Scalar(1));
    CHECK(Scalar(3) / Scalar(2) == Scalar(3, 2));
    Scalar z(mpq_class(3), mpq_class(4));
    CHECK(z.norm() == 25);
    CHECK(z.conj() == Scalar(mpq_class(3), mpq_class(-4)));
    CHECK(z * z.inverse() == Scalar(1));
    CHECK(Scalar(5).pow(-2) == Scalar(1, 25));
}

TEST_CASE("gaussian flag is sticky") {
    CHECK_FALSE(Scalar(2).is_gaussian());
    CHECK_FALSE((Scalar(2) + Scalar(3, 7)).is_gaussian());
    CHECK(Scalar::i().is_gaussian());
    CHECK((Scalar(2) * Scalar::i()).is_gaussian());
    // A Gaussian value with zero imaginary part stays marked Gaussian.
    Scalar v = Scalar::i() * Scalar::i() + Scalar(1);
    CHECK(v.is_zero());
    CHECK(v.is_gaussian());
}

TEST_CASE("predicates") {
    CHECK(Scalar(3, 2).is_positive_real());
    CHECK_FALSE(Scalar(-1).is_positive_real());
    CHECK_FALSE(Scalar::i().is_positive_real());
    CHECK(Scalar(1).is_one());
    CHECK(Scalar().is_zero());
}

TEST_CASE("inverting zero throws") {
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

}  // TEST_SUITE
