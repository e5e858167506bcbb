#include <doctest.h>

#include <algorithm>

#include "sl2bir/errors.hpp"
#include "sl2bir/picard.hpp"

using namespace sl2bir;

TEST_SUITE("picard") {

TEST_CASE("builtin suite") {
    auto tags = builtin_tags();
    CHECK(tags.size() == 12);
    for (const auto& tag : tags) {
        IsometryAction act = builtin_action(tag);
        INFO(tag);
        CHECK(preserves_form(act));
        if (!act.lattice.K.empty()) CHECK(fixes_canonical(act));
        CHECK(order_check(act) == act.declared_order);
        if (act.printed_square) CHECK(act.m.pow(2) == *act.printed_square);
    }
    CHECK_FALSE(builtin_action("M4-ii").geometric);
    CHECK(builtin_action("Zj1-alpha").geometric);
    CHECK_THROWS_AS(builtin_action("nonsense"), usage_error);
}

TEST_CASE("marked lattice pairing") {
    MarkedLattice lat = builtin_action("Zj1-alpha").lattice;
    CHECK(lat.rank() == 5);
    CHECK(lat.kk() == -3);  // 4 + E^2 - 2 - 2 with E^2 = -3 in this case
    // fixes_canonical demands a canonical class.
    IsometryAction red = builtin_action("Zj1-red-alpha");
    CHECK(red.lattice.K.empty());
    CHECK_THROWS_AS(fixes_canonical(red), usage_error);
}

TEST_CASE("fixed subspace of the 5x5 pairs") {
    for (const char* prefix : {"Zj1", "Zj23"}) {
        IntMatrix a = builtin_action(std::string(prefix) + "-alpha").m;
        IntMatrix b = builtin_action(std::string(prefix) + "-beta").m;
        auto basis = fixed_subspace({a, b});
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == std::vector<mpz_class>{1, 1, -1, -1, -1});
    }
}

TEST_CASE("word isometries") {
    IntMatrix rho1 = word_isometry(1, {1});
    CHECK(char_poly(rho1) == UniPoly({1, -5, -8, -5, 1}));
    // The first letter in the list acts first, i.e. is the rightmost factor.
    CHECK(word_isometry(1, {1, 2}) == word_isometry(1, {2}) * word_isometry(1, {1}));
    CHECK_THROWS_AS(word_isometry(1, {3}), usage_error);
    CHECK_THROWS_AS(word_isometry(7, {1}), usage_error);
}

TEST_CASE("inequality induction") {
    InequalityReport r1 = verify_inequalities(1, {1});
    CHECK(r1.ok);
    REQUIRE(r1.ells.size() == 1);
    CHECK(r1.ells[0] == 5);
    CHECK(r1.steps[0] == std::array<mpz_class, 4>{-2, -4, -2, 5});

    CHECK(verify_inequalities(23, {1}).ells[0] == 58);
    CHECK(verify_inequalities(23, {2}).ells[0] == 58);

    // Cycling the word for more steps keeps the bounds.
    InequalityReport cyc = verify_inequalities(1, {1, 2}, 8);
    CHECK(cyc.ok);
    CHECK(cyc.steps.size() == 8);
    // l_n outgrows the rate floor strictly.
    InequalityReport six = verify_inequalities(23, {1}, 6);
    mpz_class floor10 = 1;
    for (int i = 0; i < 6; ++i) floor10 *= 10;
    CHECK(six.ells.back() >= floor10);
}

TEST_CASE("spectral radius certificates") {
    CHECK(word_lambda_at_least(1, {1}, mpq_class(5, 3)));
    CHECK(word_lambda_at_least(1, {1}, 6));
    CHECK_FALSE(word_lambda_at_least(1, {1}, 7));  // largest root ~ 6.374
    CHECK(word_lambda_at_least(23, {1}, 10));
    CHECK(word_lambda_at_least(23, {2, 1}, 100));
}

TEST_CASE("gram derivation") {
    for (int j : {1, 23}) {
        GramResult r = derive_gram(j);
        INFO(j);
        CHECK(r.solved);
        CHECK_FALSE(r.consistent());
        REQUIRE(r.violated.size() == 5);
        // The diagonal block: E'.E' = E_tau.E_tau = -2, all crosses zero.
        CHECK(r.lattice.pair({0, 0, 0, 1, 0}, {0, 0, 0, 1, 0}) == -2);
        CHECK(r.lattice.pair({0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}) == -2);
        CHECK(r.lattice.pair({0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}) == 0);
        CHECK(r.lattice.pair({0, 0, 1, 0, 0}, {0, 0, 1, 0, 0}) == (j == 1 ? -3 : -1));
        // The claims that fail under the forced pairings.
        auto has = [&](const std::string& s) {
            return std::find(r.violated.begin(), r.violated.end(), s) != r.violated.end();
        };
        CHECK(has("W0[3].K = 0"));
        CHECK(has("W0[4].K = 0"));
        CHECK(has("W0[3].W0[4] = 0"));
    }
    CHECK_THROWS_AS(derive_gram(2), usage_error);
}

}  // TEST_SUITE
