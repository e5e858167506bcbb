// Acceptance suite: one check per numbered criterion, one pass/fail line
// each.  Run with a criterion number (1..12) or with no argument for all.
// Exit code 0 iff every executed criterion passed.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sl2bir/birmap.hpp"
#include "sl2bir/embedding.hpp"
#include "sl2bir/errors.hpp"
#include "sl2bir/picard.hpp"
#include "sl2bir/unipoly.hpp"
#include "sl2bir/word.hpp"

using namespace sl2bir;

namespace {

constexpr std::size_t kCap = 200000;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        ok = false;
        if (!detail.str().empty()) detail << "; ";
        detail << why;
    }
};

std::vector<GroupWord> words_with_syllables(int m, int max_count) {
    std::vector<GroupWord> out;
    for (const auto& w : enumerate_words(m)) {
        if (syllable_form(w).count() != m) continue;
        out.push_back(w);
        if (static_cast<int>(out.size()) == max_count) break;
    }
    return out;
}

// 1. Presentation relations across every family with its default parameters.
Outcome criterion1() {
    Outcome out;
    std::vector<EmbeddingSpec> specs = {EmbeddingSpec::standard(), EmbeddingSpec::twisted(),
                                        EmbeddingSpec::elliptic(), EmbeddingSpec::parabolic()};
    for (const char* e : {"1/2", "1", "2", "3"}) specs.push_back(EmbeddingSpec::epsilon(Scalar::parse(e)));
    for (long n : {0L, 1L, 2L, 3L}) specs.push_back(EmbeddingSpec::elliptic_n(n));
    for (long k : {2L, 4L}) specs.push_back(EmbeddingSpec::hyperbolic(k));
    for (const auto& spec : specs) {
        Budget budget(kCap);
        try {
            RelationReport r = verify_relations(spec, &budget);
            if (!r.all()) {
                std::ostringstream why;
                why << spec.family_name() << ": s4=" << r.s4_id << " rs3=" << r.rs3_id
                    << " central=" << r.central_commutes << " nontrivial=" << r.s2_nontrivial;
                out.fail(why.str());
            }
        } catch (const resource_error& e) {
            out.fail(spec.family_name() + std::string(": ") + e.what());
        }
    }
    return out;
}

// 2. Quadridegree of the epsilon family equals the entrywise absolute values
// of the word's matrix, for all words up to 4 syllables.
Outcome criterion2() {
    Outcome out;
    auto words = enumerate_words(4);
    for (const char* e : {"1/2", "1", "2", "3"}) {
        EmbeddingSpec spec = EmbeddingSpec::epsilon(Scalar::parse(e));
        long checked = 0;
        for (const auto& w : words) {
            Budget budget(kCap);
            Mat2 m = word_to_matrix(w);
            Quadridegree q = evaluate(spec, w, &budget).quadridegree();
            if (!(q.d1 == abs(m.a) && q.d2 == abs(m.b) && q.d3 == abs(m.c) && q.d4 == abs(m.d))) {
                out.fail("eps=" + std::string(e) + " word " + w.str() + " got " + q.str());
                break;
            }
            ++checked;
        }
        out.detail << "eps=" << e << ": " << checked << "/" << words.size() << " words  ";
    }
    return out;
}

// 3. Degree law deg = k^(2m) for the hyperbolic family, plus the last-ratio
// estimate against k^2 for one-syllable words at N = 4.
Outcome criterion3() {
    Outcome out;
    for (long k : {2L, 4L}) {
        EmbeddingSpec spec = EmbeddingSpec::hyperbolic(k);
        for (int m = 1; m <= 3; ++m) {
            long expected = 1;
            for (int i = 0; i < 2 * m; ++i) expected *= k;
            int per = k == 2 ? 5 : 2;
            for (const auto& w : words_with_syllables(m, per)) {
                Budget budget(kCap);
                try {
                    long d = evaluate(spec, w, &budget).degree();
                    if (d != expected) {
                        std::ostringstream why;
                        why << "k=" << k << " m=" << m << " word " << w.str() << " degree " << d
                            << " != " << expected;
                        out.fail(why.str());
                    }
                } catch (const resource_error& e) {
                    std::ostringstream why;
                    why << "k=" << k << " m=" << m << " word " << w.str()
                        << " exceeded the term budget (" << e.what() << ")";
                    out.fail(why.str());
                }
            }
        }
        // Last-ratio estimate at N = 4 on a one-syllable word.
        Budget budget(kCap);
        try {
            BirMap f = evaluate(spec, GroupWord::parse("R S"), &budget);
            LambdaEstimate est = dynamical_degree_estimate(f, 4, &budget);
            double target = static_cast<double>(k * k);
            if (!(std::abs(est.last_ratio - target) <= 1e-6)) {
                std::ostringstream why;
                why << "k=" << k << " last ratio " << est.last_ratio << " not within 1e-6 of "
                    << target;
                out.fail(why.str());
            }
        } catch (const resource_error& e) {
            std::ostringstream why;
            why << "k=" << k << " lambda estimate exceeded the term budget (" << e.what() << ")";
            out.fail(why.str());
        }
    }
    return out;
}

// 4. Growth class of the iterates matches the matrix trichotomy for the
// monomial and epsilon families, words up to 3 syllables, N = 12.
Outcome criterion4() {
    Outcome out;
    auto words = enumerate_words(3);
    std::vector<EmbeddingSpec> specs = {EmbeddingSpec::standard(),
                                        EmbeddingSpec::epsilon(Scalar(2))};
    for (const auto& spec : specs) {
        long agree = 0, budget_failures = 0;
        std::string first_error;
        for (const auto& w : words) {
            MatrixType t = classify(word_to_matrix(w));
            GrowthClass::Tag want = t.kind == MatrixType::elliptic ? GrowthClass::bounded
                                    : t.kind == MatrixType::parabolic ? GrowthClass::linear
                                                                      : GrowthClass::exponential;
            Budget budget(kCap);
            // Growth tables for words this small stay far below the default
            // cumulative allowance; tightening it makes the words that can
            // never finish fail in seconds instead of minutes.
            budget.total_cap = 2000000;
            try {
                BirMap f = evaluate(spec, w, &budget);
                GrowthClass got = classify_growth(iterate_degrees(f, 12, &budget));
                if (got.tag == want) {
                    ++agree;
                } else if (first_error.empty()) {
                    first_error = spec.family_name() + " word " + w.str() + " expected " +
                                  t.str() + "-class, classified " + got.str();
                }
            } catch (const resource_error& e) {
                ++budget_failures;
                if (first_error.empty())
                    first_error = spec.family_name() + " word " + w.str() + ": " + e.what();
            }
        }
        out.detail << spec.family_name() << ": " << agree << "/" << words.size() << " agree";
        if (budget_failures > 0) out.detail << " (" << budget_failures << " over budget)";
        out.detail << "  ";
        if (agree != static_cast<long>(words.size())) out.fail(first_error);
    }
    return out;
}

// 5. Dynamical degree of the monomial image of [[2,1],[1,1]] at N = 20,
// against independent root isolation on t^2 - 3t + 1.
Outcome criterion5() {
    Outcome out;
    GroupWord w = GroupWord::parse("R S R^-1 S^-1");
    if (word_to_matrix(w) != Mat2{2, 1, 1, 1}) {
        out.fail("witness word does not multiply to [[2,1],[1,1]]");
        return out;
    }
    Budget budget(kCap);
    BirMap f = evaluate(EmbeddingSpec::standard(), w, &budget);
    LambdaEstimate est = dynamical_degree_estimate(f, 20, &budget);
    UniPoly p({1, -3, 1});
    auto iv = max_real_root(p, mpq_class(1, 1000000000));
    if (!iv) {
        out.fail("root isolation found no real root");
        return out;
    }
    mpq_class slack(1, 1000000);
    if (!(est.exact_last_ratio >= iv->lo - slack && est.exact_last_ratio <= iv->hi + slack)) {
        std::ostringstream why;
        why << "last ratio " << est.exact_last_ratio.get_str() << " vs root interval ["
            << iv->lo.get_str() << ", " << iv->hi.get_str() << "]";
        out.fail(why.str());
    }
    out.detail << "last ratio " << est.last_ratio << " vs (3+sqrt5)/2 ~ " << iv->mid();
    return out;
}

// 6. The twisted and monomial families share total degrees on 200 words.
Outcome criterion6() {
    Outcome out;
    auto words = enumerate_words(4);
    long checked = 0;
    for (const auto& w : words) {
        if (checked == 200) break;
        Budget b1(kCap), b2(kCap);
        long ds = evaluate(EmbeddingSpec::standard(), w, &b1).total_degree();
        long dm = evaluate(EmbeddingSpec::twisted(), w, &b2).total_degree();
        if (ds != dm) {
            std::ostringstream why;
            why << "word " << w.str() << ": " << dm << " != " << ds;
            out.fail(why.str());
            break;
        }
        ++checked;
    }
    out.detail << checked << " words compared";
    if (checked < 200) out.fail("fewer than 200 words enumerated");
    return out;
}

// 7. Parabolic family: second differences of the iterate degrees of a
// 2-syllable hyperbolic word vanish on the tail up to j = 10.
Outcome criterion7() {
    Outcome out;
    GroupWord witness;
    for (const auto& w : enumerate_words(2)) {
        if (syllable_form(w).count() == 2 &&
            classify(word_to_matrix(w)).kind == MatrixType::hyperbolic) {
            witness = w;
            break;
        }
    }
    if (witness.empty()) {
        out.fail("no 2-syllable hyperbolic word found");
        return out;
    }
    Budget budget(kCap);
    BirMap h = evaluate(EmbeddingSpec::parabolic(), witness, &budget);
    std::vector<long> deg = iterate_degrees(h, 10, &budget);
    out.detail << "word " << witness.str() << "  degrees";
    for (long d : deg) out.detail << ' ' << d;
    for (std::size_t j = 6; j < deg.size(); ++j) {
        if (deg[j] - 2 * deg[j - 1] + deg[j - 2] != 0) {
            std::ostringstream why;
            why << "second difference at j=" << (j + 1) << " is "
                << deg[j] - 2 * deg[j - 1] + deg[j - 2];
            out.fail(why.str());
        }
    }
    return out;
}

// 8. Base points of the epsilon image of R and of its inverse, eps = 2,
// located exactly within a 50-point probe grid.
Outcome criterion8() {
    Outcome out;
    EmbeddingSpec spec = EmbeddingSpec::epsilon(Scalar(2));
    Budget b1(kCap), b2(kCap);
    BirMap r = evaluate(spec, GroupWord::parse("R"), &b1);
    BirMap rinv = evaluate(spec, GroupWord::parse("R^-1"), &b2);
    std::vector<std::pair<long, long>> grid;
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) grid.push_back({x, y});
    grid.push_back({5, 5});  // 50 probe points
    long hits_r = 0, hits_inv = 0;
    for (auto [x, y] : grid) {
        ProjPoint p = ProjPoint::affine(Ambient::P1xP1, Scalar(x), Scalar(y));
        bool want_r = (x == 2 && y == -1) || (x == -2 && y == 1);
        bool want_inv = (x == 1 && y == 2) || (x == -1 && y == -2);
        if (r.is_base_point(p) != want_r) {
            std::ostringstream why;
            why << "image of R at (" << x << "," << y << "): base-point flag "
                << r.is_base_point(p);
            out.fail(why.str());
        }
        if (rinv.is_base_point(p) != want_inv) {
            std::ostringstream why;
            why << "inverse image at (" << x << "," << y << "): base-point flag "
                << rinv.is_base_point(p);
            out.fail(why.str());
        }
        hits_r += want_r;
        hits_inv += want_inv;
    }
    out.detail << grid.size() << " probe points, " << hits_r << "+" << hits_inv
               << " base points confirmed";
    if (hits_r != 2 || hits_inv != 2) out.fail("expected 2 base points on each map");
    return out;
}

// 9. Builtin isometry suite: form preservation, canonical class, printed
// squares, declared orders, and the common fixed subspace.
Outcome criterion9() {
    Outcome out;
    for (const auto& tag : builtin_tags()) {
        IsometryAction act = builtin_action(tag);
        if (!preserves_form(act)) out.fail(tag + ": form not preserved");
        if (!act.lattice.K.empty() && !fixes_canonical(act)) out.fail(tag + ": K not fixed");
        if (order_check(act) != act.declared_order)
            out.fail(tag + ": order " + std::to_string(order_check(act)) + " != declared " +
                     std::to_string(act.declared_order));
        if (act.printed_square && act.m.pow(2) != *act.printed_square)
            out.fail(tag + ": printed square mismatch");
    }
    for (const char* prefix : {"Zj1", "Zj23"}) {
        auto basis = fixed_subspace({builtin_action(std::string(prefix) + "-alpha").m,
                                     builtin_action(std::string(prefix) + "-beta").m});
        bool good = basis.size() == 1 && basis[0] == std::vector<mpz_class>{1, 1, -1, -1, -1};
        if (!good) out.fail(std::string(prefix) + ": fixed subspace is not span{(1,1,-1,-1,-1)}");
    }
    out.detail << builtin_tags().size() << " cases checked";
    return out;
}

// 10. Inequality induction for every word of length <= 12 in both cases,
// and spectral-radius lower bounds for 20 sampled words of length <= 6.
Outcome criterion10() {
    Outcome out;
    for (int j : {1, 23}) {
        long words = 0;
        std::vector<int> letters;
        for (int len = 1; len <= 12; ++len) {
            letters.assign(len, 1);
            while (true) {
                ++words;
                InequalityReport rep = verify_inequalities(j, letters);
                if (!rep.ok) {
                    std::ostringstream why;
                    why << "j=" << j << " word";
                    for (int l : letters) why << l;
                    why << " violates " << rep.violated << " at step " << rep.first_violation_step;
                    out.fail(why.str());
                }
                int i = len - 1;
                while (i >= 0 && letters[i] == 2) letters[i--] = 1;
                if (i < 0) break;
                letters[i] = 2;
            }
        }
        // 20 deterministic samples of length 1..6: for each length, spread
        // evenly over the 2^len words of that length.
        long certified = 0;
        for (int len = 1, picked = 0; len <= 6 && picked < 20; ++len) {
            int total = 1 << len;
            int take = len <= 2 ? total : 4;
            for (int s = 0; s < take && picked < 20; ++s, ++picked) {
                int code = static_cast<int>((static_cast<long>(s) * total) / take);
                letters.clear();
                for (int b = 0; b < len; ++b) letters.push_back(((code >> b) & 1) + 1);
                mpq_class bound = 1;
                for (int i = 0; i < len; ++i) bound *= (j == 1 ? mpq_class(5, 3) : mpq_class(10));
                if (word_lambda_at_least(j, letters, bound)) {
                    ++certified;
                } else {
                    std::ostringstream why;
                    why << "j=" << j << " word";
                    for (int l : letters) why << l;
                    why << " lambda bound " << bound.get_str() << " not certified";
                    out.fail(why.str());
                }
            }
        }
        out.detail << "j=" << j << ": " << words << " words, " << certified
                   << " radius certificates  ";
    }
    return out;
}

// 11. Cayley quotient invariance and image-on-cubic identity.
Outcome criterion11() {
    Outcome out;
    CayleyReport r = cayley_check();
    if (!r.involution_invariant) out.fail("not invariant under (1/x, 1/y)");
    if (!r.on_cubic) out.fail("components do not satisfy the cubic");
    return out;
}

// 12. Gram derivation terminates with a solved form or a certificate.
Outcome criterion12() {
    Outcome out;
    for (int j : {1, 23}) {
        GramResult r = derive_gram(j);
        if (!r.solved) {
            out.fail("j=" + std::to_string(j) + ": pairings not determined");
            continue;
        }
        if (r.consistent()) {
            out.detail << "j=" << j << ": consistent Gram  ";
        } else {
            out.detail << "j=" << j << ": certificate with " << r.violated.size()
                       << " violated claims (first: " << r.violated.front() << ")  ";
        }
    }
    return out;
}

struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "presentation relations for every family", criterion1},
    {2, "epsilon quadridegree law", criterion2},
    {3, "hyperbolic-family degree law", criterion3},
    {4, "growth class matches matrix type", criterion4},
    {5, "monomial hyperbolic dynamical degree", criterion5},
    {6, "twisted vs monomial degree equality", criterion6},
    {7, "parabolic-family linear growth", criterion7},
    {8, "epsilon base-point locations", criterion8},
    {9, "isometry matrix suite", criterion9},
    {10, "inequality inductions and radius bounds", criterion10},
    {11, "cayley quotient invariance", criterion11},
    {12, "gram derivation terminates", criterion12},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 12) {
            std::cerr << "usage: " << argv[0] << " [criterion 1..12]\n";
            return 2;
        }
    }
    bool all_ok = true;
    for (const auto& c : kCriteria) {
        if (only && c.id != only) continue;
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("unexpected exception: ") + e.what());
        }
        std::cout << "criterion " << c.id << " (" << c.title << "): "
                  << (out.ok ? "PASS" : "FAIL");
        std::string d = out.detail.str();
        if (!d.empty()) std::cout << "  [" << d << "]";
        std::cout << "\n" << std::flush;
        all_ok = all_ok && out.ok;
    }
    return all_ok ? 0 : 1;
}
