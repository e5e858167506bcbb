#include "sl2bir/word.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "sl2bir/errors.hpp"

namespace sl2bir {

Mat2 Mat2::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Mat2 acc, base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Mat2::str() const {
    std::ostringstream out;
    out << "[[" << a.get_str() << "," << b.get_str() << "],[" << c.get_str() << ","
        << d.get_str() << "]]";
    return out.str();
}

GroupWord GroupWord::parse(const std::string& text) {
    GroupWord w;
    std::size_t pos = 0, n = text.size();
    while (pos < n) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        char gen = text[pos];
        if (gen != 'R' && gen != 'S')
            throw usage_error("word parse error at position " + std::to_string(pos) +
                              ": expected R or S");
        ++pos;
        long exp = 1;
        if (pos < n && text[pos] == '^') {
            ++pos;
            bool neg = false;
            if (pos < n && (text[pos] == '-' || text[pos] == '+')) {
                neg = text[pos] == '-';
                ++pos;
            }
            if (pos >= n || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw usage_error("word parse error at position " + std::to_string(pos) +
                                  ": expected exponent");
            exp = 0;
            while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos])))
                exp = exp * 10 + (text[pos++] - '0');
            if (neg) exp = -exp;
        }
        w.append(gen, exp);
    }
    return w;
}

void GroupWord::append(char gen, long exp) {
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().first == gen) {
        letters_.back().second += exp;
        if (letters_.back().second == 0) letters_.pop_back();
        return;
    }
    letters_.emplace_back(gen, exp);
}

GroupWord& GroupWord::operator*=(const GroupWord& w) {
    for (const auto& [g, e] : w.letters_) append(g, e);
    return *this;
}

GroupWord GroupWord::inverse() const {
    GroupWord r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.append(it->first, -it->second);
    return r;
}

std::string GroupWord::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, e] : letters_) {
        if (!first) out << " ";
        out << g;
        if (e != 1) out << "^" << e;
        first = false;
    }
    return out.str();
}

Mat2 word_to_matrix(const GroupWord& w) {
    Mat2 m;
    for (const auto& [g, e] : w.letters()) {
        Mat2 base = g == 'R' ? Mat2::R() : Mat2::S();
        m = m * base.pow(e);
    }
    return m;
}

MatrixType classify(const Mat2& m) {
    if (m.det() != 1) throw usage_error("classify needs determinant 1");
    mpz_class tr = m.trace();
    if (abs(tr) > 2) return {MatrixType::hyperbolic, 0};
    bool pm_identity = m.b == 0 && m.c == 0;  // +-I are the only |trace|=2 torsion
    if (abs(tr) == 2 && !pm_identity) return {MatrixType::parabolic, 0};
    // Finite order; find it by explicit powering (order divides 12, is at most 6).
    Mat2 p = m;
    for (int k = 1; k <= 6; ++k) {
        if (p.is_identity()) return {MatrixType::elliptic, k};
        p = p * m;
    }
    throw std::logic_error("finite-order matrix without order <= 6");
}

std::string MatrixType::str() const {
    switch (kind) {
        case elliptic:
            return "elliptic(order " + std::to_string(order) + ")";
        case parabolic:
            return "parabolic";
        default:
            return "hyperbolic";
    }
}

namespace {

// Token stream over s = S and t = RS with the relations s^4 = t^3 = 1,
// s^2 central, applied as we push.  The central power of s^2 is tracked
// separately so the token exponents stay +-1.
struct TokenReducer {
    int central = 0;  // power of S^2 mod 2
    std::vector<std::pair<char, int>> toks;

    void push(char gen, long exp) {
        long mod = gen == 's' ? 4 : 3;
        if (!toks.empty() && toks.back().first == gen) {
            exp += toks.back().second;
            toks.pop_back();
        }
        exp %= mod;
        if (exp < 0) exp += mod;
        if (gen == 's') {
            if (exp >= 2) {
                central ^= 1;
                exp -= 2;
            }
        } else if (exp == 2) {
            exp = -1;
        }
        if (exp == 0) {
            // A vanished token may bring its neighbours together.
            if (!toks.empty()) {
                auto [g, e] = toks.back();
                toks.pop_back();
                push(g, e);
            }
            return;
        }
        toks.emplace_back(gen, static_cast<int>(exp));
    }
};

}  // namespace

GroupWord SyllableForm::to_word() const {
    GroupWord w;
    w.append('S', s_prefix);
    for (const auto& syl : syllables) {
        if (syl.rs == 1) {
            w.append('R', 1);
            w.append('S', 1);
        } else {
            w.append('S', -1);
            w.append('R', -1);
        }
        w.append('S', syl.s);
    }
    return w;
}

SyllableForm syllable_form(const GroupWord& w) {
    TokenReducer red;
    for (const auto& [g, e] : w.letters()) {
        if (g == 'S') {
            red.push('s', e);
        } else if (e > 0) {
            for (long k = 0; k < e; ++k) {  // R = (RS) S^-1
                red.push('t', 1);
                red.push('s', -1);
            }
        } else {
            for (long k = 0; k < -e; ++k) {  // R^-1 = S (RS)^-1
                red.push('s', 1);
                red.push('t', -1);
            }
        }
    }
    SyllableForm form;
    std::size_t i = 0;
    if (i < red.toks.size() && red.toks[i].first == 's') {
        form.s_prefix = red.toks[i].second;
        ++i;
    }
    while (i < red.toks.size()) {
        SyllableForm::Syllable syl{red.toks[i].second, 0};
        ++i;
        if (i < red.toks.size() && red.toks[i].first == 's') {
            syl.s = red.toks[i].second;
            ++i;
        }
        form.syllables.push_back(syl);
    }
    if (red.central) {
        // Fold the central S^2 into the trailing S (S^2 * S = S^{-1}) when
        // there is one, else into the prefix (it commutes with everything).
        if (!form.syllables.empty() && form.syllables.back().s != 0)
            form.syllables.back().s = -form.syllables.back().s;
        else
            form.s_prefix += 2;
    }
    if (form.s_prefix >= 3) form.s_prefix -= 4;
    if (word_to_matrix(form.to_word()) != word_to_matrix(w))
        throw std::logic_error("syllable form does not reproduce the word");
    return form;
}

std::vector<GroupWord> enumerate_words(int max_syllables, bool mod_center) {
    if (max_syllables < 0) throw usage_error("syllable bound must be nonnegative");
    std::vector<GroupWord> out;
    std::map<std::string, bool> seen;
    auto emit = [&](const SyllableForm& form) {
        GroupWord w = form.to_word();
        Mat2 m = word_to_matrix(w);
        std::string key = m.str();
        if (mod_center) {
            Mat2 neg{-m.a, -m.b, -m.c, -m.d};
            std::string nkey = neg.str();
            if (nkey < key) key = nkey;
        }
        if (seen.emplace(key, true).second) out.push_back(w);
    };
    const int prefixes[] = {0, 1, 2, -1};
    for (int m = 0; m <= max_syllables; ++m) {
        // Choices: prefix, each rs_i, interior s_i in {1,-1}, final s in
        // {0,1,-1}; iterate them as mixed-radix counters.
        long combos = 1;
        for (int i = 0; i < m; ++i) combos *= 2;                      // rs signs
        long scombos = 1;
        for (int i = 0; i + 1 < m; ++i) scombos *= 2;                 // interior s
        const int finals[] = {0, 1, -1};
        for (int p = 0; p < 4; ++p)
            for (long rc = 0; rc < combos; ++rc)
                for (long sc = 0; sc < scombos; ++sc)
                    for (int f = 0; f < (m > 0 ? 3 : 1); ++f) {
                        SyllableForm form;
                        form.s_prefix = prefixes[p];
                        long r = rc, s = sc;
                        for (int i = 0; i < m; ++i) {
                            SyllableForm::Syllable syl{};
                            syl.rs = (r & 1) ? -1 : 1;
                            r >>= 1;
                            if (i + 1 < m) {
                                syl.s = (s & 1) ? -1 : 1;
                                s >>= 1;
                            } else {
                                syl.s = finals[f];
                            }
                            form.syllables.push_back(syl);
                        }
                        emit(form);
                    }
    }
    return out;
}

}  // namespace sl2bir
