#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sl2bir {

// Element of SL(2,Z): [[a,b],[c,d]] with ad - bc = 1.
struct Mat2 {
    mpz_class a = 1, b = 0, c = 0, d = 1;

    static Mat2 R() { return {1, 1, 0, 1}; }
    static Mat2 S() { return {0, 1, -1, 0}; }
    static Mat2 RS() { return {-1, 1, -1, 0}; }

    mpz_class det() const { return a * d - b * c; }
    mpz_class trace() const { return a + d; }
    Mat2 inverse() const { return {d, -b, -c, a}; }  // valid since det = 1
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    Mat2 pow(long e) const;
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

    std::string str() const;
};

// Word in the generators R and S with exponents; adjacent letters on the
// same generator merge, zero exponents vanish.
class GroupWord {
public:
    using Letter = std::pair<char, long>;  // ('R' or 'S', nonzero exponent)

    GroupWord() = default;
    // Grammar: word := term (ws term)* ; term := ("R"|"S") ("^" signed-int)?
    static GroupWord parse(const std::string& text);

    void append(char gen, long exp);
    GroupWord& operator*=(const GroupWord& w);
    friend GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }
    GroupWord inverse() const;

    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }

    std::string str() const;  // "R S^-1 R^2"; "1" for the identity

private:
    std::vector<Letter> letters_;
};

Mat2 word_to_matrix(const GroupWord& w);

// Trace/order trichotomy.
struct MatrixType {
    enum Kind { elliptic, parabolic, hyperbolic } kind;
    int order = 0;  // set for elliptic: 1, 2, 3, 4 or 6

    std::string str() const;
    friend bool operator==(const MatrixType& a, const MatrixType& b) {
        return a.kind == b.kind && a.order == b.order;
    }
};

MatrixType classify(const Mat2& m);

// w rewritten as S^s_prefix * prod_i ( (RS)^{rs_i} * S^{s_i} ), equal in
// SL(2,Z) (checked against word_to_matrix before returning).  Interior s_i
// are +-1; the last may be 0; the prefix lies in {-1,0,1,2} and absorbs the
// central S^2.  The syllable count is the number of RS factors.
struct SyllableForm {
    struct Syllable {
        int rs;  // +-1
        int s;   // -1, 0 or 1
    };
    int s_prefix = 0;
    std::vector<Syllable> syllables;

    int count() const { return static_cast<int>(syllables.size()); }
    GroupWord to_word() const;
};

SyllableForm syllable_form(const GroupWord& w);

// All alternating words in S^{+-1}, (RS)^{+-1} with at most max_syllables
// syllables, deterministically ordered, no two equal in SL(2,Z).  With
// mod_center set, words equal up to the central S^2 are also identified.
std::vector<GroupWord> enumerate_words(int max_syllables, bool mod_center = false);

}  // namespace sl2bir
