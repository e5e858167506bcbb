#include "sl2bir/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <type_traits>

namespace sl2bir {

namespace {

Exp exp_add(const Exp& a, const Exp& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Exp exp_sub(const Exp& a, const Exp& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

bool exp_geq(const Exp& a, const Exp& b) {
    for (int v = 0; v < 4; ++v)
        if (a[v] < b[v]) return false;
    return true;
}

constexpr Exp kZeroExp{0, 0, 0, 0};

thread_local const Budget* t_scope_budget = nullptr;

// Coefficient footprint in GMP limbs, the weight unit for work estimates.
std::size_t scalar_limbs(const Scalar& c) {
    return mpz_size(c.real().get_num_mpz_t()) + mpz_size(c.real().get_den_mpz_t()) +
           mpz_size(c.imag().get_num_mpz_t()) + mpz_size(c.imag().get_den_mpz_t());
}

// Charges work against the scoped budget, if any; used by the composite
// helpers (gcd, exact division) that run inside other operations.
void charge_scope(std::size_t work) {
    const Budget* b = t_scope_budget;
    if (!b) return;
    b->work_used += work;
    if (b->work_used > b->total_cap)
        throw resource_error("cumulative polynomial work exceeds the budget (" +
                                 std::to_string(b->work_used) + " weighted term products)",
                             0, b->work_used);
}

}  // namespace

BudgetScope::BudgetScope(const Budget* b) : prev_(t_scope_budget) { t_scope_budget = b; }
BudgetScope::~BudgetScope() { t_scope_budget = prev_; }

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > 4) throw usage_error("variable count must be 1..4");
    regrade();
}

MultiPoly MultiPoly::constant(int nvars, const Scalar& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(kZeroExp, c);
    p.regrade();
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int v) {
    if (v < 0 || v >= nvars) throw usage_error("variable index out of range");
    Exp e{0, 0, 0, 0};
    e[v] = 1;
    return monomial(nvars, e, Scalar(1));
}

MultiPoly MultiPoly::monomial(int nvars, const Exp& e, const Scalar& c) {
    MultiPoly p(nvars);
    for (int v = 0; v < 4; ++v)
        if (e[v] < 0 || (v >= nvars && e[v] != 0)) throw usage_error("bad exponent vector");
    if (!c.is_zero()) p.terms_.emplace(e, c);
    p.regrade();
    return p;
}

MultiPoly MultiPoly::from_terms(int nvars, const std::vector<std::pair<Exp, Scalar>>& ts) {
    MultiPoly p(nvars);
    for (const auto& [e, c] : ts) {
        for (int v = nvars; v < 4; ++v)
            if (e[v] != 0) throw usage_error("bad exponent vector");
        p.insert_term(e, c);
    }
    p.regrade();
    return p;
}

void MultiPoly::insert_term(const Exp& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::regrade() {
    grading_ = Grading{};
    if (terms_.empty()) return;
    bool total = true, bi = nvars_ == 4;
    auto first = terms_.begin()->first;
    int d = first[0] + first[1] + first[2] + first[3];
    int d1 = first[0] + first[1], d2 = first[2] + first[3];
    for (const auto& [e, c] : terms_) {
        if (e[0] + e[1] + e[2] + e[3] != d) total = false;
        if (nvars_ == 4 && (e[0] + e[1] != d1 || e[2] + e[3] != d2)) bi = false;
    }
    grading_.total = total;
    grading_.d = total ? d : 0;
    grading_.bi = bi;
    grading_.d1 = bi ? d1 : 0;
    grading_.d2 = bi ? d2 : 0;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kZeroExp);
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    auto e = terms_.rbegin()->first;
    return e[0] + e[1] + e[2] + e[3];
}

int MultiPoly::degree_in(int v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

Scalar MultiPoly::leading_coeff() const {
    if (terms_.empty()) return Scalar(0);
    return terms_.rbegin()->second;
}

Scalar MultiPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw usage_error("mismatched variable counts");
    MultiPoly r(a);
    for (const auto& [e, c] : b.terms_) r.insert_term(e, c);
    r.regrade();
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw usage_error("mismatched variable counts");
    MultiPoly r(a);
    for (const auto& [e, c] : b.terms_) r.insert_term(e, -c);
    r.regrade();
    return r;
}

namespace {

// Largest coefficient footprint in GMP limbs across a polynomial's terms.
std::size_t max_limbs(const MultiPoly& p) {
    std::size_t best = 0;
    for (const auto& [e, c] : p.terms()) best = std::max(best, scalar_limbs(c));
    return best;
}

}  // namespace

MultiPoly MultiPoly::mul(const MultiPoly& a, const MultiPoly& b, const Budget* budget) {
    if (a.nvars_ != b.nvars_) throw usage_error("mismatched variable counts");
    if (budget) {
        // Term products weighted by operand limb counts, so the estimate
        // tracks wall time even when coefficients grow huge.
        std::size_t weight = std::max<std::size_t>(1, (max_limbs(a) + max_limbs(b)) / 8);
        std::size_t work = a.terms_.size() * b.terms_.size() * weight;
        if (work > budget->work_cap)
            throw resource_error("polynomial product too large (work estimate " +
                                     std::to_string(work) + ")",
                                 0, work);
        budget->work_used += work;
        if (budget->work_used > budget->total_cap)
            throw resource_error("cumulative polynomial work exceeds the budget (" +
                                     std::to_string(budget->work_used) +
                                     " weighted term products)",
                                 0, budget->work_used);
    }
    MultiPoly r(a.nvars_);
    const MultiPoly& outer = a.terms_.size() <= b.terms_.size() ? a : b;
    const MultiPoly& inner = a.terms_.size() <= b.terms_.size() ? b : a;
    for (const auto& [ea, ca] : outer.terms_)
        for (const auto& [eb, cb] : inner.terms_) r.insert_term(exp_add(ea, eb), ca * cb);
    if (budget && r.terms_.size() > budget->term_cap)
        throw resource_error("polynomial exceeds term cap (" + std::to_string(r.terms_.size()) +
                                 " terms)",
                             0, r.terms_.size());
    r.regrade();
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return MultiPoly::mul(a, b, nullptr); }

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) return MultiPoly(nvars_);
    MultiPoly r(*this);
    for (auto& [e, co] : r.terms_) co *= c;
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw usage_error("negative polynomial power");
    MultiPoly r = constant(nvars_, Scalar(1));
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

MultiPoly MultiPoly::normalized() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coeff().inverse());
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
    if (nvars_ != d.nvars_) throw usage_error("mismatched variable counts");
    if (d.is_zero()) return std::nullopt;
    MultiPoly rem(*this), quot(nvars_);
    const Exp& de = d.terms_.rbegin()->first;
    const Scalar& dc = d.terms_.rbegin()->second;
    Scalar dc_inv = dc.inverse();
    std::size_t step = d.terms_.size() * std::max<std::size_t>(1, max_limbs(d) / 8);
    while (!rem.terms_.empty()) {
        const Exp& re = rem.terms_.rbegin()->first;
        if (!exp_geq(re, de)) return std::nullopt;
        charge_scope(step);
        Exp qe = exp_sub(re, de);
        Scalar qc = rem.terms_.rbegin()->second * dc_inv;
        quot.insert_term(qe, qc);
        for (const auto& [e, c] : d.terms_) rem.insert_term(exp_add(qe, e), -(qc * c));
    }
    quot.regrade();
    return quot;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw usage_error("point dimension mismatch");
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int v = 0; v < nvars_; ++v)
            if (e[v] != 0) t *= point[v].pow(e[v]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images, const Budget* budget) const {
    if (static_cast<int>(images.size()) != nvars_) throw usage_error("one image per variable required");
    int target = images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != target) throw usage_error("images must share a variable count");
    // Power tables per variable, built on demand.
    std::vector<std::vector<MultiPoly>> pows(nvars_);
    for (int v = 0; v < nvars_; ++v) pows[v].push_back(MultiPoly::constant(target, Scalar(1)));
    auto power = [&](int v, int e) -> const MultiPoly& {
        while (static_cast<int>(pows[v].size()) <= e)
            pows[v].push_back(mul(pows[v].back(), images[v], budget));
        return pows[v][e];
    };
    MultiPoly acc(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (int v = 0; v < nvars_; ++v)
            if (e[v] != 0) t = mul(t, power(v, e[v]), budget);
        for (const auto& [te, tc] : t.terms_) acc.insert_term(te, tc);
        if (budget && acc.terms_.size() > budget->term_cap)
            throw resource_error("substitution exceeds term cap (" +
                                     std::to_string(acc.terms_.size()) + " terms)",
                                 0, acc.terms_.size());
    }
    acc.regrade();
    return acc;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    static const std::vector<std::vector<std::string>> defaults = {
        {"x"}, {"x", "y"}, {"x", "y", "z"}, {"x1", "x2", "y1", "y2"}};
    const std::vector<std::string>& vars = names.empty() ? defaults[nvars_ - 1] : names;
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Print leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        if (!first) out << (cs[0] == '-' ? " - " : " + ");
        bool neg_shown = !first && cs[0] == '-';
        if (neg_shown) cs = cs.substr(1);
        bool has_vars = e != kZeroExp;
        bool unit = cs == "1";
        bool needs_parens = cs.find('+') != std::string::npos ||
                            cs.find('-', 1) != std::string::npos;
        if (!has_vars || !unit) out << (needs_parens && has_vars ? "(" + cs + ")" : cs);
        if (has_vars && !unit) out << "*";
        bool firstv = true;
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (!firstv) out << "*";
            firstv = false;
            out << vars[v];
            if (e[v] > 1) out << "^" << e[v];
        }
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// GCD internals, generic over the coefficient field so the same recursion
// serves Q(i) exactly and Z[i]/p for the coprimality fast path.
// ---------------------------------------------------------------------------

namespace {

// Arithmetic in F_p[i] with p = 2^31 - 1 (prime, 3 mod 4, so i stays
// irreducible and this is the field with p^2 elements).
struct Fq {
    static constexpr std::uint64_t P = 2147483647ull;
    std::uint64_t re = 0, im = 0;

    Fq() = default;
    Fq(long n) {
        long long m = n % static_cast<long long>(P);
        if (m < 0) m += P;
        re = static_cast<std::uint64_t>(m);
    }
    static Fq make(std::uint64_t r, std::uint64_t i) {
        Fq f;
        f.re = r % P;
        f.im = i % P;
        return f;
    }
    bool is_zero() const { return re == 0 && im == 0; }
    friend bool operator==(const Fq& a, const Fq& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }
    friend Fq operator+(const Fq& a, const Fq& b) {
        return make(a.re + b.re, a.im + b.im);
    }
    friend Fq operator-(const Fq& a, const Fq& b) {
        return make(a.re + P - b.re, a.im + P - b.im);
    }
    friend Fq operator*(const Fq& a, const Fq& b) {
        std::uint64_t re = (a.re * b.re % P + P - a.im * b.im % P) % P;
        std::uint64_t im = (a.re * b.im % P + a.im * b.re % P) % P;
        return make(re, im);
    }
    Fq& operator+=(const Fq& b) { return *this = *this + b; }
    Fq& operator-=(const Fq& b) { return *this = *this - b; }
    Fq& operator*=(const Fq& b) { return *this = *this * b; }
    static std::uint64_t modpow(std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= P;
        while (e) {
            if (e & 1) r = r * b % P;
            b = b * b % P;
            e >>= 1;
        }
        return r;
    }
    Fq inverse() const {
        std::uint64_t n = (re * re + im * im) % P;
        std::uint64_t ninv = modpow(n, P - 2);
        return make(re * ninv % P, (P - im % P) * ninv % P);
    }
    friend Fq operator/(const Fq& a, const Fq& b) { return a * b.inverse(); }
};

template <class F>
struct FieldOps {
    static bool is_zero(const F& c) { return c.is_zero(); }
};

template <class F>
using TMap = std::map<Exp, F, GradedLexLess>;

template <class F>
void tinsert(TMap<F>& m, const Exp& e, const F& c) {
    if (FieldOps<F>::is_zero(c)) return;
    auto [it, fresh] = m.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (FieldOps<F>::is_zero(it->second)) m.erase(it);
    }
}

template <class F>
std::size_t tmax_limbs(const TMap<F>& a) {
    if constexpr (std::is_same_v<F, Scalar>) {
        std::size_t best = 0;
        for (const auto& [e, c] : a) best = std::max(best, scalar_limbs(c));
        return best;
    } else {
        return 0;  // word-size field, negligible per-product cost
    }
}

template <class F>
TMap<F> tmul(const TMap<F>& a, const TMap<F>& b) {
    if constexpr (std::is_same_v<F, Scalar>)
        charge_scope(a.size() * b.size() *
                     std::max<std::size_t>(1, (tmax_limbs(a) + tmax_limbs(b)) / 8));
    else
        charge_scope(a.size() * b.size() / 8 + 1);  // word-size field, cheap per product
    TMap<F> r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) tinsert(r, exp_add(ea, eb), F(ca * cb));
    return r;
}

template <class F>
TMap<F> tsub(const TMap<F>& a, const TMap<F>& b) {
    TMap<F> r(a);
    F minus_one = F(0) - F(1);
    for (const auto& [e, c] : b) tinsert(r, e, F(minus_one * c));
    return r;
}

template <class F>
TMap<F> tconst(const F& c) {
    TMap<F> r;
    tinsert(r, kZeroExp, c);
    return r;
}

template <class F>
TMap<F> tpow(const TMap<F>& a, int e) {
    TMap<F> r = tconst(F(1));
    for (int k = 0; k < e; ++k) r = tmul(r, a);
    return r;
}

template <class F>
int tdeg_in(const TMap<F>& a, int v) {
    int d = a.empty() ? -1 : 0;
    for (const auto& [e, c] : a) d = std::max(d, e[v]);
    return d;
}

template <class F>
bool tis_constant(const TMap<F>& a) {
    return a.empty() || (a.size() == 1 && a.begin()->first == kZeroExp);
}

// Coefficient of v^k, as a polynomial with the v-exponent zeroed.
template <class F>
TMap<F> tcoeff_of(const TMap<F>& a, int v, int k) {
    TMap<F> r;
    for (const auto& [e, c] : a)
        if (e[v] == k) {
            Exp e2 = e;
            e2[v] = 0;
            r.emplace(e2, c);
        }
    return r;
}

template <class F>
TMap<F> tshift(const TMap<F>& a, int v, int k) {
    TMap<F> r;
    for (const auto& [e, c] : a) {
        Exp e2 = e;
        e2[v] += k;
        r.emplace(e2, c);
    }
    return r;
}

template <class F>
std::optional<TMap<F>> tdivide_exact(const TMap<F>& n, const TMap<F>& d) {
    if (d.empty()) return std::nullopt;
    TMap<F> rem(n), quot;
    const Exp& de = d.rbegin()->first;
    F dc_inv = d.rbegin()->second.inverse();
    std::size_t step = std::is_same_v<F, Scalar>
                           ? d.size() * std::max<std::size_t>(1, tmax_limbs(d) / 8)
                           : d.size() / 8 + 1;
    while (!rem.empty()) {
        const Exp& re = rem.rbegin()->first;
        if (!exp_geq(re, de)) return std::nullopt;
        charge_scope(step);
        Exp qe = exp_sub(re, de);
        F qc = F(rem.rbegin()->second * dc_inv);
        tinsert(quot, qe, qc);
        F minus_qc = F(F(0) - qc);
        for (const auto& [e, c] : d) tinsert(rem, exp_add(qe, e), F(minus_qc * c));
    }
    return quot;
}

// Pseudo-remainder of A by B with respect to v: lc_v(B)^(degA-degB+1) * A mod B.
template <class F>
TMap<F> tprem(const TMap<F>& A, const TMap<F>& B, int v) {
    int dB = tdeg_in(B, v);
    TMap<F> lcB = tcoeff_of(B, v, dB);
    TMap<F> R = A;
    int e = tdeg_in(A, v) - dB + 1;
    while (!R.empty() && tdeg_in(R, v) >= dB) {
        int dR = tdeg_in(R, v);
        TMap<F> lcR = tcoeff_of(R, v, dR);
        R = tsub(tmul(lcB, R), tmul(tshift(lcR, v, dR - dB), B));
        --e;
    }
    if (e > 0) R = tmul(tpow(lcB, e), R);
    return R;
}

template <class F>
Exp tmin_exp(const TMap<F>& a) {
    Exp m = a.begin()->first;
    for (const auto& [e, c] : a)
        for (int v = 0; v < 4; ++v) m[v] = std::min(m[v], e[v]);
    return m;
}

template <class F>
TMap<F> tstrip(const TMap<F>& a, const Exp& m) {
    TMap<F> r;
    for (const auto& [e, c] : a) r.emplace(exp_sub(e, m), c);
    return r;
}

template <class F>
TMap<F> tgcd(const TMap<F>& a, const TMap<F>& b);

// GCD of all v-coefficients of a (the content of a viewed in R[v]).
template <class F>
TMap<F> tcontent_in(const TMap<F>& a, int v) {
    TMap<F> g;
    for (int k = 0; k <= tdeg_in(a, v); ++k) {
        TMap<F> c = tcoeff_of(a, v, k);
        if (c.empty()) continue;
        g = g.empty() ? c : tgcd(g, c);
        if (tis_constant(g)) break;
    }
    return g;
}

template <class F>
TMap<F> tgcd(const TMap<F>& a, const TMap<F>& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    // Split off the monomial content first; it keeps the recursion and the
    // pseudo-division sequences small.
    Exp ma = tmin_exp(a), mb = tmin_exp(b);
    Exp mg;
    for (int v = 0; v < 4; ++v) mg[v] = std::min(ma[v], mb[v]);
    TMap<F> A = tstrip(a, ma), B = tstrip(b, mb);
    TMap<F> mono;
    mono.emplace(mg, F(1));
    if (tis_constant(A) || tis_constant(B)) return mono;
    // Variable of highest degree present in both; if none is shared, any
    // common factor is free of every variable, hence constant.
    int main_v = -1, best = -1;
    for (int v = 0; v < 4; ++v) {
        int da = tdeg_in(A, v), db = tdeg_in(B, v);
        if (da > 0 && db > 0 && std::max(da, db) > best) {
            best = std::max(da, db);
            main_v = v;
        }
    }
    if (main_v < 0) {
        for (int v = 0; v < 4; ++v) {
            // One side involves v, the other does not: the gcd cannot involve
            // v, so replace that side by its v-content and recurse.
            int da = tdeg_in(A, v), db = tdeg_in(B, v);
            if (da > 0 && db == 0) return tmul(mono, tgcd(tcontent_in(A, v), B));
            if (db > 0 && da == 0) return tmul(mono, tgcd(tcontent_in(B, v), A));
        }
        return mono;
    }
    int v = main_v;
    if (tdeg_in(A, v) < tdeg_in(B, v)) std::swap(A, B);
    TMap<F> cont_a = tcontent_in(A, v), cont_b = tcontent_in(B, v);
    TMap<F> cont_g = tgcd(cont_a, cont_b);
    A = *tdivide_exact(A, cont_a);
    B = *tdivide_exact(B, cont_b);
    // Subresultant polynomial remainder sequence on the primitive parts.
    TMap<F> g = tconst(F(1)), h = tconst(F(1));
    while (true) {
        int delta = tdeg_in(A, v) - tdeg_in(B, v);
        TMap<F> R = tprem(A, B, v);
        if (R.empty()) break;
        if (tdeg_in(R, v) == 0) {
            // Primitive parts are coprime in v.
            return tmul(mono, cont_g);
        }
        A = B;
        B = *tdivide_exact(R, tmul(g, tpow(h, delta)));
        g = tcoeff_of(A, v, tdeg_in(A, v));
        if (delta > 0) h = *tdivide_exact(tpow(g, delta), tpow(h, delta - 1));
    }
    TMap<F> pp = *tdivide_exact(B, tcontent_in(B, v));
    return tmul(mono, tmul(cont_g, pp));
}

std::optional<TMap<Fq>> to_fq(const MultiPoly& p) {
    TMap<Fq> r;
    auto reduce = [](const mpz_class& z) -> std::uint64_t {
        mpz_class m = z % static_cast<long>(Fq::P);
        long v = m.get_si();
        if (v < 0) v += static_cast<long>(Fq::P);
        return static_cast<std::uint64_t>(v);
    };
    for (const auto& [e, c] : p.terms()) {
        std::uint64_t ren = reduce(c.real().get_num()), red = reduce(c.real().get_den());
        std::uint64_t imn = reduce(c.imag().get_num()), imd = reduce(c.imag().get_den());
        if (red == 0 || imd == 0) return std::nullopt;
        Fq re = Fq::make(ren, 0) / Fq::make(red, 0);
        Fq im = Fq::make(imn, 0) / Fq::make(imd, 0);
        Fq v = re + Fq::make(0, 1) * im;
        tinsert(r, e, v);
    }
    return r;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
    if (p.nvars() != q.nvars()) throw usage_error("mismatched variable counts");
    if (p.is_zero()) return q.normalized();
    if (q.is_zero()) return p.normalized();
    TMap<Scalar> g = tgcd<Scalar>(p.terms(), q.terms());
    std::vector<std::pair<Exp, Scalar>> ts(g.begin(), g.end());
    return MultiPoly::from_terms(p.nvars(), ts).normalized();
}

bool certified_coprime(const MultiPoly& p, const MultiPoly& q) {
    if (p.nvars() != q.nvars()) throw usage_error("mismatched variable counts");
    if (p.is_zero() || q.is_zero()) return false;
    // Soundness of the modular certificate needs degree preservation under
    // reduction, which homogeneity provides.
    bool graded_p = p.grading().total || p.grading().bi;
    bool graded_q = q.grading().total || q.grading().bi;
    if (!graded_p || !graded_q) return false;
    auto fp = to_fq(p), fq_ = to_fq(q);
    if (!fp || !fq_ || fp->empty() || fq_->empty()) return false;
    TMap<Fq> g = tgcd<Fq>(*fp, *fq_);
    return g.size() == 1 && g.begin()->first == kZeroExp;
}

}  // namespace sl2bir
