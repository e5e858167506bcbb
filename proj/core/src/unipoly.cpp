#include "sl2bir/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sl2bir {

UniPoly::UniPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const mpq_class& s) const {
    std::vector<mpq_class> c(c_);
    for (auto& q : c) q *= s;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / c_.back());
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<mpq_class> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * static_cast<long>(k);
    return UniPoly(std::move(c));
}

UniPoly UniPoly::rem(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    UniPoly r(*this);
    mpq_class lead_inv = 1 / d.c_.back();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        mpq_class q = r.c_.back() * lead_inv;
        int shift = r.degree() - d.degree();
        for (std::size_t k = 0; k < d.c_.size(); ++k) r.c_[k + shift] -= q * d.c_[k];
        r.trim();
    }
    return r;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly UniPoly::squarefree_part() const {
    if (degree() <= 1) return monic();
    UniPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return monic();
    // Exact quotient by g.
    UniPoly quot, r(*this);
    std::vector<mpq_class> qc(c_.size() - g.c_.size() + 1, 0);
    mpq_class lead_inv = 1 / g.c_.back();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        mpq_class q = r.c_.back() * lead_inv;
        int shift = r.degree() - g.degree();
        qc[shift] = q;
        for (std::size_t k = 0; k < g.c_.size(); ++k) r.c_[k + shift] -= q * g.c_[k];
        r.trim();
    }
    return UniPoly(std::move(qc)).monic();
}

mpq_class UniPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::scale_arg(const mpq_class& s) const {
    std::vector<mpq_class> c(c_);
    mpq_class p = 1;
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] *= p;
        p *= s;
    }
    return UniPoly(std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k] == 0) continue;
        mpq_class a = c_[k];
        if (!first) out << (a < 0 ? " - " : " + ");
        else if (a < 0) out << "-";
        mpq_class mag = abs(a);
        if (mag != 1 || k == 0) out << mag.get_str();
        if (k > 0) {
            if (mag != 1) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

bool roots_in_open_disk(const UniPoly& p, const mpq_class& radius) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has every point as a root");
    if (p.degree() == 0) return true;
    if (radius <= 0) return false;
    // Schur recursion on q(t) = p(radius * t): all roots of q in |z| < 1
    // iff every reflection coefficient q(0)/lc(q) has modulus < 1.
    std::vector<mpq_class> c = p.scale_arg(radius).coeffs();
    while (c.size() > 1) {
        mpq_class k = c.front() / c.back();
        // |k| >= 1 already implies some root has modulus >= 1: the product
        // of the root moduli is |k|.
        if (abs(k) >= 1) return false;
        std::vector<mpq_class> next(c.size() - 1);
        // (q(t) - k * reversed q(t)) / t
        for (std::size_t j = 1; j < c.size(); ++j) next[j - 1] = c[j] - k * c[c.size() - 1 - j];
        c = std::move(next);
        while (c.size() > 1 && c.back() == 0) c.pop_back();
    }
    return true;
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p.squarefree_part());
    chain.push_back(chain[0].derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = chain[chain.size() - 2].rem(chain.back());
        if (r.is_zero()) break;
        chain.push_back(r.scaled(-1));
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const mpq_class& x) {
    int vars = 0, prev = 0;
    for (const auto& q : chain) {
        mpq_class v = q.eval(x);
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

mpq_class cauchy_bound(const UniPoly& p) {
    mpq_class m = 0;
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, mpq_class(abs(p.coeff(k))));
    return 1 + m / abs(p.coeff(p.degree()));
}

}  // namespace

int count_real_roots(const UniPoly& p, const mpq_class& a, const mpq_class& b) {
    if (p.degree() < 1) return 0;
    auto chain = sturm_chain(p);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

std::optional<RatInterval> max_real_root(const UniPoly& p, const mpq_class& tol) {
    if (p.degree() < 1) return std::nullopt;
    auto chain = sturm_chain(p);
    mpq_class bound = cauchy_bound(p);
    mpq_class lo = -bound, hi = bound;
    if (sign_variations(chain, lo) - sign_variations(chain, hi) == 0) return std::nullopt;
    // Shrink towards the largest root: keep at least one root in (lo, hi].
    while (hi - lo > tol) {
        mpq_class mid = (lo + hi) / 2;
        if (sign_variations(chain, mid) - sign_variations(chain, hi) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return RatInterval{lo, hi};
}

RatInterval max_abs_root(const UniPoly& p, const mpq_class& tol) {
    if (p.degree() < 1) throw std::domain_error("need degree >= 1");
    UniPoly sf = p.squarefree_part();
    mpq_class lo = 0, hi = cauchy_bound(sf);
    while (hi - lo > tol) {
        mpq_class mid = (lo + hi) / 2;
        if (roots_in_open_disk(sf, mid))
            hi = mid;
        else
            lo = mid;
    }
    return RatInterval{lo, hi};
}

}  // namespace sl2bir
