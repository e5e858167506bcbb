#include "sl2bir/intmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "sl2bir/errors.hpp"

namespace sl2bir {

IntMatrix::IntMatrix(int n) : n_(n), e_(n * n, 0) {
    if (n < 1 || n > 5) throw usage_error("matrix size must be 1..5");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_) throw usage_error("ragged matrix literal");
        int c = 0;
        for (long v : row) at(r, c++) = v;
        ++r;
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw usage_error("matrix size mismatch");
    IntMatrix m(a.n_);
    for (int r = 0; r < a.n_; ++r)
        for (int c = 0; c < a.n_; ++c)
            for (int k = 0; k < a.n_; ++k) m.at(r, c) += a.at(r, k) * b.at(k, c);
    return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw usage_error("matrix size mismatch");
    IntMatrix m(a.n_);
    for (int i = 0; i < a.n_ * a.n_; ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw usage_error("matrix size mismatch");
    IntMatrix m(a.n_);
    for (int i = 0; i < a.n_ * a.n_; ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
}

IntMatrix IntMatrix::pow(int e) const {
    if (e < 0) throw usage_error("negative matrix power");
    IntMatrix acc = identity(n_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
    if (static_cast<int>(v.size()) != n_) throw usage_error("vector size mismatch");
    std::vector<mpz_class> r(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) r[i] += at(i, k) * v[k];
    return r;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

std::string IntMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (int r = 0; r < n_; ++r) {
        out << (r ? ", [" : "[");
        for (int c = 0; c < n_; ++c) out << (c ? "," : "") << at(r, c).get_str();
        out << "]";
    }
    out << "]";
    return out.str();
}

UniPoly char_poly(const IntMatrix& m) {
    // Faddeev-LeVerrier: M1 = m, c_{n-1} = -tr; M_{k+1} = m(M_k + c I).
    int n = m.size();
    std::vector<mpq_class> coeffs(n + 1, 0);
    coeffs[n] = 1;
    IntMatrix mk = m;
    mpz_class ck;
    for (int k = 1; k <= n; ++k) {
        mpz_class tr = 0;
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        // division exact by construction
        ck = -tr / k;
        coeffs[n - k] = mpq_class(ck);
        if (k == n) break;
        IntMatrix shifted = mk;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
        mk = m * shifted;
    }
    return UniPoly(std::move(coeffs));
}

RatInterval spectral_radius(const IntMatrix& m, const mpq_class& tol) {
    if (tol <= 0) throw usage_error("tolerance must be positive");
    return max_abs_root(char_poly(m), tol);
}

std::vector<std::vector<mpz_class>> fixed_subspace(const std::vector<IntMatrix>& ms) {
    if (ms.empty()) throw usage_error("need at least one matrix");
    int n = ms[0].size();
    for (const auto& m : ms)
        if (m.size() != n) throw usage_error("matrix size mismatch");
    // Stack the (m - I) blocks and compute the rational nullspace.
    int rows = n * static_cast<int>(ms.size());
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(n, 0));
    for (std::size_t b = 0; b < ms.size(); ++b)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                a[b * n + r][c] = mpq_class(ms[b].at(r, c)) - (r == c ? 1 : 0);
    // Gauss-Jordan to reduced row echelon form.
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < n && rank < rows; ++c) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[rank], a[p]);
        mpq_class inv = 1 / a[rank][c];
        for (int j = 0; j < n; ++j) a[rank][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            mpq_class f = a[r][c];
            for (int j = 0; j < n; ++j) a[r][j] -= f * a[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<std::vector<mpz_class>> basis;
    for (int c = 0; c < n; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
        std::vector<mpq_class> v(n, 0);
        v[c] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][c];
        // Clear denominators, divide by content, make first nonzero positive.
        mpz_class lcm = 1;
        for (const auto& q : v) lcm = lcm / gcd(lcm, q.get_den()) * q.get_den();
        std::vector<mpz_class> w(n);
        for (int i = 0; i < n; ++i) w[i] = mpz_class(v[i] * lcm);
        mpz_class content = 0;
        for (const auto& z : w) content = gcd(content, z);
        if (content != 0)
            for (auto& z : w) z /= content;
        for (const auto& z : w)
            if (z != 0) {
                if (z < 0)
                    for (auto& y : w) y = -y;
                break;
            }
        basis.push_back(std::move(w));
    }
    return basis;
}

}  // namespace sl2bir
