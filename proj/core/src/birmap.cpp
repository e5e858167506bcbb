#include "sl2bir/birmap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace sl2bir {

using nlohmann::json;

ProjPoint ProjPoint::p2(Scalar x, Scalar y, Scalar z) {
    if (x.is_zero() && y.is_zero() && z.is_zero()) throw usage_error("zero point");
    return ProjPoint{Ambient::P2, {std::move(x), std::move(y), std::move(z)}};
}

ProjPoint ProjPoint::p1xp1(Scalar x1, Scalar x2, Scalar y1, Scalar y2) {
    if ((x1.is_zero() && x2.is_zero()) || (y1.is_zero() && y2.is_zero()))
        throw usage_error("zero factor in point");
    return ProjPoint{Ambient::P1xP1, {std::move(x1), std::move(x2), std::move(y1), std::move(y2)}};
}

ProjPoint ProjPoint::affine(Ambient amb, const Scalar& x, const Scalar& y) {
    if (amb == Ambient::P2) return p2(x, y, Scalar(1));
    return p1xp1(x, Scalar(1), y, Scalar(1));
}

bool operator==(const ProjPoint& p, const ProjPoint& q) {
    if (p.ambient != q.ambient) return false;
    if (p.ambient == Ambient::P2) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (p.coords[i] * q.coords[j] != p.coords[j] * q.coords[i]) return false;
        return true;
    }
    return p.coords[0] * q.coords[1] == p.coords[1] * q.coords[0] &&
           p.coords[2] * q.coords[3] == p.coords[3] * q.coords[2];
}

std::string ProjPoint::str() const {
    std::ostringstream out;
    if (ambient == Ambient::P2) {
        out << "(" << coords[0].str() << " : " << coords[1].str() << " : " << coords[2].str()
            << ")";
    } else {
        out << "((" << coords[0].str() << " : " << coords[1].str() << "), (" << coords[2].str()
            << " : " << coords[3].str() << "))";
    }
    return out.str();
}

std::string Quadridegree::str() const {
    std::ostringstream out;
    out << "(" << d1 << "," << d2 << "," << d3 << "," << d4 << ")";
    return out.str();
}

BirMap::BirMap(Ambient amb, std::vector<MultiPoly> comps)
    : ambient_(amb), comps_(std::move(comps)) {
    int want = amb == Ambient::P2 ? 3 : 4;
    int nv = amb == Ambient::P2 ? 3 : 4;
    if (static_cast<int>(comps_.size()) != want) throw usage_error("wrong component count");
    for (const auto& c : comps_)
        if (c.nvars() != nv) throw usage_error("component variable count mismatch");
    if (amb == Ambient::P2) {
        if (comps_[0].is_zero() && comps_[1].is_zero() && comps_[2].is_zero())
            throw degenerate_error("all components vanish");
    } else {
        if ((comps_[0].is_zero() && comps_[1].is_zero()) ||
            (comps_[2].is_zero() && comps_[3].is_zero()))
            throw degenerate_error("a projective factor vanishes identically");
    }
    reduce();
    if (ambient_ == Ambient::P2) {
        int d = -1;
        for (const auto& c : comps_) {
            if (c.is_zero()) continue;
            if (!c.grading().total) throw usage_error("components must be homogeneous");
            if (d >= 0 && c.grading().d != d)
                throw usage_error("components must share a common degree");
            d = c.grading().d;
        }
    } else {
        for (int pair = 0; pair < 2; ++pair) {
            int d1 = -1, d2 = -1;
            for (int i = 2 * pair; i < 2 * pair + 2; ++i) {
                const auto& c = comps_[i];
                if (c.is_zero()) continue;
                if (!c.grading().bi) throw usage_error("components must be bihomogeneous");
                if (d1 >= 0 && (c.grading().d1 != d1 || c.grading().d2 != d2))
                    throw usage_error("paired components must share a bidegree");
                d1 = c.grading().d1;
                d2 = c.grading().d2;
            }
        }
    }
}

namespace {

// gcd with the cheap modular coprimality certificate tried first.
MultiPoly reduced_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (!a.is_zero() && !b.is_zero() && certified_coprime(a, b))
        return MultiPoly::constant(a.nvars(), Scalar(1));
    return poly_gcd(a, b);
}

void divide_out(std::vector<MultiPoly>& comps, std::size_t lo, std::size_t hi,
                const MultiPoly& g) {
    if (g.is_constant()) return;
    for (std::size_t i = lo; i < hi; ++i) {
        auto q = comps[i].divide_exact(g);
        if (!q) throw std::logic_error("gcd fails to divide a component");
        comps[i] = std::move(*q);
    }
}

}  // namespace

void BirMap::reduce() {
    if (ambient_ == Ambient::P2) {
        MultiPoly g = reduced_gcd(comps_[0], comps_[1]);
        if (!g.is_constant()) g = poly_gcd(g, comps_[2]);
        divide_out(comps_, 0, 3, g);
    } else {
        divide_out(comps_, 0, 2, reduced_gcd(comps_[0], comps_[1]));
        divide_out(comps_, 2, 4, reduced_gcd(comps_[2], comps_[3]));
    }
}

BirMap BirMap::p2(MultiPoly c0, MultiPoly c1, MultiPoly c2) {
    return BirMap(Ambient::P2, {std::move(c0), std::move(c1), std::move(c2)});
}

BirMap BirMap::p1xp1(MultiPoly p1, MultiPoly p2, MultiPoly p3, MultiPoly p4) {
    return BirMap(Ambient::P1xP1, {std::move(p1), std::move(p2), std::move(p3), std::move(p4)});
}

BirMap BirMap::identity(Ambient amb) {
    if (amb == Ambient::P2)
        return p2(MultiPoly::variable(3, 0), MultiPoly::variable(3, 1), MultiPoly::variable(3, 2));
    return p1xp1(MultiPoly::variable(4, 0), MultiPoly::variable(4, 1), MultiPoly::variable(4, 2),
                 MultiPoly::variable(4, 3));
}

namespace {

void require_affine(const MultiPoly& p) {
    if (p.nvars() != 2) throw usage_error("affine entry wants 2-variable polynomials");
    if (p.is_zero()) throw usage_error("affine entry with zero numerator or denominator");
}

// p(x,y) -> bihomogeneous 4-variable polynomial with bidegree (a, b).
MultiPoly bihomogenize(const MultiPoly& p, int a, int b) {
    std::vector<std::pair<Exp, Scalar>> ts;
    for (const auto& [e, c] : p.terms())
        ts.push_back({Exp{e[0], a - e[0], e[1], b - e[1]}, c});
    return MultiPoly::from_terms(4, ts);
}

// p(x,y) -> homogeneous 3-variable polynomial of total degree d.
MultiPoly homogenize(const MultiPoly& p, int d) {
    std::vector<std::pair<Exp, Scalar>> ts;
    for (const auto& [e, c] : p.terms())
        ts.push_back({Exp{e[0], e[1], d - e[0] - e[1], 0}, c});
    return MultiPoly::from_terms(3, ts);
}

}  // namespace

BirMap BirMap::affine_p1xp1(const MultiPoly& nx, const MultiPoly& dx, const MultiPoly& ny,
                            const MultiPoly& dy) {
    for (const auto* p : {&nx, &dx, &ny, &dy}) require_affine(*p);
    int a1 = std::max(nx.degree_in(0), dx.degree_in(0));
    int b1 = std::max(nx.degree_in(1), dx.degree_in(1));
    int a2 = std::max(ny.degree_in(0), dy.degree_in(0));
    int b2 = std::max(ny.degree_in(1), dy.degree_in(1));
    return p1xp1(bihomogenize(nx, a1, b1), bihomogenize(dx, a1, b1), bihomogenize(ny, a2, b2),
                 bihomogenize(dy, a2, b2));
}

BirMap BirMap::affine_p2(const MultiPoly& nx, const MultiPoly& dx, const MultiPoly& ny,
                         const MultiPoly& dy) {
    for (const auto* p : {&nx, &dx, &ny, &dy}) require_affine(*p);
    MultiPoly c0 = nx * dy, c1 = ny * dx, c2 = dx * dy;
    int d = std::max({c0.total_degree(), c1.total_degree(), c2.total_degree()});
    return p2(homogenize(c0, d), homogenize(c1, d), homogenize(c2, d));
}

int BirMap::degree() const {
    if (ambient_ != Ambient::P2) throw usage_error("degree is for P2 maps; use quadridegree");
    for (const auto& c : comps_)
        if (!c.is_zero()) return c.total_degree();
    return 0;
}

Quadridegree BirMap::quadridegree() const {
    if (ambient_ != Ambient::P1xP1) throw usage_error("quadridegree is for P1xP1 maps");
    auto pair_bideg = [&](int i) {
        const MultiPoly& p = comps_[i].is_zero() ? comps_[i + 1] : comps_[i];
        const Grading& g = p.grading();
        if (!g.bi) throw usage_error("component is not bihomogeneous");
        return std::pair<int, int>{g.d1, g.d2};
    };
    auto [d1, d2] = pair_bideg(0);
    auto [d3, d4] = pair_bideg(2);
    return Quadridegree{d1, d2, d3, d4};
}

long BirMap::total_degree() const {
    if (ambient_ == Ambient::P2) return degree();
    return quadridegree().total();
}

BirMap BirMap::compose(const BirMap& g, const BirMap& f, const Budget* budget) {
    if (g.ambient_ != f.ambient_) throw usage_error("ambient mismatch in composition");
    // Covers the gcd reduction inside the result's constructor, which has no
    // budget parameter of its own.
    BudgetScope scope(budget);
    std::vector<MultiPoly> comps;
    comps.reserve(g.comps_.size());
    for (const auto& c : g.comps_) comps.push_back(c.substitute(f.comps_, budget));
    if (g.ambient_ == Ambient::P2) {
        if (comps[0].is_zero() && comps[1].is_zero() && comps[2].is_zero())
            throw degenerate_error("composition collapses to the zero tuple");
    } else {
        if ((comps[0].is_zero() && comps[1].is_zero()) ||
            (comps[2].is_zero() && comps[3].is_zero()))
            throw degenerate_error("composition collapses a projective factor");
    }
    return BirMap(g.ambient_, std::move(comps));
}

bool BirMap::is_base_point(const ProjPoint& p) const {
    if (p.ambient != ambient_) throw usage_error("ambient mismatch");
    std::vector<Scalar> vals;
    for (const auto& c : comps_) vals.push_back(c.eval(p.coords));
    if (ambient_ == Ambient::P2)
        return vals[0].is_zero() && vals[1].is_zero() && vals[2].is_zero();
    return (vals[0].is_zero() && vals[1].is_zero()) || (vals[2].is_zero() && vals[3].is_zero());
}

ProjPoint BirMap::apply(const ProjPoint& p) const {
    if (p.ambient != ambient_) throw usage_error("ambient mismatch");
    std::vector<Scalar> vals;
    for (const auto& c : comps_) vals.push_back(c.eval(p.coords));
    if (ambient_ == Ambient::P2) {
        if (vals[0].is_zero() && vals[1].is_zero() && vals[2].is_zero())
            throw degenerate_error("map undefined at base-point " + p.str());
        return ProjPoint{ambient_, std::move(vals)};
    }
    if ((vals[0].is_zero() && vals[1].is_zero()) || (vals[2].is_zero() && vals[3].is_zero()))
        throw degenerate_error("map undefined at base-point " + p.str());
    return ProjPoint{ambient_, std::move(vals)};
}

bool BirMap::equals(const BirMap& f, const BirMap& g) {
    if (f.ambient_ != g.ambient_) return false;
    if (f.ambient_ == Ambient::P2) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (f.comps_[i] * g.comps_[j] != f.comps_[j] * g.comps_[i]) return false;
        return true;
    }
    return f.comps_[0] * g.comps_[1] == f.comps_[1] * g.comps_[0] &&
           f.comps_[2] * g.comps_[3] == f.comps_[3] * g.comps_[2];
}

std::string BirMap::str() const {
    std::ostringstream out;
    if (ambient_ == Ambient::P2) {
        out << "(" << comps_[0].str() << " : " << comps_[1].str() << " : " << comps_[2].str()
            << ")";
    } else {
        out << "((" << comps_[0].str() << " : " << comps_[1].str() << "), (" << comps_[2].str()
            << " : " << comps_[3].str() << "))";
    }
    return out.str();
}

std::string BirMap::to_json() const {
    json j;
    j["schema_version"] = 1;
    j["ambient"] = ambient_ == Ambient::P2 ? "P2" : "P1xP1";
    json comps = json::array();
    for (const auto& c : comps_) {
        json terms = json::array();
        for (const auto& [e, co] : c.terms()) {
            json t;
            t["e"] = std::vector<int>(e.begin(), e.begin() + c.nvars());
            t["c"] = {co.real().get_num().get_str(), co.real().get_den().get_str(),
                      co.imag().get_num().get_str(), co.imag().get_den().get_str()};
            terms.push_back(t);
        }
        comps.push_back(terms);
    }
    j["components"] = comps;
    if (inverse_tag_) j["inverse_tag"] = *inverse_tag_;
    return j.dump();
}

BirMap BirMap::from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != 1)
        throw usage_error("unsupported map schema version");
    Ambient amb = j.at("ambient").get<std::string>() == "P2" ? Ambient::P2 : Ambient::P1xP1;
    int nv = amb == Ambient::P2 ? 3 : 4;
    std::vector<MultiPoly> comps;
    for (const auto& terms : j.at("components")) {
        std::vector<std::pair<Exp, Scalar>> ts;
        for (const auto& t : terms) {
            Exp e{0, 0, 0, 0};
            auto ev = t.at("e").get<std::vector<int>>();
            for (std::size_t k = 0; k < ev.size() && k < 4; ++k) e[k] = ev[k];
            auto cv = t.at("c").get<std::vector<std::string>>();
            mpq_class re{mpz_class(cv[0]), mpz_class(cv[1])};
            mpq_class im{mpz_class(cv[2]), mpz_class(cv[3])};
            re.canonicalize();
            im.canonicalize();
            ts.push_back({e, im == 0 ? Scalar(re) : Scalar(re, im)});
        }
        comps.push_back(MultiPoly::from_terms(nv, ts));
    }
    BirMap m(amb, std::move(comps));
    if (j.contains("inverse_tag")) m.set_inverse_tag(j["inverse_tag"].get<std::string>());
    return m;
}

std::vector<long> iterate_degrees(const BirMap& f, int N, const Budget* budget) {
    if (N < 1) throw usage_error("need N >= 1");
    std::vector<long> out;
    BirMap cur = f;
    out.push_back(cur.total_degree());
    for (int n = 2; n <= N; ++n) {
        try {
            cur = BirMap::compose(f, cur, budget);
        } catch (const resource_error& e) {
            throw resource_error(std::string(e.what()) + " at iterate " + std::to_string(n), n,
                                 e.terms);
        }
        out.push_back(cur.total_degree());
    }
    return out;
}

GrowthClass classify_growth(const std::vector<long>& seq, int window, const mpq_class& delta) {
    int n = static_cast<int>(seq.size());
    if (n < 6) throw usage_error("growth classification wants at least 6 entries");
    if (window < 2 || window > n) throw usage_error("bad window");
    GrowthClass g;
    g.window.assign(seq.end() - window, seq.end());
    double min_ratio = 0;
    for (int i = 1; i < window; ++i) {
        double r = static_cast<double>(g.window[i]) / static_cast<double>(g.window[i - 1]);
        min_ratio = i == 1 ? r : std::min(min_ratio, r);
    }
    g.tail_ratio = min_ratio;

    auto diffs_vanish = [&](int order) {
        // Needs order extra entries before the window.
        if (n < window + order) return false;
        std::vector<long> d(seq.end() - window - order, seq.end());
        for (int o = 0; o < order; ++o)
            for (std::size_t i = d.size() - 1; i >= 1; --i) d[i] -= d[i - 1];
        for (std::size_t i = order; i < d.size(); ++i)
            if (d[i] != 0) return false;
        return true;
    };

    bool constant = true;
    for (int i = 1; i < window; ++i)
        if (g.window[i] != g.window[0]) constant = false;
    // Finite-order maps give periodic, not eventually constant, sequences;
    // a tail that sets no new maximum is bounded too.
    bool no_new_max = n > window;
    if (no_new_max) {
        long before = *std::max_element(seq.begin(), seq.end() - window);
        long tail = *std::max_element(g.window.begin(), g.window.end());
        no_new_max = tail <= before;
    }
    if (constant || no_new_max) {
        g.tag = GrowthClass::bounded;
        return g;
    }
    if (diffs_vanish(2)) {
        g.tag = GrowthClass::linear;
        return g;
    }
    if (diffs_vanish(3)) {
        g.tag = GrowthClass::quadratic;
        return g;
    }
    bool expo = true;
    mpq_class thresh = 1 + delta;
    for (int i = 1; i < window; ++i)
        if (mpq_class(g.window[i], g.window[i - 1]) < thresh) expo = false;
    if (expo) {
        g.tag = GrowthClass::exponential;
        return g;
    }
    g.tag = GrowthClass::undetermined;
    return g;
}

std::string GrowthClass::str() const {
    switch (tag) {
        case bounded: return "bounded";
        case linear: return "linear";
        case quadratic: return "quadratic";
        case exponential: return "exponential";
        default: return "undetermined";
    }
}

LambdaEstimate dynamical_degree_estimate(const BirMap& f, int N, const Budget* budget) {
    if (N < 4) throw usage_error("need N >= 4");
    LambdaEstimate est;
    est.N = N;
    est.degrees = iterate_degrees(f, N, budget);
    est.root_estimate = std::pow(static_cast<double>(est.degrees.back()), 1.0 / N);
    est.exact_last_ratio = mpq_class(est.degrees[N - 1], est.degrees[N - 2]);
    est.exact_last_ratio.canonicalize();
    est.last_ratio = est.exact_last_ratio.get_d();
    return est;
}

}  // namespace sl2bir
