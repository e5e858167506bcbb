#include "sl2bir/embedding.hpp"

#include <cctype>
#include <set>

#include <json.hpp>

namespace sl2bir {

using nlohmann::json;

namespace {

MultiPoly mx() { return MultiPoly::variable(2, 0); }
MultiPoly my() { return MultiPoly::variable(2, 1); }
MultiPoly mconst(const Scalar& c) { return MultiPoly::constant(2, c); }
MultiPoly mone() { return mconst(Scalar(1)); }

// c0*x + c1*y + c2 in two variables.
MultiPoly lin2(const Scalar& c0, const Scalar& c1, const Scalar& c2) {
    return MultiPoly::from_terms(
        2, {{Exp{1, 0, 0, 0}, c0}, {Exp{0, 1, 0, 0}, c1}, {Exp{0, 0, 0, 0}, c2}});
}

// c0*x + c1*y + c2*z, homogeneous in three variables.
MultiPoly lin3(const Scalar& c0, const Scalar& c1, const Scalar& c2) {
    return MultiPoly::from_terms(
        3, {{Exp{1, 0, 0, 0}, c0}, {Exp{0, 1, 0, 0}, c1}, {Exp{0, 0, 1, 0}, c2}});
}

MultiPoly mono2(int a, int b) {
    return MultiPoly::monomial(2, Exp{a, b, 0, 0}, Scalar(1));
}

long entry_long(const mpz_class& v) {
    if (!v.fits_slong_p()) throw usage_error("matrix entry exceeds the supported range");
    return v.get_si();
}

// d/dx of a 2-variable polynomial.
MultiPoly ddx(const MultiPoly& p) {
    std::vector<std::pair<Exp, Scalar>> ts;
    for (const auto& [e, c] : p.terms())
        if (e[0] > 0) ts.push_back({Exp{e[0] - 1, e[1], 0, 0}, c * Scalar(e[0])});
    return MultiPoly::from_terms(2, ts);
}

}  // namespace

EmbeddingSpec EmbeddingSpec::standard() {
    EmbeddingSpec s;
    s.family = theta_s;
    return s;
}

EmbeddingSpec EmbeddingSpec::twisted() {
    EmbeddingSpec s;
    s.family = theta_minus;
    return s;
}

EmbeddingSpec EmbeddingSpec::epsilon(const Scalar& e) {
    EmbeddingSpec s;
    s.family = theta_eps;
    s.eps = e;
    s.eps_positive = e.is_positive_real();
    return s;
}

EmbeddingSpec EmbeddingSpec::elliptic() {
    EmbeddingSpec s;
    s.family = theta_e;
    return s;
}

EmbeddingSpec EmbeddingSpec::elliptic_n(long n) {
    EmbeddingSpec s;
    s.family = theta_n;
    s.n = n;
    return s;
}

EmbeddingSpec EmbeddingSpec::parabolic(MultiPoly num, MultiPoly den) {
    EmbeddingSpec s;
    s.family = theta_P;
    s.p_num = std::move(num);
    s.p_den = std::move(den);
    return s;
}

EmbeddingSpec EmbeddingSpec::parabolic() {
    return parabolic(lin2(Scalar(1), Scalar(0), Scalar(-2)),
                     lin2(Scalar(1), Scalar(0), Scalar(-3)));
}

EmbeddingSpec EmbeddingSpec::hyperbolic(long k, const Scalar& mu) {
    EmbeddingSpec s;
    s.family = theta_k;
    s.k = k;
    s.mu = mu;
    return s;
}

void EmbeddingSpec::validate() const {
    switch (family) {
        case theta_eps:
            if (eps.is_zero()) throw usage_error("theta_eps needs a nonzero parameter");
            break;
        case theta_n:
            if (n < 0) throw usage_error("theta_n needs a nonnegative exponent");
            break;
        case theta_P: {
            if (p_num.nvars() != 2 || p_den.nvars() != 2)
                throw usage_error("theta_P wants 2-variable-slot polynomials in x");
            if (p_num.is_zero() || p_den.is_zero())
                throw usage_error("theta_P needs a nonzero rational function");
            if (p_num.degree_in(1) > 0 || p_den.degree_in(1) > 0)
                throw usage_error("theta_P parameter must not involve y");
            if (p_num.is_constant() && p_den.is_constant())
                throw usage_error("theta_P needs a nonconstant rational function");
            if (!poly_gcd(p_num, p_den).is_constant())
                throw usage_error("theta_P numerator and denominator share a factor");
            if (!p_num.is_constant() && !poly_gcd(p_num, ddx(p_num)).is_constant())
                throw usage_error("theta_P numerator has a repeated zero");
            if (!p_den.is_constant() && !poly_gcd(p_den, ddx(p_den)).is_constant())
                throw usage_error("theta_P denominator has a repeated pole");
            break;
        }
        case theta_k:
            if (k <= 0 || k % 2 != 0) throw usage_error("theta_k needs an even positive k");
            if (mu.is_zero()) throw usage_error("theta_k needs a nonzero translation parameter");
            break;
        default:
            break;
    }
}

Ambient EmbeddingSpec::ambient() const {
    switch (family) {
        case theta_e:
        case theta_n:
        case theta_k:
            return Ambient::P2;
        default:
            return Ambient::P1xP1;
    }
}

std::string EmbeddingSpec::family_name() const {
    switch (family) {
        case theta_s: return "theta_s";
        case theta_minus: return "theta_minus";
        case theta_eps: return "theta_eps";
        case theta_e: return "theta_e";
        case theta_n: return "theta_n";
        case theta_P: return "theta_P";
        default: return "theta_k";
    }
}

EmbeddingSpec::Family EmbeddingSpec::family_from_name(const std::string& name) {
    if (name == "theta_s") return theta_s;
    if (name == "theta_minus") return theta_minus;
    if (name == "theta_eps") return theta_eps;
    if (name == "theta_e") return theta_e;
    if (name == "theta_n") return theta_n;
    if (name == "theta_P") return theta_P;
    if (name == "theta_k") return theta_k;
    throw usage_error("unknown family: " + name);
}

namespace {

json scalar_to_json(const Scalar& c) {
    return {c.real().get_num().get_str(), c.real().get_den().get_str(),
            c.imag().get_num().get_str(), c.imag().get_den().get_str()};
}

Scalar scalar_from_json(const json& j) {
    auto v = j.get<std::vector<std::string>>();
    mpq_class re{mpz_class(v[0]), mpz_class(v[1])};
    mpq_class im{mpz_class(v[2]), mpz_class(v[3])};
    re.canonicalize();
    im.canonicalize();
    return im == 0 ? Scalar(re) : Scalar(re, im);
}

json poly2_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"e", std::vector<int>{e[0], e[1]}}, {"c", scalar_to_json(c)}});
    return terms;
}

MultiPoly poly2_from_json(const json& terms) {
    std::vector<std::pair<Exp, Scalar>> ts;
    for (const auto& t : terms) {
        auto ev = t.at("e").get<std::vector<int>>();
        ts.push_back({Exp{ev[0], ev.size() > 1 ? ev[1] : 0, 0, 0}, scalar_from_json(t.at("c"))});
    }
    return MultiPoly::from_terms(2, ts);
}

}  // namespace

std::string EmbeddingSpec::to_json() const {
    json j;
    j["schema_version"] = 1;
    j["family"] = family_name();
    switch (family) {
        case theta_eps:
            j["eps"] = scalar_to_json(eps);
            j["eps_positive"] = eps_positive;
            break;
        case theta_n:
            j["n"] = n;
            break;
        case theta_P:
            j["p_num"] = poly2_to_json(p_num);
            j["p_den"] = poly2_to_json(p_den);
            break;
        case theta_k:
            j["k"] = k;
            j["mu"] = scalar_to_json(mu);
            break;
        default:
            break;
    }
    return j.dump();
}

EmbeddingSpec EmbeddingSpec::from_json(const std::string& text) {
    json j = json::parse(text);
    EmbeddingSpec s;
    s.family = family_from_name(j.at("family").get<std::string>());
    if (j.contains("eps")) {
        s.eps = scalar_from_json(j["eps"]);
        s.eps_positive = s.eps.is_positive_real();
    }
    if (j.contains("n")) s.n = j["n"].get<long>();
    if (j.contains("p_num")) s.p_num = poly2_from_json(j["p_num"]);
    if (j.contains("p_den")) s.p_den = poly2_from_json(j["p_den"]);
    if (j.contains("k")) s.k = j["k"].get<long>();
    if (j.contains("mu")) s.mu = scalar_from_json(j["mu"]);
    s.validate();
    return s;
}

namespace {

// Monomial map (x^a y^b, x^c y^d) on P1xP1.
BirMap monomial_map(long a, long b, long c, long d) {
    auto pos = [](long v) { return static_cast<int>(v > 0 ? v : 0); };
    auto neg = [](long v) { return static_cast<int>(v < 0 ? -v : 0); };
    return BirMap::affine_p1xp1(mono2(pos(a), pos(b)), mono2(neg(a), neg(b)),
                                mono2(pos(c), pos(d)), mono2(neg(c), neg(d)));
}

BirMap theta_s_of(const Mat2& m) {
    return monomial_map(entry_long(m.a), entry_long(m.b), entry_long(m.c), entry_long(m.d));
}

BirMap theta_e_of(const Mat2& m) {
    Scalar a(mpq_class(m.a)), b(mpq_class(m.b)), c(mpq_class(m.c)), d(mpq_class(m.d));
    return BirMap::p2(lin3(a, b, Scalar(0)), lin3(c, d, Scalar(0)),
                      lin3(Scalar(0), Scalar(0), Scalar(1)));
}

// The character: 1 on RS always; on S it is 1 for odd n and i for even n.
Scalar chi_of_word(const GroupWord& w, long n) {
    if (n % 2 != 0) return Scalar(1);
    long t = 0;
    for (const auto& [g, e] : w.letters()) t += g == 'S' ? e : -e;
    return Scalar::i().pow(((t % 4) + 4) % 4);
}

BirMap theta_n_of(const GroupWord& w, long n) {
    Mat2 m = word_to_matrix(w);
    Scalar a(mpq_class(m.a)), b(mpq_class(m.b)), c(mpq_class(m.c)), d(mpq_class(m.d));
    MultiPoly den = lin2(c, Scalar(0), d);
    return BirMap::affine_p2(lin2(a, Scalar(0), b), den,
                             my().scaled(chi_of_word(w, n)), den.pow(static_cast<int>(n)));
}

struct LetterImages {
    BirMap s, s_inv, r, r_inv;
};

LetterImages theta_minus_images() {
    return {BirMap::affine_p1xp1(my(), mone(), mone(), mx()),          // (y, 1/x)
            BirMap::affine_p1xp1(mone(), my(), mx(), mone()),          // (1/y, x)
            BirMap::affine_p1xp1(mx() * my(), mone(), -my(), mone()),  // (xy, -y)
            BirMap::affine_p1xp1(-mx(), my(), -my(), mone())};         // (-x/y, -y)
}

LetterImages theta_eps_images(const Scalar& e) {
    Scalar one(1);
    MultiPoly den = MultiPoly::from_terms(2, {{Exp{0, 0, 0, 0}, e}, {Exp{1, 1, 0, 0}, one}});
    MultiPoly den_inv = MultiPoly::from_terms(2, {{Exp{0, 0, 0, 0}, e}, {Exp{1, 1, 0, 0}, -one}});
    return {BirMap::affine_p1xp1(my(), mone(), -mx(), mone()),  // (y, -x)
            BirMap::affine_p1xp1(-my(), mone(), mx(), mone()),  // (-y, x)
            // ((x + e y)/(e + xy), e y)
            BirMap::affine_p1xp1(lin2(one, e, Scalar(0)), den, my().scaled(e), mone()),
            // (e(e x - y)/(e - xy), y/e)
            BirMap::affine_p1xp1(lin2(e * e, -e, Scalar(0)), den_inv,
                                 my().scaled(e.inverse()), mone())};
}

struct TokenImages {
    BirMap s, s_inv, rs, rs_inv;
};

TokenImages theta_P_images(const EmbeddingSpec& spec) {
    Scalar i = Scalar::i();
    BirMap s = BirMap::affine_p1xp1(-mone(), mx(), my().scaled(i), mone());
    BirMap s_inv = BirMap::affine_p1xp1(-mone(), mx(), my().scaled(-i), mone());
    BirMap phi = BirMap::affine_p1xp1(mx(), mone(), my() * spec.p_num, spec.p_den);
    BirMap phi_inv = BirMap::affine_p1xp1(mx(), mone(), my() * spec.p_den, spec.p_num);
    // Images of RS and (RS)^-1 for the n = 0 elliptic family: ((x-1)/x, y)
    // and (-1/(x-1), y).
    BirMap rs0 = BirMap::affine_p1xp1(lin2(Scalar(1), Scalar(0), Scalar(-1)), mx(), my(), mone());
    BirMap rs0_inv = BirMap::affine_p1xp1(-mone(), lin2(Scalar(1), Scalar(0), Scalar(-1)), my(),
                                          mone());
    return {std::move(s), std::move(s_inv),
            BirMap::compose(BirMap::compose(phi, rs0), phi_inv),
            BirMap::compose(BirMap::compose(phi, rs0_inv), phi_inv)};
}

MultiPoly mono3(int a, int b, int c, const Scalar& co = Scalar(1)) {
    return MultiPoly::monomial(3, Exp{a, b, c, 0}, co);
}

struct Conjugation {
    BirMap psi, psi_inv;
};

Conjugation theta_k_conjugation(const EmbeddingSpec& spec) {
    int k = static_cast<int>(spec.k);
    Scalar one(1);
    BirMap a = BirMap::p2(lin3(one, spec.mu, Scalar(0)), lin3(Scalar(0), one, Scalar(0)),
                          lin3(Scalar(0), Scalar(0), one));
    BirMap a_inv = BirMap::p2(lin3(one, -spec.mu, Scalar(0)), lin3(Scalar(0), one, Scalar(0)),
                              lin3(Scalar(0), Scalar(0), one));
    // (x^k : y x^{k-1} + z^k : z x^{k-1}) and its inverse, an affine shear
    // in the chart x != 0.
    BirMap psi0 = BirMap::p2(mono3(k, 0, 0), mono3(k - 1, 1, 0) + mono3(0, 0, k),
                             mono3(k - 1, 0, 1));
    BirMap psi0_inv = BirMap::p2(mono3(k, 0, 0), mono3(k - 1, 1, 0) - mono3(0, 0, k),
                                 mono3(k - 1, 0, 1));
    return {BirMap::compose(BirMap::compose(a, psi0), a_inv),
            BirMap::compose(BirMap::compose(a, psi0_inv), a_inv)};
}

TokenImages theta_k_images(const EmbeddingSpec& spec) {
    Scalar one(1);
    Conjugation c = theta_k_conjugation(spec);
    BirMap psi = std::move(c.psi);
    BirMap psi_inv = std::move(c.psi_inv);
    BirMap e_rs = theta_e_of(Mat2::RS());
    BirMap e_rs_inv = theta_e_of(Mat2::RS().inverse());
    return {BirMap::p2(lin3(Scalar(0), one, Scalar(0)), lin3(-one, Scalar(0), Scalar(0)),
                       lin3(Scalar(0), Scalar(0), one)),
            BirMap::p2(lin3(Scalar(0), -one, Scalar(0)), lin3(one, Scalar(0), Scalar(0)),
                       lin3(Scalar(0), Scalar(0), one)),
            BirMap::compose(BirMap::compose(psi, e_rs), psi_inv),
            BirMap::compose(BirMap::compose(psi, e_rs_inv), psi_inv)};
}

TokenImages token_images(const EmbeddingSpec& spec) {
    return spec.family == EmbeddingSpec::theta_P ? theta_P_images(spec) : theta_k_images(spec);
}

// The image of RS is psi L psi^-1 with L linear, so its cube is
// psi L^3 psi^-1.  Checking that psi and psi^-1 invert each other and that
// L^3 is the identity certifies the cube relation without forming the
// degree k^6 composition, which is far beyond any reasonable budget at
// k = 4.
bool theta_k_rs3_identity(const EmbeddingSpec& spec, const Budget* budget) {
    Conjugation c = theta_k_conjugation(spec);
    if (!BirMap::compose(c.psi, c.psi_inv, budget).is_identity()) return false;
    if (!BirMap::compose(c.psi_inv, c.psi, budget).is_identity()) return false;
    BirMap l = theta_e_of(Mat2::RS());
    return BirMap::compose(BirMap::compose(l, l, budget), l, budget).is_identity();
}

BirMap evaluate_letters(const LetterImages& imgs, const GroupWord& w, Ambient amb,
                        const Budget* budget) {
    BirMap acc = BirMap::identity(amb);
    for (const auto& [g, e] : w.letters()) {
        const BirMap& img = g == 'S' ? (e > 0 ? imgs.s : imgs.s_inv)
                                     : (e > 0 ? imgs.r : imgs.r_inv);
        for (long i = 0; i < (e > 0 ? e : -e); ++i) acc = BirMap::compose(acc, img, budget);
    }
    return acc;
}

BirMap evaluate_syllables(const TokenImages& imgs, const GroupWord& w, Ambient amb,
                          const Budget* budget) {
    SyllableForm form = syllable_form(w);
    BirMap acc = BirMap::identity(amb);
    const BirMap& sp = form.s_prefix >= 0 ? imgs.s : imgs.s_inv;
    for (int i = 0; i < (form.s_prefix >= 0 ? form.s_prefix : -form.s_prefix); ++i)
        acc = BirMap::compose(acc, sp, budget);
    for (const auto& syl : form.syllables) {
        acc = BirMap::compose(acc, syl.rs > 0 ? imgs.rs : imgs.rs_inv, budget);
        if (syl.s != 0) acc = BirMap::compose(acc, syl.s > 0 ? imgs.s : imgs.s_inv, budget);
    }
    return acc;
}

}  // namespace

GeneratorImages generator_images(const EmbeddingSpec& spec) {
    spec.validate();
    Ambient amb = spec.ambient();
    switch (spec.family) {
        case EmbeddingSpec::theta_s:
            return {theta_s_of(Mat2::S()), theta_s_of(Mat2::R()), false, amb};
        case EmbeddingSpec::theta_minus: {
            LetterImages li = theta_minus_images();
            return {std::move(li.s), std::move(li.r), false, amb};
        }
        case EmbeddingSpec::theta_eps: {
            LetterImages li = theta_eps_images(spec.eps);
            return {std::move(li.s), std::move(li.r), false, amb};
        }
        case EmbeddingSpec::theta_e:
            return {theta_e_of(Mat2::S()), theta_e_of(Mat2::R()), false, amb};
        case EmbeddingSpec::theta_n:
            return {theta_n_of(GroupWord::parse("S"), spec.n),
                    theta_n_of(GroupWord::parse("R"), spec.n), false, amb};
        default: {
            TokenImages ti = token_images(spec);
            return {std::move(ti.s), std::move(ti.rs), true, amb};
        }
    }
}

BirMap evaluate(const EmbeddingSpec& spec, const GroupWord& w, const Budget* budget) {
    spec.validate();
    switch (spec.family) {
        case EmbeddingSpec::theta_s:
            return theta_s_of(word_to_matrix(w));
        case EmbeddingSpec::theta_e:
            return theta_e_of(word_to_matrix(w));
        case EmbeddingSpec::theta_n:
            return theta_n_of(w, spec.n);
        case EmbeddingSpec::theta_minus:
            return evaluate_letters(theta_minus_images(), w, spec.ambient(), budget);
        case EmbeddingSpec::theta_eps:
            return evaluate_letters(theta_eps_images(spec.eps), w, spec.ambient(), budget);
        default:
            return evaluate_syllables(token_images(spec), w, spec.ambient(), budget);
    }
}

RelationReport verify_relations(const EmbeddingSpec& spec, const Budget* budget) {
    GeneratorImages gi = generator_images(spec);
    BirMap rs = gi.second_is_rs ? gi.second : BirMap::compose(gi.second, gi.s, budget);
    BirMap s2 = BirMap::compose(gi.s, gi.s, budget);
    BirMap s4 = BirMap::compose(s2, s2, budget);
    RelationReport rep;
    rep.s4_id = s4.is_identity();
    if (spec.family == EmbeddingSpec::theta_k) {
        rep.rs3_id = theta_k_rs3_identity(spec, budget);
    } else {
        BirMap rs3 = BirMap::compose(BirMap::compose(rs, rs, budget), rs, budget);
        rep.rs3_id = rs3.is_identity();
    }
    rep.central_commutes =
        BirMap::equals(BirMap::compose(s2, rs, budget), BirMap::compose(rs, s2, budget));
    rep.s2_nontrivial = !s2.is_identity();
    return rep;
}

bool orbit_disjointness_check(const std::vector<Scalar>& values, int depth) {
    if (depth < 1) throw usage_error("orbit check needs depth >= 1");
    struct PP {
        Scalar p, q;
    };
    std::vector<PP> pts;
    for (const auto& v : values) pts.push_back({v, Scalar(1)});
    auto same = [](const PP& u, const PP& w) { return u.p * w.q == u.q * w.p; };
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (same(pts[i], pts[j])) return false;

    // Group elements mod the center (it acts trivially on P1), by breadth-
    // first products of the four generator letters.
    auto key = [](const Mat2& m) {
        Mat2 neg{-m.a, -m.b, -m.c, -m.d};
        std::string a = m.str(), b = neg.str();
        return a < b ? a : b;
    };
    const Mat2 gens[] = {Mat2::R(), Mat2::R().inverse(), Mat2::S(), Mat2::S().inverse()};
    std::set<std::string> seen{key(Mat2{})};
    std::vector<Mat2> frontier{Mat2{}}, elements;
    for (int d = 0; d < depth; ++d) {
        std::vector<Mat2> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                Mat2 mg = m * g;
                if (seen.insert(key(mg)).second) {
                    next.push_back(mg);
                    elements.push_back(mg);
                }
            }
        frontier = std::move(next);
    }
    for (const auto& m : elements) {
        Scalar a(mpq_class(m.a)), b(mpq_class(m.b)), c(mpq_class(m.c)), dd(mpq_class(m.d));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            PP img{a * pts[i].p + b * pts[i].q, c * pts[i].p + dd * pts[i].q};
            if (same(img, pts[i])) return false;  // isotropy
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (j != i && same(img, pts[j])) return false;  // shared orbit
        }
    }
    return true;
}

std::vector<MultiPoly> cayley_quotient() {
    MultiPoly x = mx(), y = my(), one = mone();
    MultiPoly xm1 = x - one, ym1 = y - one, xy1 = x * y + one;
    return {xm1 * (x - y) * (one + y),       // W
            ym1 * (y - x) * (one + x),       // X
            xy1 * (x + one) * (y + one),     // Y
            xm1 * ym1 * xy1};                // Z
}

namespace {

// 2-variable p(x, y) as a bihomogeneous 4-variable polynomial of bidegree
// (a, b).
MultiPoly bihom(const MultiPoly& p, int a, int b) {
    std::vector<std::pair<Exp, Scalar>> ts;
    for (const auto& [e, c] : p.terms())
        ts.push_back({Exp{e[0], a - e[0], e[1], b - e[1]}, c});
    return MultiPoly::from_terms(4, ts);
}

}  // namespace

bool cayley_invariant_under(const BirMap& tau) {
    if (tau.ambient() != Ambient::P1xP1) throw usage_error("expected a self-map of P1xP1");
    std::vector<MultiPoly> q;
    for (const auto& c : cayley_quotient()) q.push_back(bihom(c, 2, 2));
    std::vector<MultiPoly> qt;
    for (const auto& c : q) qt.push_back(c.substitute(tau.comps(), nullptr));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (qt[i] * q[j] != qt[j] * q[i]) return false;
    return true;
}

CayleyReport cayley_check() {
    CayleyReport rep;
    // (x, y) -> (1/x, 1/y): swap the coordinates within each factor.
    rep.involution_invariant = cayley_invariant_under(
        BirMap::p1xp1(MultiPoly::variable(4, 1), MultiPoly::variable(4, 0),
                      MultiPoly::variable(4, 3), MultiPoly::variable(4, 2)));
    auto c = cayley_quotient();
    rep.on_cubic =
        (c[1] * c[2] * c[3] + c[0] * c[2] * c[3] + c[0] * c[1] * c[3] + c[0] * c[1] * c[2])
            .is_zero();
    return rep;
}

MultiPoly parse_poly_x(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw usage_error("empty polynomial");
    // Split into signed terms at top level (no parentheses inside a
    // polynomial; a leading sign belongs to the first term).
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^' && s[i - 1] != '+' && s[i - 1] != '-') {
            parts.push_back(s.substr(start, i - start));
            start = i;
        }
    parts.push_back(s.substr(start));
    MultiPoly out = MultiPoly::zero(2);
    for (auto& term : parts) {
        int e = 0;
        std::string coeff = term;
        auto xp = term.find('x');
        if (xp != std::string::npos) {
            e = 1;
            coeff = term.substr(0, xp);
            std::string rest = term.substr(xp + 1);
            if (!rest.empty()) {
                if (rest[0] != '^') throw usage_error("bad polynomial term: " + term);
                e = std::stoi(rest.substr(1));
                if (e < 0) throw usage_error("negative exponent in polynomial: " + term);
            }
            if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
            if (coeff.empty() || coeff == "+")
                coeff = "1";
            else if (coeff == "-")
                coeff = "-1";
        }
        out = out + MultiPoly::monomial(2, Exp{e, 0, 0, 0}, Scalar::parse(coeff));
    }
    return out;
}

std::pair<MultiPoly, MultiPoly> parse_rational_x(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (!s.empty() && s[0] == '(') {
        auto close = s.find(')');
        if (close == std::string::npos) throw usage_error("unbalanced parentheses: " + text);
        std::string num = s.substr(1, close - 1);
        std::string rest = s.substr(close + 1);
        if (rest.empty()) return {parse_poly_x(num), mone()};
        if (rest.size() < 4 || rest[0] != '/' || rest[1] != '(' || rest.back() != ')')
            throw usage_error("expected (num)/(den): " + text);
        return {parse_poly_x(num), parse_poly_x(rest.substr(2, rest.size() - 3))};
    }
    return {parse_poly_x(s), mone()};
}

}  // namespace sl2bir
