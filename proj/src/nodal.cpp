#include "singcat/nodal.hpp"

#include <regex>

namespace singcat::nodal {

Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

Sign delta(int n, Sign s) { return n % 2 == 0 ? s : flip(s); }

std::string Indecomposable::str() const {
    std::string s(1, is_projective() ? 'P' : 'S');
    s += sign_char(sign);
    if (!is_projective()) s += "(" + std::to_string(length) + ")";
    if (shift != 0) s += "[" + std::to_string(shift) + "]";
    return s;
}

std::string ZeroIndecomposable::str() const {
    std::string s = projective ? "P2" : "S(" + std::to_string(length) + ")";
    if (shift != 0) s += "[" + std::to_string(shift) + "]";
    return s;
}

// ---------------------------------------------------------------- Hom

int hom_dim(const Indecomposable& X, const Indecomposable& Y) {
    if (X.is_projective() && Y.is_projective()) {
        const int n = Y.shift - X.shift;
        return n <= 0 && X.sign == delta(n, Y.sign);
    }
    if (X.is_projective()) {
        // Hom(P_mu[p], S_tau(l)[q]) = Hom(P_mu[p - q], S_tau(l)).
        const int n = X.shift - Y.shift;
        return 0 <= n && n < Y.length && X.sign == delta(n, Y.sign);
    }
    const int n = Y.shift - X.shift;
    const int l = X.length;
    if (Y.is_projective()) return 2 <= n && n <= l + 1 && Y.sign != delta(n, X.sign);
    const int lp = Y.length;
    if (n <= 0) return l >= lp + n && lp + n >= 1 && Y.sign == delta(n, X.sign);
    if (n >= 2) return lp >= l + 2 - n && l + 2 - n >= 1 && Y.sign != delta(n, X.sign);
    return 0;
}

int hom_dim_sum(const Object& X, const Object& Y) {
    int total = 0;
    for (const auto& x : X)
        for (const auto& y : Y) total += hom_dim(x, y);
    return total;
}

int hom_dim_zero(const ZeroIndecomposable& X, const ZeroIndecomposable& Y) {
    if (X.projective && Y.projective) return Y.shift - X.shift <= 0;
    if (X.projective) {
        const int n = X.shift - Y.shift;
        return 0 <= n && n < Y.length;
    }
    const int n = Y.shift - X.shift;
    const int l = X.length;
    if (Y.projective) return 2 <= n && n <= l + 1;
    const int lp = Y.length;
    return (n <= 0 && 0 < lp + n && lp + n <= l) || (2 <= n && n <= l + 1 && l + 1 < n + lp);
}

// ---------------------------------------------------------------- complexes

const Presentation& nodal_presentation() {
    static const Presentation P = parse_presentation(
        "vertices - * +;\n"
        "arrow α: - -> *;\n"
        "arrow β: * -> -;\n"
        "arrow γ: + -> *;\n"
        "arrow δ: * -> +;\n"
        "relation δα;\n"
        "relation βγ;\n");
    return P;
}

ProjectiveComplex minimal_string_complex(Sign tau, int l) {
    if (l < 1) throw Error("bad-length", "minimal strings need l >= 1", json{{"l", l}});
    const Quiver& q = nodal_presentation().quiver();
    // Differentials are built from degree 0 leftwards.
    std::vector<std::vector<std::string>> rev;
    rev.push_back(tau == Sign::Plus ? std::vector<std::string>{"γ"} : std::vector<std::string>{"α"});
    // The composite with the right neighbour joins its last arrow to our
    // first one; after γ only β is killed, after α only δ.
    auto ends_in_gamma = [&] { return rev.back().back() == "γ"; };
    for (int k = 1; k < l; ++k)
        rev.push_back(ends_in_gamma() ? std::vector<std::string>{"β", "α"}
                                      : std::vector<std::string>{"δ", "γ"});
    const bool sigma_plus = !ends_in_gamma();
    rev.push_back({sigma_plus ? "δ" : "β"});

    ProjectiveComplex c;
    const int lowest = -(l + 1);
    c.terms.push_back({lowest, sigma_plus ? "+" : "-"});
    for (int d = lowest + 1; d < 0; ++d) c.terms.push_back({d, "*"});
    c.terms.push_back({0, std::string(1, sign_char(tau))});
    for (std::size_t k = 0; k < rev.size(); ++k) {
        const auto& labels = rev[rev.size() - 1 - k];
        c.differentials.push_back({lowest + static_cast<int>(k), Path::of(q, labels)});
    }
    return c;
}

bool squares_to_zero(const ProjectiveComplex& c) {
    for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k) {
        // P_a -p-> P_b -q-> P_c composes to the path q then p (from c to a).
        Path composite = compose(c.differentials[k + 1].path, c.differentials[k].path);
        if (!path_in_ideal(composite, nodal_presentation())) return false;
    }
    return true;
}

// ---------------------------------------------------------------- K0

namespace {
K0Class unit(Sign s) { return s == Sign::Plus ? K0Class{1, 0} : K0Class{0, 1}; }
K0Class scaled(K0Class v, long long f) { return {v[0] * f, v[1] * f}; }
K0Class added(K0Class a, K0Class b) { return {a[0] + b[0], a[1] + b[1]}; }
long long parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }
}  // namespace

K0Class k0_class(const Indecomposable& X) {
    K0Class base = unit(X.sign);
    if (!X.is_projective()) {
        const Sign sigma = X.length % 2 == 0 ? X.sign : flip(X.sign);
        base = added(base, scaled(unit(sigma), parity_sign(X.length + 1)));
    }
    return scaled(base, parity_sign(X.shift));
}

K0Class k0_class(const Object& X) {
    K0Class total{0, 0};
    for (const auto& x : X) total = added(total, k0_class(x));
    return total;
}

K0Class k0_of_complex(const ProjectiveComplex& c, int shift) {
    K0Class total{0, 0};
    for (const auto& t : c.terms) {
        if (t.vertex == "*") continue;
        total = added(total, scaled(unit(t.vertex == "+" ? Sign::Plus : Sign::Minus), parity_sign(t.degree)));
    }
    return scaled(total, parity_sign(shift));
}

bool cluster_member(const Indecomposable& X) {
    if (X.sign != Sign::Minus) return false;
    return X.is_projective() || X.length % 2 == 0;
}

// ---------------------------------------------------------------- AR quiver

Indecomposable ar_translate(const Indecomposable& X) {
    if (X.is_projective())
        throw Error("no-translation", "the translation is only tabulated on string components",
                    json{{"object", X.str()}});
    return Indecomposable::S(flip(X.sign), X.length, X.shift + 1);
}

ARWindow ar_window(Component c, int lo, int hi, int max_length) {
    ARWindow w;
    if (lo > hi) return w;
    const bool plus = c == Component::StringPlus || c == Component::ProjectivePlus;
    const Sign base = plus ? Sign::Plus : Sign::Minus;
    if (c == Component::ProjectivePlus || c == Component::ProjectiveMinus) {
        for (int n = hi; n >= lo; --n) {
            w.vertices.push_back(Indecomposable::P(delta(n, base), n));
            if (n > lo) w.arrows.push_back({w.vertices.back(), Indecomposable::P(delta(n - 1, base), n - 1)});
        }
        return w;
    }
    if (max_length < 1) return w;
    for (int n = hi; n >= lo; --n) {
        const Sign s = delta(n, base);
        for (int l = 1; l <= max_length; ++l) {
            Indecomposable X = Indecomposable::S(s, l, n);
            w.vertices.push_back(X);
            if (l >= 2) w.arrows.push_back({X, Indecomposable::S(s, l - 1, n)});
            if (l + 1 <= max_length && n - 1 >= lo) w.arrows.push_back({X, Indecomposable::S(flip(s), l + 1, n - 1)});
            if (n + 1 <= hi) w.translations.push_back({X, ar_translate(X)});
        }
    }
    return w;
}

std::vector<Indecomposable> window(int lo, int hi, int max_length) {
    std::vector<Indecomposable> out;
    for (int n = lo; n <= hi; ++n)
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            out.push_back(Indecomposable::P(s, n));
            for (int l = 1; l <= max_length; ++l) out.push_back(Indecomposable::S(s, l, n));
        }
    return out;
}

// ---------------------------------------------------------------- syntax

namespace {

std::string normalize_minus(std::string s) {
    const std::string uminus = "\xE2\x88\x92";  // U+2212
    for (std::size_t p; (p = s.find(uminus)) != std::string::npos;) s.replace(p, uminus.size(), "-");
    return s;
}

int parse_int(const std::string& s, const std::string& whole) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad integer in object '" + whole + "'");
    }
}

}  // namespace

Indecomposable parse_object(const std::string& raw) {
    static const std::regex re(R"(^\s*([PS])\s*([+-])\s*(?:\(\s*(\d+)\s*\))?\s*(?:\[\s*([+-]?\d+)\s*\])?\s*$)");
    const std::string s = normalize_minus(raw);
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw UsageError("cannot parse object '" + raw + "' (expected P+[n], P-[n], S+(l)[n] or S-(l)[n])");
    const Sign sign = m[2] == "+" ? Sign::Plus : Sign::Minus;
    const int shift = m[4].matched ? parse_int(m[4], raw) : 0;
    if (m[1] == "P") {
        if (m[3].matched) throw UsageError("projective objects take no length: '" + raw + "'");
        return Indecomposable::P(sign, shift);
    }
    if (!m[3].matched) throw UsageError("minimal strings need a length: '" + raw + "'");
    const int l = parse_int(m[3], raw);
    if (l < 1) throw UsageError("minimal strings need l >= 1: '" + raw + "'");
    return Indecomposable::S(sign, l, shift);
}

bool is_zero_block_syntax(const std::string& raw) {
    static const std::regex re(R"(^\s*(P2|S\s*\().*)");
    return std::regex_match(normalize_minus(raw), re);
}

ZeroIndecomposable parse_zero_object(const std::string& raw) {
    static const std::regex re(R"(^\s*(?:(P2)|S\s*\(\s*(\d+)\s*\))\s*(?:\[\s*([+-]?\d+)\s*\])?\s*$)");
    const std::string s = normalize_minus(raw);
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw UsageError("cannot parse object '" + raw + "' (expected P2[n] or S(l)[n])");
    const int shift = m[3].matched ? parse_int(m[3], raw) : 0;
    if (m[1].matched) return ZeroIndecomposable::P2(shift);
    const int l = parse_int(m[2], raw);
    if (l < 1) throw UsageError("S(l) needs l >= 1: '" + raw + "'");
    return ZeroIndecomposable::S(l, shift);
}

json to_json(const ProjectiveComplex& c) {
    json j;
    j["terms"] = json::array();
    for (const auto& t : c.terms) j["terms"].push_back({{"degree", t.degree}, {"module", "P" + t.vertex}});
    j["differentials"] = json::array();
    for (const auto& d : c.differentials)
        j["differentials"].push_back({{"from_degree", d.from_degree},
                                      {"path", d.path.display()},
                                      {"arrows", d.path.arrows()}});
    return j;
}

json to_json(const ARWindow& w) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : w.vertices) j["vertices"].push_back(v.str());
    j["arrows"] = json::array();
    for (const auto& [a, b] : w.arrows) j["arrows"].push_back({a.str(), b.str()});
    j["translations"] = json::array();
    for (const auto& [a, b] : w.translations) j["translations"].push_back({a.str(), b.str()});
    return j;
}

}  // namespace singcat::nodal
