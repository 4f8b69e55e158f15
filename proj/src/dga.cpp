#include "singcat/dga.hpp"

#include <algorithm>
#include <tuple>

namespace singcat::dga {

Parity knoerrer_parity(int d) {
    if (d < 0) throw Error("bad-dimension", "Krull dimension must be non-negative", json{{"dimension", d}});
    return d % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

const Arrow& GradedQuiver::broken_at(const std::string& v) const {
    for (const auto& a : broken)
        if (a.source == v) return a;
    throw Error("no-broken-arrow", "no broken arrow at vertex " + v, json{{"vertex", v}});
}

namespace {

std::string a(int i) { return "α" + std::to_string(i); }
std::string s(int i) { return "α" + std::to_string(i) + "*"; }
std::string v(int i) { return std::to_string(i); }

struct Builder {
    GradedQuiver q;

    void vertices(int lo, int hi) {
        for (int i = lo; i <= hi; ++i) q.vertices.push_back(v(i));
    }
    void arrow(const std::string& label, int from, int to) { q.solid.push_back({label, v(from), v(to)}); }
    // alpha_i: from -> to together with alpha_i^*: to -> from.
    void pair(int i, int from, int to) {
        arrow(a(i), from, to);
        arrow(s(i), to, from);
    }
    void swap(int x, int y) {
        q.translation[v(x)] = v(y);
        q.translation[v(y)] = v(x);
    }
    GradedQuiver finish() {
        for (const auto& x : q.vertices)
            if (!q.translation.count(x)) q.translation[x] = x;
        for (const auto& x : q.vertices) q.broken.push_back({"ρ" + x, x, q.translation.at(x)});
        return std::move(q);
    }
};

// ---- even Krull dimension: double of the Dynkin quiver, tau = id.

GradedQuiver even_table(const surface::ADEType& t) {
    Builder b;
    const int n = t.rank;
    b.vertices(1, n);
    if (t.family == 'A') {
        for (int i = 1; i < n; ++i) b.pair(i, i, i + 1);
    } else if (t.family == 'D') {
        b.pair(1, 1, 3);
        b.pair(2, 2, 3);
        for (int i = 3; i < n; ++i) b.pair(i, i, i + 1);
    } else {
        b.pair(1, 1, 4);
        for (int i = 2; i < n; ++i) b.pair(i, i, i + 1);
    }
    return b.finish();
}

// ---- odd Krull dimension.

GradedQuiver odd_A(int n) {
    Builder b;
    if (n % 2 == 0) {
        const int m = n / 2;
        b.vertices(1, m);
        for (int i = 1; i < m; ++i) b.pair(i, i, i + 1);
        b.arrow("γ", m, m);
    } else if (n == 1) {
        b.vertices(1, 2);
        b.swap(1, 2);
    } else {
        const int m = (n + 1) / 2;
        b.vertices(1, m + 1);
        b.pair(1, 1, 3);
        b.pair(2, 2, 3);
        for (int i = 3; i <= m; ++i) b.pair(i, i, i + 1);
        b.swap(1, 2);
    }
    return b.finish();
}

// Two rows: evens 0, 2, 4, ... and odds 1, 3, 5, ...; alpha_j: j -> j+2 along
// the rows, alpha*_{2k}: 2k+3 -> 2k and alpha*_{2k+1}: 2k+2 -> 2k+1 across.
void ladder(Builder& b, int last_even_row, int last_odd_row, int last_cross) {
    for (int j = 0; j <= last_even_row; j += 2) b.arrow(a(j), j, j + 2);
    for (int j = 1; j <= last_odd_row; j += 2) b.arrow(a(j), j, j + 2);
    for (int j = 0; j <= last_cross; ++j) {
        if (j % 2 == 0)
            b.arrow(s(j), j + 3, j);
        else
            b.arrow(s(j), j + 1, j);
    }
}

GradedQuiver odd_D(int n) {
    Builder b;
    if (n % 2 == 1) {
        const int m = (n - 1) / 2;
        const int top = 4 * m - 2;
        b.vertices(0, top);
        ladder(b, 4 * m - 6, 4 * m - 5, 4 * m - 5);
        b.arrow(a(4 * m - 4), top, 4 * m - 4);
        b.arrow(s(4 * m - 4), 4 * m - 4, top);
        b.arrow(s(4 * m - 3), top, 4 * m - 3);
        b.arrow(a(4 * m - 3), 4 * m - 3, top);
        for (int k = 0; 2 * k + 1 < top; ++k) b.swap(2 * k, 2 * k + 1);
    } else {
        const int m = n / 2;
        b.vertices(0, 4 * m - 1);
        ladder(b, 4 * m - 8, 4 * m - 7, 4 * m - 7);
        b.arrow(s(4 * m - 4), 4 * m - 5, 4 * m - 4);
        b.arrow(s(4 * m - 1), 4 * m - 6, 4 * m - 1);
        b.arrow(a(4 * m - 4), 4 * m - 4, 4 * m - 6);
        b.arrow(a(4 * m - 6), 4 * m - 6, 4 * m - 3);
        b.arrow(a(4 * m - 5), 4 * m - 5, 4 * m - 2);
        b.arrow(a(4 * m - 1), 4 * m - 1, 4 * m - 5);
        b.arrow(a(4 * m - 2), 4 * m - 2, 4 * m - 6);
        b.arrow(a(4 * m - 3), 4 * m - 3, 4 * m - 5);
        for (int k = 0; 2 * k + 1 <= 4 * m - 1; ++k) b.swap(2 * k, 2 * k + 1);
    }
    return b.finish();
}

GradedQuiver odd_E(int n) {
    Builder b;
    if (n == 6) {
        b.vertices(1, 6);
        b.arrow(s(1), 3, 1);
        b.arrow(s(2), 4, 2);
        b.arrow(a(1), 1, 4);
        b.arrow(a(2), 2, 3);
        b.pair(3, 3, 5);
        b.pair(4, 4, 5);
        b.pair(5, 5, 6);
        b.swap(1, 2);
        b.swap(3, 4);
        return b.finish();
    }
    // E7 and E8 share a ladder on 1 .. 2k: alpha*_i: i+2 -> i, alpha_i for odd
    // i: i -> i+3, alpha_i for even i: i -> i+1, plus two extra vertices
    // attached to one rung.
    const int rows = n == 7 ? 12 : 14;
    b.vertices(1, rows + 2);
    for (int i = 1; i + 2 <= rows; ++i) b.arrow(s(i), i + 2, i);
    for (int i = 1; i <= rows; ++i) {
        if (i % 2 == 1 && i + 3 <= rows) b.arrow(a(i), i, i + 3);
        if (i % 2 == 0 && i + 1 <= rows) b.arrow(a(i), i, i + 1);
    }
    const int e = rows + 1;  // extra vertices e, e+1
    if (n == 7) {
        b.arrow(a(e), e, 6);
        b.arrow(s(e + 1), 6, e + 1);
        b.arrow(a(e + 1), e + 1, 5);
        b.arrow(s(e), 5, e);
    } else {
        b.arrow(a(e), e, 10);
        b.arrow(s(e + 1), 10, e + 1);
        b.arrow(a(e + 1), e + 1, 9);
        b.arrow(s(e), 9, e);
    }
    for (int i = 1; i <= rows + 1; i += 2) b.swap(i, i + 1);
    return b.finish();
}

// Display order of summands: starred first arrows, then plain, each by index.
std::tuple<int, int, std::string> summand_key(const Path& p) {
    const std::string& first = p.arrows().front();
    const bool star = !first.empty() && first.back() == '*';
    int index = 1 << 20;
    std::string digits;
    for (char c : first)
        if (c >= '0' && c <= '9') digits += c;
    if (!digits.empty()) index = std::stoi(digits);
    return {star ? 0 : 1, index, first};
}

}  // namespace

GradedQuiver dg_auslander(const surface::ADEType& t, Parity p) {
    const bool ok = (t.family == 'A' && t.rank >= 1) || (t.family == 'D' && t.rank >= 4) ||
                    (t.family == 'E' && t.rank >= 6 && t.rank <= 8);
    if (!ok) throw Error("bad-type", "no ADE type " + t.str(), json{{"type", t.str()}});
    GradedQuiver q;
    if (p == Parity::Even)
        q = even_table(t);
    else if (t.family == 'A')
        q = odd_A(t.rank);
    else if (t.family == 'D')
        q = odd_D(t.rank);
    else
        q = odd_E(t.rank);
    q.type = t;
    q.parity = p;
    return q;
}

Quiver solid_quiver(const GradedQuiver& q) { return Quiver(q.vertices, q.solid); }

MeshImage mesh_image(const GradedQuiver& q, const std::string& i) {
    const Quiver solid = solid_quiver(q);
    const std::string& target = q.translation.at(i);
    MeshImage out;
    for (const Arrow* x : solid.outgoing(i)) {
        std::vector<std::string> partners;
        for (const Arrow* y : solid.outgoing(x->target))
            if (y->target == target) partners.push_back(y->label);
        if (partners.size() != 1)
            throw Error("mesh-partner",
                        "arrow " + x->label + " out of " + i + " has " + std::to_string(partners.size()) +
                            " partner arrows back to " + target,
                        json{{"vertex", i}, {"arrow", x->label}, {"partners", partners}});
        out.push_back(Path::of(solid, {x->label, partners.front()}));
    }
    std::sort(out.begin(), out.end(), [](const Path& l, const Path& r) { return summand_key(l) < summand_key(r); });
    return out;
}

std::map<std::string, MeshImage> differential(const GradedQuiver& q) {
    std::map<std::string, MeshImage> d;
    for (const auto& r : q.broken) d[r.label] = mesh_image(q, r.source);
    return d;
}

std::size_t k0_rank(const GradedQuiver& q) { return q.vertices.size(); }

std::string display(const MeshImage& m) {
    if (m.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) {
        std::string d = m[k].display();
        // A path through a single loop twice prints as a square.
        if (m[k].arrows()[0] == m[k].arrows()[1]) d = m[k].arrows()[0] + "²";
        s += (k ? " + " : "") + d;
    }
    return s;
}

json to_json(const GradedQuiver& q) {
    json j;
    j["type"] = q.type.str();
    j["parity"] = parity_name(q.parity);
    j["vertices"] = q.vertices;
    auto arrows = [](const std::vector<Arrow>& as, int deg) {
        json out = json::array();
        for (const auto& x : as)
            out.push_back({{"label", x.label}, {"source", x.source}, {"target", x.target}, {"degree", deg}});
        return out;
    };
    j["solid_arrows"] = arrows(q.solid, 0);
    j["broken_arrows"] = arrows(q.broken, -1);
    json tr = json::object();
    for (const auto& x : q.vertices) tr[x] = q.translation.at(x);
    j["translation"] = tr;
    json d = json::object();
    for (const auto& r : q.broken) {
        json terms = json::array();
        for (const auto& p : mesh_image(q, r.source))
            terms.push_back({{"coefficient", 1}, {"arrows", p.arrows()}, {"display", p.display()}});
        d[r.label] = {{"display", display(mesh_image(q, r.source))}, {"terms", terms}};
    }
    j["differential"] = d;
    j["k0_rank"] = k0_rank(q);
    return j;
}

std::string to_text(const GradedQuiver& q) {
    std::string t = "# " + q.type.str() + ", " + parity_name(q.parity) + " Krull dimension\n";
    t += "vertices";
    for (const auto& x : q.vertices) t += " " + x;
    t += ";\n";
    for (const auto& x : q.solid) t += "arrow " + x.label + ": " + x.source + " -> " + x.target + " deg 0;\n";
    for (const auto& x : q.broken) t += "arrow " + x.label + ": " + x.source + " --> " + x.target + " deg -1;\n";
    for (const auto& x : q.broken) t += "d(" + x.label + ") = " + display(mesh_image(q, x.source)) + ";\n";
    return t;
}

}  // namespace singcat::dga
