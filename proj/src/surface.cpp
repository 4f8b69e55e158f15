#include "singcat/surface.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>

namespace singcat::surface {

std::string to_string(const Rational& r) {
    BigInt p = boost::multiprecision::numerator(r), q = boost::multiprecision::denominator(r);
    return q == 1 ? p.str() : p.str() + "/" + q.str();
}

// ---------------------------------------------------------------- graphs

DualGraph::DualGraph(std::vector<std::string> ids, std::vector<int> weights,
                     std::vector<std::pair<std::size_t, std::size_t>> edges)
    : ids_(std::move(ids)), weights_(std::move(weights)), edges_(std::move(edges)), adj_(ids_.size()) {
    if (weights_.size() != ids_.size()) throw Error("bad-graph", "one weight per vertex is required");
    for (auto [u, v] : edges_) {
        if (u >= size() || v >= size()) throw Error("bad-graph", "edge endpoint out of range");
        adj_[u].push_back(v);
        if (u != v) adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::size_t DualGraph::index_of(const std::string& id) const {
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) throw Error("unknown-vertex", "no vertex '" + id + "'", json{{"vertex", id}});
    return static_cast<std::size_t>(it - ids_.begin());
}

std::vector<std::vector<long long>> DualGraph::intersection_matrix() const {
    std::vector<std::vector<long long>> M(size(), std::vector<long long>(size(), 0));
    for (std::size_t i = 0; i < size(); ++i) M[i][i] = weights_[i];
    for (auto [u, v] : edges_)
        if (u != v) {
            ++M[u][v];
            ++M[v][u];
        }
    return M;
}

DualGraph DualGraph::induced(const std::vector<std::size_t>& keep) const {
    std::map<std::size_t, std::size_t> pos;
    std::vector<std::string> ids;
    std::vector<int> ws;
    for (std::size_t k = 0; k < keep.size(); ++k) {
        pos[keep[k]] = k;
        ids.push_back(ids_[keep[k]]);
        ws.push_back(weights_[keep[k]]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (auto [u, v] : edges_)
        if (pos.count(u) && pos.count(v)) es.push_back({pos[u], pos[v]});
    return DualGraph(std::move(ids), std::move(ws), std::move(es));
}

bool DualGraph::is_tree() const {
    if (size() == 0 || edges_.size() != size() - 1) return false;
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : adj_[u])
            if (!seen[v]) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
    }
    return count == size();
}

namespace {

[[noreturn]] void graph_syntax(int line, int col, const std::string& what) {
    throw Error("syntax", "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what,
                json{{"line", line}, {"column", col}});
}

}  // namespace

DualGraph parse_graph(const std::string& text) {
    struct Tok {
        std::string s;
        int line, col;
    };
    std::vector<std::vector<Tok>> stmts(1);
    int line = 1, col = 1;
    for (std::size_t i = 0; i < text.size();) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (c == '\n') {
            ++line, col = 1, ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++col, ++i;
        } else if (c == ';') {
            if (stmts.back().empty()) graph_syntax(line, col, "empty statement");
            stmts.emplace_back();
            ++col, ++i;
        } else {
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ';' &&
                   text[j] != '#')
                ++j;
            stmts.back().push_back({text.substr(i, j - i), line, col});
            for (std::size_t k = i; k < j; ++k)
                if ((static_cast<unsigned char>(text[k]) & 0xC0) != 0x80) ++col;
            i = j;
        }
    }
    if (!stmts.back().empty()) {
        const Tok& t = stmts.back().back();
        graph_syntax(t.line, t.col + static_cast<int>(t.s.size()), "missing ';'");
    }
    stmts.pop_back();

    std::vector<std::string> ids;
    std::vector<int> weights;
    std::map<std::string, std::size_t> index;
    std::vector<std::pair<Tok, Tok>> raw_edges;
    for (const auto& st : stmts) {
        const Tok& kw = st[0];
        if (kw.s == "vertex") {
            if (st.size() != 3) graph_syntax(kw.line, kw.col, "expected 'vertex <id> <weight>;'");
            if (index.count(st[1].s)) graph_syntax(st[1].line, st[1].col, "vertex '" + st[1].s + "' declared twice");
            int w;
            try {
                std::size_t used;
                w = std::stoi(st[2].s, &used);
                if (used != st[2].s.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                graph_syntax(st[2].line, st[2].col, "weight '" + st[2].s + "' is not an integer");
            }
            index[st[1].s] = ids.size();
            ids.push_back(st[1].s);
            weights.push_back(w);
        } else if (kw.s == "edge") {
            if (st.size() != 3) graph_syntax(kw.line, kw.col, "expected 'edge <id> <id>;'");
            raw_edges.push_back({st[1], st[2]});
        } else {
            graph_syntax(kw.line, kw.col, "unknown keyword '" + kw.s + "'");
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [a, b] : raw_edges) {
        for (const Tok* t : {&a, &b})
            if (!index.count(t->s))
                throw Error("undeclared-vertex",
                            "line " + std::to_string(t->line) + ", column " + std::to_string(t->col) +
                                ": undeclared vertex '" + t->s + "'",
                            json{{"line", t->line}, {"column", t->col}, {"vertex", t->s}});
        edges.push_back({index[a.s], index[b.s]});
    }
    return DualGraph(std::move(ids), std::move(weights), std::move(edges));
}

std::string serialize(const DualGraph& G) {
    std::string s;
    for (std::size_t i = 0; i < G.size(); ++i)
        s += "vertex " + G.ids()[i] + " " + std::to_string(G.weights()[i]) + ";\n";
    for (auto [u, v] : G.edges()) s += "edge " + G.ids()[u] + " " + G.ids()[v] + ";\n";
    return s;
}

json to_json(const DualGraph& G) {
    json j;
    j["vertices"] = json::array();
    for (std::size_t i = 0; i < G.size(); ++i)
        j["vertices"].push_back({{"id", G.ids()[i]}, {"weight", G.weights()[i]}});
    j["edges"] = json::array();
    for (auto [u, v] : G.edges()) j["edges"].push_back({G.ids()[u], G.ids()[v]});
    return j;
}

// ---------------------------------------------------------------- cyclic quotients

std::vector<long long> jung_hirzebruch(long long n, long long a) {
    if (n <= 1 || a <= 0 || a >= n)
        throw Error("bad-cyclic", "need n > 1 and 0 < a < n", json{{"n", n}, {"a", a}});
    if (std::gcd(n, a) != 1)
        throw Error("bad-cyclic", "n and a must be coprime", json{{"n", n}, {"a", a}, {"gcd", std::gcd(n, a)}});
    std::vector<long long> out;
    while (a != 0) {
        long long alpha = (n + a - 1) / a;
        out.push_back(alpha);
        long long r = alpha * a - n;
        n = a;
        a = r;
    }
    return out;
}

Rational evaluate_continued_fraction(const std::vector<long long>& alphas) {
    if (alphas.empty()) throw Error("bad-cyclic", "empty continued fraction");
    Rational x = alphas.back();
    for (std::size_t k = alphas.size() - 1; k-- > 0;) {
        if (x == 0) throw Error("bad-cyclic", "continued fraction divides by zero");
        x = Rational(alphas[k]) - 1 / x;
    }
    return x;
}

DualGraph cyclic_dual_graph(long long n, long long a) {
    auto alphas = jung_hirzebruch(n, a);
    std::vector<std::string> ids;
    std::vector<int> ws;
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        ids.push_back(std::to_string(i + 1));
        ws.push_back(static_cast<int>(-alphas[i]));
        if (i > 0) es.push_back({i - 1, i});
    }
    return DualGraph(std::move(ids), std::move(ws), std::move(es));
}

// ---------------------------------------------------------------- definiteness

namespace {

// Bareiss elimination on -M: the k-th pivot is the k-th leading minor.
// Returns nullopt when a machine-integer step overflows.
template <typename T, typename Step>
std::optional<bool> leading_minors_positive(const std::vector<std::vector<long long>>& M, Step step) {
    const std::size_t n = M.size();
    std::vector<std::vector<T>> A(n, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A[i][j] = -M[i][j];
    T prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (A[k][k] <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                if (!step(A[i][j], A[k][k], A[i][k], A[k][j], prev)) return std::nullopt;
        prev = A[k][k];
    }
    return true;
}

}  // namespace

bool is_negative_definite(const DualGraph& G) {
    const auto M = G.intersection_matrix();
    auto fast = leading_minors_positive<long long>(
        M, [](long long& x, long long p, long long a, long long b, long long prev) {
            long long u, v;
            if (__builtin_mul_overflow(x, p, &u) || __builtin_mul_overflow(a, b, &v) ||
                __builtin_sub_overflow(u, v, &u))
                return false;
            x = u / prev;
            return true;
        });
    if (fast) return *fast;
    return *leading_minors_positive<BigInt>(M, [](BigInt& x, const BigInt& p, const BigInt& a, const BigInt& b,
                                                  const BigInt& prev) {
        x = (x * p - a * b) / prev;
        return true;
    });
}

void validate(const DualGraph& G) {
    if (!G.is_tree())
        throw Error("not-a-tree", "the dual graph must be a tree (connected, no cycles or multiple edges)",
                    json{{"vertices", G.size()}, {"edges", G.edges().size()}});
    for (std::size_t i = 0; i < G.size(); ++i)
        if (G.weights()[i] > -2)
            throw Error("weight-above-minus-two",
                        "curve '" + G.ids()[i] + "' has self-intersection " + std::to_string(G.weights()[i]) +
                            " > -2",
                        json{{"vertex", G.ids()[i]}, {"weight", G.weights()[i]}});
    if (!is_negative_definite(G))
        throw Error("not-negative-definite", "the intersection matrix is not negative definite", to_json(G));
}

// ---------------------------------------------------------------- Laufer

long long intersect(const DualGraph& G, const Cycle& Z, std::size_t i) {
    long long s = static_cast<long long>(G.weights()[i]) * Z[i];
    for (std::size_t j : G.neighbours(i)) s += Z[j];
    return s;
}

Cycle fundamental_cycle(const DualGraph& G, std::mt19937_64* rng) {
    validate(G);
    Cycle Z(G.size(), 1);
    // Each step raises the quadratic form -Z.Z by a bounded amount; this cap
    // is far beyond anything a negative definite tree of this size reaches.
    const long long cap = 1'000'000;
    for (long long step = 0; step < cap; ++step) {
        std::vector<std::size_t> bad;
        for (std::size_t i = 0; i < G.size(); ++i)
            if (intersect(G, Z, i) > 0) bad.push_back(i);
        if (bad.empty()) return Z;
        std::size_t pick = bad.front();
        if (rng) pick = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(*rng)];
        ++Z[pick];
    }
    throw Error("laufer-diverged", "Laufer's algorithm did not terminate within the iteration bound", to_json(G));
}

std::vector<long long> special_ranks(const DualGraph& G) { return fundamental_cycle(G); }

std::vector<std::size_t> projective_injective_vertices(const DualGraph& G) {
    validate(G);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (G.weights()[i] < -2) out.push_back(i);
    return out;
}

std::vector<long long> canonical_syzygy_multiplicities(const DualGraph& G) {
    validate(G);
    std::vector<long long> out;
    for (int w : G.weights()) out.push_back(-2 - static_cast<long long>(w));
    return out;
}

// ---------------------------------------------------------------- ADE

ADEType parse_ade(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'A' && s[0] != 'D' && s[0] != 'E'))
        throw UsageError("ADE type must look like A5, D4 or E8, got '" + s + "'");
    int r;
    try {
        std::size_t used;
        r = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw UsageError("bad ADE rank in '" + s + "'");
    }
    ADEType t{s[0], r};
    const bool ok = (t.family == 'A' && r >= 1) || (t.family == 'D' && r >= 4) ||
                    (t.family == 'E' && r >= 6 && r <= 8);
    if (!ok) throw UsageError("no ADE type " + s);
    return t;
}

ADEType ade_recognize(const DualGraph& T) {
    auto fail = [&](const std::string& why) -> Error {
        return Error("not-ade", "not an ADE diagram: " + why, to_json(T));
    };
    if (!T.is_tree()) throw fail("not a connected tree");
    for (int w : T.weights())
        if (w != -2) throw fail("weights must all be -2");
    const std::size_t n = T.size();
    std::vector<std::size_t> branch;
    for (std::size_t i = 0; i < n; ++i) {
        if (T.neighbours(i).size() > 3) throw fail("a vertex has degree above 3");
        if (T.neighbours(i).size() == 3) branch.push_back(i);
    }
    if (branch.empty()) return {'A', static_cast<int>(n)};
    if (branch.size() > 1) throw fail("more than one branch vertex");
    const std::size_t c = branch.front();
    std::vector<int> arms;
    for (std::size_t start : T.neighbours(c)) {
        int len = 1;
        std::size_t prev = c, cur = start;
        while (T.neighbours(cur).size() == 2) {
            std::size_t nxt = T.neighbours(cur)[0] == prev ? T.neighbours(cur)[1] : T.neighbours(cur)[0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    const int N = static_cast<int>(n);
    if (arms[0] == 1 && arms[1] == 1) return {'D', N};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', N};
    throw fail("arm lengths (" + std::to_string(arms[0]) + "," + std::to_string(arms[1]) + "," +
               std::to_string(arms[2]) + ")");
}

Decomposition decompose(const DualGraph& G, const std::set<std::size_t>& S) {
    validate(G);
    for (std::size_t i : S) {
        if (i >= G.size()) throw Error("unknown-vertex", "contraction index out of range");
        if (G.weights()[i] != -2)
            throw Error("not-minus-two",
                        "curve '" + G.ids()[i] + "' has self-intersection " + std::to_string(G.weights()[i]) +
                            "; only (-2)-curves can be contracted",
                        json{{"vertex", G.ids()[i]}, {"weight", G.weights()[i]}});
    }
    Decomposition d;
    d.contracted.assign(S.begin(), S.end());
    std::set<std::size_t> left = S;
    while (!left.empty()) {
        std::vector<std::size_t> comp{*left.begin()};
        left.erase(left.begin());
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (std::size_t v : G.neighbours(comp[k]))
                if (left.erase(v)) comp.push_back(v);
        std::sort(comp.begin(), comp.end());
        d.blocks.push_back({ade_recognize(G.induced(comp)), comp});
    }
    std::sort(d.blocks.begin(), d.blocks.end(), [](const Block& a, const Block& b) {
        return std::tie(a.type, a.vertices) < std::tie(b.type, b.vertices);
    });
    return d;
}

Decomposition decompose_all_minus_two(const DualGraph& G) {
    std::set<std::size_t> S;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (G.weights()[i] == -2) S.insert(i);
    return decompose(G, S);
}

json to_json(const Decomposition& d, const DualGraph& G) {
    json j;
    j["contracted"] = json::array();
    for (std::size_t i : d.contracted) j["contracted"].push_back(G.ids()[i]);
    j["blocks"] = json::array();
    j["types"] = json::array();
    for (const auto& b : d.blocks) {
        json vs = json::array();
        for (std::size_t i : b.vertices) vs.push_back(G.ids()[i]);
        j["blocks"].push_back({{"type", b.type.str()}, {"vertices", vs}});
        j["types"].push_back(b.type.str());
    }
    return j;
}

}  // namespace singcat::surface
