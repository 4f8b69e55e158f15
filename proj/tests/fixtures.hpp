#pragma once

// Shared inputs and independent oracles for the test suites and the
// acceptance runner.  Nothing here calls into the code under test except to
// build inputs.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "singcat/nodal.hpp"
#include "singcat/quiver.hpp"
#include "singcat/surface.hpp"

namespace fixtures {

inline const char* kIllustrative = R"(
vertices 1 2 3 4 5 6 7 8;
arrow a: 1 -> 2;
arrow b: 2 -> 3;
arrow c: 3 -> 4;
arrow d: 5 -> 1;
arrow e: 6 -> 2;
arrow f: 2 -> 7;
arrow g: 4 -> 7;
arrow h: 8 -> 4;
arrow i: 6 -> 5;
arrow j: 7 -> 6;
arrow k: 7 -> 8;
relation ba;
relation fe;
relation jf;
relation ej;
relation kg;
relation hk;
relation gh;
)";

// Chain algebra: vertices 0..n, g1: 0 -> 1, g2: 0 -> n, ai: i -> i+1,
// bi: i+1 -> i, with ai bi and bi ai in the ideal.
inline std::string lambda_text(int n) {
    std::string t = "vertices";
    for (int v = 0; v <= n; ++v) t += " " + std::to_string(v);
    t += ";\narrow g1: 0 -> 1;\narrow g2: 0 -> " + std::to_string(n) + ";\n";
    for (int i = 1; i < n; ++i) {
        const std::string s = std::to_string(i), u = std::to_string(i + 1);
        t += "arrow a" + s + ": " + s + " -> " + u + ";\n";
        t += "arrow b" + s + ": " + u + " -> " + s + ";\n";
        t += "relation b" + s + " a" + s + ";\nrelation a" + s + " b" + s + ";\n";
    }
    return t;
}

inline const char* kFinal = R"(
vertices 1 2 3 5 6 7 8 9 10;
arrows a1: 2 -> 3, a2: 3 -> 5, a3: 5 -> 6, a4: 6 -> 7, a5: 7 -> 1, a6: 1 -> 2;
arrows b1: 2 -> 3, b2: 3 -> 6, b3: 6 -> 7, b4: 7 -> 8, b5: 8 -> 9, b6: 9 -> 10, b7: 10 -> 2;
arrow c: 8 -> 8;
relations a2 a1, a3 a2, a4 a3, a5 a4, a6 a5, a1 a6;
relations b2 b1, b3 b2, b4 b3, b5 b4, b6 b5, b7 b6, b1 b7;
relation c c;
)";

inline const char* kHexagon = R"(
vertices 1 2 3;
arrows x1: 1 -> 2, x2: 2 -> 3, x3: 3 -> 1;
relations x2 x1, x3 x2, x1 x3;
)";

// The displayed dual graph of 1/27(1,19): -2 -2 -5 -2 -2 -2 along a path.
inline const char* kGraph2719 = R"(
vertex 1 -2;
vertex 2 -2;
vertex 3 -5;
vertex 4 -2;
vertex 5 -2;
vertex 6 -2;
edge 1 2;
edge 2 3;
edge 3 4;
edge 4 5;
edge 5 6;
)";

inline const char* kGraph5111 = R"(
vertex 1 -5;
vertex 2 -3;
vertex 3 -4;
edge 1 2;
edge 2 3;
)";

// Central -4 curve with (-2)-arms of lengths 2, 2 and 1.
inline const char* kGraphT13 = R"(
vertex c -4;
vertex p1 -2;
vertex p2 -2;
vertex q1 -2;
vertex q2 -2;
vertex r1 -2;
edge c p1;
edge p1 p2;
edge c q1;
edge q1 q2;
edge c r1;
)";

inline const char* kGraphD4 = R"(
vertex c -2;
vertex x -2;
vertex y -2;
vertex z -2;
edge c x;
edge c y;
edge c z;
)";

// ---------------------------------------------------------------- trees

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

// Canonical string of a tree rooted at r (AHU encoding).
inline std::string ahu(const std::vector<std::vector<std::size_t>>& adj, std::size_t r, std::size_t parent) {
    std::vector<std::string> kids;
    for (std::size_t c : adj[r])
        if (c != parent) kids.push_back(ahu(adj, c, r));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

inline std::string tree_key(std::size_t n, const Edges& edges) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::string best;
    for (std::size_t r = 0; r < n; ++r) {
        std::string k = ahu(adj, r, n);
        if (best.empty() || k < best) best = k;
    }
    return best;
}

// All unlabelled trees on n vertices, as edge lists on 0..n-1.
inline std::vector<Edges> trees(std::size_t n) {
    std::vector<Edges> level{Edges{}};
    for (std::size_t size = 2; size <= n; ++size) {
        std::map<std::string, Edges> next;
        for (const auto& t : level)
            for (std::size_t v = 0; v + 1 < size; ++v) {
                Edges e = t;
                e.push_back({v, size - 1});
                next.emplace(tree_key(size, e), e);
            }
        level.clear();
        for (auto& [_, e] : next) level.push_back(e);
    }
    return n == 0 ? std::vector<Edges>{} : level;
}

inline singcat::surface::DualGraph weighted_tree(const Edges& edges, const std::vector<int>& weights) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < weights.size(); ++i) ids.push_back("v" + std::to_string(i));
    return singcat::surface::DualGraph(ids, weights, edges);
}

// Definiteness by eliminating leaves of the tree one at a time (an LDL^T
// factorisation of -M in leaf order over the rationals): -M is positive
// definite iff every pivot is positive.  Independent of the leading-minor
// route taken by the library.
inline bool negative_definite_oracle(const singcat::surface::DualGraph& G) {
    struct Frac {
        long long p, q;  // q > 0
    };
    const std::size_t n = G.size();
    std::vector<Frac> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = {-G.weights()[i], 1};
    std::vector<std::size_t> degree(n), parent(n, n);
    std::vector<bool> gone(n, false);
    for (std::size_t i = 0; i < n; ++i) degree[i] = G.neighbours(i).size();
    for (std::size_t round = 0; round < n; ++round) {
        std::size_t leaf = n;
        for (std::size_t i = 0; i < n && leaf == n; ++i)
            if (!gone[i] && degree[i] <= 1) leaf = i;
        if (leaf == n) return false;  // not a forest
        if (diag[leaf].p <= 0) return false;
        gone[leaf] = true;
        for (std::size_t j : G.neighbours(leaf))
            if (!gone[j]) {
                // diag[j] -= 1 / diag[leaf]
                Frac& d = diag[j];
                const Frac l = diag[leaf];
                long long p = d.p * l.p - d.q * l.q, q = d.q * l.p;
                const long long g = std::gcd(p < 0 ? -p : p, q);
                d = {p / g, q / g};
                --degree[j];
            }
    }
    return true;
}

inline long long dot(const singcat::surface::DualGraph& G, const std::vector<long long>& Z, std::size_t i) {
    long long s = static_cast<long long>(G.weights()[i]) * Z[i];
    for (std::size_t j : G.neighbours(i)) s += Z[j];
    return s;
}

inline bool anti_nef(const singcat::surface::DualGraph& G, const std::vector<long long>& Z) {
    for (std::size_t i = 0; i < G.size(); ++i)
        if (dot(G, Z, i) > 0) return false;
    return true;
}

// Z is the least positive anti-nef cycle: it is anti-nef and no other
// positive anti-nef cycle lies below it.  Anti-nef cycles are closed under
// componentwise minimum, so this is global minimality.  The box [1, Z] is
// searched depth first; unassigned coefficients count as 1 (their least
// value) when testing an inequality early.
inline bool least_anti_nef(const singcat::surface::DualGraph& G, const std::vector<long long>& Z) {
    if (!anti_nef(G, Z)) return false;
    for (long long z : Z)
        if (z < 1) return false;
    const std::size_t n = G.size();
    std::vector<long long> cur(n, 1);
    std::vector<bool> set(n, false);
    auto feasible = [&](std::size_t i) {
        // cur holds 1 at unassigned vertices, so dot() is a lower bound
        return dot(G, cur, i) <= 0;
    };
    bool other = false;
    std::function<void(std::size_t)> go = [&](std::size_t v) {
        if (v == n) {
            if (cur != Z) other = true;
            return;
        }
        set[v] = true;
        for (long long x = 1; x <= Z[v] && !other; ++x) {
            cur[v] = x;
            // a larger x only tightens the neighbours' inequalities
            bool ok = true;
            for (std::size_t j : G.neighbours(v)) ok = ok && (!set[j] || feasible(j));
            if (!ok) break;
            if (feasible(v)) go(v + 1);
        }
        cur[v] = 1;
        set[v] = false;
    };
    go(0);
    return !other;
}

// ---------------------------------------------------------------- nodal

// The four Hom formulas for the nodal block, transcribed directly.
inline int hom_oracle(const singcat::nodal::Indecomposable& X, const singcat::nodal::Indecomposable& Y) {
    using singcat::nodal::Sign;
    auto d = [](int n, Sign s) { return n % 2 == 0 ? s : (s == Sign::Plus ? Sign::Minus : Sign::Plus); };
    if (X.is_projective() && Y.is_projective()) {
        // Hom(P_mu, P_tau[n])
        const int n = Y.shift - X.shift;
        return n <= 0 && X.sign == d(n, Y.sign);
    }
    if (X.is_projective()) {
        // Hom(P_mu[n], S_tau(l))
        const int n = X.shift - Y.shift, l = Y.length;
        return 0 <= n && n < l && X.sign == d(n, Y.sign);
    }
    if (Y.is_projective()) {
        // Hom(S_tau(l), P_mu[n])
        const int n = Y.shift - X.shift, l = X.length;
        return 2 <= n && n <= l + 1 && Y.sign != d(n, X.sign);
    }
    // Hom(S_tau(l), S_mu(l')[n])
    const int n = Y.shift - X.shift, l = X.length, lp = Y.length;
    if (n <= 0 && l >= lp + n && lp + n >= 1 && Y.sign == d(n, X.sign)) return 1;
    if (n >= 2 && lp >= l + 2 - n && l + 2 - n >= 1 && Y.sign != d(n, X.sign)) return 1;
    return 0;
}

inline std::vector<singcat::nodal::Indecomposable> nodal_window(int lo, int hi, int maxlen) {
    using namespace singcat::nodal;
    std::vector<Indecomposable> out;
    for (int n = lo; n <= hi; ++n)
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            out.push_back(Indecomposable::P(s, n));
            for (int l = 1; l <= maxlen; ++l) out.push_back(Indecomposable::S(s, l, n));
        }
    return out;
}

// ---------------------------------------------------------------- gentle

// Critical cycles by brute force: every closed walk without repeated arrows
// whose cyclically consecutive pairs are all relations, reduced to the set of
// arrow sequences up to rotation.
inline std::set<std::vector<std::string>> brute_force_cycles(const singcat::Presentation& P) {
    const auto& arrows = P.quiver().arrows();
    std::set<std::vector<std::string>> found;
    std::vector<std::string> walk;
    std::set<std::string> used;
    std::function<void()> extend = [&] {
        const singcat::Arrow& last = P.quiver().arrow(walk.back());
        const singcat::Arrow& first = P.quiver().arrow(walk.front());
        if (last.target == first.source && P.is_relation(walk.back(), walk.front())) {
            bool ok = true;
            for (std::size_t k = 0; k + 1 < walk.size(); ++k) ok = ok && P.is_relation(walk[k], walk[k + 1]);
            if (ok) {
                auto best = walk;
                for (std::size_t r = 1; r < walk.size(); ++r) {
                    std::vector<std::string> rot(walk.begin() + r, walk.end());
                    rot.insert(rot.end(), walk.begin(), walk.begin() + r);
                    best = std::min(best, rot);
                }
                found.insert(best);
            }
        }
        for (const auto& a : arrows)
            if (a.source == last.target && !used.count(a.label)) {
                walk.push_back(a.label);
                used.insert(a.label);
                extend();
                used.erase(a.label);
                walk.pop_back();
            }
    };
    for (const auto& a : arrows) {
        walk = {a.label};
        used = {a.label};
        extend();
    }
    return found;
}

// Canonical cyclic class of a right-to-left display word over one-letter
// labels: the least rotation.
inline std::string cyclic_class(std::string w) {
    std::string best = w;
    for (std::size_t r = 1; r < w.size(); ++r) best = std::min(best, w.substr(r) + w.substr(0, r));
    return best;
}

}  // namespace fixtures
