#include "singcat/gentle.hpp"

#include <algorithm>
#include <set>

namespace singcat::gentle {

namespace {

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
    return s;
}

void require_gentle(const Presentation& P) {
    GentleReport r = check_gentle(P);
    if (r.is_gentle) return;
    const Violation& v = r.violations.front();
    throw Error("not-gentle",
                "presentation is not gentle: (" + v.condition + ") at " + v.location + ": " + v.detail,
                json{{"violations", to_json(r)["violations"]}});
}

// Successors of arrow a that compose with it, split by whether (a, b) is a relation.
void successors(const Presentation& P, const Arrow& a, std::vector<std::string>& rel,
                std::vector<std::string>& free) {
    for (const Arrow* b : P.quiver().outgoing(a.target))
        (P.is_relation(a.label, b->label) ? rel : free).push_back(b->label);
}

void predecessors(const Presentation& P, const Arrow& b, std::vector<std::string>& rel,
                  std::vector<std::string>& free) {
    for (const Arrow* a : P.quiver().incoming(b.source))
        (P.is_relation(a->label, b.label) ? rel : free).push_back(a->label);
}

}  // namespace

GentleReport check_gentle(const Presentation& P) {
    GentleReport r;
    const Quiver& q = P.quiver();
    for (const auto& v : q.vertices()) {
        auto in = q.incoming(v), out = q.outgoing(v);
        if (in.size() > 2)
            r.violations.push_back({"G1", v, std::to_string(in.size()) + " incoming arrows"});
        if (out.size() > 2)
            r.violations.push_back({"G1", v, std::to_string(out.size()) + " outgoing arrows"});
    }
    // (G2) holds by construction: relations are length-two paths.
    for (const auto& a : q.arrows()) {
        std::vector<std::string> srel, sfree, prel, pfree;
        successors(P, a, srel, sfree);
        predecessors(P, a, prel, pfree);
        if (srel.size() > 1)
            r.violations.push_back(
                {"G3", a.label, "several arrows follow " + a.label + " in a relation: " + join(srel)});
        if (prel.size() > 1)
            r.violations.push_back(
                {"G3", a.label, "several arrows precede " + a.label + " in a relation: " + join(prel)});
        if (sfree.size() > 1)
            r.violations.push_back(
                {"G4", a.label, "several arrows follow " + a.label + " outside I: " + join(sfree)});
        if (pfree.size() > 1)
            r.violations.push_back(
                {"G4", a.label, "several arrows precede " + a.label + " outside I: " + join(pfree)});
    }
    r.is_gentle = r.violations.empty();
    return r;
}

std::string CriticalCycle::display() const {
    std::string s;
    for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) s += *it;
    return s;
}

std::vector<std::string> least_rotation(const std::vector<std::string>& cyc) {
    std::vector<std::string> best = cyc;
    std::vector<std::string> rot = cyc;
    for (std::size_t k = 1; k < cyc.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

std::vector<CriticalCycle> critical_cycles(const Presentation& P) {
    require_gentle(P);
    const Quiver& q = P.quiver();
    std::set<CriticalCycle> found;
    for (const auto& start : q.arrows()) {
        // By (G3) every arrow has at most one relation-successor, so the
        // relation chain from `start` is determined.
        std::vector<std::string> chain{start.label};
        std::set<std::string> seen{start.label};
        const Arrow* cur = &start;
        while (true) {
            std::vector<std::string> rel, free;
            successors(P, *cur, rel, free);
            if (rel.empty()) break;
            if (rel.front() == start.label) {
                found.insert({least_rotation(chain)});
                break;
            }
            if (!seen.insert(rel.front()).second) break;
            chain.push_back(rel.front());
            cur = &q.arrow(rel.front());
        }
    }
    return {found.begin(), found.end()};
}

Path maximal_path_from(const Presentation& P, const std::string& first) {
    const Quiver& q = P.quiver();
    std::vector<std::string> walk{first};
    std::set<std::string> seen{first};
    while (true) {
        std::vector<std::string> rel, free;
        successors(P, q.arrow(walk.back()), rel, free);
        if (free.empty()) break;
        const std::string& next = free.front();
        if (!seen.insert(next).second) {
            std::vector<std::string> loop(std::find(walk.begin(), walk.end(), next), walk.end());
            throw Error("infinite-dimensional",
                        "infinite-dimensional algebra: relation-free cycle through arrow '" + next + "'",
                        json{{"cycle", loop}});
        }
        walk.push_back(next);
    }
    return Path::of(q, walk);
}

GorensteinProjectives gorenstein_projectives(const Presentation& P) {
    GorensteinProjectives g;
    g.projectives = P.quiver().vertices();
    const Quiver& q = P.quiver();
    for (const auto& c : critical_cycles(P)) {
        for (const auto& label : c.arrows) {
            const Arrow& alpha = q.arrow(label);
            std::vector<std::string> rel, free;
            successors(P, alpha, rel, free);
            Path walk = free.empty() ? Path::lazy(alpha.target) : maximal_path_from(P, free.front());
            g.radicals.push_back({c, label, alpha.source, std::move(walk)});
        }
    }
    return g;
}

SingularityDecomposition singularity_category(const Presentation& P) {
    std::vector<CriticalCycle> cycles = critical_cycles(P);
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const CriticalCycle& a, const CriticalCycle& b) { return a.length() < b.length(); });
    SingularityDecomposition d;
    for (const auto& c : cycles) d.factors.push_back(static_cast<int>(c.length()));
    d.cycles = std::move(cycles);
    return d;
}

Comparison compare_invariant(const Presentation& P1, const Presentation& P2) {
    Comparison c;
    c.left = singularity_category(P1).factors;
    c.right = singularity_category(P2).factors;
    std::set_difference(c.left.begin(), c.left.end(), c.right.begin(), c.right.end(),
                        std::back_inserter(c.left_only));
    std::set_difference(c.right.begin(), c.right.end(), c.left.begin(), c.left.end(),
                        std::back_inserter(c.right_only));
    c.compatible = c.left_only.empty() && c.right_only.empty();
    return c;
}

json to_json(const GentleReport& r) {
    json j;
    j["is_gentle"] = r.is_gentle;
    j["violations"] = json::array();
    for (const auto& v : r.violations)
        j["violations"].push_back({{"condition", v.condition}, {"location", v.location}, {"detail", v.detail}});
    return j;
}

namespace {
json cycle_json(const CriticalCycle& c) {
    return {{"arrows", c.arrows}, {"display", c.display()}, {"length", c.length()}};
}
}  // namespace

json to_json(const std::vector<CriticalCycle>& cycles) {
    json j;
    j["cycles"] = json::array();
    for (const auto& c : cycles) j["cycles"].push_back(cycle_json(c));
    return j;
}

json to_json(const GorensteinProjectives& g) {
    json j;
    j["projectives"] = g.projectives;
    j["radicals"] = json::array();
    for (const auto& r : g.radicals) {
        json w = singcat::to_json(r.walk);
        j["radicals"].push_back({{"cycle", r.cycle.display()},
                                 {"cycle_arrow", r.cycle_arrow},
                                 {"vertex", r.vertex},
                                 {"walk", w}});
    }
    return j;
}

json to_json(const SingularityDecomposition& d) {
    json j;
    j["factors"] = d.factors;
    j["cycles"] = json::array();
    for (const auto& c : d.cycles) j["cycles"].push_back(cycle_json(c));
    return j;
}

json to_json(const Comparison& c) {
    json j;
    j["compatible"] = c.compatible;
    j["witness"] = {{"left_only", c.left_only}, {"right_only", c.right_only}};
    j["left"] = c.left;
    j["right"] = c.right;
    return j;
}

}  // namespace singcat::gentle
