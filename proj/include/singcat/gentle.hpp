#pragma once

#include <map>
#include <string>
#include <vector>

#include "singcat/quiver.hpp"

namespace singcat::gentle {

struct Violation {
    std::string condition;  // "G1" .. "G4"
    std::string location;   // vertex or arrow identifier
    std::string detail;
};

struct GentleReport {
    bool is_gentle = true;
    std::vector<Violation> violations;
};

GentleReport check_gentle(const Presentation& P);

// A critical cycle a_1 .. a_n in traversal order: t(a_i) = s(a_{i+1}) and every
// cyclically consecutive pair (a_i, a_{i+1}) is a relation.  `arrows` is the
// lexicographically least rotation.
struct CriticalCycle {
    std::vector<std::string> arrows;

    std::size_t length() const { return arrows.size(); }
    std::string display() const;  // right-to-left, e.g. "jfe" for [e, f, j]
    bool operator==(const CriticalCycle&) const = default;
    auto operator<=>(const CriticalCycle&) const = default;
};

std::vector<std::string> least_rotation(const std::vector<std::string>& cyc);

// Sorted by canonical arrow sequence.  Throws "not-gentle".
std::vector<CriticalCycle> critical_cycles(const Presentation& P);

struct RadicalString {
    CriticalCycle cycle;
    std::string cycle_arrow;  // alpha on the cycle
    std::string vertex;       // s(alpha): the index i of R(c)_i
    Path walk;
};

struct GorensteinProjectives {
    std::vector<std::string> projectives;  // one indecomposable projective per vertex
    std::vector<RadicalString> radicals;
};

// Throws "not-gentle", or "infinite-dimensional" when the maximal-path search
// revisits an arrow.
GorensteinProjectives gorenstein_projectives(const Presentation& P);

// Maximal relation-free direct path that starts with `first`.
Path maximal_path_from(const Presentation& P, const std::string& first);

struct SingularityDecomposition {
    std::vector<int> factors;             // ascending; D^b(k)/[l] per entry
    std::vector<CriticalCycle> cycles;    // cycles[k] realises factors[k]
};

SingularityDecomposition singularity_category(const Presentation& P);

struct Comparison {
    bool compatible = false;
    std::vector<int> left;        // factor multiset of P1
    std::vector<int> right;       // factor multiset of P2
    std::vector<int> left_only;   // left \ right as multisets
    std::vector<int> right_only;  // right \ left
};

Comparison compare_invariant(const Presentation& P1, const Presentation& P2);

json to_json(const GentleReport& r);
json to_json(const std::vector<CriticalCycle>& cycles);
json to_json(const GorensteinProjectives& g);
json to_json(const SingularityDecomposition& d);
json to_json(const Comparison& c);

}  // namespace singcat::gentle
