#pragma once

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "singcat/error.hpp"

namespace singcat::surface {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const Rational& r);  // "p/q", or "p" when integral

// Weighted graph of exceptional curves.  Vertex order is declaration order;
// "smallest index" always refers to it.
class DualGraph {
public:
    DualGraph() = default;
    DualGraph(std::vector<std::string> ids, std::vector<int> weights,
              std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbours(std::size_t i) const { return adj_[i]; }
    std::size_t index_of(const std::string& id) const;

    // Intersection matrix: weights on the diagonal, edge multiplicities off it.
    std::vector<std::vector<long long>> intersection_matrix() const;

    // Subgraph induced on `keep`, preserving relative order.
    DualGraph induced(const std::vector<std::size_t>& keep) const;

    bool is_tree() const;

private:
    std::vector<std::string> ids_;
    std::vector<int> weights_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adj_;
};

DualGraph parse_graph(const std::string& text);
std::string serialize(const DualGraph& G);
json to_json(const DualGraph& G);

std::vector<long long> jung_hirzebruch(long long n, long long a);
Rational evaluate_continued_fraction(const std::vector<long long>& alphas);
DualGraph cyclic_dual_graph(long long n, long long a);

// Exact leading-minor test on the intersection matrix.
bool is_negative_definite(const DualGraph& G);

// Tree, then weights <= -2, then negative definiteness; throws on the first
// failure with codes "not-a-tree", "weight-above-minus-two",
// "not-negative-definite".
void validate(const DualGraph& G);

using Cycle = std::vector<long long>;  // coefficient per vertex

long long intersect(const DualGraph& G, const Cycle& Z, std::size_t i);

// Laufer's algorithm.  Without `rng` the smallest violating index is chosen,
// otherwise a uniformly random violator.
Cycle fundamental_cycle(const DualGraph& G, std::mt19937_64* rng = nullptr);

std::vector<long long> special_ranks(const DualGraph& G);
std::vector<std::size_t> projective_injective_vertices(const DualGraph& G);
std::vector<long long> canonical_syzygy_multiplicities(const DualGraph& G);

struct ADEType {
    char family = 'A';
    int rank = 1;

    std::string str() const { return std::string(1, family) + std::to_string(rank); }
    bool operator==(const ADEType&) const = default;
    auto operator<=>(const ADEType&) const = default;
};

ADEType parse_ade(const std::string& s);  // "A5", "D4", "E8"; throws UsageError

// Shape classification of a connected tree whose weights are all -2.
// Throws "not-ade".
ADEType ade_recognize(const DualGraph& T);

struct Block {
    ADEType type;
    std::vector<std::size_t> vertices;
};

struct Decomposition {
    std::vector<std::size_t> contracted;
    std::vector<Block> blocks;  // sorted by type, then by first vertex
};

// Contracts exactly S (indices of (-2)-curves).  Throws "not-minus-two" when S
// contains another curve.
Decomposition decompose(const DualGraph& G, const std::set<std::size_t>& S);
Decomposition decompose_all_minus_two(const DualGraph& G);

json to_json(const Decomposition& d, const DualGraph& G);

}  // namespace singcat::surface
