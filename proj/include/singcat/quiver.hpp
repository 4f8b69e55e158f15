#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "singcat/error.hpp"

namespace singcat {

struct Arrow {
    std::string label;
    std::string source;
    std::string target;

    bool operator==(const Arrow&) const = default;
};

// Vertices and arrows are kept sorted by identifier so that every
// serialization is canonical.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_vertex(const std::string& v) const;
    bool has_arrow(const std::string& label) const;
    const Arrow& arrow(const std::string& label) const;

    std::vector<const Arrow*> outgoing(const std::string& v) const;
    std::vector<const Arrow*> incoming(const std::string& v) const;

    bool operator==(const Quiver& o) const {
        return vertices_ == o.vertices_ && arrows_ == o.arrows_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, std::size_t> index_;
};

// A direct path, stored first-applied-first.  The lazy path e_v has no arrows
// and source == target == v.
class Path {
public:
    static Path lazy(const std::string& v);
    static Path of(const Quiver& q, const std::vector<std::string>& labels);

    const std::vector<std::string>& arrows() const { return arrows_; }
    const std::string& source() const { return source_; }
    const std::string& target() const { return target_; }
    std::size_t length() const { return arrows_.size(); }
    bool is_lazy() const { return arrows_.empty(); }

    // Right-to-left juxtaposition, "e_v" for lazy paths.
    std::string display() const;

    bool operator==(const Path&) const = default;

private:
    friend Path compose(const Path& p, const Path& q);

    std::vector<std::string> arrows_;
    std::string source_;
    std::string target_;
};

Path compose(const Path& p, const Path& q);

using Relation = std::pair<std::string, std::string>;  // (a, b): apply a, then b

class Presentation {
public:
    Presentation() = default;
    Presentation(Quiver q, std::vector<Relation> relations);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    bool is_relation(const std::string& a, const std::string& b) const;

    bool operator==(const Presentation& o) const {
        return quiver_ == o.quiver_ && relations_ == o.relations_;
    }

private:
    Quiver quiver_;
    std::vector<Relation> relations_;
    std::set<Relation> lookup_;
};

bool path_in_ideal(const Path& p, const Presentation& P);

Presentation parse_presentation(const std::string& text);
std::string serialize(const Presentation& P);

json to_json(const Path& p);
json to_json(const Presentation& P);
Presentation presentation_from_json(const json& j);

// Splits a juxtaposed word such as "ba" or "α2α1*" into arrow labels,
// right-to-left, returning them in traversal order.  Fails unless the split
// is unique.
std::optional<std::vector<std::string>> split_word(const Quiver& q, const std::string& word);

}  // namespace singcat
