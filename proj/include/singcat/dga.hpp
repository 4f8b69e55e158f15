#pragma once

#include <map>
#include <string>
#include <vector>

#include "singcat/quiver.hpp"
#include "singcat/surface.hpp"

namespace singcat::dga {

enum class Parity { Even, Odd };

Parity knoerrer_parity(int krull_dimension);
std::string parity_name(Parity p);

// Quiver with solid arrows (degree 0), one broken arrow rho_i: i --> tau^-1(i)
// (degree -1) per vertex, and the mesh differential on the broken arrows.
struct GradedQuiver {
    surface::ADEType type;
    Parity parity = Parity::Even;
    std::vector<std::string> vertices;  // table order
    std::vector<Arrow> solid;
    std::vector<Arrow> broken;
    std::map<std::string, std::string> translation;  // i -> tau^-1(i)

    const Arrow& broken_at(const std::string& v) const;
};

// Each summand is a length-two solid path, first-applied first; coefficient +1.
using MeshImage = std::vector<Path>;

GradedQuiver dg_auslander(const surface::ADEType& t, Parity p);

// Solid part as a relation-free quiver, for composing paths.
Quiver solid_quiver(const GradedQuiver& q);

MeshImage mesh_image(const GradedQuiver& q, const std::string& vertex);
std::map<std::string, MeshImage> differential(const GradedQuiver& q);

std::size_t k0_rank(const GradedQuiver& q);

std::string display(const MeshImage& m);  // "α1α1* + α2*α2", or "0"

json to_json(const GradedQuiver& q);
std::string to_text(const GradedQuiver& q);

}  // namespace singcat::dga
