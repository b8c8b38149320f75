#pragma once

#include <map>
#include <string>
#include <vector>

#include "whalg/errors.hpp"

namespace whalg {

// Vertex of the n-cube poset, a tuple of bits.
struct CubeVertex {
    std::vector<int> bits;

    int n() const { return static_cast<int>(bits.size()); }
    bool operator==(const CubeVertex&) const = default;
    auto operator<=>(const CubeVertex&) const = default;
};

struct VertexStats {
    int ell = 0;               // initial ones
    int lambda = 0;            // total ones
    std::vector<int> remainder;  // after the initial ones and the zero ending them
    bool remainder_defined = true;  // false for the all-ones vertex
};

// (ℓ, λ, R) of a cube vertex; R is empty-with-flag for the all-ones vertex.
VertexStats vertex_stats(const CubeVertex& j);

// A face of the unit cube as an interval tuple.
enum class IntervalPart { Point0, Point1, Full };
using CubeCell = std::vector<IntervalPart>;

std::string print_cell(const CubeCell& c);

// Cells of L(η) and the two boundary pieces; `maximal` lists the top cells,
// `cells` the full closed cell sets.
struct SubcubeRegion {
    std::vector<int> eta;
    int dim = 0;  // λ(η)
    std::vector<CubeCell> l_cells, l_maximal;
    std::vector<CubeCell> minus_cells, minus_maximal;
    std::vector<CubeCell> plus_cells, plus_maximal;
};

SubcubeRegion boundary_split(const std::vector<int>& eta);

// Euler-characteristic check for the (λ-1)-fold suspension identity:
// χ(∂₊L / (∂₋L ∩ ∂₊L)) must equal χ(S^{λ-1}).  Requires λ(η) >= 1.
bool suspension_euler_check(const std::vector<int>& eta);

// Level table of the (n-1)-truncated wedge object: level k carries the
// vertices with λ(J) = n-k-1; level 1 additionally carries the C_{n-1}
// marker.  d_i sends J to J with its (i+1)-st zero flipped to a one.
struct WedgeLevels {
    int n = 0;
    std::vector<std::vector<CubeVertex>> levels;  // index = simplicial level
    int c_marker_level = 1;
};

WedgeLevels wedge_levels(int n);

// The zero-flip face map d_i on a vertex (0-based i).
CubeVertex flip_zero(const CubeVertex& j, int i);

// d_i d_j = d_{j-1} d_i for i < j on the zero-flip maps, all vertices with
// at least two zeros, exhaustive for the given n.
bool check_wedge_face_identities(int n);

}  // namespace whalg
