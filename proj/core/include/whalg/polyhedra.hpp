#pragma once

#include <string>
#include <vector>

#include "whalg/simplicial.hpp"
#include "whalg/smith.hpp"

namespace whalg {

// A block partition of a face word into consecutive blocks; the associated
// sub-polyhedron is the product of the blocks' polyhedra, of dimension
// Σ (s_i - 1).
struct BlockPartition {
    std::vector<int> sizes;
};

// One cell of a face-map polyhedron.  Combinatorially the cells are ordered
// set partitions of the d+1 values skipped by the composite face map; the
// blocks are listed in word order (leftmost block = values removed last).
struct Cell {
    int id = 0;
    int dim = 0;
    std::vector<std::vector<int>> blocks;       // ordered partition of the skipped set
    std::vector<std::pair<int, int>> boundary;  // (cell id, incidence sign)
    std::vector<int> vertex_ids;                // vertices in the closure, sorted
    std::string label;                          // representative word with block bars
};

struct CellComplex {
    int dim = 0;
    std::vector<int> skipped;  // the d+1 values skipped by the word, ascending
    FaceWord word;             // normalized representative
    std::vector<Cell> cells;   // sorted by (dim, blocks)
    // geometric vertex coordinates (one per dim-0 cell, in R^{d+1})
    std::vector<std::vector<int>> vertex_coords;

    std::vector<int> f_vector() const;
    int euler_characteristic(int max_dim) const;
};

// Values skipped by d_I, in removal order (first removed first).
std::vector<int> word_removal_order(const FaceWord& w);
// Inverse: the face word with the given removal order over {0..n}, target k.
FaceWord removals_to_word(const std::vector<int>& removals, int k, int n);

// The face-map polyhedron of (the class of) w as an abstract cell complex
// with integer incidence signs; ∂∂ = 0 is verified on construction.
CellComplex build_face_polyhedron(const FaceWord& w);

int vertex_count(const CellComplex& c);

// Reduced integer homology of the (<= k)-skeleton, degrees 0..k.
std::vector<AbelianGroup> boundary_homology(const CellComplex& c, int k);

// Exact combinatorial-isomorphism test of c's face lattice against the
// standard d-permutohedron's (built from coordinate permutations via
// linear-functional maximization).
bool is_permutohedron(const CellComplex& c, int d);

// Facet census: multiset of vertex counts of the (d-1)-cells.
std::vector<int> facet_vertex_counts(const CellComplex& c);

// Every vertex lies in exactly this many facets when the polytope is simple.
bool is_simple_polytope(const CellComplex& c);

std::string to_json(const CellComplex& c);
// OFF export of the 2-skeleton (d = 2 or 3 only).
std::string to_off(const CellComplex& c);

}  // namespace whalg
