#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "whalg/errors.hpp"

namespace whalg {

// A composite of face maps d_I = d_{i_k} ∘ ... ∘ d_{i_n}, recorded as the
// entry sequence (i_k,...,i_n).  An element of D(k,n) has entry t (for target
// position t = k..n, left to right) bounded by 0 <= i_t <= t.
struct FaceWord {
    std::vector<int> entries;
    int k = 0;  // first target position; the word maps level n down to k-1

    int n() const { return k + static_cast<int>(entries.size()) - 1; }
    int length() const { return static_cast<int>(entries.size()); }

    bool operator==(const FaceWord&) const = default;
    auto operator<=>(const FaceWord&) const = default;
};

// Throws domain_error unless w is a valid element of D(k,n).
void validate_face_word(const FaceWord& w);

// The unique weakly decreasing representative of w's equivalence class under
// (..., a, b, ...) ~ (..., b-1, a, ...) for a < b.  Idempotent.
FaceWord normalize_face_word(FaceWord w);

// All words equivalent to w (closure of the defining move).  Test oracle and
// vertex enumeration both use this; sizes stay small for word length <= 8.
std::vector<FaceWord> move_closure(const FaceWord& w);

// One canonical (weakly decreasing) word per class of D(k,n).
std::vector<FaceWord> enumerate_classes(int k, int n);

// Raw product cardinality |D(k,n)|.
long long raw_word_count(int k, int n);

// An iterated degeneracy s_I = s_{i_k} s_{i_{k-1}} ... s_{i_1} for the sorted
// set I = {i_1 < ... < i_k}.  Raises simplicial level by |I|.
struct DegeneracySet {
    std::set<int> indices;

    int size() const { return static_cast<int>(indices.size()); }
    bool empty() const { return indices.empty(); }
    bool contains(int j) const { return indices.count(j) != 0; }

    // Canonical set for the composite s_i ∘ s_I.
    DegeneracySet prepend(int i) const;
    // Canonical set for s_J ∘ s_I where *this is the inner factor.
    DegeneracySet compose_outer(const DegeneracySet& outer) const;

    // Descending word, outermost degeneracy first (the printing order).
    std::vector<int> word_desc() const;

    bool operator==(const DegeneracySet&) const = default;
    auto operator<=>(const DegeneracySet&) const = default;
};

// Result of commuting one face map past an iterated degeneracy.
struct FacePast {
    DegeneracySet degeneracies;
    std::optional<int> face;  // empty when the face cancelled against some s_j
};

// Resolves d_r ∘ s_I using d_i s_j = s_{j-1} d_i (i < j), id (i in {j,j+1}),
// s_j d_{i-1} (i > j+1).  Either the face cancels (|I'| = |I|-1) or it passes
// through as s_{I''} ∘ d_{r'}.
FacePast push_face_past_degeneracies(int r, const DegeneracySet& I);

// --- monotone-map evaluator -------------------------------------------------
// Independent model: operators as monotone maps between finite ordinals.
// An operator word acting on level n corresponds to a map of ordinals; two
// composites are equal iff the maps agree.  Faces d_i <-> delta_i (skip i),
// degeneracies s_j <-> sigma_j (repeat j), composed contravariantly.

struct MonotoneMap {
    int src = 0;  // domain [0..src-1], i.e. the ordinal [src-1]
    std::vector<int> img;

    bool operator==(const MonotoneMap&) const = default;
};

MonotoneMap coface_map(int i, int n);      // delta_i : [n-1] -> [n]
MonotoneMap codegeneracy_map(int j, int n);  // sigma_j : [n+1] -> [n]
MonotoneMap compose_maps(const MonotoneMap& g, const MonotoneMap& f);  // g ∘ f

// The ordinal map corresponding to d_I acting on level n (empty-target words,
// k = 0, compose to the unique map out of [-1] and get src = 0).
MonotoneMap face_word_map(const FaceWord& w);

// Ordinal map of the composite operator d_r ∘ s_I acting on level `level`.
MonotoneMap face_past_map(int r, const DegeneracySet& I, int level);
// Ordinal map of the resolved form (s_{I''} [∘ d_{r'}]) acting on `level`.
MonotoneMap resolved_map(const FacePast& fp, int level);

}  // namespace whalg
