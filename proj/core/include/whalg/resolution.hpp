#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whalg/expr.hpp"
#include "whalg/rewrites.hpp"
#include "whalg/tensor.hpp"

namespace whalg {

// Key for a non-degenerate generator in a resolution (degeneracies stripped).
struct GenKey {
    Generator::Kind kind;
    int param;

    static GenKey of(const Generator& g) { return {g.kind, g.param}; }
    auto operator<=>(const GenKey&) const = default;
};

// A leveled generator table modeling a simplicial space: each level carries
// the wedge summands s_I g with base_level(g) + |I| = level, and face rules
// give d_i on the non-degenerate generators.
struct Resolution {
    std::string name;
    std::map<GenKey, int> base_level;
    // (generator, face index) -> value; absent entries are an error,
    // zero values are stored as empty expressions.
    std::map<std::pair<GenKey, int>, Expression> face_rules;
    // unordered generator pairs whose bracket is declared zero
    // ([α,β] = 0 declared relations; applies to common-degeneracy brackets)
    std::vector<std::pair<GenKey, GenKey>> zero_brackets;

    int level_of(const Generator& g) const;
    Expression face_rule(const Generator& g, int r) const;  // on the bare generator
    bool bracket_declared_zero(const Generator& a, const Generator& b) const;

    // wedge summands at a simplicial level
    std::vector<Generator> summands(int level) const;
};

// An expression placed at a simplicial level.
struct ChainElement {
    int level = 0;
    int pi_degree = 0;
    Expression expr;
};

// Throws structural_error unless every leaf lives at c.level.
void validate_levels(const ChainElement& c, const Resolution& r);

// Y ⊗ S^n for Y a wedge of spheres: level k carries s_I g, |I| = k-n,
// I ⊆ {0..k-1}; all faces of the non-degenerate level-n classes are 0.
// Wedge summands are (kind,param) pairs; repeated pi-degrees use Aux kinds.
Resolution suspension_resolution(const std::vector<Generator>& sphere_classes, int n = 1);
// Convenience: wedge of iotas of the given pi-degrees (must be distinct).
Resolution suspension_resolution_spheres(const std::vector<int>& degrees, int n = 1);

// The CP^n sequential approximation: level k (0 <= k < n) has the
// non-degenerate iota_{k+2}; d0 i3 = v2, d0 i_m = gamma_{m-2} (m >= 4),
// d_r i_m = 0 for r >= 1.
Resolution cpn_resolution(int n);

// d_r applied to an expression of the given level (faces of brackets are
// computed argumentwise; leaves resolve through the operator calculus and
// the face-rule table).
Expression apply_face(int r, const Expression& e, int level, const Resolution& res);

// All faces d_0..d_level.
std::vector<ChainElement> faces(const ChainElement& c, const Resolution& res);

// Alternating sum Σ (-1)^i d_i c.
ChainElement boundary_sum(const ChainElement& c, const Resolution& res);

struct FaceResidue {
    int index = 0;
    Expression residue;       // the raw face value
    bool zero_in_model = false;  // after η-elimination, in the linear model
};

struct CycleCertificate {
    bool verified = false;
    std::vector<FaceResidue> residues;
};

CycleCertificate is_cycle(const ChainElement& c, const Resolution& res,
                          const SignDictionary& d = default_sign_dictionary(),
                          int jobs = 1);

// The explicit cycles -------------------------------------------------------

// gamma_n of the CP^n machinery (level n-1, pi-degree n+2).
ChainElement gamma(int n);

// w2 := [s0 a, s1 b] - [s1 a, s0 b] at level 2 of the S^p ∨ S^q suspension
// resolution; the wedge classes are returned via `out_resolution`.
ChainElement w2(int p, int q, Resolution* out_resolution = nullptr);
// Diagonal case (both slots the same class); identically zero for even p.
ChainElement w2_diagonal(int p, Resolution* out_resolution = nullptr);
// The six-term level-3 chain of the suspension resolution.
ChainElement w3(int p, int q, Resolution* out_resolution = nullptr);

// Hall-style basic products ---------------------------------------------------

struct HallProduct {
    TreePtr tree;
    int weight = 0;
    int pi_degree = 0;
};

// Basic products on the given letters through max_weight, ordered by
// (weight, enumeration).  pi-degree of a weight-w product is Σ deg - (w-1).
std::vector<HallProduct> hilton_basis(const std::vector<Generator>& letters, int max_weight);

// Step-1 certificate for d_r gamma_n, r >= 1: the surviving bracket images
// cancel in transposition pairs (I,J) <-> (I',J') with opposite sgn.
struct PairingCertificate {
    bool verified = false;
    int face_index = 0;
    int surviving_terms = 0;
    int pairs = 0;
    std::string detail;
};

PairingCertificate transposition_pairing_certificate(int n, int r);

// Bounding-chain search -------------------------------------------------------

struct BoundingSearchResult {
    bool found = false;
    Expression witness;              // level z.level+1 chain with ∂ = z
    int candidates = 0;              // monomials examined (after zero-pruning)
    std::string method;              // "trivial" / "box" / "rational"
};

// Brute-force search over integer combinations of level-(z.level+1) Hall
// monomials of weight <= weight_bound whose alternating face sum matches z.
// A none-found answer is not a proof of non-bounding.
BoundingSearchResult search_bounding_chain(const ChainElement& z, const Resolution& res,
                                           int weight_bound,
                                           const SignDictionary& d = default_sign_dictionary());

// Pushforward -----------------------------------------------------------------

// Leafwise substitution along a table g ↦ chain (degeneracies distribute);
// brackets map to brackets.  Levels and pi-degrees must match.
ChainElement pushforward(const std::map<GenKey, ChainElement>& table, const ChainElement& c);

// Simplicial-identity check ----------------------------------------------------

// Verifies d_i d_j = d_{j-1} d_i (i < j) on every summand generator of every
// level up to max_level, comparing in the linear model.
bool check_simplicial_identities(const Resolution& res, int max_level,
                                 const SignDictionary& d = default_sign_dictionary(),
                                 std::string* first_failure = nullptr);

// CP^2 d0-chain certificate ------------------------------------------------------

struct Cp2ChainCertificate {
    bool verified = false;
    std::vector<std::string> steps;
};

// Verifies d0(gamma_2) -> 0 through [v2,i2] -> [i2,i2]∘η -> 2(η∘η) -> 0
// with order(v2∘η) = 2 declared.
Cp2ChainCertificate verify_cp2_d0_chain(const SignDictionary& d = default_sign_dictionary());

}  // namespace whalg
