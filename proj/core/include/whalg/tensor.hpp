#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "whalg/expr.hpp"

namespace whalg {

// Signs used when a bracket of pi-degrees (p,q) is expanded into the two
// concatenations:  [a,b] -> fwd(p,q)·(A⊗B) + rev(p,q)·(B⊗A).
// Indexed by (p mod 2, q mod 2).
struct SignDictionary {
    std::array<std::array<int, 2>, 2> fwd{};
    std::array<std::array<int, 2>, 2> rev{};

    int f(int p, int q) const { return fwd[p & 1][q & 1]; }
    int r(int p, int q) const { return rev[p & 1][q & 1]; }
    bool operator==(const SignDictionary&) const = default;
};

// A word in Generator letters, with an η-composition tag.  The free module
// on words is a faithful linear model: an expression is zero iff all word
// coefficients vanish.
struct TensorWord {
    std::vector<Generator> letters;
    int eta_power = 0;

    auto operator<=>(const TensorWord&) const = default;
};

struct TensorPoly {
    std::map<TensorWord, Rat> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    void add(const TensorWord& w, const Rat& c);
};

TensorPoly tensor_add(const TensorPoly& a, const TensorPoly& b);
TensorPoly tensor_scale(const Rat& c, const TensorPoly& a);
// True when every coefficient is zero; η-tagged words count like any other.
bool tensor_equal(const TensorPoly& a, const TensorPoly& b);

// Homomorphic expansion of an expression into the linear model.
TensorPoly expand_to_linear_model(const Expression& e, const SignDictionary& d);

// Axiom report for check_axioms.
struct AxiomReport {
    bool antisymmetry_ok = false;
    bool jacobi_ok = false;
    std::vector<std::string> counterexamples;

    bool ok() const { return antisymmetry_ok && jacobi_ok; }
};

// Verifies, over all parity classes of (p,q,r) in the given degree range:
//  (1) [a,b] - (-1)^{pq} [b,a] expands to 0;
//  (2) (-1)^{pr}[[a,b],c] + (-1)^{qp}[[b,c],a] + (-1)^{rq}[[c,a],b] -> 0.
AxiomReport check_axioms(const SignDictionary& d, int min_degree = 2, int max_degree = 5);

// All dictionaries satisfying both axioms (exhaustive 4^4 search).
std::vector<SignDictionary> solve_sign_dictionaries();

// The shipped dictionary: deterministic (lexicographically least) solution.
const SignDictionary& default_sign_dictionary();

}  // namespace whalg
