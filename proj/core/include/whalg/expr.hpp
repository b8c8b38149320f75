#pragma once

#include <memory>
#include <string>
#include <vector>

#include "whalg/rational.hpp"
#include "whalg/simplicial.hpp"

namespace whalg {

// A wedge-summand homotopy class with its degeneracy decoration.
//   Iota  i<m> : fundamental class of an m-sphere summand, pi-degree m
//   VEta  v<m> : the composite i<m> ∘ η ("η-class"), pi-degree m+1
//   Aux   a<m> / b<m> : auxiliary sphere classes of pi-degree m (used for
//                       wedges with repeated degrees)
struct Generator {
    enum class Kind { Iota, VEta, AuxA, AuxB };
    Kind kind = Kind::Iota;
    int param = 0;  // the <m> above
    DegeneracySet degens;

    int pi_degree() const { return kind == Kind::VEta ? param + 1 : param; }
    std::string base_name() const;

    auto operator<=>(const Generator&) const = default;
    bool operator==(const Generator&) const = default;
};

// Binary bracket tree with Generator leaves.
struct Tree {
    // leaf iff children empty
    Generator leaf;
    std::shared_ptr<const Tree> left, right;

    bool is_leaf() const { return !left; }
    int pi_degree() const;
    int weight() const;  // number of leaves
};

using TreePtr = std::shared_ptr<const Tree>;

TreePtr make_leaf(Generator g);
TreePtr make_bracket(TreePtr l, TreePtr r);

// Total order used for canonical term ordering: tree shape first, then
// leaves in order by (pi-degree descending, kind, param, degeneracy word).
int compare_trees(const Tree& a, const Tree& b);

// One summand: coeff * tree ∘ η^{eta_power}.
struct Term {
    Rat coeff = 1;
    TreePtr tree;
    int eta_power = 0;

    int pi_degree() const { return tree->pi_degree() + eta_power; }
};

// Formal linear combination of bracket terms, kept in canonical order with
// like terms merged and zero coefficients dropped.
struct Expression {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    int num_terms() const { return static_cast<int>(terms.size()); }
};

Expression expr_zero();
Expression expr_term(Rat coeff, TreePtr t, int eta_power = 0);
Expression expr_generator(Generator g);
Expression canonicalize(std::vector<Term> terms);
Expression add(const Expression& a, const Expression& b);
Expression scale(const Rat& c, const Expression& e);
Expression negate(const Expression& e);
// Post-compose every term with η^k.
Expression compose_eta(const Expression& e, int k);

// Bilinear bracket of expressions; brackets with a zero argument vanish.
Expression bracket(const Expression& a, const Expression& b);

// s_I applied leafwise; commutes with bracket formation.
Expression apply_degeneracy(const DegeneracySet& I, const Expression& e);

// Structural equality of canonical forms (not linear-model equality).
bool structurally_equal(const Expression& a, const Expression& b);

// Orders every bracket's arguments by tree order, inserting the graded
// antisymmetry sign (-1)^{pq} on swaps; brackets [x,x] of odd pi-degree
// vanish (2[x,x] = 0).  Not applied by default canonicalization, so printed
// forms stay as constructed.
Expression antisym_normal_form(const Expression& e);

std::string print_tree(const Tree& t);
std::string print_term(const Term& t, bool leading);
std::string print_expression(const Expression& e);  // "0" when empty

}  // namespace whalg
