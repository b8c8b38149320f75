#pragma once

#include <optional>
#include <string>
#include <vector>

#include "whalg/expr.hpp"
#include "whalg/tensor.hpp"

namespace whalg {

// Declared additive orders for composite (torsion) classes.  A term with
// eta_power >= 1 matches an entry either by its exact canonical print or by
// the wildcard class "eta" (any η-composite).
struct RelationTable {
    struct Entry {
        std::string cls;  // canonical term print without coefficient, or "eta"
        int order = 0;
    };
    std::vector<Entry> entries;

    std::optional<int> order_of(const Term& t) const;
};

// Every sub-bracket [u,u] with u a (degenerated) pi-degree-2 fundamental
// class becomes 2·(u∘η), i.e. the matching v-generator.
Expression rewrite_whitehead_square(const Expression& e);

// Inverse direction: every v2-leaf s_I v2 becomes (1/2)[s_I i2, s_I i2], so
// zero-testing happens in the torsion-free linear model.
Expression eliminate_eta_classes(const Expression& e);

// The composition rewrite of eq. (7.htpymodt): a root bracket with one
// argument a (degenerated) v2-leaf w∘η and the other argument u of
// pi-degree >= 2 becomes  [u,w]∘η − [[u,w],w]  (after moving the η-carrier
// to the second slot with the graded antisymmetry sign).  Applied
// recursively to v-leaves in nested positions via bilinearity; a v-leaf
// strictly inside a deeper bracket whose sibling is not a leaf is expanded
// through eliminate/square round trips by the caller instead.
Expression htpymodt_rewrite(const Expression& e);

// Drops terms whose declared order is coprime to p and reduces the
// remaining integer coefficients mod p (representatives in (-p/2, p/2]).
// Terms with eta_power >= 1 and no declared order raise unknown_order_error.
Expression reduce_mod_p(const Expression& e, int p, const RelationTable& orders);

// True iff a-b expands to 0 in the linear model after η-elimination.
bool rationally_equal(const Expression& a, const Expression& b, const SignDictionary& d);
bool rationally_zero(const Expression& e, const SignDictionary& d);

// True iff a-b is p-locally zero: η-free difference expands to coefficients
// divisible by p, η-tagged words are killed by declared coprime orders.
bool equal_mod_p(const Expression& a, const Expression& b, int p,
                 const RelationTable& orders, const SignDictionary& d);

}  // namespace whalg
