#pragma once

#include <set>
#include <vector>

#include "whalg/errors.hpp"

namespace whalg {

// Finite set of non-negative integers, kept sorted ascending.
using IndexSet = std::set<int>;

// Parity sign of the permutation obtained by concatenating <I> with <J>.
// Case (i): I, J partition an interval; case (ii): disjoint sets are
// relabelled order-preservingly; case (iii): the common part is stripped
// first, sgn(I,J) := sgn(I\J, J\I).  sgn(∅,∅) = +1.
int sgn(const IndexSet& I, const IndexSet& J);

// Φⁿ(I) = {0,...,n-2} \ I.  Requires I ⊆ {0,...,n-2}.
IndexSet complement(const IndexSet& I, int n);

// The family 𝓘ₖⁿ: all k-subsets of {0,...,n-2}, except that when 2k = n-1
// only the sets containing 0 are kept.
struct IndexFamily {
    int n = 0;
    int k = 0;
    std::vector<IndexSet> sets;
};
IndexFamily index_family(int k, int n);

// {i+1 : i in I}
IndexSet shift_up(const IndexSet& I);
// {i-1 : i in I}; requires 0 ∉ I.
IndexSet shift_down(const IndexSet& I);

IndexSet set_minus(const IndexSet& a, const IndexSet& b);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
bool disjoint(const IndexSet& a, const IndexSet& b);

}  // namespace whalg
