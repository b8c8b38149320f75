#pragma once

#include <string>
#include <vector>

#include "whalg/errors.hpp"
#include "whalg/rational.hpp"

namespace whalg {

// Sq^I = Sq^{i0} ... Sq^{is}, I a list of positive integers.
struct SqMonomial {
    std::vector<int> word;

    int degree() const;
    bool empty() const { return word.empty(); }
    bool operator==(const SqMonomial&) const = default;
    auto operator<=>(const SqMonomial&) const = default;
};

// P^I = β^{e0} P^{i0} ... P^{is} β^{e_{s+1}} at an odd prime.
struct PMonomial {
    std::vector<int> powers;  // i0..is, positive
    std::vector<int> bocks;   // e0..e_{s+1}, bits; size = powers.size()+1

    int degree(int p) const;
    bool empty() const { return powers.empty(); }
    bool operator==(const PMonomial&) const = default;
    auto operator<=>(const PMonomial&) const = default;
};

bool is_admissible(const SqMonomial& m);
bool is_admissible(const PMonomial& m, int p);

// Excess: mod 2, e(I) = i0 - (i1+...+is); odd p, e(I) = 2 i0 + e0 - deg(rest).
int excess(const SqMonomial& m);
int excess(const PMonomial& m, int p);

// A generator of one of the §6 algebras: an admissible word applied to a
// fundamental class, or a declared power of it.
struct EmGenerator {
    std::string label;
    int degree = 0;
    bool even = true;  // grading parity used by the free graded-commutative count
};

// Generators of H*(K(Z_(p), k); F_p) through total degree maxdeg, including
// the fundamental class itself.
std::vector<EmGenerator> em_generators(int p, int k, int maxdeg);

// Generators of E0(p) = image of H*(X) in H*(K(Z_(p), k-1)) through maxdeg.
std::vector<EmGenerator> e0_generators(int p, int k, int maxdeg);

// Dimension counts per degree of the free graded-commutative algebra on the
// listed generators (all polynomial when p = 2).
std::vector<long long> poincare_series(const std::vector<EmGenerator>& gens, int maxdeg, int p);

// Enumeration helpers used by both generator lists and the tests.
std::vector<SqMonomial> admissible_sq_words(int maxdeg);          // nonempty, deg <= maxdeg
std::vector<PMonomial> admissible_p_words(int p, int maxdeg);     // nonempty, deg <= maxdeg

std::string print_monomial(const SqMonomial& m);
std::string print_monomial(const PMonomial& m);

}  // namespace whalg
