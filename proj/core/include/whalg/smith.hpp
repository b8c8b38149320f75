#pragma once

#include <vector>

#include "whalg/rational.hpp"

namespace whalg {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Diagonal of the Smith normal form (non-zero invariant factors, each
// dividing the next), plus the rank.
struct SmithResult {
    std::vector<BigInt> invariant_factors;
    int rank = 0;
};

SmithResult smith_normal_form(IntMatrix m);

// A finitely generated abelian group presented as Z^betti ⊕ ⊕ Z/d_i.
struct AbelianGroup {
    int betti = 0;
    std::vector<BigInt> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }
    bool is_free_of_rank(int r) const { return betti == r && torsion.empty(); }
    std::string to_string() const;
};

// Homology at the middle of  C_prev <-- d_in -- C_mid <-- d_out -- C_next,
// i.e. ker(d_in)/im(d_out), given the two boundary matrices (rows index the
// target basis, columns the source basis).
AbelianGroup homology_group(const IntMatrix& d_in, int mid_dim, const IntMatrix& d_out);

}  // namespace whalg
