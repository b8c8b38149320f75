#include "whalg/smith.hpp"

#include <algorithm>
#include <string>

namespace whalg {

namespace {
BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
}

SmithResult smith_normal_form(IntMatrix m) {
    SmithResult res;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t t = 0;
    while (t < rows && t < cols) {
        // find the smallest nonzero pivot in the remaining block
        size_t pr = rows, pc = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pr == rows || babs(m[i][j]) < babs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(m[t], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                BigInt q = m[i][t] / m[t][t];
                for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q = m[t][j] / m[t][t];
                for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
        }
        ++t;
    }
    // make the diagonal divisibility chain
    std::vector<BigInt> diag;
    for (size_t i = 0; i < t; ++i) diag.push_back(babs(m[i][i]));
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[i] == 0) std::swap(diag[i], diag[j]);
            if (diag[j] % diag[i] != 0) {
                BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
                BigInt l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
    for (const BigInt& d : diag)
        if (d != 0) res.invariant_factors.push_back(d);
    res.rank = static_cast<int>(res.invariant_factors.size());
    return res;
}

std::string AbelianGroup::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = 0; i < betti; ++i) s += (s.empty() ? "Z" : " + Z");
    for (const BigInt& d : torsion)
        s += (s.empty() ? "Z/" : " + Z/") + d.str();
    return s;
}

AbelianGroup homology_group(const IntMatrix& d_in, int mid_dim, const IntMatrix& d_out) {
    SmithResult in = smith_normal_form(d_in);
    SmithResult out = smith_normal_form(d_out);
    AbelianGroup g;
    g.betti = mid_dim - in.rank - out.rank;
    for (const BigInt& d : out.invariant_factors)
        if (d != 1) g.torsion.push_back(d);
    return g;
}

}  // namespace whalg
