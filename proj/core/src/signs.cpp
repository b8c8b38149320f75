#include "whalg/signs.hpp"

#include <algorithm>

namespace whalg {

int sgn(const IndexSet& I, const IndexSet& J) {
    IndexSet i2 = set_minus(I, J);
    IndexSet j2 = set_minus(J, I);
    // Concatenate <I'> with <J'> and count inversions; relabelling
    // order-preservingly does not change the inversion count.
    std::vector<int> seq(i2.begin(), i2.end());
    seq.insert(seq.end(), j2.begin(), j2.end());
    long long inv = 0;
    for (size_t a = 0; a < seq.size(); ++a)
        for (size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

IndexSet complement(const IndexSet& I, int n) {
    for (int i : I)
        if (i < 0 || i > n - 2)
            throw domain_error("complement: index " + std::to_string(i) +
                               " outside {0,...," + std::to_string(n - 2) + "}");
    IndexSet out;
    for (int i = 0; i <= n - 2; ++i)
        if (!I.count(i)) out.insert(i);
    return out;
}

IndexFamily index_family(int k, int n) {
    if (k < 0 || k >= n - 1) throw domain_error("index_family: require 0 <= k < n-1");
    IndexFamily fam;
    fam.n = n;
    fam.k = k;
    int m = n - 1;  // ground set {0,...,n-2} has m elements
    std::vector<int> pick(k);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            IndexSet s(pick.begin(), pick.end());
            if (2 * k == n - 1 && !s.count(0)) return;
            fam.sets.push_back(s);
            return;
        }
        for (int v = start; v < m; ++v) {
            pick[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return fam;
}

IndexSet shift_up(const IndexSet& I) {
    IndexSet out;
    for (int i : I) out.insert(i + 1);
    return out;
}

IndexSet shift_down(const IndexSet& I) {
    IndexSet out;
    for (int i : I) {
        if (i == 0) throw domain_error("shift_down: set contains 0");
        out.insert(i - 1);
    }
    return out;
}

IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
    return out;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

bool disjoint(const IndexSet& a, const IndexSet& b) {
    return set_minus(a, b).size() == a.size();
}

}  // namespace whalg
