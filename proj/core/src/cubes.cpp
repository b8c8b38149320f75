#include "whalg/cubes.hpp"

#include <algorithm>
#include <set>

namespace whalg {

VertexStats vertex_stats(const CubeVertex& j) {
    VertexStats st;
    int n = j.n();
    int i = 0;
    while (i < n && j.bits[i] == 1) ++i;
    st.ell = i;
    st.lambda = static_cast<int>(std::count(j.bits.begin(), j.bits.end(), 1));
    if (i == n) {
        st.remainder_defined = false;  // all ones: no zero ends the initial block
        return st;
    }
    st.remainder.assign(j.bits.begin() + i + 1, j.bits.end());
    return st;
}

std::string print_cell(const CubeCell& c) {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += "x";
        switch (c[i]) {
            case IntervalPart::Point0: out += "{0}"; break;
            case IntervalPart::Point1: out += "{1}"; break;
            case IntervalPart::Full: out += "[0,1]"; break;
        }
    }
    return out;
}

namespace {

int cell_dim(const CubeCell& c) {
    int d = 0;
    for (auto p : c)
        if (p == IntervalPart::Full) ++d;
    return d;
}

void enumerate_cells(const std::vector<int>& eta, std::vector<CubeCell>& out) {
    // cells of L(η): frozen coordinates are {0}; free ones any of the three
    CubeCell cur(eta.size(), IntervalPart::Point0);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == eta.size()) {
            out.push_back(cur);
            return;
        }
        if (eta[i] == 0) {
            cur[i] = IntervalPart::Point0;
            self(self, i + 1);
        } else {
            for (auto p : {IntervalPart::Point0, IntervalPart::Point1, IntervalPart::Full}) {
                cur[i] = p;
                self(self, i + 1);
            }
        }
    };
    rec(rec, 0);
}

bool in_minus(const CubeCell& c, const std::vector<int>& eta) {
    for (size_t i = 0; i < c.size(); ++i)
        if (eta[i] == 1 && c[i] == IntervalPart::Point0) return true;
    return false;
}

bool in_plus(const CubeCell& c, const std::vector<int>& eta) {
    for (size_t i = 0; i < c.size(); ++i)
        if (eta[i] == 1 && c[i] == IntervalPart::Point1) return true;
    return false;
}

std::vector<CubeCell> maximal_of(const std::vector<CubeCell>& cells) {
    // a cell is maximal if no other cell in the set contains it as a face
    auto is_face = [](const CubeCell& f, const CubeCell& c) {
        for (size_t i = 0; i < f.size(); ++i) {
            if (f[i] == c[i]) continue;
            if (c[i] == IntervalPart::Full) continue;
            return false;
        }
        return true;
    };
    std::vector<CubeCell> out;
    for (const auto& f : cells) {
        bool maximal = true;
        for (const auto& c : cells)
            if (!(c == f) && is_face(f, c)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

}  // namespace

SubcubeRegion boundary_split(const std::vector<int>& eta) {
    for (int b : eta)
        if (b != 0 && b != 1) throw domain_error("boundary_split: bits must be 0/1");
    SubcubeRegion reg;
    reg.eta = eta;
    reg.dim = static_cast<int>(std::count(eta.begin(), eta.end(), 1));
    enumerate_cells(eta, reg.l_cells);
    for (const auto& c : reg.l_cells) {
        if (in_minus(c, eta)) reg.minus_cells.push_back(c);
        if (in_plus(c, eta)) reg.plus_cells.push_back(c);
    }
    reg.l_maximal = maximal_of(reg.l_cells);
    reg.minus_maximal = maximal_of(reg.minus_cells);
    reg.plus_maximal = maximal_of(reg.plus_cells);
    return reg;
}

bool suspension_euler_check(const std::vector<int>& eta) {
    SubcubeRegion reg = boundary_split(eta);
    if (reg.dim < 1) throw domain_error("suspension_euler_check: need λ(η) >= 1");
    // χ of ∂₊ with ∂₋∩∂₊ collapsed to a point
    std::set<CubeCell> minus(reg.minus_cells.begin(), reg.minus_cells.end());
    long long chi = 1;  // the collapsed point
    for (const auto& c : reg.plus_cells) {
        if (minus.count(c)) continue;
        chi += cell_dim(c) % 2 == 0 ? 1 : -1;
    }
    long long sphere = (reg.dim - 1) % 2 == 0 ? 2 : 0;  // χ(S^{λ-1})
    return chi == sphere;
}

WedgeLevels wedge_levels(int n) {
    if (n < 3) throw domain_error("wedge_levels: require n >= 3");
    WedgeLevels wl;
    wl.n = n;
    wl.levels.resize(n);
    for (int mask = 0; mask < (1 << n); ++mask) {
        CubeVertex v;
        for (int i = 0; i < n; ++i) v.bits.push_back((mask >> i) & 1);
        int lambda = vertex_stats(v).lambda;
        int k = n - lambda - 1;
        if (k >= 0 && k < n) wl.levels[k].push_back(v);
    }
    for (auto& lvl : wl.levels) std::sort(lvl.begin(), lvl.end());
    return wl;
}

CubeVertex flip_zero(const CubeVertex& j, int i) {
    CubeVertex out = j;
    int seen = 0;
    for (auto& b : out.bits) {
        if (b == 0) {
            if (seen == i) {
                b = 1;
                return out;
            }
            ++seen;
        }
    }
    throw domain_error("flip_zero: vertex has no " + std::to_string(i + 1) + "-th zero");
}

bool check_wedge_face_identities(int n) {
    for (int mask = 0; mask < (1 << n); ++mask) {
        CubeVertex v;
        for (int i = 0; i < n; ++i) v.bits.push_back((mask >> i) & 1);
        int zeros = n - vertex_stats(v).lambda;
        for (int j = 1; j < zeros; ++j)
            for (int i = 0; i < j; ++i)
                if (!(flip_zero(flip_zero(v, j), i) == flip_zero(flip_zero(v, i), j - 1)))
                    return false;
    }
    return true;
}

}  // namespace whalg
