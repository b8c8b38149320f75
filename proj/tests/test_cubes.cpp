#include <doctest.h>

#include <algorithm>
#include <set>

#include "whalg/cubes.hpp"

using namespace whalg;

namespace {
CubeVertex vx(const std::string& bits) {
    CubeVertex v;
    for (char c : bits) v.bits.push_back(c - '0');
    return v;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace

TEST_CASE("vertex statistics of (11101010)") {
    VertexStats st = vertex_stats(vx("11101010"));
    CHECK(st.ell == 3);
    CHECK(st.lambda == 5);
    CHECK(st.remainder == std::vector<int>{1, 0, 1, 0});
    CHECK(st.remainder_defined);
}

TEST_CASE("vertex statistics edge cases") {
    // J_k: k ones then zeros
    VertexStats jk = vertex_stats(vx("111000"));
    CHECK(jk.ell == 3);
    CHECK(jk.lambda == 3);
    CHECK(jk.remainder == std::vector<int>{0, 0});
    // all zeros: remainder is everything after the leading zero
    VertexStats z = vertex_stats(vx("0000"));
    CHECK(z.ell == 0);
    CHECK(z.lambda == 0);
    CHECK(z.remainder == std::vector<int>{0, 0, 0});
    // all ones: remainder undefined, flagged
    VertexStats o = vertex_stats(vx("1111"));
    CHECK(o.ell == 4);
    CHECK(o.lambda == 4);
    CHECK(!o.remainder_defined);
    CHECK(o.remainder.empty());
}

TEST_CASE("lambda bookkeeping: lambda(J) = ell(J) + lambda(R(J)) unless all ones") {
    for (int n = 1; n <= 8; ++n)
        for (int mask = 0; mask < (1 << n); ++mask) {
            CubeVertex v;
            for (int i = 0; i < n; ++i) v.bits.push_back((mask >> i) & 1);
            VertexStats st = vertex_stats(v);
            if (!st.remainder_defined) continue;
            int lr = static_cast<int>(std::count(st.remainder.begin(), st.remainder.end(), 1));
            CHECK(st.lambda == st.ell + lr);
        }
}

TEST_CASE("lambda level counts are binomial(n, m)") {
    int n = 6;
    std::vector<int> counts(n + 1, 0);
    for (int mask = 0; mask < (1 << n); ++mask) {
        CubeVertex v;
        for (int i = 0; i < n; ++i) v.bits.push_back((mask >> i) & 1);
        ++counts[vertex_stats(v).lambda];
    }
    for (int m = 0; m <= n; ++m) CHECK(counts[m] == binomial(n, m));
}

TEST_CASE("boundary split of eta = (1010) reproduces the printed pieces") {
    SubcubeRegion reg = boundary_split({1, 0, 1, 0});
    CHECK(reg.dim == 2);
    REQUIRE(reg.l_maximal.size() == 1);
    CHECK(print_cell(reg.l_maximal[0]) == "[0,1]x{0}x[0,1]x{0}");
    // ∂₊L = ({1}x{0}x[0,1]x{0}) ∪ ([0,1]x{0}x{1}x{0})
    std::vector<std::string> plus;
    for (const auto& c : reg.plus_maximal) plus.push_back(print_cell(c));
    std::sort(plus.begin(), plus.end());
    CHECK(plus ==
          std::vector<std::string>{"[0,1]x{0}x{1}x{0}", "{1}x{0}x[0,1]x{0}"});
    // ∂₋L = ({0}x{0}x[0,1]x{0}) ∪ ([0,1]x{0}x{0}x{0})
    std::vector<std::string> minus;
    for (const auto& c : reg.minus_maximal) minus.push_back(print_cell(c));
    std::sort(minus.begin(), minus.end());
    CHECK(minus ==
          std::vector<std::string>{"[0,1]x{0}x{0}x{0}", "{0}x{0}x[0,1]x{0}"});
}

TEST_CASE("boundary split degenerate case: all zeros") {
    SubcubeRegion reg = boundary_split({0, 0, 0});
    CHECK(reg.dim == 0);
    CHECK(reg.l_cells.size() == 1);
    CHECK(reg.minus_cells.empty());
    CHECK(reg.plus_cells.empty());
}

TEST_CASE("boundary decomposition: every boundary cell is in one of the pieces") {
    SubcubeRegion reg = boundary_split({1, 1, 0, 1});
    int boundary_cells = 0;
    for (const auto& c : reg.l_cells) {
        int dim = 0;
        for (auto p : c)
            if (p == IntervalPart::Full) ++dim;
        if (dim < reg.dim) ++boundary_cells;
    }
    std::set<CubeCell> u(reg.minus_cells.begin(), reg.minus_cells.end());
    u.insert(reg.plus_cells.begin(), reg.plus_cells.end());
    CHECK(static_cast<int>(u.size()) == boundary_cells);
}

TEST_CASE("suspension Euler check across small eta") {
    for (int n = 1; n <= 6; ++n)
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> eta;
            for (int i = 0; i < n; ++i) eta.push_back((mask >> i) & 1);
            if (std::count(eta.begin(), eta.end(), 1) == 0) continue;
            CHECK(suspension_euler_check(eta));
        }
}

TEST_CASE("wedge levels for n = 3") {
    WedgeLevels wl = wedge_levels(3);
    REQUIRE(wl.levels.size() == 3);
    // level 2: lambda = 0: only (000)
    REQUIRE(wl.levels[2].size() == 1);
    CHECK(wl.levels[2][0] == vx("000"));
    // level 1: lambda = 1 plus the C2 marker
    CHECK(wl.c_marker_level == 1);
    std::vector<CubeVertex> expect{vx("001"), vx("010"), vx("100")};
    std::sort(expect.begin(), expect.end());
    CHECK(wl.levels[1] == expect);
    // level 0: lambda = 2
    CHECK(wl.levels[0].size() == 3);
}

TEST_CASE("zero-flip face maps satisfy the simplicial identities, n <= 6") {
    for (int n = 3; n <= 6; ++n) CHECK(check_wedge_face_identities(n));
}

TEST_CASE("flip_zero mechanics") {
    CHECK(flip_zero(vx("010"), 0) == vx("110"));
    CHECK(flip_zero(vx("010"), 1) == vx("011"));
    CHECK_THROWS_AS(flip_zero(vx("111"), 0), domain_error);
}
