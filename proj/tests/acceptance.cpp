// Acceptance suite: one check per numbered criterion, one PASS/FAIL line
// each.  Run with no arguments for all criteria, or with a number 1..11 for
// a single one.  Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "whalg/cubes.hpp"
#include "whalg/smith.hpp"
#include "whalg/parse.hpp"
#include "whalg/polyhedra.hpp"
#include "whalg/resolution.hpp"
#include "whalg/rewrites.hpp"
#include "whalg/signs.hpp"
#include "whalg/steenrod.hpp"

using namespace whalg;

namespace {

struct Harness {
    bool ok = true;
    std::ostringstream notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << "    failed: " << what << "\n";
        }
    }
    void note(const std::string& what) { notes << "    " << what << "\n"; }
};

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. Sign calculus: Example 8.2 values; laws (8.sgncompl) and (8.sgndisunl)
//    exhaustive over subset pairs of {0,...,7}; < 5 s.
void criterion_1(Harness& h) {
    auto t0 = std::chrono::steady_clock::now();
    h.require(sgn({2, 4}, {1, 3, 5}) == -1, "Example 8.2 first evaluation");
    h.require(sgn({1, 5}, {0, 2, 7}) == -1, "Example 8.2 second evaluation");
    h.require(sgn({1, 3, 5, 6}, {0, 2, 3, 6, 7}) == -1, "Example 8.2 third evaluation");
    std::vector<IndexSet> subs;
    for (int mask = 0; mask < 256; ++mask) {
        IndexSet s;
        for (int i = 0; i < 8; ++i)
            if (mask & (1 << i)) s.insert(i);
        subs.push_back(s);
    }
    long long checked = 0;
    for (const auto& I : subs)
        for (const auto& J : subs) {
            int k = static_cast<int>(set_minus(I, J).size());
            int l = static_cast<int>(set_minus(J, I).size());
            int lhs = sgn(I, J);
            if (lhs != ((k * l) % 2 == 0 ? sgn(J, I) : -sgn(J, I))) {
                h.require(false, "transposition law at a subset pair");
                return;
            }
            ++checked;
        }
    h.note("transposition law on " + std::to_string(checked) + " pairs");
    // disjoint-union law, exhaustive over {0..5}
    std::vector<IndexSet> small;
    for (int mask = 0; mask < 64; ++mask) {
        IndexSet s;
        for (int i = 0; i < 6; ++i)
            if (mask & (1 << i)) s.insert(i);
        small.push_back(s);
    }
    long long du = 0;
    for (const auto& A : small)
        for (const auto& B : small) {
            if (!disjoint(A, B)) continue;
            for (const auto& J : small) {
                if (!disjoint(set_union(A, B), J)) continue;  // the law's domain
                if (sgn(set_union(A, B), J) != sgn(A, J) * sgn(B, J)) {
                    h.require(false, "disjoint-union law");
                    return;
                }
                ++du;
            }
        }
    h.note("disjoint-union law on " + std::to_string(du) + " pairwise-disjoint triples");
    double dt = seconds_since(t0);
    h.note("elapsed " + std::to_string(dt) + " s");
    h.require(dt < 5.0, "sign-calculus laws complete in < 5 s");
}

// ---------------------------------------------------------------------------
// 2. gamma golden tests against eq. (8.gammathree) and Example 8.6.
void criterion_2(Harness& h) {
    const char* printed[] = {
        // gamma_3, eq. (8.gammathree)
        "[i4, s1 s0 i2] - [s0 i3, s1 i3]",
        // gamma_4, Example 8.6
        "[i5, s2 s1 s0 i2] + [s0 i4, s2 s1 i3] - [s1 i4, s2 s0 i3] + [s2 i4, s1 s0 i3]",
        // gamma_5, Example 8.6
        "[i6, s3 s2 s1 s0 i2] - [s0 i5, s3 s2 s1 i3] + [s1 i5, s3 s2 s0 i3]"
        " - [s2 i5, s3 s1 s0 i3] + [s3 i5, s2 s1 s0 i3] + [s1 s0 i4, s3 s2 i4]"
        " - [s2 s0 i4, s3 s1 i4] + [s3 s0 i4, s2 s1 i4]",
        // gamma_6, Example 8.6
        "[i7, s4 s3 s2 s1 s0 i2] + [s0 i6, s4 s3 s2 s1 i3] - [s1 i6, s4 s3 s2 s0 i3]"
        " + [s2 i6, s4 s3 s1 s0 i3] - [s3 i6, s4 s2 s1 s0 i3] + [s4 i6, s3 s2 s1 s0 i3]"
        " + [s1 s0 i5, s4 s3 s2 i4] - [s2 s0 i5, s4 s3 s1 i4] + [s3 s0 i5, s4 s2 s1 i4]"
        " - [s4 s0 i5, s3 s2 s1 i4] + [s2 s1 i5, s4 s3 s0 i4] - [s3 s1 i5, s4 s2 s0 i4]"
        " + [s4 s1 i5, s3 s2 s0 i4] + [s3 s2 i5, s4 s1 s0 i4] - [s4 s2 i5, s3 s1 s0 i4]"
        " + [s4 s3 i5, s2 s1 s0 i4]"};
    int expected_terms[] = {2, 4, 8, 16};
    int global_sign = 0;  // 0 = undecided, +1/-1 once fixed
    for (int n = 3; n <= 6; ++n) {
        ChainElement g = gamma(n);
        Expression paper = parse_expression(printed[n - 3]);
        h.require(g.expr.num_terms() == expected_terms[n - 3],
                  "gamma_" + std::to_string(n) + " term count");
        bool plus = structurally_equal(g.expr, paper);
        bool minus = structurally_equal(g.expr, negate(paper));
        h.require(plus || minus, "gamma_" + std::to_string(n) + " multiset of signed terms");
        int sign = plus ? 1 : (minus ? -1 : 0);
        if (global_sign == 0) global_sign = sign;
        h.require(sign == global_sign, "single global-sign toggle across all gamma_n");
    }
    h.note(std::string("recorded global sign: ") + (global_sign >= 0 ? "+1" : "-1"));
}

// ---------------------------------------------------------------------------
// 3. Prop. 8.5 machine verification: is_cycle(gamma_n) for n = 2..8 in < 60 s,
//    with the independent transposition-pairing certificates for r >= 1.
void criterion_3(Harness& h) {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 2; n <= 8; ++n) {
        Resolution res = cpn_resolution(n);
        CycleCertificate cert = is_cycle(gamma(n), res);
        h.require(cert.verified, "gamma_" + std::to_string(n) + " is a cycle");
        for (const auto& fr : cert.residues)
            h.require(fr.zero_in_model,
                      "gamma_" + std::to_string(n) + " face d" + std::to_string(fr.index));
        for (int r = 1; r <= n - 1; ++r) {
            PairingCertificate pc = transposition_pairing_certificate(n, r);
            h.require(pc.verified, "pairing certificate n=" + std::to_string(n) +
                                       " r=" + std::to_string(r) + " (" + pc.detail + ")");
        }
    }
    double dt = seconds_since(t0);
    h.note("elapsed " + std::to_string(dt) + " s");
    h.require(dt < 60.0, "gamma verification completes in < 60 s");
}

// ---------------------------------------------------------------------------
// 4. hopfwh and jacobiabc expand to zero after the η-elimination.
void criterion_4(Harness& h) {
    const SignDictionary& d = default_sign_dictionary();
    auto pow_sign = [](long long e) { return e % 2 == 0 ? 1 : -1; };
    // Jacobi, 1000 randomized instances
    std::mt19937_64 rng(1729);
    for (int it = 0; it < 1000; ++it) {
        int p = 2 + static_cast<int>(rng() % 8);
        int q = 2 + static_cast<int>(rng() % 8);
        int r = 2 + static_cast<int>(rng() % 8);
        Generator ga{Generator::Kind::AuxA, p, {}};
        Generator gb{Generator::Kind::AuxB, q, {}};
        Generator gc{Generator::Kind::Iota, r, {}};
        Expression a = expr_generator(ga), b = expr_generator(gb), c = expr_generator(gc);
        Expression res =
            add(scale(pow_sign(1LL * p * r), bracket(bracket(a, b), c)),
                add(scale(pow_sign(1LL * q * p), bracket(bracket(b, c), a)),
                    scale(pow_sign(1LL * r * q), bracket(bracket(c, a), b))));
        if (!rationally_zero(res, d)) {
            h.require(false, "Jacobi residue nonzero at p,q,r = " + std::to_string(p) + "," +
                                 std::to_string(q) + "," + std::to_string(r));
            return;
        }
    }
    h.note("jacobiabc: 1000 randomized instances, all zero");
    // hopfwh for n = 3..8, with the paper's sign (-1)^{n+1}
    for (int n = 3; n <= 8; ++n) {
        Generator in{Generator::Kind::Iota, n, {}};
        Generator x{Generator::Kind::Iota, 2, {}};
        for (int i = 0; i < n - 2; ++i) x.degens = x.degens.prepend(i);
        Generator v = x;
        v.kind = Generator::Kind::VEta;
        Expression lhs =
            expr_term(1, make_bracket(make_bracket(make_leaf(in), make_leaf(x)), make_leaf(x)));
        Expression rhs = expr_term(pow_sign(n + 1), make_bracket(make_leaf(in), make_leaf(v)));
        h.require(rationally_equal(lhs, rhs, d),
                  "hopfwh residue at n = " + std::to_string(n));
    }
    h.note("hopfwh verified with the printed sign (-1)^{n+1}");
}

// ---------------------------------------------------------------------------
// 5. Face-map polyhedra: f-vectors, facet census, vertex counts, homology.
void criterion_5(Harness& h) {
    auto t0 = std::chrono::steady_clock::now();
    auto zeros = [](int len) { return FaceWord{std::vector<int>(len, 0), 1}; };
    h.require(build_face_polyhedron(zeros(2)).f_vector() == std::vector<int>{2, 1},
              "f-vector (2,1)");
    h.require(build_face_polyhedron(zeros(3)).f_vector() == std::vector<int>{6, 6, 1},
              "f-vector (6,6,1)");
    {
        CellComplex c3 = build_face_polyhedron(zeros(4));
        auto counts = facet_vertex_counts(c3);
        int hex = 0, sq = 0;
        for (int c : counts) {
            if (c == 6) ++hex;
            if (c == 4) ++sq;
        }
        h.require(hex == 8 && sq == 6 && counts.size() == 14,
                  "d=3 facet census: 8 hexagons + 6 squares");
    }
    for (int d = 1; d <= 4; ++d) {
        CellComplex cx = build_face_polyhedron(zeros(d + 1));
        h.require(vertex_count(cx) == factorial(d + 1),
                  "vertex count (d+1)! at d = " + std::to_string(d));
        if (d == 1) {
            auto hom = boundary_homology(cx, 0);
            h.require(hom[0].is_free_of_rank(1), "S^0 homology at d = 1");
        } else {
            auto hom = boundary_homology(cx, d - 1);
            for (int i = 0; i <= d - 1; ++i) {
                bool want_z = (i == d - 1);
                h.require(want_z ? hom[i].is_free_of_rank(1) : hom[i].is_zero(),
                          "S^{d-1} homology at d = " + std::to_string(d) +
                              ", degree " + std::to_string(i));
            }
        }
    }
    double dt = seconds_since(t0);
    h.note("elapsed " + std::to_string(dt) + " s");
    h.require(dt < 10.0, "exact integer reduction completes in < 10 s");
}

// ---------------------------------------------------------------------------
// 6. Suspension cycles: w2 and w3 verify; the Example 7.3 chain fails with
//    residue exactly [i2, i2] at face 1; the even diagonal chain is 0.
void criterion_6(Harness& h) {
    {
        Resolution res;
        ChainElement c = w2(2, 2, &res);
        h.require(is_cycle(c, res).verified, "w2(2,2) is a cycle");
        ChainElement c23 = w2(2, 3, &res);
        h.require(is_cycle(c23, res).verified, "w2(2,3) is a cycle");
    }
    {
        Resolution res;
        ChainElement c = w3(2, 2, &res);
        h.require(c.expr.num_terms() == 6, "w3 has six terms");
        h.require(is_cycle(c, res).verified, "w3(2,2) is a cycle");
        ChainElement c32 = w3(3, 2, &res);
        h.require(is_cycle(c32, res).verified, "w3(3,2) is a cycle");
    }
    {
        Resolution res = suspension_resolution_spheres({2});
        ChainElement c{2, 3, parse_expression("[s0 i2, s1 i2]")};
        CycleCertificate cert = is_cycle(c, res);
        h.require(!cert.verified, "[s0 i2, s1 i2] is not a cycle");
        h.require(print_expression(cert.residues[1].residue) == "[i2, i2]",
                  "residue exactly [i2, i2] at face 1");
        h.require(cert.residues[0].zero_in_model && cert.residues[2].zero_in_model,
                  "faces 0 and 2 vanish");
    }
    {
        ChainElement diag = w2_diagonal(4);
        h.require(diag.expr.is_zero(), "even-degree diagonal chain is identically 0");
    }
}

// ---------------------------------------------------------------------------
// 7. Lemma 7.5(a) witness search.  Implemented exactly as specified: with
//    [α,β] = 0 declared, search for a weight-<=2 bounding chain for
//    gamma - 2[s0 α, s1 β] at level 3 matching by alternating face sums.
void criterion_7(Harness& h) {
    Generator a{Generator::Kind::AuxA, 2, {}};
    Generator b{Generator::Kind::AuxB, 2, {}};
    Resolution res = suspension_resolution({a, b});
    res.zero_brackets.push_back({GenKey::of(a), GenKey::of(b)});
    ChainElement gab = w2(2, 2);  // gamma of eq. (7.whprodrep) on this wedge
    Expression delta = parse_expression("[s0 a2, s1 b2]");
    ChainElement z{2, 3, add(gab.expr, scale(-2, delta))};
    // z is a cycle once [α,β] = 0 is declared
    CycleCertificate zc = is_cycle(z, res);
    h.require(zc.verified, "gamma - 2 delta is a cycle under the declared relation");
    BoundingSearchResult sr = search_bounding_chain(z, res, 2);
    h.note("search method: " + (sr.method.empty() ? "none (no usable candidates)" : sr.method) +
           ", candidates after pruning: " + std::to_string(sr.candidates));
    if (sr.found) h.note("witness: " + print_expression(sr.witness));
    h.require(sr.found, "a weight-<=2 bounding chain exists for gamma - 2 delta");
    // control: the same search correctly reports no witness for w2 itself
    Resolution res2;
    ChainElement c = w2(2, 3, &res2);
    BoundingSearchResult none = search_bounding_chain(c, res2, 2);
    h.require(!none.found, "control: w2 has no weight-<=2 witness");
}

// ---------------------------------------------------------------------------
// 8. Example 7.8 mod 3: faces of theta_1, theta_2 with the declared relation
//    table and the composition rewrite.  The certificate records which
//    epsilon realizes d2 theta_1.
void criterion_8(Harness& h) {
    const SignDictionary& d = default_sign_dictionary();
    Resolution res = suspension_resolution_spheres({2});
    RelationTable table;
    table.entries.push_back({"eta", 2});
    Expression theta1 = parse_expression("[[s2 s0 i2, s1 s0 i2], s2 s1 i2]");
    Expression theta2 = parse_expression("[[s2 s1 i2, s1 s0 i2], s2 s0 i2]");
    Expression eps1 = parse_expression("[[s0 i2, s1 i2], s0 i2]");
    Expression eps2 = parse_expression("[[s0 i2, s1 i2], s1 i2]");
    ChainElement t1{3, 4, theta1}, t2{3, 4, theta2};
    auto f1 = faces(t1, res), f2 = faces(t2, res);
    h.require(f1[0].expr.is_zero() && f1[3].expr.is_zero(), "d0 theta_1 = d3 theta_1 = 0");
    h.require(f2[0].expr.is_zero() && f2[3].expr.is_zero(), "d0 theta_2 = d3 theta_2 = 0");
    auto nf = [&](const Expression& e) {
        return reduce_mod_p(htpymodt_rewrite(rewrite_whitehead_square(e)), 3, table);
    };
    h.require(equal_mod_p(nf(f1[1].expr), eps2, 3, table, d), "d1 theta_1 = eps2 (mod 3)");
    h.require(equal_mod_p(nf(f2[1].expr), eps2, 3, table, d), "d1 theta_2 = eps2 (mod 3)");
    h.require(equal_mod_p(nf(f2[2].expr), eps1, 3, table, d), "d2 theta_2 = eps1 (mod 3)");
    // d2 theta_1 = -2 eps_k (mod 3) with the realizing index recorded
    Expression d2t1 = nf(f1[2].expr);
    int realizing = 0;
    if (equal_mod_p(d2t1, scale(-2, eps2), 3, table, d)) realizing = 2;
    if (equal_mod_p(d2t1, scale(-2, eps1), 3, table, d)) realizing = 1;
    h.require(realizing != 0, "d2 theta_1 = -2 eps_k (mod 3) for some k");
    h.note("realizing face index: d2; realizing epsilon index: " + std::to_string(realizing) +
           (realizing == 2 ? " (as printed)" : " (the printed eps2 read as eps1; see certificate)"));
    // the E2-level conclusion of Example 7.8, verified exactly over Z:
    //   d1(theta_i) := alternating face sum; the quotient of <eps1, eps2>
    //   by the image lattice is Z/3 and [eps1] = [eps2] generates it.
    auto boundary = [&](const ChainElement& t) { return boundary_sum(t, res).expr; };
    Expression b1 = boundary(t1), b2 = boundary(t2);
    // coefficients in the (eps1, eps2) basis via the linear model
    auto coords = [&](const Expression& e) -> std::pair<Rat, Rat> {
        // solve e = x eps1 + y eps2 in the rational model
        TensorPoly pe = expand_to_linear_model(eliminate_eta_classes(e), d);
        TensorPoly p1 = expand_to_linear_model(eps1, d);
        TensorPoly p2 = expand_to_linear_model(eps2, d);
        // try small integer combinations (entries are in [-3,3] here)
        for (int x = -3; x <= 3; ++x)
            for (int y = -3; y <= 3; ++y) {
                TensorPoly acc = tensor_add(tensor_scale(x, p1), tensor_scale(y, p2));
                if (tensor_equal(acc, pe)) return {x, y};
            }
        throw structural_error("boundary not in the epsilon lattice");
    };
    auto [x1, y1] = coords(b1);
    auto [x2, y2] = coords(b2);
    IntMatrix lattice{{BigInt(boost::multiprecision::numerator(x1)),
                       BigInt(boost::multiprecision::numerator(x2))},
                      {BigInt(boost::multiprecision::numerator(y1)),
                       BigInt(boost::multiprecision::numerator(y2))}};
    SmithResult smith = smith_normal_form(lattice);
    h.require(smith.invariant_factors.size() == 2, "boundary lattice has full rank");
    BigInt det = smith.invariant_factors[0] * smith.invariant_factors[1];
    h.require(det == 3, "E2 quotient has order 3 (3 eps2 lies in the boundary lattice)");
    h.note("d'theta_1 = (" + x1.str() + ")eps1 + (" + y1.str() + ")eps2, d'theta_2 = (" +
           x2.str() + ")eps1 + (" + y2.str() + ")eps2");
}

// ---------------------------------------------------------------------------
// 9. CP^2 chain: d0(gamma_2) reduces to 0 step-for-step.
void criterion_9(Harness& h) {
    Cp2ChainCertificate cert = verify_cp2_d0_chain();
    for (const auto& s : cert.steps) h.note(s);
    h.require(cert.verified, "d0(gamma_2) chain certificate");
}

// ---------------------------------------------------------------------------
// 10. Combinatorics: D(k,n) class counts; Example 2.3; (2.simpx) identities.
void criterion_10(Harness& h) {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            h.require(static_cast<long long>(enumerate_classes(k, n).size()) ==
                          binomial(n + 1, k),
                      "class count at (k,n) = (" + std::to_string(k) + "," + std::to_string(n) +
                          ")");
    CubeVertex j;
    for (char c : std::string("11101010")) j.bits.push_back(c - '0');
    VertexStats st = vertex_stats(j);
    h.require(st.ell == 3 && st.lambda == 5 && st.remainder == std::vector<int>{1, 0, 1, 0},
              "Example 2.3 returns (3, 5, (1010))");
    for (int n = 3; n <= 6; ++n)
        h.require(check_wedge_face_identities(n),
                  "zero-flip face identities at n = " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// 11. Steenrod enumerations.
void criterion_11(Harness& h) {
    for (int maxdeg : {10, 20, 40}) {
        auto gens = em_generators(2, 2, maxdeg);
        h.require(gens.size() == 1 && gens[0].degree == 2,
                  "p=2, k=2 yields iota2 only at maxdeg " + std::to_string(maxdeg));
    }
    {
        auto gens = em_generators(2, 3, 40);
        std::vector<int> degs;
        for (const auto& g : gens) degs.push_back(g.degree);
        h.require(degs == std::vector<int>{3, 5, 9, 17, 33},
                  "p=2, k=3 degrees {3,5,9,17,33} through maxdeg 40");
    }
    for (int k = 4; k <= 8; ++k) {
        auto em = em_generators(2, k - 1, 40);
        auto e0 = e0_generators(2, k, 40);
        std::multiset<std::string> expect;
        for (const auto& g : em)
            if (g.degree != k - 1) expect.insert(g.label);
        if (2 * (k - 1) <= 40) expect.insert("iota" + std::to_string(k - 1) + "^2");
        std::multiset<std::string> got;
        for (const auto& g : e0) got.insert(g.label);
        h.require(expect == got, "Wang-rule transformation at k = " + std::to_string(k));
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<std::string, std::function<void(Harness&)>>> criteria = {
        {"sign calculus: Example 8.2 and the sign laws", criterion_1},
        {"gamma golden tests against the printed formulas", criterion_2},
        {"machine verification: gamma_n cycles, n = 2..8", criterion_3},
        {"hopfwh and jacobiabc expand to zero", criterion_4},
        {"face-map polyhedra: census and exact homology", criterion_5},
        {"suspension cycles: w2, w3, the non-cycle, the diagonal", criterion_6},
        {"bounding-chain witness for gamma - 2 delta", criterion_7},
        {"Example 7.8 mod 3 face values", criterion_8},
        {"CP^2 chain: d0(gamma_2) reduces to 0 step-for-step", criterion_9},
        {"combinatorics: class counts, cube stats, face identities", criterion_10},
        {"Steenrod enumerations and the Wang rule", criterion_11},
    };
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        int num = static_cast<int>(i) + 1;
        if (only != 0 && only != num) continue;
        Harness h;
        try {
            criteria[i].second(h);
        } catch (const std::exception& e) {
            h.ok = false;
            h.notes << "    exception: " << e.what() << "\n";
        }
        printf("[%s] criterion %2d: %s\n", h.ok ? "PASS" : "FAIL", num,
               criteria[i].first.c_str());
        fputs(h.notes.str().c_str(), stdout);
        if (!h.ok) ++failures;
    }
    return failures;
}
