#include <doctest.h>

#include <map>
#include <set>

#include "whalg/steenrod.hpp"

using namespace whalg;

namespace {

// ---- independent p=2 oracle: Steenrod action on polynomial classes -------
// F2[x1..xd] with deg x_i = 1, Sq(x) = x + x^2, Cartan multiplicativity.
// A monomial is an exponent vector; a polynomial is a set of monomials.

using Mono = std::vector<int>;
using Poly = std::set<Mono>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& m : a)
        for (const auto& n : b) {
            Mono s(m.size());
            for (size_t i = 0; i < m.size(); ++i) s[i] = m[i] + n[i];
            if (out.count(s))
                out.erase(s);  // char 2
            else
                out.insert(s);
        }
    return out;
}

// total square of a single variable power: Sq(x^e) = (x + x^2)^e
Poly total_sq_power(int var, int e, int nvars) {
    Poly acc{{Mono(nvars, 0)}};
    Poly factor;
    {
        Mono x(nvars, 0), x2(nvars, 0);
        x[var] = 1;
        x2[var] = 2;
        factor = {x, x2};
    }
    for (int i = 0; i < e; ++i) acc = poly_mul(acc, factor);
    return acc;
}

// graded piece of degree deg
Poly graded_piece(const Poly& p, int deg) {
    Poly out;
    for (const auto& m : p) {
        int d = 0;
        for (int e : m) d += e;
        if (d == deg) out.insert(m);
    }
    return out;
}

// Sq^i on a homogeneous polynomial via the total square
Poly sq_i(int i, const Poly& p, int nvars) {
    Poly out;
    for (const auto& m : p) {
        Poly total{{Mono(nvars, 0)}};
        int deg = 0;
        for (int v = 0; v < nvars; ++v) {
            if (m[v] == 0) continue;
            total = poly_mul(total, total_sq_power(v, m[v], nvars));
            deg += m[v];
        }
        for (const auto& t : graded_piece(total, deg + i)) {
            if (out.count(t))
                out.erase(t);
            else
                out.insert(t);
        }
    }
    return out;
}

// does Sq^I act nontrivially on the product x1...xd?
bool acts_on_product(const SqMonomial& word, int d) {
    Poly p{{Mono(d, 1)}};
    for (auto it = word.word.rbegin(); it != word.word.rend(); ++it) {
        p = sq_i(*it, p, d);
        if (p.empty()) return false;
    }
    return !p.empty();
}

}  // namespace

TEST_CASE("admissibility") {
    CHECK(is_admissible(SqMonomial{{4, 2}}));
    CHECK(!is_admissible(SqMonomial{{2, 2}}));
    CHECK(is_admissible(PMonomial{{3, 1}, {0, 0, 0}}, 3));
    CHECK(!is_admissible(PMonomial{{2, 1}, {0, 1, 0}}, 3));  // needs i0 >= 3*1+1
    CHECK(is_admissible(PMonomial{{4, 1}, {0, 1, 0}}, 3));
}

TEST_CASE("excess: frozen examples") {
    CHECK(excess(SqMonomial{{5}}) == 5);
    CHECK(excess(SqMonomial{{4, 2}}) == 2);
    CHECK(excess(SqMonomial{{2, 1}}) == 1);
}

TEST_CASE("excess agrees with the action-on-polynomial-classes oracle, p = 2") {
    // excess = least d such that Sq^I acts nontrivially on x1...xd
    for (const SqMonomial& m : admissible_sq_words(10)) {
        int ex = excess(m);
        if (ex > 6) continue;  // keep the oracle cheap
        for (int d = 1; d <= 6; ++d) {
            bool acts = acts_on_product(m, d);
            CHECK(acts == (d >= ex));
        }
    }
}

TEST_CASE("admissible enumeration agrees with a filter over raw words") {
    // brute-force: all words of length <= 3 with entries <= 12
    std::set<std::vector<int>> from_enum;
    for (const auto& m : admissible_sq_words(20))
        if (m.word.size() <= 3 && m.degree() <= 20) from_enum.insert(m.word);
    std::set<std::vector<int>> brute;
    for (int a = 1; a <= 20; ++a) {
        if (a <= 20) brute.insert({a});
        for (int b = 1; a + b <= 20; ++b) {
            if (a >= 2 * b) brute.insert({a, b});
            for (int c = 1; a + b + c <= 20; ++c)
                if (a >= 2 * b && b >= 2 * c) brute.insert({a, b, c});
        }
    }
    CHECK(from_enum == brute);
}

TEST_CASE("em_generators: p=2, k=2 is the polynomial algebra on iota2 alone") {
    for (int maxdeg : {10, 20, 40}) {
        auto gens = em_generators(2, 2, maxdeg);
        REQUIRE(gens.size() == 1);
        CHECK(gens[0].degree == 2);
    }
}

TEST_CASE("em_generators: p=2, k=3 has the 2^j+1 degree pattern") {
    auto gens = em_generators(2, 3, 40);
    std::vector<int> degs;
    for (const auto& g : gens) degs.push_back(g.degree);
    CHECK(degs == std::vector<int>{3, 5, 9, 17, 33});
    auto gens10 = em_generators(2, 3, 10);
    std::vector<int> degs10;
    for (const auto& g : gens10) degs10.push_back(g.degree);
    CHECK(degs10 == std::vector<int>{3, 5, 9});
}

TEST_CASE("e0_generators: p=2, k=4 includes iota3^2 and Sq2 iota3 but not Sq3") {
    auto gens = e0_generators(2, 4, 12);
    bool has_square = false, has_sq2 = false, has_sq3 = false;
    for (const auto& g : gens) {
        if (g.label == "iota3^2") {
            has_square = true;
            CHECK(g.degree == 6);
        }
        if (g.label == "Sq2 iota3") {
            has_sq2 = true;
            CHECK(g.degree == 5);
        }
        if (g.label == "Sq3 iota3") has_sq3 = true;
    }
    CHECK(has_square);
    CHECK(has_sq2);
    CHECK(!has_sq3);
}

TEST_CASE("odd p: parity split of the power generator") {
    // k even: no iota^p generator (iota_{k-1} is odd, squares to zero)
    auto even_k = e0_generators(3, 4, 30);
    for (const auto& g : even_k) CHECK(g.label.find('^') == std::string::npos);
    // k odd: iota^p present, degree p(k-1) = degree of P^{(k-1)/2}
    auto odd_k = e0_generators(3, 5, 30);
    bool found = false;
    for (const auto& g : odd_k)
        if (g.label == "iota4^3") {
            found = true;
            CHECK(g.degree == 3 * 4);
        }
    CHECK(found);
    // consistency: P^{(k-1)/2} applied to iota_{k-1} has the same degree
    PMonomial half{{(5 - 1) / 2}, {0, 0}};
    CHECK((5 - 1) + half.degree(3) == 3 * (5 - 1));
}

TEST_CASE("Wang rule: em(k-1) generators transform into e0(k), k <= 8") {
    for (int k = 4; k <= 8; ++k) {
        auto em = em_generators(2, k - 1, 40);
        auto e0 = e0_generators(2, k, 40);
        // drop iota_{k-1} itself, add iota_{k-1}^2
        std::multiset<std::string> expect;
        for (const auto& g : em)
            if (g.degree != k - 1) expect.insert(g.label);
        if (2 * (k - 1) <= 40) expect.insert("iota" + std::to_string(k - 1) + "^2");
        std::multiset<std::string> got;
        for (const auto& g : e0) got.insert(g.label);
        CHECK(expect == got);
    }
}

TEST_CASE("poincare series basics") {
    // single even generator of degree 2: 1,0,1,0,1,...
    std::vector<EmGenerator> one_even{{"x", 2, true}};
    auto s = poincare_series(one_even, 8, 3);
    CHECK(s == std::vector<long long>{1, 0, 1, 0, 1, 0, 1, 0, 1});
    // single odd generator of degree 3: exterior
    std::vector<EmGenerator> one_odd{{"y", 3, false}};
    auto t = poincare_series(one_odd, 8, 3);
    CHECK(t == std::vector<long long>{1, 0, 0, 1, 0, 0, 0, 0, 0});
}

TEST_CASE("poincare series of F2[iota3, Sq2 iota3, Sq4 Sq2 iota3] vs partition count") {
    auto gens = em_generators(2, 3, 10);
    auto s = poincare_series(gens, 10, 2);
    // oracle: count multisets from degrees {3,5,9} reaching each degree
    std::vector<long long> oracle(11, 0);
    for (int a = 0; 3 * a <= 10; ++a)
        for (int b = 0; 3 * a + 5 * b <= 10; ++b)
            for (int c = 0; 3 * a + 5 * b + 9 * c <= 10; ++c) ++oracle[3 * a + 5 * b + 9 * c];
    CHECK(s == oracle);
}

TEST_CASE("bad inputs") {
    CHECK_THROWS_AS(em_generators(2, 1, 10), domain_error);
    CHECK_THROWS_AS(e0_generators(2, 2, 10), domain_error);
    CHECK_THROWS_AS(is_admissible(SqMonomial{{0}}), domain_error);
}
