#include "whalg/steenrod.hpp"

#include <numeric>

namespace whalg {

int SqMonomial::degree() const {
    return std::accumulate(word.begin(), word.end(), 0);
}

int PMonomial::degree(int p) const {
    int d = 0;
    for (int i : powers) d += 2 * i * (p - 1);
    for (int e : bocks) d += e;
    return d;
}

bool is_admissible(const SqMonomial& m) {
    for (int i : m.word)
        if (i < 1) throw domain_error("Sq word entries must be positive");
    for (size_t j = 0; j + 1 < m.word.size(); ++j)
        if (m.word[j] < 2 * m.word[j + 1]) return false;
    return true;
}

bool is_admissible(const PMonomial& m, int p) {
    if (m.bocks.size() != m.powers.size() + 1)
        throw domain_error("P word needs one more Bockstein bit than powers");
    for (int i : m.powers)
        if (i < 1) throw domain_error("P word entries must be positive");
    for (int e : m.bocks)
        if (e != 0 && e != 1) throw domain_error("Bockstein bits must be 0/1");
    for (size_t j = 0; j + 1 < m.powers.size(); ++j)
        if (m.powers[j] < p * m.powers[j + 1] + m.bocks[j + 1]) return false;
    return true;
}

int excess(const SqMonomial& m) {
    if (m.empty()) return 0;
    int rest = 0;
    for (size_t j = 1; j < m.word.size(); ++j) rest += m.word[j];
    return m.word[0] - rest;
}

int excess(const PMonomial& m, int p) {
    if (m.empty()) return 0;
    int rest = 0;
    for (size_t j = 1; j < m.powers.size(); ++j) rest += 2 * m.powers[j] * (p - 1);
    for (size_t j = 1; j < m.bocks.size(); ++j) rest += m.bocks[j];
    return 2 * m.powers[0] + m.bocks[0] - rest;
}

std::vector<SqMonomial> admissible_sq_words(int maxdeg) {
    std::vector<SqMonomial> out;
    // extend admissible words to the left: i0 >= 2*i1
    auto rec = [&](auto&& self, SqMonomial cur) -> void {
        out.push_back(cur);
        int lo = cur.word.empty() ? 1 : 2 * cur.word.front();
        for (int i = lo; cur.degree() + i <= maxdeg; ++i) {
            SqMonomial nxt;
            nxt.word.push_back(i);
            nxt.word.insert(nxt.word.end(), cur.word.begin(), cur.word.end());
            self(self, std::move(nxt));
        }
    };
    SqMonomial start;
    for (int i = 1; i <= maxdeg; ++i) {
        SqMonomial m;
        m.word.push_back(i);
        rec(rec, std::move(m));
    }
    (void)start;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<PMonomial> admissible_p_words(int p, int maxdeg) {
    std::vector<PMonomial> out;
    // grow admissible words to the left with a Bockstein bit in between
    auto rec = [&](auto&& self, const PMonomial& cur) -> void {
        out.push_back(cur);
        for (int e = 0; e <= 1; ++e) {
            int lo = p * cur.powers.front() + e;
            if (lo < 1) lo = 1;
            for (int i = lo;; ++i) {
                PMonomial nxt;
                nxt.powers.push_back(i);
                nxt.powers.insert(nxt.powers.end(), cur.powers.begin(), cur.powers.end());
                nxt.bocks.push_back(0);  // new leading e0, filled below
                nxt.bocks.insert(nxt.bocks.end(), cur.bocks.begin() + 1, cur.bocks.end());
                nxt.bocks.insert(nxt.bocks.begin() + 1, e);
                if (nxt.degree(p) > maxdeg) break;
                self(self, nxt);
                PMonomial withb = nxt;
                withb.bocks[0] = 1;
                if (withb.degree(p) <= maxdeg) self(self, withb);
            }
        }
    };
    for (int i = 1; 2 * i * (p - 1) <= maxdeg; ++i)
        for (int e0 = 0; e0 <= 1; ++e0)
            for (int e1 = 0; e1 <= 1; ++e1) {
                PMonomial m;
                m.powers = {i};
                m.bocks = {e0, e1};
                if (m.degree(p) <= maxdeg) rec(rec, m);
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string print_monomial(const SqMonomial& m) {
    std::string s;
    for (int i : m.word) s += "Sq" + std::to_string(i) + " ";
    return s.empty() ? std::string("1") : s.substr(0, s.size() - 1);
}

std::string print_monomial(const PMonomial& m) {
    std::string s;
    if (!m.bocks.empty() && m.bocks.front()) s += "b ";
    for (size_t j = 0; j < m.powers.size(); ++j) {
        s += "P" + std::to_string(m.powers[j]) + " ";
        if (m.bocks[j + 1]) s += "b ";
    }
    return s.empty() ? std::string("1") : s.substr(0, s.size() - 1);
}

std::vector<EmGenerator> em_generators(int p, int k, int maxdeg) {
    if (k < 2) throw domain_error("em_generators: require k >= 2");
    std::vector<EmGenerator> out;
    out.push_back({"iota" + std::to_string(k), k, k % 2 == 0});
    if (p == 2) {
        for (const SqMonomial& m : admissible_sq_words(maxdeg - k)) {
            if (m.word.back() == 1) continue;
            if (excess(m) >= k) continue;
            if (k + m.degree() > maxdeg) continue;
            out.push_back({print_monomial(m) + " iota" + std::to_string(k), k + m.degree(), true});
        }
    } else {
        for (const PMonomial& m : admissible_p_words(p, maxdeg - k)) {
            if (m.bocks.back() != 0) continue;
            if (excess(m, p) >= k - 1) continue;
            int d = k + m.degree(p);
            if (d > maxdeg) continue;
            out.push_back({print_monomial(m) + " iota" + std::to_string(k), d, d % 2 == 0});
        }
    }
    std::sort(out.begin(), out.end(), [](const EmGenerator& a, const EmGenerator& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.label < b.label;
    });
    return out;
}

std::vector<EmGenerator> e0_generators(int p, int k, int maxdeg) {
    if (k < 3) throw domain_error("e0_generators: require k >= 3");
    std::vector<EmGenerator> out;
    int km1 = k - 1;
    if (p == 2) {
        if (2 * km1 <= maxdeg)
            out.push_back({"iota" + std::to_string(km1) + "^2", 2 * km1, true});
        for (const SqMonomial& m : admissible_sq_words(maxdeg - km1)) {
            if (m.word.back() == 1) continue;
            if (excess(m) >= k - 1) continue;
            if (km1 + m.degree() > maxdeg) continue;
            out.push_back(
                {print_monomial(m) + " iota" + std::to_string(km1), km1 + m.degree(), true});
        }
    } else {
        // k odd: iota^p plus words of excess < k; k even: words only, excess < k-1
        if (k % 2 == 1) {
            if (p * km1 <= maxdeg)
                out.push_back({"iota" + std::to_string(km1) + "^" + std::to_string(p),
                               p * km1, true});
        }
        int bound = (k % 2 == 1) ? k : k - 1;
        for (const PMonomial& m : admissible_p_words(p, maxdeg - km1)) {
            if (m.bocks.back() != 0) continue;
            if (excess(m, p) >= bound) continue;
            int d = km1 + m.degree(p);
            if (d > maxdeg) continue;
            out.push_back({print_monomial(m) + " iota" + std::to_string(km1), d, d % 2 == 0});
        }
    }
    std::sort(out.begin(), out.end(), [](const EmGenerator& a, const EmGenerator& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.label < b.label;
    });
    return out;
}

std::vector<long long> poincare_series(const std::vector<EmGenerator>& gens, int maxdeg, int p) {
    std::vector<long long> series(maxdeg + 1, 0);
    series[0] = 1;
    for (const EmGenerator& g : gens) {
        if (g.degree <= 0) throw domain_error("poincare_series: generator degrees must be > 0");
        std::vector<long long> next(maxdeg + 1, 0);
        bool polynomial = (p == 2) || g.even;
        if (polynomial) {
            // 1/(1 - t^d)
            for (int d = 0; d <= maxdeg; ++d) {
                next[d] = series[d];
                if (d >= g.degree) next[d] += next[d - g.degree];
            }
        } else {
            // (1 + t^d)
            for (int d = 0; d <= maxdeg; ++d) {
                next[d] = series[d];
                if (d >= g.degree) next[d] += series[d - g.degree];
            }
        }
        series = std::move(next);
    }
    return series;
}

}  // namespace whalg
