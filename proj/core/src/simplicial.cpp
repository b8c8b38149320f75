#include "whalg/simplicial.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace whalg {

void validate_face_word(const FaceWord& w) {
    if (w.k < 0) throw domain_error("face word: k must be >= 0");
    if (w.entries.empty()) throw domain_error("face word: empty entry list");
    for (int t = 0; t < w.length(); ++t) {
        int bound = w.k + t;
        if (w.entries[t] < 0 || w.entries[t] > bound)
            throw domain_error("face word: entry " + std::to_string(w.entries[t]) +
                               " at position " + std::to_string(bound) + " out of range");
    }
}

FaceWord normalize_face_word(FaceWord w) {
    validate_face_word(w);
    // The move (a,b) -> (b-1,a) for a < b strictly lowers the number of
    // ascents, so plain iteration terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t j = 0; j + 1 < w.entries.size(); ++j) {
            int a = w.entries[j], b = w.entries[j + 1];
            if (a < b) {
                w.entries[j] = b - 1;
                w.entries[j + 1] = a;
                changed = true;
            }
        }
    }
    return w;
}

std::vector<FaceWord> move_closure(const FaceWord& w) {
    validate_face_word(w);
    std::set<std::vector<int>> seen;
    std::queue<std::vector<int>> todo;
    seen.insert(w.entries);
    todo.push(w.entries);
    while (!todo.empty()) {
        std::vector<int> cur = todo.front();
        todo.pop();
        for (size_t j = 0; j + 1 < cur.size(); ++j) {
            int a = cur[j], b = cur[j + 1];
            // forward move
            if (a < b) {
                std::vector<int> nxt = cur;
                nxt[j] = b - 1;
                nxt[j + 1] = a;
                if (seen.insert(nxt).second) todo.push(nxt);
            }
            // reverse move: (b-1, a) <- (a, b), i.e. (x,y) -> (y, x+1) if y <= x
            if (cur[j + 1] <= cur[j]) {
                std::vector<int> nxt = cur;
                nxt[j] = cur[j + 1];
                nxt[j + 1] = cur[j] + 1;
                FaceWord cand{nxt, w.k};
                bool ok = true;
                for (int t = 0; t < cand.length(); ++t)
                    if (nxt[t] < 0 || nxt[t] > w.k + t) { ok = false; break; }
                if (ok && seen.insert(nxt).second) todo.push(nxt);
            }
        }
    }
    std::vector<FaceWord> out;
    out.reserve(seen.size());
    for (const auto& e : seen) out.push_back(FaceWord{e, w.k});
    return out;
}

std::vector<FaceWord> enumerate_classes(int k, int n) {
    if (k <= 0 || k > n) throw domain_error("enumerate_classes: require 0 < k <= n");
    // Canonical representatives are exactly the weakly decreasing words with
    // the entry bounds; enumerate them directly.
    std::vector<FaceWord> out;
    std::vector<int> cur(n - k + 1);
    auto rec = [&](auto&& self, int t) -> void {
        if (t == n - k + 1) {
            out.push_back(FaceWord{cur, k});
            return;
        }
        int bound = k + t;
        int hi = (t == 0) ? bound : std::min(bound, cur[t - 1]);
        for (int v = 0; v <= hi; ++v) {
            cur[t] = v;
            self(self, t + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

long long raw_word_count(int k, int n) {
    if (k <= 0 || k > n) throw domain_error("raw_word_count: require 0 < k <= n");
    long long c = 1;
    for (int t = k; t <= n; ++t) c *= (t + 1);
    return c;
}

DegeneracySet DegeneracySet::prepend(int i) const {
    DegeneracySet out;
    for (int j : indices) out.indices.insert(j < i ? j : j + 1);
    out.indices.insert(i);
    return out;
}

DegeneracySet DegeneracySet::compose_outer(const DegeneracySet& outer) const {
    // s_outer ∘ s_this: fold outer's word from the innermost factor up.
    DegeneracySet acc = *this;
    for (int i : outer.indices) acc = acc.prepend(i);
    return acc;
}

std::vector<int> DegeneracySet::word_desc() const {
    return {indices.rbegin(), indices.rend()};
}

FacePast push_face_past_degeneracies(int r, const DegeneracySet& I) {
    if (r < 0) throw domain_error("face index must be >= 0");
    std::set<int> out;
    auto desc = I.word_desc();
    for (size_t t = 0; t < desc.size(); ++t) {
        int j = desc[t];
        if (r == j || r == j + 1) {
            // d_r s_j = id; the untouched inner factors keep their indices.
            for (size_t u = t + 1; u < desc.size(); ++u) out.insert(desc[u]);
            return FacePast{DegeneracySet{out}, std::nullopt};
        }
        if (r < j) {
            out.insert(j - 1);  // d_r s_j = s_{j-1} d_r
        } else {
            out.insert(j);  // d_r s_j = s_j d_{r-1}
            --r;
        }
    }
    return FacePast{DegeneracySet{out}, r};
}

MonotoneMap coface_map(int i, int n) {
    MonotoneMap m;
    m.src = n;  // [n-1] has n elements
    for (int t = 0; t < n; ++t) m.img.push_back(t < i ? t : t + 1);
    return m;
}

MonotoneMap codegeneracy_map(int j, int n) {
    MonotoneMap m;
    m.src = n + 2;  // [n+1] has n+2 elements
    for (int t = 0; t <= n + 1; ++t) m.img.push_back(t <= j ? t : t - 1);
    return m;
}

MonotoneMap compose_maps(const MonotoneMap& g, const MonotoneMap& f) {
    MonotoneMap m;
    m.src = f.src;
    for (int t = 0; t < f.src; ++t) m.img.push_back(g.img.at(f.img[t]));
    return m;
}

MonotoneMap face_word_map(const FaceWord& w) {
    validate_face_word(w);
    // d_I = d_{i_k} ∘ ... ∘ d_{i_n} acting on level n corresponds to the
    // ordinal composite delta_{i_n} ∘ ... ∘ delta_{i_k} : [k-1] -> [n].
    int lvl = w.k;  // delta_{i_k} : [k-1] -> [k]
    MonotoneMap acc = coface_map(w.entries[0], lvl);
    for (int t = 1; t < w.length(); ++t) {
        ++lvl;
        acc = compose_maps(coface_map(w.entries[t], lvl), acc);
    }
    return acc;
}

MonotoneMap face_past_map(int r, const DegeneracySet& I, int level) {
    // Operator d_r ∘ s_I on level `level`: ordinal composite
    // sigma_{i_1} ∘ ... ∘ sigma_{i_k} ∘ delta_r read off contravariantly.
    int top = level + I.size();
    MonotoneMap acc = coface_map(r, top);  // [top-1] -> [top]
    for (int j : I.word_desc()) {
        acc = compose_maps(codegeneracy_map(j, top - 1), acc);
        --top;
    }
    return acc;
}

namespace {
// sigma_{i_1} ∘ ... ∘ sigma_{i_k} : [base+k] -> [base] for I = {i_1<...<i_k}.
MonotoneMap degeneracy_word_map(const DegeneracySet& I, int base) {
    MonotoneMap acc;
    int t = base + I.size();
    bool first = true;
    for (int j : I.word_desc()) {
        MonotoneMap sj = codegeneracy_map(j, t - 1);  // [t] -> [t-1]
        acc = first ? sj : compose_maps(sj, acc);
        first = false;
        --t;
    }
    if (first) {
        acc.src = base + 1;
        for (int u = 0; u <= base; ++u) acc.img.push_back(u);
    }
    return acc;
}
}  // namespace

MonotoneMap resolved_map(const FacePast& fp, int level) {
    if (fp.face) {
        // operator s_{I''} ∘ d_{r'} on level: delta_{r'} ∘ sigma-word
        MonotoneMap degs = degeneracy_word_map(fp.degeneracies, level - 1);
        MonotoneMap delta = coface_map(*fp.face, level);
        return compose_maps(delta, degs);
    }
    return degeneracy_word_map(fp.degeneracies, level);
}

}  // namespace whalg
