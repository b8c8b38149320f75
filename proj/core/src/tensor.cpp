#include "whalg/tensor.hpp"

namespace whalg {

void TensorPoly::add(const TensorWord& w, const Rat& c) {
    if (c == 0) return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        coeffs.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

TensorPoly tensor_add(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly out = a;
    for (const auto& [w, c] : b.coeffs) out.add(w, c);
    return out;
}

TensorPoly tensor_scale(const Rat& c, const TensorPoly& a) {
    TensorPoly out;
    if (c == 0) return out;
    for (const auto& [w, k] : a.coeffs) out.coeffs.emplace(w, k * c);
    return out;
}

bool tensor_equal(const TensorPoly& a, const TensorPoly& b) {
    return a.coeffs == b.coeffs;
}

namespace {

// word-level expansion of one tree; coefficients are ±1 concatenations
void expand_tree(const Tree& t, const SignDictionary& d,
                 std::vector<std::pair<std::vector<Generator>, Rat>>& out) {
    if (t.is_leaf()) {
        out.push_back({{t.leaf}, 1});
        return;
    }
    std::vector<std::pair<std::vector<Generator>, Rat>> L, R;
    expand_tree(*t.left, d, L);
    expand_tree(*t.right, d, R);
    int p = t.left->pi_degree(), q = t.right->pi_degree();
    Rat cf = d.f(p, q), cr = d.r(p, q);
    for (const auto& [wl, cl] : L)
        for (const auto& [wr, crr] : R) {
            std::vector<Generator> fwd = wl;
            fwd.insert(fwd.end(), wr.begin(), wr.end());
            out.push_back({std::move(fwd), cl * crr * cf});
            std::vector<Generator> rev = wr;
            rev.insert(rev.end(), wl.begin(), wl.end());
            out.push_back({std::move(rev), cl * crr * cr});
        }
}

}  // namespace

TensorPoly expand_to_linear_model(const Expression& e, const SignDictionary& d) {
    TensorPoly out;
    for (const Term& t : e.terms) {
        std::vector<std::pair<std::vector<Generator>, Rat>> words;
        expand_tree(*t.tree, d, words);
        for (auto& [w, c] : words) out.add(TensorWord{std::move(w), t.eta_power}, c * t.coeff);
    }
    return out;
}

namespace {

Generator formal(int degree, int which) {
    // distinct letters of prescribed degree for the axiom suite
    Generator g;
    g.kind = which == 0 ? Generator::Kind::AuxA : which == 1 ? Generator::Kind::AuxB
                                                             : Generator::Kind::Iota;
    g.param = degree;
    return g;
}

int pow_sign(long long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

AxiomReport check_axioms(const SignDictionary& d, int min_degree, int max_degree) {
    AxiomReport rep;
    rep.antisymmetry_ok = true;
    rep.jacobi_ok = true;
    for (int p = min_degree; p <= max_degree; ++p)
        for (int q = min_degree; q <= max_degree; ++q) {
            Expression a = expr_generator(formal(p, 0));
            Expression b = expr_generator(formal(q, 1));
            Expression residue =
                add(bracket(a, b), scale(-pow_sign(1LL * p * q), bracket(b, a)));
            if (!expand_to_linear_model(residue, d).is_zero()) {
                rep.antisymmetry_ok = false;
                rep.counterexamples.push_back("antisymmetry p=" + std::to_string(p) +
                                              " q=" + std::to_string(q));
            }
        }
    for (int p = min_degree; p <= max_degree; ++p)
        for (int q = min_degree; q <= max_degree; ++q)
            for (int r = min_degree; r <= max_degree; ++r) {
                Expression a = expr_generator(formal(p, 0));
                Expression b = expr_generator(formal(q, 1));
                Expression c = expr_generator(formal(r, 2));
                Expression A = bracket(bracket(a, b), c);
                Expression B = bracket(bracket(b, c), a);
                Expression C = bracket(bracket(c, a), b);
                Expression residue = add(
                    scale(pow_sign(1LL * p * r), A),
                    add(scale(pow_sign(1LL * q * p), B), scale(pow_sign(1LL * r * q), C)));
                if (!expand_to_linear_model(residue, d).is_zero()) {
                    rep.jacobi_ok = false;
                    rep.counterexamples.push_back(
                        "jacobi p=" + std::to_string(p) + " q=" + std::to_string(q) +
                        " r=" + std::to_string(r));
                }
            }
    return rep;
}

std::vector<SignDictionary> solve_sign_dictionaries() {
    std::vector<SignDictionary> found;
    for (int bits = 0; bits < 256; ++bits) {
        SignDictionary d;
        int b = bits;
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) {
                d.fwd[p][q] = (b & 1) ? 1 : -1;
                b >>= 1;
                d.rev[p][q] = (b & 1) ? 1 : -1;
                b >>= 1;
            }
        if (check_axioms(d, 2, 5).ok()) found.push_back(d);
    }
    return found;
}

const SignDictionary& default_sign_dictionary() {
    static const SignDictionary dict = [] {
        auto all = solve_sign_dictionaries();
        if (all.empty()) throw structural_error("no sign dictionary satisfies the axioms");
        // lexicographic minimum over the flattened (fwd, rev) table
        auto key = [](const SignDictionary& d) {
            std::array<int, 8> k{};
            int i = 0;
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) {
                    k[i++] = d.fwd[p][q];
                    k[i++] = d.rev[p][q];
                }
            return k;
        };
        SignDictionary best = all[0];
        for (const auto& d : all)
            if (key(d) < key(best)) best = d;
        return best;
    }();
    return dict;
}

}  // namespace whalg
