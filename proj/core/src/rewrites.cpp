#include "whalg/rewrites.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace whalg {

std::optional<int> RelationTable::order_of(const Term& t) const {
    Term unit = t;
    unit.coeff = 1;
    std::string printed = print_term(unit, true);
    for (const auto& e : entries) {
        if (e.cls == printed) return e.order;
        if (e.cls == "eta" && t.eta_power >= 1) return e.order;
    }
    return std::nullopt;
}

namespace {

bool is_degree2_iota(const Tree& t) {
    return t.is_leaf() && t.leaf.kind == Generator::Kind::Iota && t.leaf.param == 2;
}

// [u,u] -> 2 v for matching pi-degree-2 leaves; multiplier collected in c.
TreePtr square_rewrite_tree(const TreePtr& t, Rat& c) {
    if (t->is_leaf()) return t;
    if (is_degree2_iota(*t->left) && is_degree2_iota(*t->right) &&
        t->left->leaf.degens == t->right->leaf.degens) {
        Generator v = t->left->leaf;
        v.kind = Generator::Kind::VEta;
        c *= 2;
        return make_leaf(std::move(v));
    }
    TreePtr l = square_rewrite_tree(t->left, c);
    TreePtr r = square_rewrite_tree(t->right, c);
    // the rewrite may expose a new square one level up, e.g. [s0[i2,i2], x]
    if (l == t->left && r == t->right) return t;
    auto again = make_bracket(std::move(l), std::move(r));
    return square_rewrite_tree(again, c);
}

}  // namespace

Expression rewrite_whitehead_square(const Expression& e) {
    std::vector<Term> out;
    for (const Term& t : e.terms) {
        Rat c = t.coeff;
        TreePtr nt = square_rewrite_tree(t.tree, c);
        out.push_back(Term{c, nt, t.eta_power});
    }
    return canonicalize(std::move(out));
}

namespace {

bool is_v2(const Tree& t) {
    return t.is_leaf() && t.leaf.kind == Generator::Kind::VEta && t.leaf.param == 2;
}

Expression eliminate_tree(const TreePtr& t) {
    if (t->is_leaf()) {
        if (is_v2(*t)) {
            Generator i2 = t->leaf;
            i2.kind = Generator::Kind::Iota;
            TreePtr leaf = make_leaf(i2);
            return expr_term(Rat(1, 2), make_bracket(leaf, leaf));
        }
        return expr_generator(t->leaf);
    }
    return bracket(eliminate_tree(t->left), eliminate_tree(t->right));
}

}  // namespace

Expression eliminate_eta_classes(const Expression& e) {
    Expression out;
    for (const Term& t : e.terms)
        out = add(out, compose_eta(scale(t.coeff, eliminate_tree(t.tree)), t.eta_power));
    return out;
}

namespace {

// One htpymodt step on a root bracket tree; returns nullopt when no v2-leaf
// argument is present.
std::optional<Expression> htpymodt_root(const TreePtr& t) {
    if (t->is_leaf()) return std::nullopt;
    TreePtr u, w_eta;
    int sign = 1;
    if (is_v2(*t->right)) {
        u = t->left;
        w_eta = t->right;
    } else if (is_v2(*t->left)) {
        // [w∘η, u] = (-1)^{(q+1)·p} [u, w∘η] with q+1 = 3 the carrier degree
        u = t->right;
        w_eta = t->left;
        sign = (3 * u->pi_degree()) % 2 == 0 ? 1 : -1;
    } else {
        return std::nullopt;
    }
    Generator w = w_eta->leaf;
    w.kind = Generator::Kind::Iota;  // the underlying s_J i2
    Expression uw = expr_term(1, make_bracket(u, make_leaf(w)));
    Expression first = compose_eta(uw, 1);
    Expression second = expr_term(1, make_bracket(uw.terms[0].tree, make_leaf(w)));
    return scale(sign, add(first, negate(second)));
}

}  // namespace

Expression htpymodt_rewrite(const Expression& e) {
    Expression out;
    for (const Term& t : e.terms) {
        auto step = htpymodt_root(t.tree);
        if (step) {
            Expression rewritten = compose_eta(scale(t.coeff, *step), t.eta_power);
            // a second v-leaf may remain (e.g. both arguments were squares)
            out = add(out, htpymodt_rewrite(rewritten));
        } else {
            out = add(out, canonicalize({t}));
        }
    }
    return out;
}

Expression reduce_mod_p(const Expression& e, int p, const RelationTable& orders) {
    if (p < 2) throw domain_error("reduce_mod_p: p must be a prime >= 2");
    std::vector<Term> out;
    for (const Term& t : e.terms) {
        auto ord = orders.order_of(t);
        if (!ord && t.eta_power >= 1)
            throw unknown_order_error("unknown additive order for composite class '" +
                                      print_term(Term{1, t.tree, t.eta_power}, true) + "'");
        if (ord && *ord % p != 0) continue;  // order coprime to p: term dies p-locally
        if (boost::multiprecision::denominator(t.coeff) != 1)
            throw domain_error("reduce_mod_p: non-integer coefficient");
        BigInt n = boost::multiprecision::numerator(t.coeff) % p;
        if (n < 0) n += p;
        if (2 * n > p) n -= p;  // symmetric representative
        if (n == 0) continue;
        out.push_back(Term{Rat(n), t.tree, t.eta_power});
    }
    return canonicalize(std::move(out));
}

bool rationally_zero(const Expression& e, const SignDictionary& d) {
    return expand_to_linear_model(eliminate_eta_classes(e), d).is_zero();
}

bool rationally_equal(const Expression& a, const Expression& b, const SignDictionary& d) {
    return rationally_zero(add(a, negate(b)), d);
}

bool equal_mod_p(const Expression& a, const Expression& b, int p,
                 const RelationTable& orders, const SignDictionary& d) {
    Expression diff = reduce_mod_p(add(a, negate(b)), p, orders);
    TensorPoly poly = expand_to_linear_model(diff, d);
    for (const auto& [w, c] : poly.coeffs) {
        if (boost::multiprecision::denominator(c) != 1) return false;
        if (boost::multiprecision::numerator(c) % p != 0) return false;
    }
    return true;
}

}  // namespace whalg
