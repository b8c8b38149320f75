#include "whalg/expr.hpp"

#include <algorithm>
#include <sstream>

namespace whalg {

std::string Generator::base_name() const {
    switch (kind) {
        case Kind::Iota: return "i" + std::to_string(param);
        case Kind::VEta: return "v" + std::to_string(param);
        case Kind::AuxA: return "a" + std::to_string(param);
        case Kind::AuxB: return "b" + std::to_string(param);
    }
    return "?";
}

int Tree::pi_degree() const {
    if (is_leaf()) return leaf.pi_degree();
    return left->pi_degree() + right->pi_degree() - 1;
}

int Tree::weight() const {
    if (is_leaf()) return 1;
    return left->weight() + right->weight();
}

TreePtr make_leaf(Generator g) {
    auto t = std::make_shared<Tree>();
    t->leaf = std::move(g);
    return t;
}

TreePtr make_bracket(TreePtr l, TreePtr r) {
    auto t = std::make_shared<Tree>();
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

namespace {

void shape_of(const Tree& t, std::string& out) {
    if (t.is_leaf()) {
        out.push_back('.');
    } else {
        out.push_back('(');
        shape_of(*t.left, out);
        shape_of(*t.right, out);
        out.push_back(')');
    }
}

void leaves_of(const Tree& t, std::vector<const Generator*>& out) {
    if (t.is_leaf()) {
        out.push_back(&t.leaf);
    } else {
        leaves_of(*t.left, out);
        leaves_of(*t.right, out);
    }
}

int compare_generators(const Generator& a, const Generator& b) {
    // higher pi-degree sorts first (matches the printed gamma_n ordering)
    if (a.pi_degree() != b.pi_degree()) return a.pi_degree() > b.pi_degree() ? -1 : 1;
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (a.param != b.param) return a.param < b.param ? -1 : 1;
    if (a.degens.indices != b.degens.indices)
        return a.degens.indices < b.degens.indices ? -1 : 1;
    return 0;
}

}  // namespace

int compare_trees(const Tree& a, const Tree& b) {
    std::string sa, sb;
    shape_of(a, sa);
    shape_of(b, sb);
    if (sa != sb) {
        if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
        return sa < sb ? -1 : 1;
    }
    std::vector<const Generator*> la, lb;
    leaves_of(a, la);
    leaves_of(b, lb);
    for (size_t i = 0; i < la.size(); ++i) {
        int c = compare_generators(*la[i], *lb[i]);
        if (c != 0) return c;
    }
    return 0;
}

Expression expr_zero() { return {}; }

Expression expr_term(Rat coeff, TreePtr t, int eta_power) {
    return canonicalize({Term{std::move(coeff), std::move(t), eta_power}});
}

Expression expr_generator(Generator g) { return expr_term(1, make_leaf(std::move(g))); }

Expression canonicalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        if (x.eta_power != y.eta_power) return x.eta_power < y.eta_power;
        return compare_trees(*x.tree, *y.tree) < 0;
    });
    Expression out;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!out.terms.empty() && out.terms.back().eta_power == t.eta_power &&
            compare_trees(*out.terms.back().tree, *t.tree) == 0) {
            out.terms.back().coeff += t.coeff;
            if (out.terms.back().coeff == 0) out.terms.pop_back();
        } else {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

Expression add(const Expression& a, const Expression& b) {
    std::vector<Term> all = a.terms;
    all.insert(all.end(), b.terms.begin(), b.terms.end());
    return canonicalize(std::move(all));
}

Expression scale(const Rat& c, const Expression& e) {
    if (c == 0) return {};
    Expression out = e;
    for (auto& t : out.terms) t.coeff *= c;
    return out;
}

Expression negate(const Expression& e) { return scale(-1, e); }

Expression compose_eta(const Expression& e, int k) {
    Expression out = e;
    for (auto& t : out.terms) t.eta_power += k;
    return canonicalize(std::move(out.terms));
}

Expression bracket(const Expression& a, const Expression& b) {
    std::vector<Term> out;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            if (ta.eta_power != 0 || tb.eta_power != 0)
                throw structural_error("bracket of η-composite terms is not representable");
            out.push_back(Term{ta.coeff * tb.coeff, make_bracket(ta.tree, tb.tree), 0});
        }
    return canonicalize(std::move(out));
}

namespace {
TreePtr degenerate_tree(const DegeneracySet& I, const Tree& t) {
    if (t.is_leaf()) {
        Generator g = t.leaf;
        g.degens = g.degens.compose_outer(I);
        return make_leaf(std::move(g));
    }
    return make_bracket(degenerate_tree(I, *t.left), degenerate_tree(I, *t.right));
}
}  // namespace

Expression apply_degeneracy(const DegeneracySet& I, const Expression& e) {
    if (I.empty()) return e;
    std::vector<Term> out;
    out.reserve(e.terms.size());
    for (const auto& t : e.terms)
        out.push_back(Term{t.coeff, degenerate_tree(I, *t.tree), t.eta_power});
    return canonicalize(std::move(out));
}

namespace {
// returns the normalized tree and accumulates the swap sign; nullptr when
// the tree vanishes ([x,x] with odd pi-degree)
TreePtr antisym_tree(const TreePtr& t, int& sign) {
    if (t->is_leaf()) return t;
    TreePtr l = antisym_tree(t->left, sign);
    TreePtr r = antisym_tree(t->right, sign);
    if (!l || !r) return nullptr;
    int c = compare_trees(*l, *r);
    if (c == 0) {
        if (l->pi_degree() % 2 != 0) return nullptr;
        return make_bracket(l, r);
    }
    if (c > 0) {
        long long pq = 1LL * l->pi_degree() * r->pi_degree();
        if (pq % 2 != 0) sign = -sign;
        return make_bracket(r, l);
    }
    return make_bracket(l, r);
}
}  // namespace

Expression antisym_normal_form(const Expression& e) {
    std::vector<Term> out;
    for (const Term& t : e.terms) {
        int sign = 1;
        TreePtr nt = antisym_tree(t.tree, sign);
        if (!nt) continue;
        out.push_back(Term{t.coeff * sign, nt, t.eta_power});
    }
    return canonicalize(std::move(out));
}

bool structurally_equal(const Expression& a, const Expression& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        const Term &x = a.terms[i], &y = b.terms[i];
        if (x.coeff != y.coeff || x.eta_power != y.eta_power) return false;
        if (compare_trees(*x.tree, *y.tree) != 0) return false;
    }
    return true;
}

std::string print_tree(const Tree& t) {
    if (t.is_leaf()) {
        std::string s;
        for (int j : t.leaf.degens.word_desc()) s += "s" + std::to_string(j) + " ";
        return s + t.leaf.base_name();
    }
    return "[" + print_tree(*t.left) + ", " + print_tree(*t.right) + "]";
}

namespace {
std::string print_coeff(const Rat& c) {
    std::ostringstream os;
    if (boost::multiprecision::denominator(c) == 1)
        os << boost::multiprecision::numerator(c);
    else
        os << c;
    return os.str();
}
}  // namespace

std::string print_term(const Term& t, bool leading) {
    Rat c = t.coeff;
    std::string sign;
    if (c < 0) {
        sign = leading ? "-" : "- ";
        c = -c;
    } else if (!leading) {
        sign = "+ ";
    }
    std::string body = print_tree(*t.tree);
    if (c != 1) body = print_coeff(c) + "*" + body;
    for (int i = 0; i < t.eta_power; ++i) body += " o eta";
    return sign + body;
}

std::string print_expression(const Expression& e) {
    if (e.terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < e.terms.size(); ++i) {
        if (i) out += " ";
        out += print_term(e.terms[i], i == 0);
    }
    return out;
}

}  // namespace whalg
