#include "whalg/parse.hpp"

#include <cctype>

namespace whalg {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    int col() const { return static_cast<int>(pos) + 1; }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw parse_error(std::string("expected ") + what, col());
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer", col());
        return std::stoll(s.substr(start, pos - start));
    }
    bool accept_word(const char* w) {
        skip_ws();
        size_t n = std::char_traits<char>::length(w);
        if (s.compare(pos, n, w) != 0) return false;
        // must not run into a longer identifier
        size_t end = pos + n;
        if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])))) return false;
        pos += n;
        return true;
    }
};

Generator parse_generator(Cursor& c) {
    DegeneracySet degens;
    std::vector<int> raw;
    for (;;) {
        c.skip_ws();
        if (c.pos < c.s.size() && c.s[c.pos] == 's' && c.pos + 1 < c.s.size() &&
            std::isdigit(static_cast<unsigned char>(c.s[c.pos + 1]))) {
            ++c.pos;
            raw.push_back(static_cast<int>(c.integer()));
        } else {
            break;
        }
    }
    c.skip_ws();
    if (c.pos >= c.s.size()) throw parse_error("expected generator", c.col());
    char k = c.s[c.pos];
    Generator g;
    switch (k) {
        case 'i': g.kind = Generator::Kind::Iota; break;
        case 'v': g.kind = Generator::Kind::VEta; break;
        case 'a': g.kind = Generator::Kind::AuxA; break;
        case 'b': g.kind = Generator::Kind::AuxB; break;
        default: throw parse_error("expected generator (i/v/a/b)", c.col());
    }
    ++c.pos;
    int at = c.col();
    g.param = static_cast<int>(c.integer());
    if (g.param < 1) throw parse_error("generator index must be >= 1", at);
    // The listed prefixes apply outermost-first: "s1 s0 i2" is s1 ∘ s0 ∘ i2.
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
        if (*it < 0) throw parse_error("degeneracy index must be >= 0", at);
        g.degens = g.degens.prepend(*it);
    }
    return g;
}

TreePtr parse_tree(Cursor& c) {
    if (c.accept('[')) {
        TreePtr l = parse_tree(c);
        c.expect(',', "','");
        TreePtr r = parse_tree(c);
        int at = c.col();
        c.expect(']', "']'");
        if (l->pi_degree() < 2 || r->pi_degree() < 2)
            throw parse_error("bracket arguments must have pi-degree >= 2", at);
        return make_bracket(std::move(l), std::move(r));
    }
    return make_leaf(parse_generator(c));
}

Term parse_term(Cursor& c) {
    Term t;
    t.coeff = 1;
    c.skip_ws();
    if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        t.coeff = Rat(BigInt(c.integer()));
        c.expect('*', "'*' after coefficient");
    }
    t.tree = parse_tree(c);
    while (c.accept_word("o")) {
        if (!c.accept_word("eta")) throw parse_error("expected 'eta'", c.col());
        ++t.eta_power;
    }
    return t;
}

}  // namespace

Expression parse_expression(const std::string& text) {
    Cursor c{text};
    std::vector<Term> terms;
    bool neg = c.accept('-');
    Term t = parse_term(c);
    if (neg) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    for (;;) {
        if (c.eof()) break;
        bool minus;
        if (c.accept('+'))
            minus = false;
        else if (c.accept('-'))
            minus = true;
        else
            throw parse_error("expected '+', '-' or end of input", c.col());
        Term nxt = parse_term(c);
        if (minus) nxt.coeff = -nxt.coeff;
        terms.push_back(std::move(nxt));
    }
    return canonicalize(std::move(terms));
}

}  // namespace whalg
