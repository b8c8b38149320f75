// whalg: exact symbolic calculus of simplicial Whitehead-bracket chains.
//
// Exit codes: 0 verified/success, 1 nonzero residue (a mathematical check
// failed), 2 invalid input or usage.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "whalg/cert.hpp"
#include "whalg/cubes.hpp"
#include "whalg/parse.hpp"
#include "whalg/polyhedra.hpp"
#include "whalg/resolution.hpp"
#include "whalg/rewrites.hpp"
#include "whalg/signs.hpp"
#include "whalg/steenrod.hpp"
#include "whalg/version.hpp"

using namespace whalg;
using nlohmann::json;

namespace {

IndexSet parse_index_set(const std::string& csv) {
    IndexSet out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.insert(std::stoi(tok));
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

Resolution parse_resolution(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw domain_error("resolution spec needs 'kind:args'");
    std::string kind = spec.substr(0, colon), args = spec.substr(colon + 1);
    if (kind == "cpn") return cpn_resolution(std::stoi(args));
    if (kind == "susp") {
        std::vector<Generator> gens;
        std::stringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.size() < 2) throw domain_error("bad sphere token '" + tok + "'");
            Generator g;
            switch (tok[0]) {
                case 's':
                case 'i': g.kind = Generator::Kind::Iota; break;
                case 'a': g.kind = Generator::Kind::AuxA; break;
                case 'b': g.kind = Generator::Kind::AuxB; break;
                default: throw domain_error("bad sphere token '" + tok + "'");
            }
            g.param = std::stoi(tok.substr(1));
            gens.push_back(g);
        }
        return suspension_resolution(gens);
    }
    throw domain_error("unknown resolution kind '" + kind + "'");
}

std::pair<ChainElement, Resolution> parse_chain(const std::string& spec,
                                                const std::string& res_spec) {
    auto colon = spec.find(':');
    std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "gamma") {
        int n = std::stoi(args);
        Resolution res = res_spec.empty() ? cpn_resolution(n) : parse_resolution(res_spec);
        return {gamma(n), res};
    }
    if (kind == "w2" || kind == "w3") {
        auto pq = parse_int_list(args);
        if (pq.size() != 2) throw domain_error(kind + " chain spec needs p,q");
        Resolution res;
        ChainElement c = kind == "w2" ? w2(pq[0], pq[1], &res) : w3(pq[0], pq[1], &res);
        if (!res_spec.empty()) res = parse_resolution(res_spec);
        return {c, res};
    }
    throw domain_error("unknown chain spec '" + spec + "' (use gamma:N / w2:p,q / w3:p,q)");
}

int infer_level(const Expression& e, const Resolution& res) {
    int level = -1;
    for (const Term& t : e.terms) {
        std::vector<const Tree*> stack{t.tree.get()};
        while (!stack.empty()) {
            const Tree* cur = stack.back();
            stack.pop_back();
            if (cur->is_leaf()) {
                int l = res.level_of(cur->leaf);
                if (level == -1) level = l;
                if (l != level) throw domain_error("expression mixes simplicial levels");
            } else {
                stack.push_back(cur->left.get());
                stack.push_back(cur->right.get());
            }
        }
    }
    if (level < 0) throw domain_error("cannot infer the level of 0");
    return level;
}

RelationTable load_relations() {
    RelationTable table;
    const char* path = std::getenv("HF_RELATIONS");
    if (!path) {
        table.entries.push_back({"eta", 2});  // default: η-composites have order 2
        return table;
    }
    std::ifstream in(path);
    if (!in) throw domain_error(std::string("cannot open HF_RELATIONS file ") + path);
    json j;
    in >> j;
    for (const auto& e : j)
        table.entries.push_back({e.at("class").get<std::string>(), e.at("order").get<int>()});
    return table;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"whalg: simplicial Whitehead-bracket calculus"};
    app.set_version_flag("--version", kEngineVersion);
    app.require_subcommand(1);
    bool json_out = false;
    int jobs = 1;
    app.add_flag("--json", json_out, "emit JSON")->configurable(false);
    app.add_option("--jobs", jobs, "parallel verification jobs");

    std::string opt_i, opt_j;
    auto* c_sgn = app.add_subcommand("sgn", "permutation sign of two index sets");
    c_sgn->add_option("--i", opt_i, "first set, comma-separated");
    c_sgn->add_option("--j", opt_j, "second set, comma-separated")->required();

    std::string opt_word, opt_off;
    bool opt_homology = false, opt_check_perm = false;
    auto* c_perm = app.add_subcommand("perm", "face-map polyhedron of a face word");
    c_perm->add_option("--word", opt_word, "entries i_k,...,i_n (comma-separated)")->required();
    int opt_word_k = 1;
    c_perm->add_option("--first-target", opt_word_k, "target position k of the word (default 1)");
    c_perm->add_flag("--homology", opt_homology, "reduced homology of the (d-1)-skeleton");
    c_perm->add_flag("--check-permutohedron", opt_check_perm, "face-lattice comparison");
    c_perm->add_option("--off", opt_off, "write an OFF file (dim 2 or 3)");

    int opt_k = 0, opt_n = 0;
    auto* c_dcl = app.add_subcommand("d-classes", "equivalence classes of D(k,n)");
    c_dcl->add_option("--k", opt_k)->required();
    c_dcl->add_option("--n", opt_n)->required();

    int opt_gn = 0;
    auto* c_gamma = app.add_subcommand("gamma", "the cycle gamma_n");
    c_gamma->add_option("--n", opt_gn)->required();

    std::string opt_res, opt_chain;
    int opt_vgamma = 0;
    auto* c_verify = app.add_subcommand("verify-cycle", "verify that a chain is a cycle");
    c_verify->add_option("--gamma", opt_vgamma, "shorthand for --chain gamma:N");
    c_verify->add_option("--resolution", opt_res, "cpn:N or susp:s2[,s3,...]");
    c_verify->add_option("--chain", opt_chain, "gamma:N / w2:p,q / w3:p,q");

    std::string opt_expr, opt_fres;
    int opt_mod = 0;
    auto* c_faces = app.add_subcommand("faces", "all faces of an expression");
    c_faces->add_option("--expr", opt_expr, "expression text")->required();
    c_faces->add_option("--resolution", opt_fres, "cpn:N or susp:s2[,s3,...]")->required();
    c_faces->add_option("--mod", opt_mod,
                        "reduce faces mod p after the composition rewrite (uses HF_RELATIONS)");

    int opt_p = 2, opt_q = 2;
    bool opt_diag = false;
    auto* c_w2 = app.add_subcommand("w2", "the 2-level suspension cycle");
    c_w2->add_option("--p", opt_p)->required();
    c_w2->add_option("--q", opt_q);
    c_w2->add_flag("--diag", opt_diag, "same class in both slots");
    auto* c_w3 = app.add_subcommand("w3", "the six-term 3-level suspension cycle");
    c_w3->add_option("--p", opt_p)->required();
    c_w3->add_option("--q", opt_q)->required();

    std::string opt_degrees;
    int opt_weight = 2;
    auto* c_hilton = app.add_subcommand("hilton", "Hall-style basic products");
    c_hilton->add_option("--degrees", opt_degrees, "letter pi-degrees, comma-separated")
        ->required();
    c_hilton->add_option("--max-weight", opt_weight);

    std::string opt_bits;
    auto* c_cube = app.add_subcommand("cube-stats", "vertex statistics of a cube vertex");
    c_cube->add_option("--j", opt_bits, "bit string, e.g. 11101010")->required();

    int opt_wn = 0;
    auto* c_wedge = app.add_subcommand("wedge-levels", "levels of the truncated wedge object");
    c_wedge->add_option("--n", opt_wn)->required();

    int opt_sp = 2, opt_sk = 2, opt_maxdeg = 20;
    auto* c_em = app.add_subcommand("em-basis", "admissible generators through a degree");
    c_em->add_option("--p", opt_sp)->required();
    c_em->add_option("--k", opt_sk)->required();
    c_em->add_option("--maxdeg", opt_maxdeg);
    bool opt_e0 = false;
    c_em->add_flag("--e0", opt_e0, "the E0 subalgebra generators instead");

    auto* c_poin = app.add_subcommand("poincare", "Poincare series of the generator algebra");
    c_poin->add_option("--p", opt_sp)->required();
    c_poin->add_option("--k", opt_sk)->required();
    c_poin->add_option("--maxdeg", opt_maxdeg);

    std::string opt_table, opt_pexpr, opt_pres;
    auto* c_push = app.add_subcommand("push", "pushforward along a generator table");
    c_push->add_option("--table", opt_table,
                       "semicolon-separated entries gen=expr, e.g. \"i4=[i3, s0 i2]\"")
        ->required();
    c_push->add_option("--expr", opt_pexpr, "expression to push")->required();
    c_push->add_option("--resolution", opt_pres, "target resolution (for level checks)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    try {
        if (*c_sgn) {
            int s = sgn(parse_index_set(opt_i), parse_index_set(opt_j));
            if (json_out)
                std::cout << json{{"sgn", s}}.dump() << "\n";
            else
                std::cout << (s > 0 ? "1" : "-1") << "\n";
            return 0;
        }
        if (*c_perm) {
            FaceWord w{parse_int_list(opt_word), opt_word_k};
            CellComplex cx = build_face_polyhedron(w);
            json j;
            j["dim"] = cx.dim;
            j["f_vector"] = cx.f_vector();
            j["vertices"] = vertex_count(cx);
            j["facet_vertex_counts"] = facet_vertex_counts(cx);
            bool ok = true;
            if (opt_homology) {
                json h = json::array();
                for (int deg = 0; const AbelianGroup& g : boundary_homology(cx, cx.dim - 1)) {
                    h.push_back({{"degree", deg++}, {"group", g.to_string()}});
                }
                j["boundary_homology"] = h;
            }
            if (opt_check_perm) {
                bool p = is_permutohedron(cx, cx.dim);
                j["is_permutohedron"] = p;
                ok = ok && p;
            }
            if (!opt_off.empty()) {
                std::ofstream out(opt_off);
                out << to_off(cx);
                j["off"] = opt_off;
            }
            if (json_out) {
                j["cells"] = json::parse(to_json(cx))["cells"];
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "dim " << cx.dim << ", f-vector (";
                auto f = cx.f_vector();
                for (size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << f[i];
                std::cout << ")\n";
                if (j.contains("boundary_homology"))
                    for (const auto& h : j["boundary_homology"])
                        std::cout << "H~" << h["degree"] << " = "
                                  << h["group"].get<std::string>() << "\n";
                if (opt_check_perm)
                    std::cout << "permutohedron: " << (ok ? "yes" : "NO") << "\n";
            }
            return ok ? 0 : 1;
        }
        if (*c_dcl) {
            auto classes = enumerate_classes(opt_k, opt_n);
            if (json_out) {
                json j;
                j["count"] = classes.size();
                j["raw_count"] = raw_word_count(opt_k, opt_n);
                json words = json::array();
                for (const auto& w : classes) words.push_back(w.entries);
                j["canonical_words"] = words;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << classes.size() << " classes (of " << raw_word_count(opt_k, opt_n)
                          << " raw words)\n";
                for (const auto& w : classes) {
                    for (size_t i = 0; i < w.entries.size(); ++i)
                        std::cout << (i ? "," : "(") << w.entries[i];
                    std::cout << ")\n";
                }
            }
            return 0;
        }
        if (*c_gamma) {
            ChainElement g = gamma(opt_gn);
            if (json_out) {
                json j;
                j["n"] = opt_gn;
                j["level"] = g.level;
                j["pi_degree"] = g.pi_degree;
                j["terms"] = g.expr.num_terms();
                j["expr"] = print_expression(g.expr);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << print_expression(g.expr) << "\n";
            }
            return 0;
        }
        if (*c_verify) {
            std::string chain_spec = opt_chain;
            if (opt_vgamma > 0) chain_spec = "gamma:" + std::to_string(opt_vgamma);
            if (chain_spec.empty())
                throw domain_error("verify-cycle needs --gamma N or --chain SPEC");
            auto [chain, res] = parse_chain(chain_spec, opt_res);
            CycleCertificate cc = is_cycle(chain, res, default_sign_dictionary(), jobs);
            Certificate cert;
            cert.command = "verify-cycle";
            cert.inputs = {{"chain", chain_spec},
                           {"resolution", res.name},
                           {"chain_expr", print_expression(chain.expr)}};
            for (const auto& fr : cc.residues)
                cert.checks.push_back({"d" + std::to_string(fr.index),
                                       print_expression(fr.residue), fr.zero_in_model});
            cert.finalize();
            cert.elapsed_ms = elapsed();
            std::cout << (json_out ? cert.to_json() + "\n" : cert.to_text());
            return cc.verified ? 0 : 1;
        }
        if (*c_faces) {
            Resolution res = parse_resolution(opt_fres);
            Expression e = parse_expression(opt_expr);
            int level = infer_level(e, res);
            ChainElement c{level, e.terms.empty() ? 0 : e.terms[0].pi_degree(), e};
            auto fs = faces(c, res);
            RelationTable table = load_relations();
            Certificate cert;
            cert.command = "faces";
            cert.inputs = {{"expr", print_expression(e)},
                           {"resolution", res.name},
                           {"level", std::to_string(level)}};
            if (opt_mod > 0) cert.inputs.push_back({"mod", std::to_string(opt_mod)});
            bool all_zero = true;
            for (const auto& f : fs) {
                Expression shown = f.expr;
                if (opt_mod > 0)
                    shown = reduce_mod_p(htpymodt_rewrite(rewrite_whitehead_square(shown)),
                                         opt_mod, table);
                bool zero = rationally_zero(f.expr, default_sign_dictionary());
                all_zero = all_zero && zero;
                cert.checks.push_back(
                    {"d" + std::to_string(&f - fs.data()), print_expression(shown), zero});
            }
            cert.finalize();
            cert.elapsed_ms = elapsed();
            std::cout << (json_out ? cert.to_json() + "\n" : cert.to_text());
            return all_zero ? 0 : 1;
        }
        if (*c_w2) {
            Resolution res;
            ChainElement c = opt_diag ? w2_diagonal(opt_p, &res) : w2(opt_p, opt_q, &res);
            if (json_out) {
                json j;
                j["expr"] = print_expression(c.expr);
                j["level"] = c.level;
                j["pi_degree"] = c.pi_degree;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << print_expression(c.expr) << "\n";
            }
            return 0;
        }
        if (*c_w3) {
            Resolution res;
            ChainElement c = w3(opt_p, opt_q, &res);
            if (json_out) {
                json j;
                j["expr"] = print_expression(c.expr);
                j["level"] = c.level;
                j["pi_degree"] = c.pi_degree;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << print_expression(c.expr) << "\n";
            }
            return 0;
        }
        if (*c_hilton) {
            auto degs = parse_int_list(opt_degrees);
            std::vector<Generator> letters;
            for (size_t i = 0; i < degs.size(); ++i) {
                Generator g;
                g.kind = i % 2 == 0 ? Generator::Kind::AuxA : Generator::Kind::AuxB;
                g.param = degs[i];
                letters.push_back(g);
            }
            auto basis = hilton_basis(letters, opt_weight);
            if (json_out) {
                json arr = json::array();
                for (const auto& b : basis)
                    arr.push_back({{"product", print_tree(*b.tree)},
                                   {"weight", b.weight},
                                   {"pi_degree", b.pi_degree}});
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& b : basis)
                    std::cout << print_tree(*b.tree) << "  (weight " << b.weight << ", pi "
                              << b.pi_degree << ")\n";
            }
            return 0;
        }
        if (*c_cube) {
            CubeVertex v;
            for (char ch : opt_bits) {
                if (ch != '0' && ch != '1') throw domain_error("bits must be 0/1");
                v.bits.push_back(ch - '0');
            }
            VertexStats st = vertex_stats(v);
            std::string rem;
            for (int b : st.remainder) rem += ('0' + b);
            if (json_out) {
                json j{{"ell", st.ell}, {"lambda", st.lambda}, {"remainder", rem}};
                if (!st.remainder_defined) j["remainder_defined"] = false;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "ell=" << st.ell << " lambda=" << st.lambda << " remainder=" << rem
                          << (st.remainder_defined ? "" : " (undefined: all ones)") << "\n";
            }
            return 0;
        }
        if (*c_wedge) {
            WedgeLevels wl = wedge_levels(opt_wn);
            if (json_out) {
                json j;
                j["n"] = wl.n;
                json lv = json::array();
                for (size_t k = 0; k < wl.levels.size(); ++k) {
                    json entry;
                    entry["level"] = k;
                    json js = json::array();
                    for (const auto& v : wl.levels[k]) {
                        std::string bits;
                        for (int b : v.bits) bits += ('0' + b);
                        js.push_back(bits);
                    }
                    entry["summands"] = js;
                    if (static_cast<int>(k) == wl.c_marker_level) entry["c_marker"] = true;
                    lv.push_back(entry);
                }
                j["levels"] = lv;
                std::cout << j.dump(2) << "\n";
            } else {
                for (size_t k = 0; k < wl.levels.size(); ++k) {
                    std::cout << "level " << k << ":";
                    if (static_cast<int>(k) == wl.c_marker_level) std::cout << " C" << wl.n - 1;
                    for (const auto& v : wl.levels[k]) {
                        std::cout << " ";
                        for (int b : v.bits) std::cout << b;
                    }
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (*c_em) {
            auto gens = opt_e0 ? e0_generators(opt_sp, opt_sk, opt_maxdeg)
                               : em_generators(opt_sp, opt_sk, opt_maxdeg);
            if (json_out) {
                json arr = json::array();
                for (const auto& g : gens)
                    arr.push_back({{"label", g.label}, {"degree", g.degree}});
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& g : gens)
                    std::cout << g.label << "  (degree " << g.degree << ")\n";
            }
            return 0;
        }
        if (*c_poin) {
            auto gens = em_generators(opt_sp, opt_sk, opt_maxdeg);
            auto series = poincare_series(gens, opt_maxdeg, opt_sp);
            if (json_out) {
                std::cout << json(series).dump() << "\n";
            } else {
                for (size_t i = 0; i < series.size(); ++i)
                    std::cout << (i ? "," : "") << series[i];
                std::cout << "\n";
            }
            return 0;
        }
        if (*c_push) {
            Resolution res =
                opt_pres.empty() ? cpn_resolution(3) : parse_resolution(opt_pres);
            std::map<GenKey, ChainElement> table;
            std::stringstream ss(opt_table);
            std::string entry;
            while (std::getline(ss, entry, ';')) {
                auto eq = entry.find('=');
                if (eq == std::string::npos) throw domain_error("table entry needs gen=expr");
                Expression g = parse_expression(entry.substr(0, eq));
                if (g.num_terms() != 1 || !g.terms[0].tree->is_leaf())
                    throw domain_error("table key must be a single generator");
                Expression img = parse_expression(entry.substr(eq + 1));
                const Generator& gen = g.terms[0].tree->leaf;
                int lvl = infer_level(img, res);
                table[GenKey::of(gen)] =
                    ChainElement{lvl, img.terms.empty() ? 0 : img.terms[0].pi_degree(), img};
            }
            Expression e = parse_expression(opt_pexpr);
            ChainElement c{0, e.terms.empty() ? 0 : e.terms[0].pi_degree(), e};
            ChainElement image = pushforward(table, c);
            if (json_out) {
                json j{{"expr", print_expression(image.expr)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << print_expression(image.expr) << "\n";
            }
            return 0;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
