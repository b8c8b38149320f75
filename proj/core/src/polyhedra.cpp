#include "whalg/polyhedra.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace whalg {

namespace {

using Blocks = std::vector<std::vector<int>>;

// all ordered set partitions of `ground`, first block chosen as any
// nonempty subset, then recurse
void all_ordered_partitions(const std::vector<int>& ground, std::vector<Blocks>& out) {
    size_t n = ground.size();
    if (n == 0) return;
    // enumerate by assigning each element a block index and requiring the
    // set of used indices to be an initial segment, then ordering matters:
    // instead, recursively pick the first block as any nonempty subset.
    std::vector<std::pair<Blocks, std::vector<int>>> stack;
    stack.push_back({{}, ground});
    while (!stack.empty()) {
        auto [blocks, rest] = stack.back();
        stack.pop_back();
        if (rest.empty()) {
            out.push_back(blocks);
            continue;
        }
        size_t m = rest.size();
        for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
            std::vector<int> block, remaining;
            for (size_t i = 0; i < m; ++i)
                ((mask >> i) & 1 ? block : remaining).push_back(rest[i]);
            Blocks nb = blocks;
            nb.push_back(block);
            stack.push_back({std::move(nb), std::move(remaining)});
        }
    }
}

int partition_dim(const Blocks& b) {
    int d = 0;
    for (const auto& blk : b) d += static_cast<int>(blk.size()) - 1;
    return d;
}

// vertices (refining total orders) of a cell, as removal orders:
// the LAST block of `blocks` (word order) is removed first.
void cell_vertex_orders(const Blocks& blocks, std::vector<std::vector<int>>& out) {
    std::vector<std::vector<int>> perms{{}};
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        std::vector<int> blk = *it;
        std::sort(blk.begin(), blk.end());
        std::vector<std::vector<int>> next;
        do {
            for (const auto& pre : perms) {
                std::vector<int> ext = pre;
                ext.insert(ext.end(), blk.begin(), blk.end());
                next.push_back(std::move(ext));
            }
        } while (std::next_permutation(blk.begin(), blk.end()));
        perms = std::move(next);
    }
    out = std::move(perms);
}

// ---- exact linear algebra over Q (tiny sizes) ----

using Vec = std::vector<Rat>;

int rank_of(std::vector<Vec> rows) {
    size_t nr = rows.size();
    if (nr == 0) return 0;
    size_t nc = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < nc && rank < nr; ++col) {
        size_t piv = rank;
        while (piv < nr && rows[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(rows[piv], rows[rank]);
        for (size_t i = 0; i < nr; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[rank][col];
            for (size_t j = col; j < nc; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

Rat det_of(std::vector<Vec> m) {
    size_t n = m.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

// solve B^T x = v for x where B's rows span the space and v lies in it
Vec coords_in_basis(const std::vector<Vec>& basis, const Vec& v) {
    size_t k = basis.size(), n = v.size();
    // least-squares-free exact solve via augmented elimination on n x (k+1)
    std::vector<Vec> m(n, Vec(k + 1, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
        m[i][k] = v[i];
    }
    size_t rank = 0;
    std::vector<int> pivots(k, -1);
    for (size_t col = 0; col < k && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[rank]);
        Rat d = m[rank][col];
        for (auto& x : m[rank]) x /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = 0; j <= k; ++j) m[i][j] -= f * m[rank][j];
        }
        pivots[col] = static_cast<int>(rank);
        ++rank;
    }
    Vec x(k, 0);
    for (size_t col = 0; col < k; ++col)
        if (pivots[col] >= 0) x[col] = m[pivots[col]][k];
    return x;
}

struct CellGeometry {
    Vec ref;                 // reference vertex coordinates
    std::vector<Vec> basis;  // oriented affine basis of the cell
};

Vec to_vec(const std::vector<int>& p) {
    Vec v;
    v.reserve(p.size());
    for (int x : p) v.push_back(x);
    return v;
}

}  // namespace

std::vector<int> word_removal_order(const FaceWord& w) {
    validate_face_word(w);
    std::vector<int> present(w.n() + 1);
    for (int i = 0; i <= w.n(); ++i) present[i] = i;
    std::vector<int> removals;
    for (int t = w.length() - 1; t >= 0; --t) {
        int idx = w.entries[t];
        removals.push_back(present[idx]);
        present.erase(present.begin() + idx);
    }
    return removals;
}

FaceWord removals_to_word(const std::vector<int>& removals, int k, int n) {
    std::vector<int> present;
    for (int i = 0; i <= n; ++i) present.push_back(i);
    std::vector<int> entries;
    for (int v : removals) {
        auto it = std::find(present.begin(), present.end(), v);
        if (it == present.end()) throw domain_error("removals_to_word: repeated value");
        entries.push_back(static_cast<int>(it - present.begin()));
        present.erase(it);
    }
    std::reverse(entries.begin(), entries.end());
    FaceWord w{entries, k};
    validate_face_word(w);
    return w;
}

CellComplex build_face_polyhedron(const FaceWord& w) {
    validate_face_word(w);
    CellComplex cx;
    cx.word = normalize_face_word(w);
    cx.dim = w.length() - 1;
    std::vector<int> removal = word_removal_order(w);
    cx.skipped = removal;
    std::sort(cx.skipped.begin(), cx.skipped.end());
    int n = w.n(), k = w.k;

    std::vector<Blocks> parts;
    all_ordered_partitions(cx.skipped, parts);
    std::sort(parts.begin(), parts.end(), [](const Blocks& a, const Blocks& b) {
        int da = partition_dim(a), db = partition_dim(b);
        if (da != db) return da < db;
        return a < b;
    });

    std::map<Blocks, int> ids;
    for (const Blocks& b : parts) {
        Cell c;
        c.id = static_cast<int>(cx.cells.size());
        c.dim = partition_dim(b);
        c.blocks = b;
        ids[b] = c.id;
        cx.cells.push_back(std::move(c));
    }

    // vertex ids, coordinates, labels
    std::map<std::vector<int>, int> vertex_of_order;  // removal order -> vertex cell id
    int d = cx.dim;
    for (Cell& c : cx.cells) {
        std::vector<std::vector<int>> orders;
        cell_vertex_orders(c.blocks, orders);
        if (c.dim == 0) {
            vertex_of_order[orders[0]] = c.id;
        }
        // label: representative word with bars between blocks
        {
            std::vector<int> removal_rep;
            for (auto it = c.blocks.rbegin(); it != c.blocks.rend(); ++it)
                removal_rep.insert(removal_rep.end(), it->begin(), it->end());
            FaceWord rep = removals_to_word(removal_rep, k, n);
            std::ostringstream os;
            os << "(";
            size_t pos = 0;
            for (size_t bi = 0; bi < c.blocks.size(); ++bi) {
                if (bi) os << "|";
                for (size_t j = 0; j < c.blocks[bi].size(); ++j) {
                    if (j) os << ",";
                    os << rep.entries[pos++];
                }
            }
            os << ")";
            c.label = os.str();
        }
    }
    for (Cell& c : cx.cells) {
        std::vector<std::vector<int>> orders;
        cell_vertex_orders(c.blocks, orders);
        for (const auto& o : orders) c.vertex_ids.push_back(vertex_of_order.at(o));
        std::sort(c.vertex_ids.begin(), c.vertex_ids.end());
    }
    // coordinates: removal position u (1-based) gets coordinate d+2-u
    {
        std::vector<std::pair<int, std::vector<int>>> ordered;
        for (const auto& [order, vid] : vertex_of_order) ordered.push_back({vid, order});
        std::sort(ordered.begin(), ordered.end());
        cx.vertex_coords.resize(ordered.size());
        std::map<int, int> pos_of;  // skipped value -> coordinate slot
        for (size_t i = 0; i < cx.skipped.size(); ++i) pos_of[cx.skipped[i]] = static_cast<int>(i);
        for (const auto& [vid, order] : ordered) {
            std::vector<int> p(cx.skipped.size(), 0);
            for (size_t u = 0; u < order.size(); ++u)
                p[pos_of[order[u]]] = d + 1 - static_cast<int>(u);
            cx.vertex_coords[vid] = p;
        }
    }

    // geometry per cell: reference vertex and oriented basis
    std::vector<CellGeometry> geom(cx.cells.size());
    for (const Cell& c : cx.cells) {
        std::vector<Vec> pts;
        for (int vid : c.vertex_ids) pts.push_back(to_vec(cx.vertex_coords[vid]));
        std::sort(pts.begin(), pts.end());
        CellGeometry g;
        g.ref = pts[0];
        for (size_t i = 1; i < pts.size() && static_cast<int>(g.basis.size()) < c.dim; ++i) {
            Vec cand(pts[i].size());
            for (size_t j = 0; j < cand.size(); ++j) cand[j] = pts[i][j] - g.ref[j];
            std::vector<Vec> test = g.basis;
            test.push_back(cand);
            if (rank_of(test) == static_cast<int>(test.size())) g.basis.push_back(std::move(cand));
        }
        if (static_cast<int>(g.basis.size()) != c.dim)
            throw structural_error("cell geometry rank mismatch");
        geom[c.id] = std::move(g);
    }

    // boundary with incidence signs
    for (Cell& c : cx.cells) {
        if (c.dim == 0) continue;
        std::set<Blocks> facets;
        for (size_t bi = 0; bi < c.blocks.size(); ++bi) {
            const auto& blk = c.blocks[bi];
            size_t m = blk.size();
            if (m < 2) continue;
            for (size_t mask = 1; mask + 1 < (size_t(1) << m); ++mask) {
                std::vector<int> left, right;
                for (size_t i = 0; i < m; ++i)
                    ((mask >> i) & 1 ? left : right).push_back(blk[i]);
                Blocks nb;
                for (size_t t = 0; t < c.blocks.size(); ++t) {
                    if (t == bi) {
                        nb.push_back(left);
                        nb.push_back(right);
                    } else {
                        nb.push_back(c.blocks[t]);
                    }
                }
                facets.insert(nb);
            }
        }
        for (const Blocks& fb : facets) {
            int fid = ids.at(fb);
            const Cell& f = cx.cells[fid];
            const CellGeometry& gc = geom[c.id];
            const CellGeometry& gf = geom[fid];
            // inward vector: from the facet's reference toward a cell vertex
            // not on the facet
            std::set<int> fverts(f.vertex_ids.begin(), f.vertex_ids.end());
            Vec inward;
            for (int vid : c.vertex_ids)
                if (!fverts.count(vid)) {
                    Vec p = to_vec(cx.vertex_coords[vid]);
                    inward.resize(p.size());
                    for (size_t j = 0; j < p.size(); ++j) inward[j] = p[j] - gf.ref[j];
                    break;
                }
            // express [outward, facet basis] in the cell's basis
            std::vector<Vec> rows;
            Vec shift(gf.ref.size());
            for (size_t j = 0; j < shift.size(); ++j) shift[j] = gf.ref[j] - gc.ref[j];
            Vec outward(inward.size());
            for (size_t j = 0; j < inward.size(); ++j) outward[j] = -inward[j];
            rows.push_back(coords_in_basis(gc.basis, outward));
            for (const Vec& b : gf.basis) rows.push_back(coords_in_basis(gc.basis, b));
            (void)shift;
            Rat dt = det_of(rows);
            if (dt == 0) throw structural_error("degenerate incidence determinant");
            c.boundary.push_back({fid, dt > 0 ? 1 : -1});
        }
        std::sort(c.boundary.begin(), c.boundary.end());
    }

    // ∂∂ = 0 over the integers
    std::map<std::pair<int, int>, long long> dd;
    for (const Cell& c : cx.cells)
        for (auto [fid, s1] : c.boundary)
            for (auto [gid, s2] : cx.cells[fid].boundary) dd[{c.id, gid}] += 1LL * s1 * s2;
    for (const auto& [key, v] : dd)
        if (v != 0) throw structural_error("boundary of boundary is nonzero");

    return cx;
}

std::vector<int> CellComplex::f_vector() const {
    std::vector<int> f(dim + 1, 0);
    for (const Cell& c : cells) ++f[c.dim];
    return f;
}

int CellComplex::euler_characteristic(int max_dim) const {
    int chi = 0;
    for (const Cell& c : cells)
        if (c.dim <= max_dim) chi += c.dim % 2 == 0 ? 1 : -1;
    return chi;
}

int vertex_count(const CellComplex& c) { return c.f_vector()[0]; }

std::vector<AbelianGroup> boundary_homology(const CellComplex& cx, int k) {
    if (k < 0 || k >= cx.dim + 1) throw domain_error("boundary_homology: bad skeleton bound");
    // per-dimension cell index maps (skeleton only)
    std::vector<std::vector<int>> by_dim(k + 2);
    for (const Cell& c : cx.cells)
        if (c.dim <= k) by_dim[c.dim].push_back(c.id);
    std::vector<std::map<int, int>> index(k + 2);
    for (int ddim = 0; ddim <= k; ++ddim)
        for (size_t i = 0; i < by_dim[ddim].size(); ++i) index[ddim][by_dim[ddim][i]] = static_cast<int>(i);

    auto boundary_matrix = [&](int ddim) -> IntMatrix {
        // rows: (ddim-1)-cells, cols: ddim-cells
        if (ddim <= 0 || ddim > k) return {};
        IntMatrix m(by_dim[ddim - 1].size(), std::vector<BigInt>(by_dim[ddim].size(), 0));
        for (size_t col = 0; col < by_dim[ddim].size(); ++col)
            for (auto [fid, s] : cx.cells[by_dim[ddim][col]].boundary)
                m[index[ddim - 1].at(fid)][col] = s;
        return m;
    };

    // verify ∂∂ = 0 on the skeleton matrices
    for (int ddim = 2; ddim <= k; ++ddim) {
        IntMatrix a = boundary_matrix(ddim - 1), b = boundary_matrix(ddim);
        if (!a.empty() && !b.empty()) {
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; j < b[0].size(); ++j) {
                    BigInt s = 0;
                    for (size_t t = 0; t < b.size(); ++t) s += a[i][t] * b[t][j];
                    if (s != 0) throw structural_error("skeleton is not a chain complex");
                }
        }
    }

    std::vector<AbelianGroup> out;
    for (int ddim = 0; ddim <= k; ++ddim) {
        IntMatrix d_in;
        if (ddim == 0) {
            // augmentation: 1 x #vertices of ones (reduced homology)
            d_in.assign(1, std::vector<BigInt>(by_dim[0].size(), 1));
        } else {
            d_in = boundary_matrix(ddim);
        }
        IntMatrix d_out = (ddim + 1 <= k) ? boundary_matrix(ddim + 1) : IntMatrix{};
        if (d_out.empty())
            d_out.assign(by_dim[ddim].size(), std::vector<BigInt>(0));
        out.push_back(homology_group(d_in, static_cast<int>(by_dim[ddim].size()), d_out));
    }
    return out;
}

namespace {

// face family of a complex: vertex sets of all cells (including the top)
std::vector<std::vector<int>> face_family(const CellComplex& c) {
    std::vector<std::vector<int>> fam;
    for (const Cell& cell : c.cells) fam.push_back(cell.vertex_ids);
    std::sort(fam.begin(), fam.end());
    return fam;
}

// face family of the standard d-permutohedron built from geometry: vertices
// are the permutations of (1..d+1); faces are argmax sets of linear
// functionals, one per ordered set partition of the coordinate positions.
struct StandardPermutohedron {
    std::vector<std::vector<int>> verts;          // permutation points
    std::vector<std::vector<int>> faces;          // vertex-id sets, sorted
    std::vector<std::vector<int>> facets;         // maximal proper faces
};

StandardPermutohedron standard_permutohedron(int d) {
    StandardPermutohedron sp;
    std::vector<int> perm(d + 1);
    for (int i = 0; i <= d; ++i) perm[i] = i + 1;
    do {
        sp.verts.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<int> positions(d + 1);
    for (int i = 0; i <= d; ++i) positions[i] = i;
    std::vector<Blocks> parts;
    all_ordered_partitions(positions, parts);
    std::set<std::vector<int>> seen;
    for (const Blocks& p : parts) {
        // functional: block t gets weight (#blocks - t)
        std::vector<int> wgt(d + 1, 0);
        for (size_t t = 0; t < p.size(); ++t)
            for (int pos : p[t]) wgt[pos] = static_cast<int>(p.size() - t);
        long long best = -1;
        std::vector<int> arg;
        for (size_t v = 0; v < sp.verts.size(); ++v) {
            long long val = 0;
            for (int i = 0; i <= d; ++i) val += 1LL * wgt[i] * sp.verts[v][i];
            if (val > best) {
                best = val;
                arg.clear();
            }
            if (val == best) arg.push_back(static_cast<int>(v));
        }
        std::sort(arg.begin(), arg.end());
        seen.insert(arg);
    }
    sp.faces.assign(seen.begin(), seen.end());
    size_t total = sp.verts.size();
    size_t facet_size = 0;
    for (const auto& f : sp.faces)
        if (f.size() < total) facet_size = std::max(facet_size, f.size());
    // facets = maximal proper faces (not contained in any larger proper face)
    for (const auto& f : sp.faces) {
        if (f.size() == total) continue;
        bool maximal = true;
        for (const auto& g : sp.faces) {
            if (g.size() == total || g.size() <= f.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) sp.facets.push_back(f);
    }
    return sp;
}

// Exact isomorphism test between two face families given as vertex-set
// systems: search facet bijections compatible with pairwise intersection
// sizes, reconstruct the vertex map from facet incidence (faces of a simple
// polytope are intersections of facets), verify the full families match.
bool families_isomorphic(const std::vector<std::vector<int>>& famA, int nA,
                         const std::vector<std::vector<int>>& famB, int nB) {
    if (nA != nB) return false;
    if (famA.size() != famB.size()) return false;
    // multiset of sizes must agree
    {
        std::multiset<size_t> sa, sb;
        for (const auto& f : famA) sa.insert(f.size());
        for (const auto& f : famB) sb.insert(f.size());
        if (sa != sb) return false;
    }
    auto facets_of = [](const std::vector<std::vector<int>>& fam, int n) {
        std::vector<std::vector<int>> fs;
        for (const auto& f : fam) {
            if (static_cast<int>(f.size()) == n) continue;
            bool maximal = true;
            for (const auto& g : fam)
                if (static_cast<int>(g.size()) != n && g.size() > f.size() &&
                    std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                    maximal = false;
                    break;
                }
            if (maximal) fs.push_back(f);
        }
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        return fs;
    };
    auto FA = facets_of(famA, nA), FB = facets_of(famB, nB);
    if (FA.size() != FB.size()) return false;
    size_t nf = FA.size();
    if (nf == 0) return famA == famB;

    auto isect = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out.size();
    };
    std::vector<std::vector<size_t>> IA(nf, std::vector<size_t>(nf)), IB = IA;
    for (size_t i = 0; i < nf; ++i)
        for (size_t j = 0; j < nf; ++j) {
            IA[i][j] = isect(FA[i], FA[j]);
            IB[i][j] = isect(FB[i], FB[j]);
        }

    // vertex -> set of incident facets
    auto vertex_keys = [&](const std::vector<std::vector<int>>& F, int n) {
        std::vector<std::vector<int>> keys(n);
        for (size_t i = 0; i < F.size(); ++i)
            for (int v : F[i]) keys[v].push_back(static_cast<int>(i));
        return keys;
    };
    auto keysA = vertex_keys(FA, nA);

    std::vector<int> mapping(nf, -1);
    std::vector<bool> used(nf, false);
    std::set<std::vector<int>> famBset(famB.begin(), famB.end());

    auto verify = [&]() {
        // vertex map: v -> the unique vertex of B incident to exactly the
        // mapped facets of v
        std::vector<std::vector<int>> keyToB;
        std::map<std::vector<int>, int> bByKey;
        auto keysB = vertex_keys(FB, nB);
        for (int v = 0; v < nB; ++v) bByKey[keysB[v]] = v;
        std::vector<int> vmap(nA, -1);
        for (int v = 0; v < nA; ++v) {
            std::vector<int> mapped;
            for (int f : keysA[v]) mapped.push_back(mapping[f]);
            std::sort(mapped.begin(), mapped.end());
            auto it = bByKey.find(mapped);
            if (it == bByKey.end()) return false;
            vmap[v] = it->second;
        }
        // bijectivity
        std::set<int> img(vmap.begin(), vmap.end());
        if (static_cast<int>(img.size()) != nA) return false;
        // full family check
        for (const auto& f : famA) {
            std::vector<int> g;
            for (int v : f) g.push_back(vmap[v]);
            std::sort(g.begin(), g.end());
            if (!famBset.count(g)) return false;
        }
        return true;
    };

    // backtracking on facet images, most-constrained-first by row profile
    std::vector<size_t> order(nf);
    for (size_t i = 0; i < nf; ++i) order[i] = i;
    auto rec = [&](auto&& self, size_t t) -> bool {
        if (t == nf) return verify();
        size_t a = order[t];
        for (size_t b = 0; b < nf; ++b) {
            if (used[b]) continue;
            if (FA[a].size() != FB[b].size()) continue;
            bool ok = true;
            for (size_t s = 0; s < t && ok; ++s)
                if (IA[a][order[s]] != IB[b][mapping[order[s]]]) ok = false;
            if (!ok) continue;
            mapping[a] = static_cast<int>(b);
            used[b] = true;
            if (self(self, t + 1)) return true;
            used[b] = false;
            mapping[a] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

bool is_permutohedron(const CellComplex& c, int d) {
    if (c.dim != d) return false;
    if (d == 0) return c.cells.size() == 1;
    StandardPermutohedron sp = standard_permutohedron(d);
    std::vector<std::vector<int>> famB = sp.faces;
    std::sort(famB.begin(), famB.end());
    return families_isomorphic(face_family(c), vertex_count(c), famB,
                               static_cast<int>(sp.verts.size()));
}

std::vector<int> facet_vertex_counts(const CellComplex& c) {
    std::vector<int> out;
    for (const Cell& cell : c.cells)
        if (cell.dim == c.dim - 1) out.push_back(static_cast<int>(cell.vertex_ids.size()));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_simple_polytope(const CellComplex& c) {
    std::map<int, int> facet_count;
    for (const Cell& cell : c.cells)
        if (cell.dim == c.dim - 1)
            for (int v : cell.vertex_ids) ++facet_count[v];
    for (const Cell& cell : c.cells)
        if (cell.dim == 0 && facet_count[cell.id] != c.dim) return false;
    return true;
}

std::string to_json(const CellComplex& c) {
    std::ostringstream os;
    os << "{\"dim\":" << c.dim << ",\"cells\":[";
    for (size_t i = 0; i < c.cells.size(); ++i) {
        const Cell& cell = c.cells[i];
        if (i) os << ",";
        os << "{\"id\":" << cell.id << ",\"dim\":" << cell.dim << ",\"boundary\":[";
        for (size_t j = 0; j < cell.boundary.size(); ++j) {
            if (j) os << ",";
            os << "[" << cell.boundary[j].first << "," << cell.boundary[j].second << "]";
        }
        os << "],\"label\":\"" << cell.label << "\"}";
    }
    os << "]}";
    return os.str();
}

std::string to_off(const CellComplex& c) {
    if (c.dim != 2 && c.dim != 3) throw domain_error("OFF export supports dim 2 and 3 only");
    std::vector<std::array<double, 3>> pts;
    for (const auto& p : c.vertex_coords) {
        std::array<double, 3> q{0, 0, 0};
        if (c.dim == 2) {
            // coordinates lie in a plane of R^3
            for (int j = 0; j < 3; ++j) q[j] = p[j];
        } else {
            // project R^4 onto the orthogonal complement of (1,1,1,1)
            static const double B[3][4] = {
                {0.5, -0.5, -0.5, 0.5}, {0.5, 0.5, -0.5, -0.5}, {0.5, -0.5, 0.5, -0.5}};
            for (int r = 0; r < 3; ++r) {
                double s = 0;
                for (int j = 0; j < 4; ++j) s += B[r][j] * p[j];
                q[r] = s;
            }
        }
        pts.push_back(q);
    }
    // polygonal 2-cells with vertices in cyclic order via edge walking
    std::vector<std::vector<int>> polys;
    for (const Cell& cell : c.cells) {
        if (cell.dim != 2) continue;
        std::map<int, std::vector<int>> adj;  // vertex -> neighbours along the 2-cell's edges
        for (auto [eid, s] : cell.boundary) {
            const Cell& e = c.cells[eid];
            adj[e.vertex_ids[0]].push_back(e.vertex_ids[1]);
            adj[e.vertex_ids[1]].push_back(e.vertex_ids[0]);
        }
        std::vector<int> cycle;
        int start = adj.begin()->first, prev = -1, cur = start;
        do {
            cycle.push_back(cur);
            int nxt = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
            prev = cur;
            cur = nxt;
        } while (cur != start && cycle.size() <= adj.size());
        polys.push_back(cycle);
    }
    std::ostringstream os;
    os << "OFF\n" << pts.size() << " " << polys.size() << " 0\n";
    for (const auto& q : pts) os << q[0] << " " << q[1] << " " << q[2] << "\n";
    for (const auto& poly : polys) {
        os << poly.size();
        for (int v : poly) os << " " << v;
        os << "\n";
    }
    return os.str();
}

}  // namespace whalg
