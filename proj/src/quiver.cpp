#include "zz/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace zz {

int Quiver::arrow_id(int src, int tgt) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].src == src && arrows[i].tgt == tgt) return static_cast<int>(i);
    return -1;
}

Quiver line_quiver(int n, int up_degree, int down_degree) {
    Quiver q;
    q.vertices = n;
    for (int i = 1; i < n; ++i) {
        q.arrows.push_back({i, i + 1, up_degree});
        q.arrows.push_back({i + 1, i, down_degree});
    }
    return q;
}

std::string path_to_string(const RawPath& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += '|';
        s += std::to_string(p[i]);
    }
    s += ')';
    return s;
}

Element& Element::operator+=(const Element& o) {
    if (alg != o.alg) throw std::invalid_argument("Element: mixed algebras");
    c.xor_with(o.c);
    return *this;
}

Element operator+(Element x, const Element& y) {
    x += y;
    return x;
}

Element operator*(const Element& x, const Element& y) {
    if (!x.alg || x.alg != y.alg) throw std::invalid_argument("Element: mixed algebras");
    return x.alg->mul(x, y);
}

int QuotientAlgebra::idempotent_id(int v) const {
    return find_path({v});
}

int QuotientAlgebra::find_path(const RawPath& p) const {
    auto it = path_index_.find(p);
    return it == path_index_.end() ? -1 : it->second;
}

int QuotientAlgebra::loop_id(int v) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].src == v && basis[i].tgt == v && basis[i].length == 2)
            return static_cast<int>(i);
    return -1;
}

Element QuotientAlgebra::zero() const {
    return Element{this, BitVec(dim())};
}

Element QuotientAlgebra::element(int basis_id) const {
    Element e = zero();
    e.c.set(basis_id);
    return e;
}

Element QuotientAlgebra::idempotent(int v) const {
    int id = idempotent_id(v);
    if (id < 0) throw std::invalid_argument("idempotent: no such vertex");
    return element(id);
}

Element QuotientAlgebra::unit() const {
    Element e = zero();
    for (int v : unit_vertices) e.c.set(idempotent_id(v));
    return e;
}

Element QuotientAlgebra::reduce_path(const RawPath& p) const {
    if (p.empty()) throw std::invalid_argument("reduce_path: empty path");
    if (rmul_.empty()) throw std::logic_error("reduce_path: unsupported on truncations");
    int id0 = idempotent_id(p[0]);
    if (id0 < 0) throw std::invalid_argument("reduce_path: bad start vertex");
    std::vector<int> cur{id0};
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        int a = quiver.arrow_id(p[k], p[k + 1]);
        if (a < 0) throw std::invalid_argument("reduce_path: non-adjacent step in " + path_to_string(p));
        std::vector<int> next;
        for (int id : cur)
            for (int t : rmul_[id][a]) {
                auto it = std::find(next.begin(), next.end(), t);
                if (it == next.end()) next.push_back(t);
                else next.erase(it);
            }
        cur = std::move(next);
        if (cur.empty()) break;
    }
    Element e = zero();
    for (int id : cur) e.c.flip(id);
    return e;
}

Element QuotientAlgebra::mul(const Element& x, const Element& y) const {
    if (x.alg != this || y.alg != this)
        throw std::invalid_argument("mul: mixed algebras");
    Element out = zero();
    for (std::size_t a : x.c.set_bits())
        for (std::size_t b : y.c.set_bits())
            out.c.xor_with(mult_[a * dim() + b]);
    return out;
}

std::vector<int> QuotientAlgebra::block_ids(int i, int j) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k].src == i && basis[k].tgt == j) out.push_back(static_cast<int>(k));
    return out;
}

std::string QuotientAlgebra::to_string(const Element& e) const {
    auto bits = e.c.set_bits();
    if (bits.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (k) s += " + ";
        s += path_to_string(basis[bits[k]].path);
    }
    return s;
}

std::map<int, std::vector<int>> idempotent_block(const QuotientAlgebra& a, int i, int j) {
    if (i < 1 || i > a.quiver.vertices || j < 1 || j > a.quiver.vertices)
        throw std::invalid_argument("idempotent_block: vertex out of range");
    std::map<int, std::vector<int>> out;
    for (int id : a.block_ids(i, j)) out[a.basis[id].degree].push_back(id);
    return out;
}

namespace {

int path_degree(const Quiver& q, const RawPath& p) {
    int d = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        int a = q.arrow_id(p[k], p[k + 1]);
        if (a < 0) throw std::invalid_argument("relation term is not a path: " + path_to_string(p));
        d += q.arrows[a].degree;
    }
    return d;
}

void validate_relations(const Quiver& q, const std::vector<Relation>& rels) {
    for (const auto& r : rels) {
        if (r.terms.empty()) throw std::invalid_argument("empty relation");
        const RawPath& t0 = r.terms.front();
        int deg0 = path_degree(q, t0);
        for (const auto& t : r.terms) {
            if (t.size() != t0.size() || t.front() != t0.front() || t.back() != t0.back())
                throw std::invalid_argument("relation terms must be parallel and length-homogeneous");
            if (path_degree(q, t) != deg0)
                throw std::invalid_argument("relation terms must be degree-homogeneous");
        }
    }
}

} // namespace

void QuotientAlgebra::finalize() {
    path_index_.clear();
    for (std::size_t i = 0; i < basis.size(); ++i)
        path_index_[basis[i].path] = static_cast<int>(i);

    // structure constants: fold the right factor's arrows through rmul_
    std::size_t d = dim();
    mult_.assign(d * d, BitVec(d));
    for (std::size_t u = 0; u < d; ++u) {
        for (std::size_t v = 0; v < d; ++v) {
            if (basis[u].tgt != basis[v].src) continue;
            std::vector<int> cur{static_cast<int>(u)};
            const RawPath& pv = basis[v].path;
            for (std::size_t k = 0; k + 1 < pv.size() && !cur.empty(); ++k) {
                int a = quiver.arrow_id(pv[k], pv[k + 1]);
                std::vector<int> next;
                for (int id : cur)
                    for (int t : rmul_[id][a]) {
                        auto it = std::find(next.begin(), next.end(), t);
                        if (it == next.end()) next.push_back(t);
                        else next.erase(it);
                    }
                cur = std::move(next);
            }
            for (int id : cur) mult_[u * d + v].flip(id);
        }
    }
}

QuotientAlgebra enumerate_basis(const Quiver& q, const std::vector<Relation>& rels, int ceiling) {
    validate_relations(q, rels);
    if (ceiling < 0) ceiling = 4 * q.vertices;

    QuotientAlgebra A;
    A.quiver = q;
    A.relations = rels;
    for (int v = 1; v <= q.vertices; ++v) A.unit_vertices.push_back(v);

    // length 0: orthogonal idempotents
    for (int v = 1; v <= q.vertices; ++v)
        A.basis.push_back({{v}, v, v, 0, 0});
    A.rmul_.resize(A.basis.size());

    std::vector<int> prev;
    std::vector<std::vector<int>> by_length{{}};
    for (int v = 0; v < q.vertices; ++v) {
        prev.push_back(v);
        by_length[0].push_back(v);
    }

    for (int ell = 1;; ++ell) {
        if (ell > ceiling)
            throw std::runtime_error(
                "enumerate_basis: no termination by length " + std::to_string(ceiling) +
                " (non-finite-dimensional quotient?)");

        // coordinates of V_ell modulo I_{ell-1} * arrows: pairs (prefix, arrow),
        // in lexicographic path order
        std::vector<std::pair<int, int>> coords;
        std::map<std::pair<int, int>, int> coord_index;
        for (int id : prev) {
            std::vector<int> out_arrows;
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].src == A.basis[id].tgt) out_arrows.push_back(static_cast<int>(a));
            std::sort(out_arrows.begin(), out_arrows.end(), [&](int x, int y) {
                return q.arrows[x].tgt < q.arrows[y].tgt;
            });
            for (int a : out_arrows) {
                coord_index[{id, a}] = static_cast<int>(coords.size());
                coords.emplace_back(id, a);
            }
        }
        if (coords.empty()) {
            A.stop_length = ell;
            break;
        }

        // right-end relation insertions span I_ell modulo I_{ell-1} * arrows
        RowSpace span(coords.size());
        for (const auto& r : rels) {
            int rl = static_cast<int>(r.terms.front().size()) - 1;
            if (rl > ell) continue;
            int plen = ell - rl;
            for (int b : by_length[plen]) {
                if (A.basis[b].tgt != r.terms.front().front()) continue;
                BitVec vec(coords.size());
                for (const auto& term : r.terms) {
                    std::vector<int> cur{b};
                    for (int k = 0; k + 2 < static_cast<int>(term.size()) && !cur.empty(); ++k) {
                        int a = q.arrow_id(term[k], term[k + 1]);
                        std::vector<int> next;
                        for (int id : cur)
                            for (int t : A.rmul_[id][a]) {
                                auto it = std::find(next.begin(), next.end(), t);
                                if (it == next.end()) next.push_back(t);
                                else next.erase(it);
                            }
                        cur = std::move(next);
                    }
                    int last = q.arrow_id(term[term.size() - 2], term.back());
                    for (int id : cur)
                        vec.flip(coord_index.at({id, last}));
                }
                span.absorb(std::move(vec));
            }
        }

        // free coordinates become normal-form basis paths
        std::vector<int> fresh(coords.size(), -1);
        std::vector<int> next_gen;
        for (std::size_t idx = 0; idx < coords.size(); ++idx) {
            if (span.pivot_at(idx)) continue;
            auto [pid, a] = coords[idx];
            BasisElt e;
            e.path = A.basis[pid].path;
            e.path.push_back(q.arrows[a].tgt);
            e.src = A.basis[pid].src;
            e.tgt = q.arrows[a].tgt;
            e.degree = A.basis[pid].degree + q.arrows[a].degree;
            e.length = ell;
            fresh[idx] = static_cast<int>(A.basis.size());
            next_gen.push_back(fresh[idx]);
            A.basis.push_back(std::move(e));
            A.rmul_.emplace_back();
        }

        // normal forms of prefix*arrow, for later reductions
        for (int id : prev) A.rmul_[id].assign(q.arrows.size(), {});
        for (std::size_t idx = 0; idx < coords.size(); ++idx) {
            auto [pid, a] = coords[idx];
            BitVec e(coords.size());
            e.set(idx);
            BitVec red = span.reduce(std::move(e));
            for (std::size_t t : red.set_bits())
                A.rmul_[pid][a].push_back(fresh[t]);
        }

        by_length.push_back(next_gen);
        if (next_gen.empty()) {
            A.stop_length = ell;
            break;
        }
        prev = std::move(next_gen);
    }

    A.finalize();
    return A;
}

QuotientAlgebra idempotent_truncation(const QuotientAlgebra& a, const std::vector<int>& keep) {
    auto kept = [&](int v) { return std::find(keep.begin(), keep.end(), v) != keep.end(); };
    QuotientAlgebra c;
    c.quiver = a.quiver;
    c.relations = a.relations;
    c.unit_vertices = keep;
    c.stop_length = a.stop_length;

    std::vector<int> old_to_new(a.dim(), -1);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (kept(a.basis[i].src) && kept(a.basis[i].tgt)) {
            old_to_new[i] = static_cast<int>(c.basis.size());
            c.basis.push_back(a.basis[i]);
        }

    std::size_t d = c.dim();
    c.mult_.assign(d * d, BitVec(d));
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (old_to_new[i] < 0) continue;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (old_to_new[j] < 0) continue;
            BitVec prod(d);
            // e A e is closed under multiplication
            for (std::size_t t : a.mul_basis(i, j).set_bits())
                prod.set(old_to_new[t]);
            c.mult_[old_to_new[i] * d + old_to_new[j]] = std::move(prod);
        }
    }
    for (std::size_t i = 0; i < c.dim(); ++i)
        c.path_index_[c.basis[i].path] = static_cast<int>(i);
    return c;
}

QuotientAlgebra build_named_algebra(AlgebraName name, int n) {
    if (n < 2) throw std::invalid_argument("build_named_algebra: n must be >= 2");
    switch (name) {
    case AlgebraName::an_shriek: {
        Quiver q = line_quiver(n, 1, 0);
        std::vector<Relation> rels;
        rels.push_back({{{1, 2, 1}}});
        for (int i = 2; i <= n - 1; ++i)
            rels.push_back({{{i, i - 1, i}, {i, i + 1, i}}});
        return enumerate_basis(q, rels);
    }
    case AlgebraName::an: {
        Quiver q = line_quiver(n, 0, 1);
        std::vector<Relation> rels;
        for (int i = 1; i + 2 <= n; ++i) rels.push_back({{{i, i + 1, i + 2}}});
        for (int i = n; i - 2 >= 1; --i) rels.push_back({{{i, i - 1, i - 2}}});
        for (int i = 2; i <= n - 1; ++i)
            rels.push_back({{{i, i - 1, i}, {i, i + 1, i}}});
        rels.push_back({{{n, n - 1, n}}});
        return enumerate_basis(q, rels);
    }
    case AlgebraName::zigzag: {
        QuotientAlgebra an = build_named_algebra(AlgebraName::an, n);
        std::vector<int> keep;
        for (int v = 1; v <= n - 1; ++v) keep.push_back(v);
        return idempotent_truncation(an, keep);
    }
    }
    throw std::invalid_argument("build_named_algebra: unknown name");
}

} // namespace zz
