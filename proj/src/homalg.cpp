#include "zz/homalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace zz {

namespace {

void require_same_context(const CellModule& m, const CellModule& n) {
    if (m.ctx != n.ctx) throw std::invalid_argument("cell modules over different algebras");
    if (m.side != n.side) throw std::invalid_argument("cell modules of different sides");
}

// block of the label of a map component k -> l
std::pair<int, int> label_block(const CellModule& src, const CellModule& tgt,
                                std::size_t k, std::size_t l) {
    if (src.side == Side::left) return {src.gens[k].vertex, tgt.gens[l].vertex};
    return {tgt.gens[l].vertex, src.gens[k].vertex};
}

int label_degree(const CellModule& src, const CellModule& tgt,
                 std::size_t k, std::size_t l, int map_degree) {
    return tgt.gens[l].shift - src.gens[k].shift + map_degree;
}

bool homogeneous_in(const QuotientAlgebra& a, const Element& e, std::pair<int, int> blk, int deg) {
    for (std::size_t b : e.c.set_bits()) {
        const BasisElt& be = a.basis[b];
        if (be.src != blk.first || be.tgt != blk.second || be.degree != deg) return false;
    }
    return true;
}

} // namespace

bool DGMap::is_zero() const {
    for (const auto& e : comp)
        if (!e.is_zero()) return false;
    return true;
}

std::string DGMap::describe() const {
    std::string s;
    for (std::size_t k = 0; k < src->size(); ++k)
        for (std::size_t l = 0; l < tgt->size(); ++l)
            if (!at(k, l).is_zero()) {
                if (!s.empty()) s += ", ";
                s += src->gens[k].name + "->" + tgt->gens[l].name + ": " +
                     src->ctx->A().to_string(at(k, l));
            }
    return s.empty() ? "0" : s;
}

DGMap zero_map(const CellModule& src, const CellModule& tgt, int degree) {
    require_same_context(src, tgt);
    DGMap f;
    f.src = &src;
    f.tgt = &tgt;
    f.degree = degree;
    f.comp.assign(src.size() * tgt.size(), src.ctx->A().zero());
    return f;
}

DGMap identity_map(const CellModule& m) {
    DGMap f = zero_map(m, m, 0);
    for (std::size_t k = 0; k < m.size(); ++k)
        f.at(k, k) = m.ctx->A().idempotent(m.gens[k].vertex);
    return f;
}

DGMap add(DGMap f, const DGMap& g) {
    if (f.src != g.src || f.tgt != g.tgt || f.degree != g.degree)
        throw std::invalid_argument("add: incompatible maps");
    for (std::size_t i = 0; i < f.comp.size(); ++i) f.comp[i] += g.comp[i];
    return f;
}

DGMap compose(const DGMap& f, const DGMap& g) {
    if (f.src != g.tgt) throw std::invalid_argument("compose: source of f must be target of g");
    DGMap out = zero_map(*g.src, *f.tgt, f.degree + g.degree);
    for (std::size_t k = 0; k < g.src->size(); ++k)
        for (std::size_t l = 0; l < f.tgt->size(); ++l) {
            Element acc = out.at(k, l);
            for (std::size_t m = 0; m < g.tgt->size(); ++m) {
                if (g.src->side == Side::left)
                    acc += g.at(k, m) * f.at(m, l);
                else
                    acc += f.at(m, l) * g.at(k, m);
            }
            out.at(k, l) = acc;
        }
    return out;
}

DGMap map_differential(const DGMap& f) {
    const CellModule& M = *f.src;
    const CellModule& N = *f.tgt;
    DGMap out = zero_map(M, N, f.degree + 1);
    const Derivation& d = M.ctx->d;
    for (std::size_t k = 0; k < M.size(); ++k)
        for (std::size_t l = 0; l < N.size(); ++l) {
            Element acc = d.apply(f.at(k, l));
            if (M.side == Side::left) {
                for (std::size_t m = 0; m < N.size(); ++m) acc += f.at(k, m) * N.arrow(m, l);
                for (std::size_t m = 0; m < M.size(); ++m) acc += M.arrow(k, m) * f.at(m, l);
            } else {
                for (std::size_t m = 0; m < N.size(); ++m) acc += N.arrow(m, l) * f.at(k, m);
                for (std::size_t m = 0; m < M.size(); ++m) acc += f.at(m, l) * M.arrow(k, m);
            }
            out.at(k, l) = acc;
        }
    return out;
}

bool maps_equal(const DGMap& f, const DGMap& g) {
    if (f.src != g.src || f.tgt != g.tgt || f.degree != g.degree) return false;
    for (std::size_t i = 0; i < f.comp.size(); ++i)
        if (f.comp[i].c != g.comp[i].c) return false;
    return true;
}

std::vector<std::string> validate_map(const DGMap& f) {
    std::vector<std::string> failures;
    const QuotientAlgebra& a = f.src->ctx->A();
    for (std::size_t k = 0; k < f.src->size(); ++k)
        for (std::size_t l = 0; l < f.tgt->size(); ++l) {
            const Element& x = f.at(k, l);
            if (x.is_zero()) continue;
            auto blk = label_block(*f.src, *f.tgt, k, l);
            int deg = label_degree(*f.src, *f.tgt, k, l, f.degree);
            if (!homogeneous_in(a, x, blk, deg))
                failures.push_back("component " + f.src->gens[k].name + " -> " +
                                   f.tgt->gens[l].name + " off block/degree: " + a.to_string(x));
        }
    return failures;
}

HomComplex hom_complex(const CellModule& m, const CellModule& n) {
    require_same_context(m, n);
    const QuotientAlgebra& a = m.ctx->A();

    HomComplex hc;
    hc.src = &m;
    hc.tgt = &n;

    std::map<int, std::vector<HomComplex::Elem>> by_degree;
    for (std::size_t k = 0; k < m.size(); ++k)
        for (std::size_t l = 0; l < n.size(); ++l) {
            auto blk = label_block(m, n, k, l);
            for (std::size_t b = 0; b < a.dim(); ++b) {
                if (a.basis[b].src != blk.first || a.basis[b].tgt != blk.second) continue;
                // map degree of the elementary component
                int deg = a.basis[b].degree - n.gens[l].shift + m.gens[k].shift;
                by_degree[deg].push_back(
                    {static_cast<int>(k), static_cast<int>(l), static_cast<int>(b)});
            }
        }
    if (by_degree.empty()) return hc;

    int lo = by_degree.begin()->first, hi = by_degree.rbegin()->first;
    hc.complex.min_degree = lo;
    hc.complex.dims.assign(hi - lo + 1, 0);
    hc.basis.assign(hi - lo + 1, {});
    std::map<std::tuple<int, int, int>, std::pair<int, int>> position;   // -> (deg idx, col)
    for (auto& [deg, items] : by_degree) {
        hc.complex.dims[deg - lo] = items.size();
        hc.basis[deg - lo] = items;
        for (std::size_t c = 0; c < items.size(); ++c)
            position[{items[c].k, items[c].l, items[c].b}] = {deg - lo, static_cast<int>(c)};
    }

    hc.complex.d.resize(hc.complex.dims.size());
    for (int deg = lo; deg <= hi; ++deg) {
        std::size_t rows = deg + 1 <= hi ? hc.complex.dims[deg + 1 - lo] : 0;
        BitMatrix mat(rows, hc.complex.dims[deg - lo]);
        if (rows) {
            const auto& items = hc.basis[deg - lo];
            for (std::size_t c = 0; c < items.size(); ++c) {
                DGMap f = zero_map(m, n, deg);
                f.at(items[c].k, items[c].l) = a.element(items[c].b);
                DGMap df = map_differential(f);
                for (std::size_t k = 0; k < m.size(); ++k)
                    for (std::size_t l = 0; l < n.size(); ++l)
                        for (std::size_t b : df.at(k, l).c.set_bits()) {
                            auto it = position.find({static_cast<int>(k), static_cast<int>(l),
                                                     static_cast<int>(b)});
                            if (it == position.end() || it->second.first != deg - lo + 1)
                                throw std::logic_error("hom_complex: differential escapes basis");
                            mat.flip(it->second.second, c);
                        }
            }
        }
        hc.complex.d[deg - lo] = std::move(mat);
    }
    return hc;
}

BitVec HomComplex::coords_of(const DGMap& f) const {
    int idx = f.degree - complex.min_degree;
    if (idx < 0 || idx >= static_cast<int>(basis.size())) {
        if (f.is_zero()) return BitVec(0);
        throw std::invalid_argument("coords_of: degree out of range");
    }
    const auto& items = basis[idx];
    BitVec v(items.size());
    DGMap residue = f;
    for (std::size_t c = 0; c < items.size(); ++c)
        if (residue.at(items[c].k, items[c].l).c.get(items[c].b)) {
            v.set(c);
            residue.at(items[c].k, items[c].l).c.flip(items[c].b);
        }
    if (!residue.is_zero()) throw std::invalid_argument("coords_of: map not in the hom space");
    return v;
}

DGMap HomComplex::map_of(int degree, const BitVec& coords) const {
    DGMap f = zero_map(*src, *tgt, degree);
    int idx = degree - complex.min_degree;
    if (idx < 0 || idx >= static_cast<int>(basis.size())) return f;
    const auto& items = basis[idx];
    for (std::size_t c : coords.set_bits())
        f.at(items[c].k, items[c].l).c.flip(items[c].b);
    return f;
}

ExtTable ext_table(const DGAlgebra& ctx, const CellModule& pli, const CellModule& plj) {
    (void)ctx;
    ExtTable t;
    t.hom = hom_complex(plj, pli);
    t.h = homology(t.hom.complex);
    return t;
}

std::map<int, std::size_t> cupcap_on_simple(const DGAlgebra& ctx, int i, int j) {
    int n = ctx.A().quiver.vertices;
    if (i < 1 || i > n - 1 || j < 1 || j > n)
        throw std::invalid_argument("cupcap_on_simple: index out of range");
    CellModule pl = build_resolution(ctx, i, Side::left);

    // generators of P(L_i) at vertex j, in homological degree -shift; arrow
    // labels survive only through their idempotent coefficient
    std::vector<int> keep;
    for (std::size_t k = 0; k < pl.size(); ++k)
        if (pl.gens[k].vertex == j) keep.push_back(static_cast<int>(k));

    std::map<int, std::size_t> out;
    if (keep.empty()) return out;

    std::map<int, std::vector<int>> by_degree;
    for (int k : keep) by_degree[-pl.gens[k].shift].push_back(k);
    int lo = by_degree.begin()->first, hi = by_degree.rbegin()->first;

    GradedComplex x;
    x.min_degree = lo;
    x.dims.assign(hi - lo + 1, 0);
    std::map<int, std::pair<int, int>> pos;
    for (auto& [deg, ks] : by_degree) {
        x.dims[deg - lo] = ks.size();
        for (std::size_t c = 0; c < ks.size(); ++c) pos[ks[c]] = {deg - lo, static_cast<int>(c)};
    }
    x.d.resize(x.dims.size());
    int idem = ctx.A().idempotent_id(j);
    for (int deg = lo; deg <= hi; ++deg) {
        std::size_t rows = deg + 1 <= hi ? x.dims[deg + 1 - lo] : 0;
        BitMatrix mat(rows, x.dims[deg - lo]);
        if (rows)
            for (auto [k, p] : pos) {
                if (p.first != deg - lo) continue;
                for (auto [l, q] : pos) {
                    if (q.first != deg - lo + 1) continue;
                    if (pl.arrow(k, l).c.size() && pl.arrow(k, l).c.get(idem))
                        mat.set(q.second, p.second);
                }
            }
        x.d[deg - lo] = std::move(mat);
    }

    Homology h = homology(x);
    for (int deg = lo; deg <= hi; ++deg)
        if (h.dim_at(deg) > 0) out[-deg] = h.dim_at(deg);
    return out;
}

} // namespace zz
