#include "zz/dgalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zz {

Element Derivation::apply(const Element& x) const {
    if (x.alg != alg) throw std::invalid_argument("Derivation::apply: wrong algebra");
    Element out{alg, BitVec(alg->dim())};
    for (std::size_t b : x.c.set_bits()) out += on_basis[b];
    return out;
}

namespace {

bool homogeneous_in_block(const QuotientAlgebra& a, const Element& e, int src, int tgt, int degree) {
    for (std::size_t b : e.c.set_bits()) {
        const BasisElt& be = a.basis[b];
        if (be.src != src || be.tgt != tgt || be.degree != degree) return false;
    }
    return true;
}

// d of a raw path given the arrow values, reduced to normal form
Element derive_raw_path(const QuotientAlgebra& a, const std::vector<Element>& arrow_values,
                        const RawPath& p) {
    Element out = a.zero();
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        int ar = a.quiver.arrow_id(p[k], p[k + 1]);
        RawPath pre(p.begin(), p.begin() + k + 1);
        RawPath suf(p.begin() + k + 1, p.end());
        out += a.reduce_path(pre) * arrow_values[ar] * a.reduce_path(suf);
    }
    return out;
}

} // namespace

Derivation make_derivation(const QuotientAlgebra& a, const std::vector<Element>& arrow_values,
                           DerivationReport* report) {
    if (arrow_values.size() != a.quiver.arrows.size())
        throw std::invalid_argument("make_derivation: need a value per arrow");
    DerivationReport local;
    DerivationReport& rep = report ? *report : local;

    for (std::size_t ar = 0; ar < arrow_values.size(); ++ar) {
        const Arrow& arr = a.quiver.arrows[ar];
        if (arrow_values[ar].alg != &a)
            throw std::invalid_argument("make_derivation: value from wrong algebra");
        if (!homogeneous_in_block(a, arrow_values[ar], arr.src, arr.tgt, arr.degree + 1)) {
            rep.ok = false;
            rep.failures.push_back("degree/block mismatch for d of arrow " +
                                   path_to_string({arr.src, arr.tgt}));
        }
    }

    // d must send every defining relation into the ideal
    for (const auto& r : a.relations) {
        Element img = a.zero();
        for (const auto& term : r.terms) img += derive_raw_path(a, arrow_values, term);
        if (!img.is_zero()) {
            rep.ok = false;
            rep.failures.push_back("d(relation at " + path_to_string(r.terms.front()) +
                                   ") not in the ideal: " + a.to_string(img));
        }
    }

    Derivation d;
    d.alg = &a;
    d.on_basis.reserve(a.dim());
    for (const auto& be : a.basis)
        d.on_basis.push_back(derive_raw_path(a, arrow_values, be.path));

    for (std::size_t b = 0; b < a.dim(); ++b) {
        Element dd = d.apply(d.on_basis[b]);
        if (!dd.is_zero()) {
            rep.ok = false;
            rep.failures.push_back("d^2(" + a.basis_name(static_cast<int>(b)) + ") = " +
                                   a.to_string(dd));
        }
    }
    return d;
}

Derivation zero_derivation(const QuotientAlgebra& a) {
    std::vector<Element> vals(a.quiver.arrows.size(), a.zero());
    return make_derivation(a, vals);
}

DGAlgebra an_shriek_dg(int n) {
    DGAlgebra out;
    out.alg = std::make_shared<const QuotientAlgebra>(build_named_algebra(AlgebraName::an_shriek, n));
    std::vector<Element> vals;
    for (const Arrow& ar : out.alg->quiver.arrows) {
        if (ar.tgt == ar.src + 1)
            vals.push_back(out.alg->reduce_path({ar.src, ar.src + 1, ar.src, ar.src + 1}));
        else
            vals.push_back(out.alg->zero());
    }
    DerivationReport rep;
    out.d = make_derivation(*out.alg, vals, &rep);
    if (!rep.ok) throw std::logic_error("an_shriek_dg: derivation checks failed");
    return out;
}

CellModule make_cell_module(Side side, const DGAlgebra& ctx, std::vector<CellGenerator> gens) {
    CellModule m;
    m.side = side;
    m.ctx = &ctx;
    m.gens = std::move(gens);
    m.arrows.assign(m.gens.size() * m.gens.size(), ctx.A().zero());
    return m;
}

CellModule build_resolution(const DGAlgebra& ctx, int i, Side side) {
    const QuotientAlgebra& a = ctx.A();
    int n = a.quiver.vertices;
    if (i < 1 || i > n) throw std::invalid_argument("build_resolution: index out of range");

    auto path = [&](std::initializer_list<int> v) { return a.reduce_path(RawPath(v)); };

    if (side == Side::left && i < n) {
        // diamond: P_i[1] -> {P_{i-1}, P_{i+1}[1]} -> P_i
        std::vector<CellGenerator> gens;
        int g1 = 0, g2 = -1, g3, g4;
        gens.push_back({i, 1, "P_" + std::to_string(i) + "[1]"});
        if (i > 1) {
            g2 = static_cast<int>(gens.size());
            gens.push_back({i - 1, 0, "P_" + std::to_string(i - 1)});
        }
        g3 = static_cast<int>(gens.size());
        gens.push_back({i + 1, 1, "P_" + std::to_string(i + 1) + "[1]"});
        g4 = static_cast<int>(gens.size());
        gens.push_back({i, 0, "P_" + std::to_string(i)});
        CellModule m = make_cell_module(side, ctx, std::move(gens));
        if (g2 >= 0) {
            m.arrow(g1, g2) = path({i, i - 1});
            m.arrow(g2, g3) = path({i - 1, i, i + 1});
            m.arrow(g2, g4) = path({i - 1, i});
        }
        m.arrow(g1, g3) = path({i, i + 1});
        m.arrow(g3, g4) = path({i + 1, i});
        m.final_gen = g4;
        m.name = "P(L_" + std::to_string(i) + ")";
        return m;
    }

    if (side == Side::left) {
        // ladder resolution of L_n: top row P_1..P_n, bottom row P_j[-1]
        std::vector<CellGenerator> gens;
        std::vector<int> top(n + 1, -1), bot(n + 1, -1);
        for (int j = 1; j <= n; ++j) {
            top[j] = static_cast<int>(gens.size());
            gens.push_back({j, 0, "P_" + std::to_string(j)});
        }
        for (int j = 1; j <= n - 2; ++j) {
            bot[j] = static_cast<int>(gens.size());
            gens.push_back({j, -1, "P_" + std::to_string(j) + "[-1]"});
        }
        CellModule m = make_cell_module(side, ctx, std::move(gens));
        for (int j = 1; j <= n - 1; ++j) m.arrow(top[j], top[j + 1]) = path({j, j + 1});
        for (int j = 2; j <= n - 1; ++j) m.arrow(top[j], bot[j - 1]) = path({j, j - 1});
        for (int j = 1; j <= n - 2; ++j) m.arrow(top[j], bot[j]) = path({j});  // identity map
        for (int j = 1; j <= n - 3; ++j) m.arrow(bot[j], bot[j + 1]) = path({j, j + 1});
        for (int j = 1; j <= n - 2; ++j) m.arrow(bot[j], top[j + 2]) = path({j, j + 1, j + 2});
        m.final_gen = top[n];
        m.name = "P(L_" + std::to_string(n) + ")";
        return m;
    }

    if (i < n) {
        // right diamond: the shifts sit on the i-1 side
        std::vector<CellGenerator> gens;
        int g1 = 0, g2 = -1, g3, g4;
        gens.push_back({i, 1, "_" + std::to_string(i) + "P[1]"});
        if (i > 1) {
            g2 = static_cast<int>(gens.size());
            gens.push_back({i - 1, 1, "_" + std::to_string(i - 1) + "P[1]"});
        }
        g3 = static_cast<int>(gens.size());
        gens.push_back({i + 1, 0, "_" + std::to_string(i + 1) + "P"});
        g4 = static_cast<int>(gens.size());
        gens.push_back({i, 0, "_" + std::to_string(i) + "P"});
        CellModule m = make_cell_module(side, ctx, std::move(gens));
        if (g2 >= 0) {
            m.arrow(g1, g2) = path({i - 1, i});
            m.arrow(g3, g2) = path({i - 1, i, i + 1});
            m.arrow(g2, g4) = path({i, i - 1});
        }
        m.arrow(g1, g3) = path({i + 1, i});
        m.arrow(g3, g4) = path({i, i + 1});
        m.final_gen = g4;
        m.name = "P(_" + std::to_string(i) + "L)";
        return m;
    }

    // right resolution of the last simple: _{n-1}P[1] -> _nP
    std::vector<CellGenerator> gens;
    gens.push_back({n - 1, 1, "_" + std::to_string(n - 1) + "P[1]"});
    gens.push_back({n, 0, "_" + std::to_string(n) + "P"});
    CellModule m = make_cell_module(side, ctx, std::move(gens));
    m.arrow(0, 1) = path({n, n - 1});
    m.final_gen = 1;
    m.name = "P(_" + std::to_string(n) + "L)";
    return m;
}

CellCheckReport cell_d_squared_check(const CellModule& m) {
    CellCheckReport rep;
    const QuotientAlgebra& a = m.ctx->A();
    std::size_t g = m.size();

    for (std::size_t k = 0; k < g; ++k)
        for (std::size_t l = 0; l < g; ++l) {
            const Element& x = m.arrow(k, l);
            if (x.is_zero()) continue;
            int bs = m.side == Side::left ? m.gens[k].vertex : m.gens[l].vertex;
            int bt = m.side == Side::left ? m.gens[l].vertex : m.gens[k].vertex;
            int want = m.gens[l].shift - m.gens[k].shift + 1;
            if (!homogeneous_in_block(a, x, bs, bt, want)) {
                rep.ok = false;
                rep.failures.push_back("arrow " + m.gens[k].name + " -> " + m.gens[l].name +
                                       " has wrong block or degree: " + a.to_string(x));
            }
        }

    // triangularity: the arrow digraph must be acyclic
    {
        std::vector<int> indeg(g, 0);
        for (std::size_t k = 0; k < g; ++k)
            for (std::size_t l = 0; l < g; ++l)
                if (!m.arrow(k, l).is_zero()) indeg[l]++;
        std::vector<std::size_t> queue;
        for (std::size_t k = 0; k < g; ++k)
            if (indeg[k] == 0) queue.push_back(k);
        std::size_t seen = 0;
        while (!queue.empty()) {
            std::size_t k = queue.back();
            queue.pop_back();
            ++seen;
            for (std::size_t l = 0; l < g; ++l)
                if (!m.arrow(k, l).is_zero() && --indeg[l] == 0) queue.push_back(l);
        }
        if (seen != g) {
            rep.ok = false;
            rep.failures.push_back("arrow digraph has a cycle; no filtration order exists");
        }
    }

    for (std::size_t k = 0; k < g; ++k)
        for (std::size_t l = 0; l < g; ++l) {
            Element resid = m.ctx->d.apply(m.arrow(k, l));
            for (std::size_t mid = 0; mid < g; ++mid) {
                if (m.side == Side::left)
                    resid += m.arrow(k, mid) * m.arrow(mid, l);
                else
                    resid += m.arrow(mid, l) * m.arrow(k, mid);
            }
            if (!resid.is_zero()) {
                rep.ok = false;
                rep.failures.push_back("d^2 component " + m.gens[k].name + " -> " +
                                       m.gens[l].name + " = " + a.to_string(resid));
            }
        }
    return rep;
}

std::size_t GradedComplex::dim_at(int degree) const {
    int k = degree - min_degree;
    if (k < 0 || k >= static_cast<int>(dims.size())) return 0;
    return dims[k];
}

const BitMatrix& GradedComplex::d_at(int degree) const {
    static const BitMatrix empty;
    int k = degree - min_degree;
    if (k < 0 || k >= static_cast<int>(d.size())) return empty;
    return d[k];
}

bool d_squared_zero(const GradedComplex& x) {
    for (std::size_t k = 0; k + 1 < x.d.size(); ++k) {
        if (x.d[k].rows() == 0 || x.d[k + 1].rows() == 0) continue;
        BitMatrix prod = x.d[k + 1] * x.d[k];
        if (!(prod == BitMatrix(prod.rows(), prod.cols()))) return false;
    }
    return true;
}

std::size_t Homology::total() const {
    std::size_t t = 0;
    for (auto d : dims) t += d;
    return t;
}

std::size_t Homology::dim_at(int degree) const {
    int k = degree - min_degree;
    if (k < 0 || k >= static_cast<int>(dims.size())) return 0;
    return dims[k];
}

Homology homology(const GradedComplex& x) {
    if (!d_squared_zero(x)) throw std::invalid_argument("homology: d^2 != 0");
    Homology h;
    h.min_degree = x.min_degree;
    h.dims.resize(x.dims.size());
    h.representatives.resize(x.dims.size());
    for (std::size_t k = 0; k < x.dims.size(); ++k) {
        std::size_t dim = x.dims[k];
        if (dim == 0) continue;
        std::vector<BitVec> cycles;
        if (k < x.d.size() && x.d[k].rows() > 0)
            cycles = kernel(x.d[k]);
        else {
            for (std::size_t i = 0; i < dim; ++i) {
                BitVec e(dim);
                e.set(i);
                cycles.push_back(std::move(e));
            }
        }
        RowSpace mod(dim);
        if (k > 0 && x.d[k - 1].rows() > 0) {
            const BitMatrix& din = x.d[k - 1];
            for (std::size_t c = 0; c < din.cols(); ++c) {
                BitVec col(dim);
                for (std::size_t r = 0; r < dim; ++r)
                    if (din.get(r, c)) col.set(r);
                mod.absorb(std::move(col));
            }
        }
        for (const BitVec& z : cycles) {
            BitVec red = mod.reduce(z);
            if (!red.is_zero()) {
                h.representatives[k].push_back(red);
                mod.absorb(std::move(red));
            }
        }
        h.dims[k] = h.representatives[k].size();
    }
    return h;
}

ExpandedCell expand_cell(const CellModule& m) {
    const QuotientAlgebra& a = m.ctx->A();

    // collect (generator, algebra basis element) pairs by total degree
    std::map<int, std::vector<std::pair<int, int>>> by_degree;
    for (std::size_t k = 0; k < m.size(); ++k) {
        int v = m.gens[k].vertex;
        for (std::size_t b = 0; b < a.dim(); ++b) {
            bool in_proj = m.side == Side::left ? a.basis[b].tgt == v : a.basis[b].src == v;
            if (!in_proj) continue;
            int deg = a.basis[b].degree - m.gens[k].shift;
            by_degree[deg].emplace_back(static_cast<int>(k), static_cast<int>(b));
        }
    }
    ExpandedCell out;
    if (by_degree.empty()) return out;

    int lo = by_degree.begin()->first, hi = by_degree.rbegin()->first;
    out.complex.min_degree = lo;
    out.complex.dims.assign(hi - lo + 1, 0);
    out.basis.assign(hi - lo + 1, {});
    out.complex.labels.assign(hi - lo + 1, {});
    std::map<std::pair<int, int>, int> col;
    for (auto& [deg, items] : by_degree) {
        out.complex.dims[deg - lo] = items.size();
        out.basis[deg - lo] = items;
        for (std::size_t c = 0; c < items.size(); ++c) col[items[c]] = static_cast<int>(c);
        std::vector<std::string> names;
        for (auto [k, b] : items) names.push_back(m.gens[k].name + ":" + a.basis_name(b));
        out.complex.labels[deg - lo] = std::move(names);
    }

    out.complex.d.resize(out.complex.dims.size());
    for (int deg = lo; deg <= hi; ++deg) {
        std::size_t rows = deg + 1 <= hi ? out.complex.dims[deg + 1 - lo] : 0;
        BitMatrix mat(rows, out.complex.dims[deg - lo]);
        const auto& items = out.basis[deg - lo];
        for (std::size_t c = 0; c < items.size() && rows > 0; ++c) {
            auto [k, b] = items[c];
            // internal differential of the coefficient
            Element db = m.ctx->d.apply(a.element(b));
            for (std::size_t t : db.c.set_bits())
                mat.set(col.at({k, static_cast<int>(t)}), c);
            // connecting arrows
            for (std::size_t l = 0; l < m.size(); ++l) {
                const Element& x = m.arrow(k, l);
                if (x.is_zero()) continue;
                Element moved = m.side == Side::left ? a.element(b) * x : x * a.element(b);
                for (std::size_t t : moved.c.set_bits())
                    mat.set(col.at({static_cast<int>(l), static_cast<int>(t)}), c);
            }
        }
        out.complex.d[deg - lo] = std::move(mat);
    }
    return out;
}

ResolutionReport verify_resolution(const DGAlgebra& ctx, int i, Side side) {
    ResolutionReport rep;
    CellModule m = build_resolution(ctx, i, side);
    CellCheckReport cell = cell_d_squared_check(m);
    if (!cell.ok) {
        rep.ok = false;
        rep.failures = cell.failures;
        return rep;
    }
    ExpandedCell x = expand_cell(m);
    rep.h = homology(x.complex);
    if (rep.h.total() != 1 || rep.h.dim_at(0) != 1) {
        rep.ok = false;
        rep.failures.push_back(m.name + ": homology is not one-dimensional in degree 0");
        return rep;
    }
    // Pair the class against the idempotent coefficient of the final
    // generator; arrows into it carry positive-length labels, so this
    // functional kills boundaries.
    const auto& items = x.basis[0 - x.complex.min_degree];
    const BitVec& repv = rep.h.representatives[0 - x.complex.min_degree][0];
    int idem = ctx.A().idempotent_id(i);
    bool hit = false;
    for (std::size_t c = 0; c < items.size(); ++c)
        if (items[c].first == m.final_gen && items[c].second == idem)
            hit = repv.get(c);
    if (!hit) {
        rep.ok = false;
        rep.failures.push_back(m.name + ": class not supported on the final generator at vertex " +
                               std::to_string(i));
    }
    return rep;
}

CellModule shift_cell(const CellModule& m, int s) {
    CellModule out = m;
    for (auto& g : out.gens) {
        g.shift += s;
        g.name += "[" + std::to_string(s) + "]";
    }
    return out;
}

} // namespace zz
