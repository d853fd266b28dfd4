#include "zz/endo.hpp"

#include <algorithm>
#include <stdexcept>

namespace zz {

namespace {

// generator indices inside the diamond P(L_i):
// g1 = P_i[1], g2 = P_{i-1} (absent for i = 1), g3 = P_{i+1}[1], g4 = P_i
struct Diamond {
    int g1 = 0, g2 = -1, g3 = 1, g4 = 2;
};
Diamond diamond_indices(int i) {
    Diamond d;
    if (i > 1) { d.g2 = 1; d.g3 = 2; d.g4 = 3; }
    return d;
}

// ladder P(L_n): top generators T_1..T_n, bottom B_1..B_{n-2}
int ladder_top(int j) { return j - 1; }
int ladder_bot(int n, int j) { return n + j - 1; }

} // namespace

ResolutionSet build_resolutions(const DGAlgebra& ctx) {
    ResolutionSet rs;
    rs.ctx = &ctx;
    int n = ctx.A().quiver.vertices;
    rs.mods.reserve(n);
    for (int i = 1; i <= n; ++i) rs.mods.push_back(build_resolution(ctx, i, Side::left));
    return rs;
}

DGMap NamedMapSet::ra(int i) const {
    return compose(alpha(i, i + 1), alpha(i + 1, i));
}

DGMap NamedMapSet::la(int i) const {
    if (i > 1) return compose(alpha(i, i - 1), alpha(i - 1, i));
    // boundary loop class: the lone component P_1[1] -> P_1 labeled (1)
    const CellModule& p1 = res->at(1);
    Diamond d = diamond_indices(1);
    DGMap f = zero_map(p1, p1, 1);
    f.at(d.g1, d.g4) = res->ctx->A().idempotent(1);
    return f;
}

NamedMapSet build_named_maps(const ResolutionSet& res, std::vector<std::string>* failures) {
    const QuotientAlgebra& a = res.ctx->A();
    int n = res.n();
    auto P = [&](std::initializer_list<int> v) { return a.reduce_path(RawPath(v)); };

    NamedMapSet nm;
    nm.res = &res;

    for (int i = 1; i <= n - 1; ++i) {
        // alpha_{i,i+1}: P(L_{i+1}) -> P(L_i), degree 0
        {
            DGMap f = zero_map(res.at(i + 1), res.at(i), 0);
            Diamond t = diamond_indices(i);
            if (i + 1 < n) {
                Diamond s = diamond_indices(i + 1);
                f.at(s.g2, t.g4) = P({i});
                f.at(s.g1, t.g3) = P({i + 1});
            } else {
                // source is the ladder resolution of L_n
                f.at(ladder_top(n - 1), t.g4) = P({n - 1});
                f.at(ladder_top(n - 1), t.g3) = P({n - 1, n});
                if (n > 2) {
                    f.at(ladder_bot(n, n - 2), t.g4) = P({n - 2, n - 1});
                    f.at(ladder_bot(n, n - 2), t.g3) = P({n - 2, n - 1, n});
                }
            }
            nm.alphas.emplace(std::make_pair(i, i + 1), std::move(f));
        }
        // alpha_{i+1,i}: P(L_i) -> P(L_{i+1}), degree 1
        {
            DGMap f = zero_map(res.at(i), res.at(i + 1), 1);
            Diamond s = diamond_indices(i);
            if (i + 1 < n) {
                Diamond t = diamond_indices(i + 1);
                f.at(s.g1, t.g1) = P({i, i + 1});
                f.at(s.g1, t.g2) = P({i});
                if (s.g2 >= 0) {
                    f.at(s.g2, t.g1) = P({i - 1, i, i + 1});
                    f.at(s.g2, t.g2) = P({i - 1, i});
                }
                f.at(s.g3, t.g4) = P({i + 1});
            } else {
                f.at(s.g1, ladder_top(n - 1)) = P({n - 1});
                if (s.g2 >= 0) f.at(s.g2, ladder_bot(n, n - 2)) = P({n - 2});
                f.at(s.g3, ladder_top(n)) = P({n});
            }
            nm.alphas.emplace(std::make_pair(i + 1, i), std::move(f));
        }
    }

    for (int i = 1; i <= n - 1; ++i) {
        DGMap f = zero_map(res.at(i), res.at(i), 0);
        Diamond d = diamond_indices(i);
        f.at(d.g1, d.g1) = P({i});
        if (d.g2 >= 0) f.at(d.g2, d.g2) = P({i - 1});
        nm.hs.push_back(std::move(f));
    }
    {
        DGMap f = zero_map(res.at(n), res.at(n), 0);
        f.at(ladder_top(n), ladder_top(n)) = P({n});
        nm.hs.push_back(std::move(f));
    }

    for (int i = 1; i <= n - 2; ++i) {
        DGMap f = zero_map(res.at(i), res.at(n), 1);
        Diamond s = diamond_indices(i);
        f.at(s.g1, ladder_top(i)) = P({i});
        if (s.g2 >= 0) f.at(s.g2, ladder_bot(n, i - 1)) = P({i - 1});
        nm.hns.push_back(std::move(f));
    }
    nm.hns.push_back(nm.alphas.at({n, n - 1}));   // h_{n,n-1} = alpha_{n,n-1}

    if (failures) {
        for (auto& [key, f] : nm.alphas) {
            auto bad = validate_map(f);
            failures->insert(failures->end(), bad.begin(), bad.end());
            int want = key.first > key.second ? 1 : 0;
            if (f.degree != want)
                failures->push_back("alpha has wrong declared degree");
            if (!map_differential(f).is_zero())
                failures->push_back("alpha_{" + std::to_string(key.first) + "," +
                                    std::to_string(key.second) + "} is not a cycle");
        }
        for (const DGMap& f : nm.hs) {
            auto bad = validate_map(f);
            failures->insert(failures->end(), bad.begin(), bad.end());
        }
        for (const DGMap& f : nm.hns) {
            auto bad = validate_map(f);
            failures->insert(failures->end(), bad.begin(), bad.end());
        }
    }
    return nm;
}

namespace {

void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
           const std::string& witness = "") {
    out.push_back({name, pass, pass ? "" : witness});
}

void check_equal(std::vector<CheckResult>& out, const std::string& name, const DGMap& lhs,
                 const DGMap& rhs) {
    bool ok = maps_equal(lhs, rhs);
    check(out, name, ok, ok ? "" : "lhs = " + lhs.describe() + "; rhs = " + rhs.describe());
}

void check_zero(std::vector<CheckResult>& out, const std::string& name, const DGMap& f) {
    check(out, name, f.is_zero(), f.describe());
}

} // namespace

std::vector<CheckResult> verify_generator_relations(const NamedMapSet& nm) {
    std::vector<CheckResult> out;
    int n = nm.res->n();
    auto idx = [](const std::string& s, int i) { return s + "_" + std::to_string(i); };

    for (int i = 1; i <= n; ++i) {
        const CellModule& p = nm.res->at(i);
        DGMap one = identity_map(p);
        check_equal(out, idx("idempotent 1", i), compose(one, one), one);
    }
    for (auto& [key, f] : nm.alphas) {
        DGMap li = identity_map(nm.res->at(key.first));
        DGMap rj = identity_map(nm.res->at(key.second));
        check_equal(out, "1_" + std::to_string(key.first) + " alpha = alpha",
                    compose(li, f), f);
        check_equal(out, "alpha 1_" + std::to_string(key.second) + " = alpha",
                    compose(f, rj), f);
    }

    for (int i = 1; i + 2 <= n; ++i)
        check_zero(out, idx("alpha_{i,i+1} alpha_{i+1,i+2} = 0 at i", i),
                   compose(nm.alpha(i, i + 1), nm.alpha(i + 1, i + 2)));
    for (int i = 1; i + 3 <= n; ++i)
        check_zero(out, idx("alpha_{i+2,i+1} alpha_{i+1,i} = 0 at i", i),
                   compose(nm.alpha(i + 2, i + 1), nm.alpha(i + 1, i)));
    for (int i = 1; i <= n; ++i)
        check_equal(out, idx("h_i^2 = h_i at i", i), compose(nm.h(i), nm.h(i)), nm.h(i));
    for (int i = 1; i <= n - 1; ++i)
        check_zero(out, idx("h_i alpha_{i,i+1} = 0 at i", i),
                   compose(nm.h(i), nm.alpha(i, i + 1)));
    for (int i = 1; i + 2 <= n; ++i)
        check_equal(out, idx("alpha_{i,i+1} h_{i+1} = alpha_{i,i+1} at i", i),
                    compose(nm.alpha(i, i + 1), nm.h(i + 1)), nm.alpha(i, i + 1));
    for (int i = 1; i <= n - 1; ++i)
        check_zero(out, idx("alpha_{i,i+1} alpha_{i+1,i} alpha_{i,i+1} = 0 at i", i),
                   compose(compose(nm.alpha(i, i + 1), nm.alpha(i + 1, i)), nm.alpha(i, i + 1)));
    check_zero(out, "alpha_{n-1,n} h_n = 0", compose(nm.alpha(n - 1, n), nm.h(n)));
    for (int i = 1; i + 2 <= n; ++i)
        check_equal(out, idx("alpha_{i+1,i} h_i = h_{i+1} alpha_{i+1,i} at i", i),
                    compose(nm.alpha(i + 1, i), nm.h(i)),
                    compose(nm.h(i + 1), nm.alpha(i + 1, i)));
    check_equal(out, "alpha_{n,n-1} h_{n-1} + h_n alpha_{n,n-1} = alpha_{n,n-1}",
                add(compose(nm.alpha(n, n - 1), nm.h(n - 1)),
                    compose(nm.h(n), nm.alpha(n, n - 1))),
                nm.alpha(n, n - 1));
    for (int i = 1; i <= n - 2; ++i) {
        check_equal(out, idx("h_{n,i} h_i = h_{n,i} at i", i),
                    compose(nm.hn(i), nm.h(i)), nm.hn(i));
        check_zero(out, idx("h_n h_{n,i} = 0 at i", i), compose(nm.h(n), nm.hn(i)));
        check_zero(out, idx("h_{n,i} alpha_{i,i+1} = 0 at i", i),
                   compose(nm.hn(i), nm.alpha(i, i + 1)));
    }

    // differential formulas
    for (int i = 1; i <= n; ++i)
        check_zero(out, idx("d(1_i) = 0 at i", i),
                   map_differential(identity_map(nm.res->at(i))));
    for (auto& [key, f] : nm.alphas)
        check_zero(out, "d(alpha_{" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + "}) = 0",
                   map_differential(f));
    for (int i = 1; i <= n - 1; ++i)
        check_equal(out, idx("d(h_i) = la_i + ra_i at i", i), map_differential(nm.h(i)),
                    add(nm.la(i), nm.ra(i)));
    for (int i = 1; i <= n - 2; ++i)
        check_equal(out, idx("d(h_{n,i}) = h_{n,i+1} alpha_{i+1,i} at i", i),
                    map_differential(nm.hn(i)), compose(nm.hn(i + 1), nm.alpha(i + 1, i)));
    // stated only inside the block tables; checked under its own label
    check_equal(out, "d(h_n) = alpha_{n,n-1} alpha_{n-1,n}", map_differential(nm.h(n)),
                compose(nm.alpha(n, n - 1), nm.alpha(n - 1, n)));
    return out;
}

int EndoAlgebra::index_of(const std::string& name) const {
    auto it = by_name.find(name);
    if (it == by_name.end()) throw std::invalid_argument("EndoAlgebra: no basis map " + name);
    return it->second;
}

BitVec EndoAlgebra::mul_vec(const BitVec& x, const BitVec& y) const {
    BitVec out(dim());
    for (std::size_t a : x.set_bits())
        for (std::size_t b : y.set_bits()) out.xor_with(mul_basis(a, b));
    return out;
}

BitVec EndoAlgebra::d_vec(const BitVec& x) const {
    BitVec out(dim());
    for (std::size_t a : x.set_bits()) out.xor_with(diff[a]);
    return out;
}

std::string EndoAlgebra::vec_name(const BitVec& x) const {
    auto bits = x.set_bits();
    if (bits.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (k) s += " + ";
        s += basis[bits[k]].name;
    }
    return s;
}

EndoAlgebra build_eprime(const NamedMapSet& nm, std::vector<std::string>* failures) {
    const ResolutionSet& res = *nm.res;
    int n = res.n();
    EndoAlgebra e;
    e.res = &res;

    auto push = [&](DGMap m, const std::string& name, int bi, int bj) {
        EndoAlgebra::BasisMap bm;
        bm.degree = m.degree;
        bm.map = std::move(m);
        bm.name = name;
        bm.bi = bi;
        bm.bj = bj;
        e.blocks[{bi, bj}].push_back(static_cast<int>(e.basis.size()));
        e.by_name[name] = static_cast<int>(e.basis.size());
        e.basis.push_back(std::move(bm));
    };
    auto nm_i = [](const std::string& s, int i) { return s + "_" + std::to_string(i); };
    auto nm_ij = [](const std::string& s, int i, int j) {
        return s + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    };

    for (int i = 1; i <= n - 1; ++i) {
        push(identity_map(res.at(i)), nm_i("1", i), i, i);
        push(nm.h(i), nm_i("h", i), i, i);
        push(nm.ra(i), nm_i("ra", i), i, i);
        push(nm.la(i), nm_i("la", i), i, i);
    }
    push(identity_map(res.at(n)), nm_i("1", n), n, n);
    push(nm.h(n), nm_i("h", n), n, n);
    push(compose(nm.alpha(n, n - 1), nm.alpha(n - 1, n)),
         nm_ij("a", n, n - 1) + nm_ij("a", n - 1, n), n, n);

    for (int i = 1; i <= n - 1; ++i)
        push(nm.alpha(i, i + 1), nm_ij("a", i, i + 1), i, i + 1);
    for (int i = 1; i <= n - 2; ++i) {
        push(nm.alpha(i + 1, i), nm_ij("a", i + 1, i), i + 1, i);
        push(compose(nm.alpha(i + 1, i), nm.ra(i)), nm_ij("a", i + 1, i) + nm_i("ra", i),
             i + 1, i);
        push(compose(nm.alpha(i + 1, i), nm.h(i)), nm_ij("a", i + 1, i) + nm_i("h", i),
             i + 1, i);
    }
    {
        DGMap triple = compose(compose(nm.alpha(n, n - 1), nm.alpha(n - 1, n)),
                               nm.alpha(n, n - 1));
        push(nm.alpha(n, n - 1), nm_ij("a", n, n - 1), n, n - 1);
        push(std::move(triple),
             nm_ij("a", n, n - 1) + nm_ij("a", n - 1, n) + nm_ij("a", n, n - 1), n, n - 1);
        push(compose(nm.h(n), nm.alpha(n, n - 1)), nm_i("h", n) + nm_ij("a", n, n - 1),
             n, n - 1);
    }
    for (int i = 1; i <= n - 2; ++i) {
        push(nm.hn(i), nm_ij("h", n, i), n, i);
        push(compose(nm.hn(i + 1), nm.alpha(i + 1, i)),
             (i + 1 <= n - 2 ? nm_ij("h", n, i + 1) : nm_ij("a", n, n - 1)) +
                 nm_ij("a", i + 1, i),
             n, i);
    }

    // per-block hom complexes for flattening maps to coordinates
    std::map<std::pair<int, int>, HomComplex> homs;
    for (auto& [blk, ids] : e.blocks)
        homs.emplace(blk, hom_complex(res.at(blk.second), res.at(blk.first)));

    // independence inside each block
    for (auto& [blk, ids] : e.blocks) {
        const HomComplex& hc = homs.at(blk);
        std::map<int, RowSpace> spaces;
        for (int id : ids) {
            const auto& bm = e.basis[id];
            BitVec v = hc.coords_of(bm.map);
            auto [it, fresh] = spaces.try_emplace(bm.degree, RowSpace(v.size()));
            (void)fresh;
            if (!it->second.absorb(v) && failures)
                failures->push_back("claimed basis map " + bm.name + " is dependent");
        }
    }

    // expression of a block-homogeneous map in the claimed basis
    auto express = [&](const DGMap& f, int bi, int bj) -> std::optional<BitVec> {
        BitVec out(e.dim());
        if (f.is_zero()) return out;
        auto it = e.blocks.find({bi, bj});
        if (it == e.blocks.end()) return std::nullopt;
        const HomComplex& hc = homs.at(std::make_pair(bi, bj));
        BitVec target = hc.coords_of(f);
        std::vector<int> same_degree;
        for (int id : it->second)
            if (e.basis[id].degree == f.degree) same_degree.push_back(id);
        if (same_degree.empty()) return std::nullopt;
        BitMatrix m(target.size(), same_degree.size());
        for (std::size_t c = 0; c < same_degree.size(); ++c) {
            BitVec col = hc.coords_of(e.basis[same_degree[c]].map);
            for (std::size_t r = 0; r < col.size(); ++r)
                if (col.get(r)) m.set(r, c);
        }
        auto sol = solve(m, target);
        if (!sol) return std::nullopt;
        for (std::size_t c = 0; c < same_degree.size(); ++c)
            if (sol->get(c)) out.set(same_degree[c]);
        return out;
    };

    // closure under composition and d, recording structure constants
    std::size_t dim = e.dim();
    e.mult.assign(dim * dim, BitVec(dim));
    e.diff.assign(dim, BitVec(dim));
    for (std::size_t x = 0; x < dim; ++x) {
        for (std::size_t y = 0; y < dim; ++y) {
            const auto& bx = e.basis[x];
            const auto& by = e.basis[y];
            if (bx.bj != by.bi) continue;   // blocks do not compose
            DGMap prod = compose(bx.map, by.map);
            auto expr = express(prod, bx.bi, by.bj);
            if (!expr) {
                if (failures)
                    failures->push_back("closure failure: " + bx.name + " * " + by.name +
                                        " = " + prod.describe());
                continue;
            }
            e.mult[x * dim + y] = std::move(*expr);
        }
        DGMap dx = map_differential(e.basis[x].map);
        auto expr = express(dx, e.basis[x].bi, e.basis[x].bj);
        if (!expr) {
            if (failures) failures->push_back("d-closure failure at " + e.basis[x].name);
            continue;
        }
        e.diff[x] = std::move(*expr);
    }
    return e;
}

EndoAlgebra corner_subalgebra(const EndoAlgebra& e, int keep_max) {
    EndoAlgebra s;
    s.res = e.res;
    std::vector<int> old_to_new(e.dim(), -1);
    for (std::size_t i = 0; i < e.dim(); ++i) {
        const auto& bm = e.basis[i];
        if (bm.bi > keep_max || bm.bj > keep_max) continue;
        old_to_new[i] = static_cast<int>(s.basis.size());
        s.blocks[{bm.bi, bm.bj}].push_back(static_cast<int>(s.basis.size()));
        s.by_name[bm.name] = static_cast<int>(s.basis.size());
        s.basis.push_back(bm);
    }
    std::size_t d = s.dim();
    s.mult.assign(d * d, BitVec(d));
    s.diff.assign(d, BitVec(d));
    auto project = [&](const BitVec& v) {
        BitVec out(d);
        for (std::size_t t : v.set_bits())
            if (old_to_new[t] >= 0) out.set(old_to_new[t]);
        return out;
    };
    for (std::size_t i = 0; i < e.dim(); ++i) {
        if (old_to_new[i] < 0) continue;
        for (std::size_t j = 0; j < e.dim(); ++j) {
            if (old_to_new[j] < 0) continue;
            s.mult[old_to_new[i] * d + old_to_new[j]] = project(e.mul_basis(i, j));
        }
        s.diff[old_to_new[i]] = project(e.diff[i]);
    }
    return s;
}

HomologyClasses homology_algebra(const EndoAlgebra& e) {
    HomologyClasses h;
    h.e = &e;

    std::map<std::tuple<int, int, int>, std::vector<int>> cells;
    for (std::size_t i = 0; i < e.dim(); ++i)
        cells[{e.basis[i].bi, e.basis[i].bj, e.basis[i].degree}].push_back(
            static_cast<int>(i));

    std::map<std::tuple<int, int, int>, RowSpace> bdry;
    for (auto& [key, ids] : cells) {
        auto [bi, bj, deg] = key;
        RowSpace rs(e.dim());
        auto lower = cells.find({bi, bj, deg - 1});
        if (lower != cells.end())
            for (int id : lower->second) {
                BitVec v(e.dim());
                v.set(id);
                rs.absorb(e.d_vec(v));
            }
        bdry.emplace(key, std::move(rs));
    }

    for (auto& [key, ids] : cells) {
        auto [bi, bj, deg] = key;
        RowSpace seen = bdry.at(key);   // boundaries plus chosen representatives
        for (int id : ids) {
            BitVec v(e.dim());
            v.set(id);
            if (!e.d_vec(v).is_zero()) continue;   // prefer named cycles
            BitVec red = seen.reduce(v);
            if (red.is_zero()) continue;
            seen.absorb(red);
            HomologyClasses::Cls c;
            c.rep = v;
            c.name = "[" + e.basis[id].name + "]";
            c.bi = bi;
            c.bj = bj;
            c.degree = deg;
            h.blocks[{bi, bj}].push_back(static_cast<int>(h.classes.size()));
            h.classes.push_back(std::move(c));
        }
        // fall back to kernel combinations if pure elements did not span
        BitMatrix dmat(e.dim(), ids.size());
        for (std::size_t c = 0; c < ids.size(); ++c) {
            BitVec v(e.dim());
            v.set(ids[c]);
            BitVec dv = e.d_vec(v);
            for (std::size_t r = 0; r < e.dim(); ++r)
                if (dv.get(r)) dmat.set(r, c);
        }
        for (const BitVec& k : kernel(dmat)) {
            BitVec v(e.dim());
            for (std::size_t c : k.set_bits()) v.set(ids[c]);
            BitVec red = seen.reduce(v);
            if (red.is_zero()) continue;
            seen.absorb(red);
            HomologyClasses::Cls c;
            c.rep = v;
            c.name = "[" + e.vec_name(v) + "]";
            c.bi = bi;
            c.bj = bj;
            c.degree = deg;
            h.blocks[{bi, bj}].push_back(static_cast<int>(h.classes.size()));
            h.classes.push_back(std::move(c));
        }
    }

    std::size_t d = h.classes.size();
    h.mult.assign(d * d, BitVec(d));
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            const auto& cx = h.classes[x];
            const auto& cy = h.classes[y];
            if (cx.bj != cy.bi) continue;
            BitVec prod = e.mul_vec(cx.rep, cy.rep);
            auto expr = h.express(prod, cx.bi, cy.bj, cx.degree + cy.degree);
            if (!expr)
                throw std::logic_error("homology_algebra: product of cycles not expressible");
            h.mult[x * d + y] = std::move(*expr);
        }
    return h;
}

std::optional<BitVec> HomologyClasses::express(const BitVec& cycle, int i, int j,
                                               int degree) const {
    BitVec out(dim());
    if (cycle.is_zero()) return out;
    std::vector<int> ids;
    auto it = blocks.find({i, j});
    if (it != blocks.end())
        for (int c : it->second)
            if (classes[c].degree == degree) ids.push_back(c);
    RowSpace bdry(e->dim());
    for (std::size_t b = 0; b < e->dim(); ++b) {
        const auto& bm = e->basis[b];
        if (bm.bi == i && bm.bj == j && bm.degree == degree - 1) {
            BitVec v(e->dim());
            v.set(b);
            bdry.absorb(e->d_vec(v));
        }
    }
    BitVec target = bdry.reduce(cycle);
    if (target.is_zero()) return out;
    if (ids.empty()) return std::nullopt;
    BitMatrix m(e->dim(), ids.size());
    for (std::size_t c = 0; c < ids.size(); ++c) {
        BitVec col = bdry.reduce(classes[ids[c]].rep);
        for (std::size_t r = 0; r < e->dim(); ++r)
            if (col.get(r)) m.set(r, c);
    }
    auto sol = solve(m, target);
    if (!sol) return std::nullopt;
    for (std::size_t c = 0; c < ids.size(); ++c)
        if (sol->get(c)) out.set(ids[c]);
    return out;
}

std::vector<CheckResult> verify_iso_an(const HomologyClasses& h, const QuotientAlgebra& an) {
    std::vector<CheckResult> out;
    int n = an.quiver.vertices;

    bool dims_ok = true;
    std::string dim_witness;
    for (int i = 1; i <= n && dims_ok; ++i)
        for (int j = 1; j <= n && dims_ok; ++j) {
            std::map<int, std::size_t> want, got;
            for (int id : an.block_ids(i, j)) want[an.basis[id].degree]++;
            auto it = h.blocks.find({i, j});
            if (it != h.blocks.end())
                for (int c : it->second) got[h.classes[c].degree]++;
            if (want != got) {
                dims_ok = false;
                dim_witness = "block (" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
    check(out, "graded block dimensions of H(E') match A_n", dims_ok, dim_witness);
    if (!dims_ok) return out;

    auto cls = [&](const std::string& name) {
        for (std::size_t c = 0; c < h.classes.size(); ++c)
            if (h.classes[c].name == "[" + name + "]") return static_cast<int>(c);
        throw std::logic_error("verify_iso_an: missing class " + name);
    };
    auto unit_vec = [&](int c) {
        BitVec v(h.dim());
        v.set(c);
        return v;
    };
    auto mul = [&](const BitVec& x, const BitVec& y) {
        BitVec outv(h.dim());
        for (std::size_t a : x.set_bits())
            for (std::size_t b : y.set_bits()) outv.xor_with(h.mult[a * h.dim() + b]);
        return outv;
    };

    std::vector<BitVec> phi;
    for (std::size_t b = 0; b < an.dim(); ++b) {
        const RawPath& p = an.basis[b].path;
        BitVec acc = unit_vec(cls("1_" + std::to_string(p[0])));
        for (std::size_t k = 0; k + 1 < p.size(); ++k)
            acc = mul(acc, unit_vec(cls("a_{" + std::to_string(p[k]) + "," +
                                        std::to_string(p[k + 1]) + "}")));
        phi.push_back(std::move(acc));
    }

    {
        RowSpace span(h.dim());
        bool indep = true;
        for (auto& v : phi)
            if (!span.absorb(v)) indep = false;
        check(out, "phi maps the A_n basis to a basis of H(E')",
              indep && span.dim() == h.dim());
    }

    bool mult_ok = true;
    std::string mw;
    for (std::size_t a = 0; a < an.dim() && mult_ok; ++a)
        for (std::size_t b = 0; b < an.dim() && mult_ok; ++b) {
            BitVec lhs = mul(phi[a], phi[b]);
            Element pr = an.element(static_cast<int>(a)) * an.element(static_cast<int>(b));
            BitVec rhs(h.dim());
            for (std::size_t t : pr.c.set_bits()) rhs.xor_with(phi[t]);
            if (lhs != rhs) {
                mult_ok = false;
                mw = an.basis_name(static_cast<int>(a)) + " * " +
                     an.basis_name(static_cast<int>(b));
            }
        }
    check(out, "phi respects all structure constants", mult_ok, mw);
    return out;
}

std::vector<CheckResult> verify_quasi_iso_inclusion(const ResolutionSet& res,
                                                    const HomologyClasses& h) {
    std::vector<CheckResult> out;
    int n = res.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            ExtTable t = ext_table(*res.ctx, res.at(i), res.at(j));
            std::map<int, std::size_t> full, sub;
            for (int deg = t.h.min_degree;
                 deg < t.h.min_degree + static_cast<int>(t.h.dims.size()); ++deg)
                if (t.h.dim_at(deg)) full[deg] = t.h.dim_at(deg);
            auto it = h.blocks.find({i, j});
            if (it != h.blocks.end())
                for (int c : it->second) sub[h.classes[c].degree]++;
            bool ok = full == sub;
            check(out,
                  "H(E) = H(E') in block (" + std::to_string(i) + "," + std::to_string(j) + ")",
                  ok, ok ? "" : "full endomorphism homology differs from the subalgebra");
        }
    return out;
}

std::unique_ptr<Tower> build_tower(int n) {
    auto t = std::make_unique<Tower>();
    t->dg = an_shriek_dg(n);
    t->res = build_resolutions(t->dg);
    t->named = build_named_maps(t->res, &t->construction_failures);
    t->eprime = build_eprime(t->named, &t->construction_failures);
    t->s = corner_subalgebra(t->eprime, n - 1);
    return t;
}

} // namespace zz
