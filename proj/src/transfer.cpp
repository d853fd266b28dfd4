#include "zz/transfer.hpp"

#include <stdexcept>

namespace zz {

BitVec Contraction::apply_p(const BitVec& sv) const {
    BitVec out(c->dim());
    for (std::size_t b : sv.set_bits()) out.xor_with(p[b]);
    return out;
}

BitVec Contraction::apply_j(const BitVec& cv) const {
    BitVec out(s->dim());
    for (std::size_t b : cv.set_bits()) out.xor_with(j[b]);
    return out;
}

BitVec Contraction::apply_h(const BitVec& sv) const {
    BitVec out(s->dim());
    for (std::size_t b : sv.set_bits()) out.xor_with(h[b]);
    return out;
}

Contraction build_contraction(const EndoAlgebra& s, const QuotientAlgebra& c) {
    int m = 0;   // number of corner idempotents
    for (auto& [blk, ids] : s.blocks) m = std::max(m, blk.first);
    if (c.unit_vertices.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("build_contraction: corner size does not match the algebra");

    Contraction k;
    k.s = &s;
    k.c = &c;
    k.p.assign(s.dim(), BitVec(c.dim()));
    k.j.assign(c.dim(), BitVec(s.dim()));
    k.h.assign(s.dim(), BitVec(s.dim()));

    auto cpath = [&](const RawPath& p) {
        int id = c.find_path(p);
        if (id < 0) throw std::logic_error("build_contraction: missing path in C");
        return static_cast<std::size_t>(id);
    };
    auto sidx = [&](const std::string& name) { return static_cast<std::size_t>(s.index_of(name)); };
    auto si = [](const std::string& base, int i) { return base + "_" + std::to_string(i); };
    auto sij = [](const std::string& base, int i, int j) {
        return base + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    };

    for (int i = 1; i <= m; ++i) {
        std::size_t loop = static_cast<std::size_t>(c.loop_id(i));
        k.p[sidx(si("1", i))].set(c.idempotent_id(i));
        k.p[sidx(si("ra", i))].set(loop);
        k.p[sidx(si("la", i))].set(loop);
        // h_i goes to zero
        k.j[c.idempotent_id(i)].set(sidx(si("1", i)));
        k.j[loop].set(sidx(si("ra", i)));
        k.h[sidx(si("la", i))].set(sidx(si("h", i)));
    }
    for (int i = 1; i <= m - 1; ++i) {
        k.p[sidx(sij("a", i, i + 1))].set(cpath({i, i + 1}));
        k.p[sidx(sij("a", i + 1, i))].set(cpath({i + 1, i}));
        k.j[cpath({i, i + 1})].set(sidx(sij("a", i, i + 1)));
        k.j[cpath({i + 1, i})].set(sidx(sij("a", i + 1, i)));
        k.h[sidx(sij("a", i + 1, i) + si("ra", i))].set(sidx(sij("a", i + 1, i) + si("h", i)));
        // a_{i+1,i} ra_i and a_{i+1,i} h_i are sent to 0 by p; H kills the rest
    }
    return k;
}

std::vector<CheckResult> verify_contraction(const Contraction& k) {
    std::vector<CheckResult> out;
    const EndoAlgebra& s = *k.s;
    const QuotientAlgebra& c = *k.c;

    bool pj = true;
    for (std::size_t b = 0; b < c.dim(); ++b) {
        BitVec e(c.dim());
        e.set(b);
        if (k.apply_p(k.apply_j(e)) != e) pj = false;
    }
    out.push_back({"p j = id on C", pj, ""});

    bool pchain = true, jchain = true;
    for (std::size_t b = 0; b < s.dim(); ++b) {
        BitVec e(s.dim());
        e.set(b);
        if (!k.apply_p(s.d_vec(e)).is_zero()) pchain = false;
    }
    for (std::size_t b = 0; b < c.dim(); ++b) {
        BitVec e(c.dim());
        e.set(b);
        if (!s.d_vec(k.apply_j(e)).is_zero()) jchain = false;
    }
    out.push_back({"p is a chain map (p d = 0)", pchain, ""});
    out.push_back({"j is a chain map (d j = 0)", jchain, ""});

    bool homotopy = true;
    std::string witness;
    for (std::size_t b = 0; b < s.dim(); ++b) {
        BitVec e(s.dim());
        e.set(b);
        BitVec lhs = s.d_vec(k.apply_h(e));
        lhs.xor_with(k.apply_h(s.d_vec(e)));
        BitVec rhs = e;
        rhs.xor_with(k.apply_j(k.apply_p(e)));
        if (lhs != rhs) {
            homotopy = false;
            witness = s.basis[b].name;
        }
    }
    out.push_back({"dH + Hd = id + jp on every basis element", homotopy, witness});

    // side conditions, reported but not required
    bool h2 = true, hj = true, ph = true;
    for (std::size_t b = 0; b < s.dim(); ++b) {
        BitVec e(s.dim());
        e.set(b);
        if (!k.apply_h(k.apply_h(e)).is_zero()) h2 = false;
        if (!k.apply_p(k.apply_h(e)).is_zero()) ph = false;
    }
    for (std::size_t b = 0; b < c.dim(); ++b) {
        BitVec e(c.dim());
        e.set(b);
        if (!k.apply_h(k.apply_j(e)).is_zero()) hj = false;
    }
    out.push_back({"side condition H^2 = 0", h2, ""});
    out.push_back({"side condition H j = 0", hj, ""});
    out.push_back({"side condition p H = 0", ph, ""});
    return out;
}

namespace {

// append all trees with k leaves to out; helper composes left/right choices
void enumerate_into(int k, std::vector<PlanarTree>& out) {
    if (k == 1) {
        PlanarTree t;
        t.leaves = 1;
        t.nodes.push_back({-1, -1, 0});
        t.root = 0;
        out.push_back(std::move(t));
        return;
    }
    for (int a = 1; a <= k - 1; ++a) {
        std::vector<PlanarTree> ls, rs;
        enumerate_into(a, ls);
        enumerate_into(k - a, rs);
        for (const auto& l : ls)
            for (const auto& r : rs) {
                PlanarTree t;
                t.leaves = k;
                // copy left subtree, then right with offsets
                int lroot = 0, rroot = 0;
                {
                    int off = static_cast<int>(t.nodes.size());
                    for (auto nd : l.nodes) {
                        if (nd.left >= 0) nd.left += off;
                        if (nd.right >= 0) nd.right += off;
                        t.nodes.push_back(nd);
                    }
                    lroot = l.root + off;
                }
                {
                    int off = static_cast<int>(t.nodes.size());
                    for (auto nd : r.nodes) {
                        if (nd.left >= 0) nd.left += off;
                        if (nd.right >= 0) nd.right += off;
                        if (nd.leaf >= 0) nd.leaf += a;
                        t.nodes.push_back(nd);
                    }
                    rroot = r.root + off;
                }
                t.root = static_cast<int>(t.nodes.size());
                t.nodes.push_back({lroot, rroot, -1});
                out.push_back(std::move(t));
            }
    }
}

} // namespace

std::vector<PlanarTree> enumerate_trees(int k) {
    if (k < 2) throw std::invalid_argument("enumerate_trees: need at least two leaves");
    std::vector<PlanarTree> out;
    enumerate_into(k, out);
    return out;
}

BitVec AInfinityTable::value(int arity, const std::vector<int>& tuple) const {
    auto it = ops.find(arity);
    if (it != ops.end()) {
        auto jt = it->second.find(tuple);
        if (jt != it->second.end()) return jt->second;
    }
    return BitVec(c->dim());
}

std::size_t AInfinityTable::entries(int arity) const {
    auto it = ops.find(arity);
    return it == ops.end() ? 0 : it->second.size();
}

namespace {

BitVec eval_node(const Contraction& k, const PlanarTree& t, int node,
                 const std::vector<int>& tuple) {
    const auto& nd = t.nodes[node];
    if (nd.leaf >= 0) {
        BitVec e(k.c->dim());
        e.set(tuple[nd.leaf]);
        return k.apply_j(e);
    }
    BitVec l = eval_node(k, t, nd.left, tuple);
    BitVec r = eval_node(k, t, nd.right, tuple);
    BitVec prod = k.s->mul_vec(l, r);
    if (node == t.root) return prod;   // the root edge carries p, applied by the caller
    return k.apply_h(prod);
}

} // namespace

BitVec evaluate_tree(const Contraction& k, const PlanarTree& t, const std::vector<int>& tuple) {
    if (static_cast<int>(tuple.size()) != t.leaves)
        throw std::invalid_argument("evaluate_tree: tuple size != leaf count");
    return k.apply_p(eval_node(k, t, t.root, tuple));
}

std::vector<std::vector<int>> composable_tuples(const QuotientAlgebra& c, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int tgt_needed) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (std::size_t b = 0; b < c.dim(); ++b) {
            if (tgt_needed >= 0 && c.basis[b].src != tgt_needed) continue;
            cur.push_back(static_cast<int>(b));
            self(self, c.basis[b].tgt);
            cur.pop_back();
        }
    };
    rec(rec, -1);
    return out;
}

AInfinityTable transferred_operations(const Contraction& k, int max_arity) {
    for (const CheckResult& c : verify_contraction(k))
        if (!c.pass && c.name.rfind("side condition", 0) != 0)
            throw std::logic_error("transferred_operations: contraction check failed: " + c.name);

    AInfinityTable t;
    t.c = k.c;
    t.max_arity = max_arity;
    for (int arity = 2; arity <= max_arity; ++arity) {
        auto trees = enumerate_trees(arity);
        std::map<std::vector<int>, BitVec> layer;
        for (const auto& tuple : composable_tuples(*k.c, arity)) {
            BitVec acc(k.c->dim());
            for (const auto& tree : trees) acc.xor_with(evaluate_tree(k, tree, tuple));
            if (!acc.is_zero()) layer.emplace(tuple, std::move(acc));
        }
        t.ops.emplace(arity, std::move(layer));
    }
    return t;
}

std::vector<CheckResult> verify_minimal_model(const AInfinityTable& t) {
    std::vector<CheckResult> out;
    const QuotientAlgebra& c = *t.c;
    int m = static_cast<int>(c.unit_vertices.size());   // vertices of the zigzag

    // m_2 is the multiplication
    {
        bool ok = true;
        std::string w;
        for (const auto& tuple : composable_tuples(c, 2)) {
            BitVec got = t.value(2, tuple);
            const BitVec& want = c.mul_basis(tuple[0], tuple[1]);
            if (got != want) {
                ok = false;
                w = c.basis_name(tuple[0]) + " * " + c.basis_name(tuple[1]);
            }
        }
        out.push_back({"m_2 equals the structure constants", ok, w});
    }

    // expected m_3 support: the three families
    std::map<std::vector<int>, std::size_t> families;
    auto pid = [&](const RawPath& p) { return c.find_path(p); };
    for (int i = 1; i <= m; ++i) {
        int loop = c.loop_id(i);
        if (i + 1 <= m)
            families[{pid({i, i + 1}), pid({i + 1, i}), loop}] = loop;
        if (i >= 2) {
            families[{pid({i - 1, i}), pid({i, i - 1}), pid({i - 1, i})}] = pid({i - 1, i});
            families[{loop, pid({i, i - 1}), pid({i - 1, i})}] = loop;
        }
    }
    {
        bool ok = true;
        std::string w;
        auto it = t.ops.find(3);
        std::size_t seen = it == t.ops.end() ? 0 : it->second.size();
        if (seen != families.size()) {
            ok = false;
            w = "m_3 has " + std::to_string(seen) + " entries, expected " +
                std::to_string(families.size());
        } else if (it != t.ops.end()) {
            for (auto& [tuple, val] : it->second) {
                auto fam = families.find(tuple);
                BitVec want(c.dim());
                if (fam != families.end()) want.set(fam->second);
                if (fam == families.end() || val != want) {
                    ok = false;
                    w = "unexpected m_3 entry at (" + c.basis_name(tuple[0]) + ", " +
                        c.basis_name(tuple[1]) + ", " + c.basis_name(tuple[2]) + ")";
                }
            }
        }
        out.push_back({"m_3 is supported exactly on the three families", ok, w});
        out.push_back({"m_3 has 3(n-2) entries", seen == static_cast<std::size_t>(3 * (m - 1)),
                       "count " + std::to_string(seen)});
    }

    for (int arity = 4; arity <= t.max_arity; ++arity)
        out.push_back({"m_" + std::to_string(arity) + " vanishes", t.entries(arity) == 0,
                       std::to_string(t.entries(arity)) + " entries"});

    // degree bookkeeping on every stored entry
    {
        bool ok = true;
        std::string w;
        for (auto& [arity, layer] : t.ops)
            for (auto& [tuple, val] : layer) {
                int want = 2 - arity;
                for (int b : tuple) want += c.basis[b].degree;
                for (std::size_t v : val.set_bits())
                    if (c.basis[v].degree != want) {
                        ok = false;
                        w = "arity " + std::to_string(arity);
                    }
            }
        out.push_back({"deg(out) = sum deg(in) + 2 - k on every entry", ok, w});
    }
    return out;
}

std::vector<CheckResult> a_infinity_relation_check(const AInfinityTable& t, int total_arity) {
    std::vector<CheckResult> out;
    const QuotientAlgebra& c = *t.c;
    for (int N = 1; N <= total_arity; ++N) {
        bool ok = true;
        std::string w;
        for (const auto& tuple : composable_tuples(c, N)) {
            BitVec acc(c.dim());
            for (int s = 1; s <= N; ++s)
                for (int r = 0; r + s <= N; ++r) {
                    int u = N - s + 1;
                    if (s == 1 || u < 1) continue;   // m_1 = 0
                    // inner window [r, r+s)
                    std::vector<int> window(tuple.begin() + r, tuple.begin() + r + s);
                    BitVec inner = t.value(s, window);
                    for (std::size_t ib : inner.set_bits()) {
                        std::vector<int> outer;
                        outer.insert(outer.end(), tuple.begin(), tuple.begin() + r);
                        outer.push_back(static_cast<int>(ib));
                        outer.insert(outer.end(), tuple.begin() + r + s, tuple.end());
                        acc.xor_with(t.value(u, outer));
                    }
                }
            if (!acc.is_zero() && ok) {
                ok = false;
                w = "failure at arity " + std::to_string(N);
            }
        }
        out.push_back({"Stasheff relation at arity " + std::to_string(N), ok, w});
    }
    return out;
}

} // namespace zz
