#include "zz/bimodule.hpp"

#include <functional>
#include <stdexcept>

namespace zz {

std::size_t AInfBimodule::dim() const { return pairs.size(); }

int AInfBimodule::src_of(int mid) const {
    return kind == Kind::diagonal ? c->basis[pairs[mid].first].src
                                  : c->basis[pairs[mid].first].src;
}

int AInfBimodule::tgt_of(int mid) const {
    return kind == Kind::diagonal ? c->basis[pairs[mid].first].tgt
                                  : c->basis[pairs[mid].second].tgt;
}

int AInfBimodule::degree_of(int mid) const {
    if (kind == Kind::diagonal) return c->basis[pairs[mid].first].degree;
    return c->basis[pairs[mid].first].degree + c->basis[pairs[mid].second].degree;
}

std::string AInfBimodule::name_of(int mid) const {
    if (kind == Kind::diagonal) return c->basis_name(pairs[mid].first);
    return c->basis_name(pairs[mid].first) + "(x)" + c->basis_name(pairs[mid].second);
}

int AInfBimodule::pair_index(int u, int v) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first == u && pairs[i].second == v) return static_cast<int>(i);
    return -1;
}

BitVec AInfBimodule::op(int a, int b, const std::vector<int>& xs, int mid,
                        const std::vector<int>& ys) const {
    BitVec out(dim());
    if (kind == Kind::diagonal) {
        // m_{a,b} = m_{a+b-1} on the concatenated inputs
        std::vector<int> tuple;
        tuple.reserve(xs.size() + 1 + ys.size());
        tuple.insert(tuple.end(), xs.begin(), xs.end());
        tuple.push_back(pairs[mid].first);
        tuple.insert(tuple.end(), ys.begin(), ys.end());
        BitVec val = alg->value(a + b - 1, tuple);
        for (std::size_t w : val.set_bits()) out.set(w);
        return out;
    }
    // outer product: zero unless exactly one side is active
    if (a > 1 && b > 1) return out;
    if (a == 1 && b == 1) return out;   // m_{1,1} = m_1 (x) id = 0
    auto [u, v] = pairs[mid];
    if (b == 1) {
        std::vector<int> tuple = xs;
        tuple.push_back(u);
        BitVec val = alg->value(a, tuple);
        for (std::size_t w : val.set_bits()) {
            int id = pair_index(static_cast<int>(w), v);
            if (id < 0) throw std::logic_error("AInfBimodule::op escaped the basis");
            out.flip(id);
        }
    } else {
        std::vector<int> tuple{v};
        tuple.insert(tuple.end(), ys.begin(), ys.end());
        BitVec val = alg->value(b, tuple);
        for (std::size_t w : val.set_bits()) {
            int id = pair_index(u, static_cast<int>(w));
            if (id < 0) throw std::logic_error("AInfBimodule::op escaped the basis");
            out.flip(id);
        }
    }
    return out;
}

AInfBimodule build_bk(const AInfinityTable& t, int k) {
    const QuotientAlgebra& c = *t.c;
    int m = static_cast<int>(c.unit_vertices.size());
    if (k < 1 || k > m) throw std::invalid_argument("build_bk: corner vertex out of range");
    AInfBimodule b;
    b.alg = &t;
    b.c = &c;
    b.kind = AInfBimodule::Kind::outer_product;
    b.k = k;
    for (std::size_t u = 0; u < c.dim(); ++u) {
        if (c.basis[u].tgt != k) continue;
        for (std::size_t v = 0; v < c.dim(); ++v)
            if (c.basis[v].src == k)
                b.pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return b;
}

AInfBimodule build_diagonal(const AInfinityTable& t) {
    AInfBimodule b;
    b.alg = &t;
    b.c = t.c;
    b.kind = AInfBimodule::Kind::diagonal;
    for (std::size_t u = 0; u < t.c->dim(); ++u)
        b.pairs.emplace_back(static_cast<int>(u), static_cast<int>(u));
    return b;
}

BitVec BimoduleMap::component(int a, int b, const std::vector<int>& xs, int mid,
                              const std::vector<int>& ys) const {
    BitVec out(tgt->dim());
    auto [u, v] = src->pairs[mid];
    const AInfinityTable& t = *src->alg;
    if (a == 1 && b == 1) {
        // the evaluation u (x) v -> u v; without it the morphism relations
        // fail already at total arity three (the cone of f is the twist, and
        // evaluation is its unit component)
        for (std::size_t w : t.c->mul_basis(u, v).set_bits()) out.set(w);
    } else if (a == 2 && b == 1) {
        BitVec val = t.value(3, {xs[0], u, v});
        for (std::size_t w : val.set_bits()) out.set(w);
    } else if (a == 1 && b == 2) {
        BitVec val = t.value(3, {u, v, ys[0]});
        for (std::size_t w : val.set_bits()) out.set(w);
    }
    return out;
}

BimoduleMap build_f(const AInfBimodule& bk, const AInfBimodule& diag) {
    if (bk.kind != AInfBimodule::Kind::outer_product ||
        diag.kind != AInfBimodule::Kind::diagonal)
        throw std::invalid_argument("build_f: expected an outer product and the diagonal");
    BimoduleMap f;
    f.src = &bk;
    f.tgt = &diag;
    return f;
}

namespace {

// composable sequences (x_1..x_p, mid, y_1..y_q)
struct Sequence {
    std::vector<int> xs;
    int mid = 0;
    std::vector<int> ys;
};

void enumerate_sequences(const AInfBimodule& m, int p, int q,
                         const std::function<void(const Sequence&)>& emit) {
    const QuotientAlgebra& c = *m.c;
    std::vector<std::vector<int>> xchains, ychains;
    // x-chains of length p (any start), y-chains of length q (any start);
    // junctions with the module element are filtered below
    xchains = composable_tuples(c, p);
    ychains = composable_tuples(c, q);
    Sequence s;
    for (std::size_t mid = 0; mid < m.dim(); ++mid) {
        s.mid = static_cast<int>(mid);
        for (const auto& xs : xchains) {
            if (p > 0 && c.basis[xs.back()].tgt != m.src_of(static_cast<int>(mid))) continue;
            s.xs = xs;
            for (const auto& ys : ychains) {
                if (q > 0 && c.basis[ys.front()].src != m.tgt_of(static_cast<int>(mid)))
                    continue;
                s.ys = ys;
                emit(s);
            }
        }
    }
}

// one Stasheff term sum for a bimodule on a fixed sequence
BitVec stasheff_sum(const AInfBimodule& m, const Sequence& s) {
    const QuotientAlgebra& c = *m.c;
    int p = static_cast<int>(s.xs.size());
    int q = static_cast<int>(s.ys.size());
    int N = p + 1 + q;
    BitVec acc(m.dim());

    for (int i = 0; i < N; ++i)
        for (int sz = 1; i + sz <= N; ++sz) {
            if (i + sz <= p) {
                // window inside the left algebra arguments
                std::vector<int> window(s.xs.begin() + i, s.xs.begin() + i + sz);
                BitVec inner = m.alg->value(sz, window);
                for (std::size_t w : inner.set_bits()) {
                    std::vector<int> xs2;
                    xs2.insert(xs2.end(), s.xs.begin(), s.xs.begin() + i);
                    xs2.push_back(static_cast<int>(w));
                    xs2.insert(xs2.end(), s.xs.begin() + i + sz, s.xs.end());
                    acc.xor_with(m.op(static_cast<int>(xs2.size()) + 1, q + 1, xs2, s.mid,
                                      s.ys));
                }
            } else if (i > p) {
                // window inside the right algebra arguments
                int yi = i - p - 1;
                std::vector<int> window(s.ys.begin() + yi, s.ys.begin() + yi + sz);
                BitVec inner = m.alg->value(sz, window);
                for (std::size_t w : inner.set_bits()) {
                    std::vector<int> ys2;
                    ys2.insert(ys2.end(), s.ys.begin(), s.ys.begin() + yi);
                    ys2.push_back(static_cast<int>(w));
                    ys2.insert(ys2.end(), s.ys.begin() + yi + sz, s.ys.end());
                    acc.xor_with(m.op(p + 1, static_cast<int>(ys2.size()) + 1, s.xs, s.mid,
                                      ys2));
                }
            } else {
                // window covers the module slot
                int a_in = p - i + 1;
                int b_in = i + sz - p;
                std::vector<int> xin(s.xs.begin() + i, s.xs.end());
                std::vector<int> yin(s.ys.begin(), s.ys.begin() + (b_in - 1));
                BitVec inner = m.op(a_in, b_in, xin, s.mid, yin);
                std::vector<int> xout(s.xs.begin(), s.xs.begin() + i);
                std::vector<int> yout(s.ys.begin() + (b_in - 1), s.ys.end());
                for (std::size_t mid2 : inner.set_bits())
                    acc.xor_with(m.op(i + 1, static_cast<int>(yout.size()) + 1, xout,
                                      static_cast<int>(mid2), yout));
            }
        }
    return acc;
}

} // namespace

std::vector<CheckResult> bimodule_relation_check(const AInfBimodule& m, int max_total) {
    std::vector<CheckResult> out;
    for (int N = 1; N <= max_total; ++N) {
        bool ok = true;
        std::string w;
        for (int p = 0; p <= N - 1; ++p) {
            int q = N - 1 - p;
            enumerate_sequences(m, p, q, [&](const Sequence& s) {
                if (!ok) return;
                BitVec acc = stasheff_sum(m, s);
                if (acc.any()) {
                    ok = false;
                    w = "failure at (p,q) = (" + std::to_string(p) + "," + std::to_string(q) +
                        ") on " + m.name_of(s.mid);
                }
            });
        }
        out.push_back({"bimodule relations at total arity " + std::to_string(N), ok, w});
    }
    return out;
}

std::vector<CheckResult> morphism_relation_check(const BimoduleMap& f, int max_total) {
    std::vector<CheckResult> out;
    const AInfBimodule& src = *f.src;
    const AInfBimodule& tgt = *f.tgt;
    const QuotientAlgebra& c = *src.c;

    for (int N = 1; N <= max_total; ++N) {
        bool ok = true;
        std::string w;
        for (int p = 0; p <= N - 1; ++p) {
            int q = N - 1 - p;
            enumerate_sequences(src, p, q, [&](const Sequence& s) {
                if (!ok) return;
                BitVec acc(tgt.dim());
                for (int i = 0; i < N; ++i)
                    for (int sz = 1; i + sz <= N; ++sz) {
                        if (i + sz <= p) {
                            // algebra window, then f on the contraction
                            std::vector<int> window(s.xs.begin() + i, s.xs.begin() + i + sz);
                            BitVec inner = src.alg->value(sz, window);
                            for (std::size_t u : inner.set_bits()) {
                                std::vector<int> xs2;
                                xs2.insert(xs2.end(), s.xs.begin(), s.xs.begin() + i);
                                xs2.push_back(static_cast<int>(u));
                                xs2.insert(xs2.end(), s.xs.begin() + i + sz, s.xs.end());
                                acc.xor_with(f.component(static_cast<int>(xs2.size()) + 1,
                                                         q + 1, xs2, s.mid, s.ys));
                            }
                        } else if (i > p) {
                            int yi = i - p - 1;
                            std::vector<int> window(s.ys.begin() + yi, s.ys.begin() + yi + sz);
                            BitVec inner = src.alg->value(sz, window);
                            for (std::size_t u : inner.set_bits()) {
                                std::vector<int> ys2;
                                ys2.insert(ys2.end(), s.ys.begin(), s.ys.begin() + yi);
                                ys2.push_back(static_cast<int>(u));
                                ys2.insert(ys2.end(), s.ys.begin() + yi + sz, s.ys.end());
                                acc.xor_with(f.component(p + 1,
                                                         static_cast<int>(ys2.size()) + 1,
                                                         s.xs, s.mid, ys2));
                            }
                        } else {
                            // source bimodule op inside, f outside
                            int a_in = p - i + 1;
                            int b_in = i + sz - p;
                            std::vector<int> xin(s.xs.begin() + i, s.xs.end());
                            std::vector<int> yin(s.ys.begin(), s.ys.begin() + (b_in - 1));
                            BitVec inner = src.op(a_in, b_in, xin, s.mid, yin);
                            std::vector<int> xout(s.xs.begin(), s.xs.begin() + i);
                            std::vector<int> yout(s.ys.begin() + (b_in - 1), s.ys.end());
                            for (std::size_t mid2 : inner.set_bits())
                                acc.xor_with(f.component(i + 1,
                                                         static_cast<int>(yout.size()) + 1,
                                                         xout, static_cast<int>(mid2), yout));
                            // f inside, target bimodule op outside
                            BitVec fin = f.component(a_in, b_in, xin, s.mid, yin);
                            for (std::size_t mid2 : fin.set_bits())
                                acc.xor_with(tgt.op(i + 1,
                                                    static_cast<int>(yout.size()) + 1, xout,
                                                    static_cast<int>(mid2), yout));
                        }
                    }
                if (acc.any()) {
                    ok = false;
                    w = "failure at (p,q) = (" + std::to_string(p) + "," + std::to_string(q) +
                        ") on " + src.name_of(s.mid);
                }
            });
        }
        out.push_back({"morphism relations at total arity " + std::to_string(N), ok, w});
    }
    return out;
}

std::vector<CheckResult> bimodule_degree_audit(const AInfBimodule& m, int max_total) {
    std::vector<CheckResult> out;
    const QuotientAlgebra& c = *m.c;
    bool ok = true;
    std::string w;
    for (int a = 1; a <= max_total; ++a)
        for (int b = 1; a + b <= max_total + 1; ++b) {
            int p = a - 1, q = b - 1;
            enumerate_sequences(m, p, q, [&](const Sequence& s) {
                if (!ok) return;
                BitVec val = m.op(a, b, s.xs, s.mid, s.ys);
                if (!val.any()) return;
                int want = m.degree_of(s.mid) + 3 - a - b;
                for (int x : s.xs) want += c.basis[x].degree;
                for (int y : s.ys) want += c.basis[y].degree;
                for (std::size_t t : val.set_bits())
                    if (m.degree_of(static_cast<int>(t)) != want) {
                        ok = false;
                        w = "degree escape at (a,b) = (" + std::to_string(a) + "," +
                            std::to_string(b) + ")";
                    }
            });
        }
    out.push_back({"m_{a,b} outputs sit in degree 3 - a - b above the inputs", ok, w});
    return out;
}

} // namespace zz
