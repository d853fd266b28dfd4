#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zz/quiver.hpp"

#include <map>
#include <set>

using namespace zz;

namespace {

// Brute-force oracle, independent of the incremental enumeration: materialize
// every path of each length, span the ideal by inserting relations at every
// position, and count the quotient dimension by Gaussian elimination.
struct BruteResult {
    std::map<int, int> dim_by_length;
    // (src, tgt, degree) -> dimension
    std::map<std::tuple<int, int, int>, int> dim_by_block;
    int total = 0;
    int stop_length = -1;
};

BruteResult brute_quotient(const Quiver& q, const std::vector<Relation>& rels, int maxlen) {
    BruteResult res;
    std::vector<RawPath> cur;
    for (int v = 1; v <= q.vertices; ++v) cur.push_back({v});

    for (int ell = 0; ell <= maxlen; ++ell) {
        if (cur.empty()) { res.stop_length = ell; break; }
        std::map<RawPath, int> index;
        for (std::size_t i = 0; i < cur.size(); ++i) index[cur[i]] = static_cast<int>(i);

        // all p * r * q insertions of every relation at every position
        RowSpace ideal(cur.size());
        for (const auto& r : rels) {
            int rl = static_cast<int>(r.terms.front().size()) - 1;
            if (rl > ell) continue;
            for (int a = 0; a + rl <= ell; ++a) {
                // prefixes: all paths of length a ending at the relation source
                std::vector<RawPath> pre;
                {
                    std::vector<RawPath> layer;
                    for (int v = 1; v <= q.vertices; ++v) layer.push_back({v});
                    for (int s = 0; s < a; ++s) {
                        std::vector<RawPath> next;
                        for (const auto& pp : layer)
                            for (const auto& ar : q.arrows)
                                if (ar.src == pp.back()) {
                                    RawPath e = pp;
                                    e.push_back(ar.tgt);
                                    next.push_back(e);
                                }
                        layer = next;
                    }
                    for (auto& pp : layer)
                        if (pp.back() == r.terms.front().front()) pre.push_back(pp);
                }
                int b = ell - rl - a;
                std::vector<RawPath> suf;
                {
                    std::vector<RawPath> layer{{r.terms.front().back()}};
                    for (int s = 0; s < b; ++s) {
                        std::vector<RawPath> next;
                        for (const auto& pp : layer)
                            for (const auto& ar : q.arrows)
                                if (ar.src == pp.back()) {
                                    RawPath e = pp;
                                    e.push_back(ar.tgt);
                                    next.push_back(e);
                                }
                        layer = next;
                    }
                    suf = layer;
                }
                for (const auto& p : pre)
                    for (const auto& s : suf) {
                        BitVec vec(cur.size());
                        for (const auto& t : r.terms) {
                            RawPath full = p;
                            full.insert(full.end(), t.begin() + 1, t.end());
                            full.insert(full.end(), s.begin() + 1, s.end());
                            vec.flip(index.at(full));
                        }
                        ideal.absorb(std::move(vec));
                    }
            }
        }

        int dim = static_cast<int>(cur.size() - ideal.dim());
        if (dim == 0) { res.stop_length = ell; break; }
        res.dim_by_length[ell] = dim;
        res.total += dim;

        // block dimensions from the free coordinates
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (ideal.pivot_at(i)) continue;
            int deg = 0;
            for (std::size_t k = 0; k + 1 < cur[i].size(); ++k)
                deg += q.arrows[q.arrow_id(cur[i][k], cur[i][k + 1])].degree;
            res.dim_by_block[{cur[i].front(), cur[i].back(), deg}]++;
        }

        // next layer of paths
        std::vector<RawPath> next;
        for (const auto& p : cur)
            for (const auto& ar : q.arrows)
                if (ar.src == p.back()) {
                    RawPath e = p;
                    e.push_back(ar.tgt);
                    next.push_back(e);
                }
        cur = next;
    }
    return res;
}

std::map<std::tuple<int, int, int>, int> block_dims(const QuotientAlgebra& A) {
    std::map<std::tuple<int, int, int>, int> out;
    for (const auto& b : A.basis) out[{b.src, b.tgt, b.degree}]++;
    return out;
}

} // namespace

TEST_CASE("single vertex, no arrows, no relations") {
    Quiver q;
    q.vertices = 1;
    QuotientAlgebra A = enumerate_basis(q, {});
    CHECK(A.dim() == 1);
    CHECK(A.basis[0].path == RawPath{1});
}

TEST_CASE("oracle agreement for the named algebras") {
    for (int n = 2; n <= 4; ++n) {
        for (auto name : {AlgebraName::an_shriek, AlgebraName::an}) {
            QuotientAlgebra A = build_named_algebra(name, n);
            BruteResult oracle = brute_quotient(A.quiver, A.relations, 4 * n);
            CHECK(oracle.total == static_cast<int>(A.dim()));
            CHECK(oracle.stop_length == A.stop_length);
            CHECK(oracle.dim_by_block == block_dims(A));
        }
        // zigzag = corner of an at 1..n-1; oracle dims filtered the same way
        QuotientAlgebra C = build_named_algebra(AlgebraName::zigzag, n);
        QuotientAlgebra An = build_named_algebra(AlgebraName::an, n);
        BruteResult oracle = brute_quotient(An.quiver, An.relations, 4 * n);
        int truncated = 0;
        for (auto& [key, d] : oracle.dim_by_block)
            if (std::get<0>(key) <= n - 1 && std::get<1>(key) <= n - 1) truncated += d;
        CHECK(truncated == static_cast<int>(C.dim()));
    }
}

TEST_CASE("zigzag dimension is 4n-6 with the expected blocks") {
    for (int n = 2; n <= 8; ++n) {
        QuotientAlgebra C = build_named_algebra(AlgebraName::zigzag, n);
        CHECK(C.dim() == static_cast<std::size_t>(4 * n - 6));
        for (int i = 1; i <= n - 1; ++i) {
            auto diag = C.block_ids(i, i);
            CHECK(diag.size() == 2);   // (i) and the loop c_i
            CHECK(C.loop_id(i) >= 0);
            for (int j = 1; j <= n - 1; ++j)
                if (std::abs(i - j) == 1) CHECK(C.block_ids(i, j).size() == 1);
                else if (std::abs(i - j) > 1) CHECK(C.block_ids(i, j).empty());
        }
    }
}

TEST_CASE("an relations hold: straight-through paths vanish") {
    for (int n = 3; n <= 6; ++n) {
        QuotientAlgebra A = build_named_algebra(AlgebraName::an, n);
        for (int i = 1; i + 2 <= n; ++i)
            CHECK(A.reduce_path({i, i + 1, i + 2}).is_zero());
        for (int i = 3; i <= n; ++i)
            CHECK(A.reduce_path({i, i - 1, i - 2}).is_zero());
        CHECK(A.reduce_path({n, n - 1, n}).is_zero());
    }
}

TEST_CASE("an_shriek: (1|2|1) = 0 and the loops are nilpotent of the right order") {
    for (int n = 2; n <= 6; ++n) {
        QuotientAlgebra A = build_named_algebra(AlgebraName::an_shriek, n);
        CHECK(A.reduce_path({1, 2, 1}).is_zero());
        for (int i = 2; i <= n; ++i) {
            // c_i = (i|i-1|i); c_i^k = (i|i-1) c_{i-1}^{k-1} (i-1|i) forces c_i^i = 0
            Element c = A.reduce_path({i, i - 1, i});
            CHECK_FALSE(c.is_zero());
            Element pw = c;
            for (int k = 2; k <= i; ++k) pw = pw * c;
            CHECK(pw.is_zero());
            // and no earlier power dies
            Element pre = c;
            for (int k = 2; k <= i - 1; ++k) pre = pre * c;
            CHECK_FALSE(pre.is_zero());
        }
        // loop identification at interior vertices
        for (int i = 2; i <= n - 1; ++i)
            CHECK(A.reduce_path({i, i - 1, i}).c == A.reduce_path({i, i + 1, i}).c);
    }
}

TEST_CASE("path concatenation and orthogonal idempotents") {
    QuotientAlgebra C = build_named_algebra(AlgebraName::zigzag, 5);
    int up = C.find_path({2, 3});
    int down = C.find_path({3, 2});
    REQUIRE(up >= 0);
    REQUIRE(down >= 0);
    Element prod = C.element(up) * C.element(down);
    CHECK(prod.c == C.element(C.loop_id(2)).c);   // (2|3)(3|2) = (2|3|2)
    CHECK((C.idempotent(1) * C.idempotent(2)).is_zero());
    CHECK((C.element(C.loop_id(2)) * C.element(C.loop_id(2))).is_zero());
}

TEST_CASE("associativity, unit and grading on all basis triples (small n)") {
    for (int n = 2; n <= 4; ++n) {
        for (auto name : {AlgebraName::an_shriek, AlgebraName::an, AlgebraName::zigzag}) {
            QuotientAlgebra A = build_named_algebra(name, n);
            std::size_t d = A.dim();
            Element u = A.unit();
            for (std::size_t a = 0; a < d; ++a) {
                Element ea = A.element(a);
                CHECK((u * ea).c == ea.c);
                CHECK((ea * u).c == ea.c);
                for (std::size_t b = 0; b < d; ++b) {
                    Element ab = A.element(a) * A.element(b);
                    // grading: products are degree-homogeneous of the sum degree
                    for (std::size_t t : ab.c.set_bits())
                        CHECK(A.basis[t].degree == A.basis[a].degree + A.basis[b].degree);
                    for (std::size_t cc = 0; cc < d; ++cc) {
                        Element left = ab * A.element(cc);
                        Element right = A.element(a) * (A.element(b) * A.element(cc));
                        CHECK(left.c == right.c);
                    }
                }
            }
        }
    }
}

TEST_CASE("idempotent_block examples") {
    QuotientAlgebra C = build_named_algebra(AlgebraName::zigzag, 5);
    auto blk = idempotent_block(C, 2, 2);
    int count = 0;
    for (auto& [deg, ids] : blk) count += static_cast<int>(ids.size());
    CHECK(count == 2);
    CHECK(idempotent_block(C, 1, 4).empty());   // |i-j| > 1 inside the corner

    QuotientAlgebra A = build_named_algebra(AlgebraName::an_shriek, 4);
    auto b11 = idempotent_block(A, 1, 1);
    REQUIRE(b11.size() == 1);
    CHECK(b11.begin()->second.size() == 1);     // only (1); the loop is zero

    CHECK_THROWS_AS(idempotent_block(A, 0, 1), std::invalid_argument);
}

TEST_CASE("termination: stop length certifies all longer paths lie in the ideal") {
    QuotientAlgebra A = build_named_algebra(AlgebraName::an_shriek, 3);
    BruteResult oracle = brute_quotient(A.quiver, A.relations, A.stop_length + 1);
    CHECK(oracle.stop_length == A.stop_length);
    CHECK(oracle.dim_by_length.count(A.stop_length) == 0);
}

TEST_CASE("usage errors") {
    CHECK_THROWS_AS(build_named_algebra(AlgebraName::zigzag, 1), std::invalid_argument);
    // a quotient that is visibly infinite-dimensional trips the ceiling
    Quiver q = line_quiver(2, 0, 0);
    CHECK_THROWS_AS(enumerate_basis(q, {}, 6), std::runtime_error);
}
