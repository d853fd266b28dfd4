#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zz/dgalg.hpp"

using namespace zz;

TEST_CASE("derivation on A_n^!: values, Leibniz, d^2") {
    for (int n = 2; n <= 6; ++n) {
        DGAlgebra ctx = an_shriek_dg(n);
        const QuotientAlgebra& A = ctx.A();

        // d(i|i+1) = c_i (i|i+1) = (i|i+1) c_{i+1}
        for (int i = 1; i <= n - 1; ++i) {
            Element up = A.reduce_path({i, i + 1});
            Element want = A.reduce_path({i, i + 1, i, i + 1});
            CHECK(ctx.d.apply(up).c == want.c);
            Element via_right = up * A.reduce_path({i + 1, i, i + 1});
            CHECK(ctx.d.apply(up).c == via_right.c);
            Element down = A.reduce_path({i + 1, i});
            CHECK(ctx.d.apply(down).is_zero());
        }
        CHECK(ctx.d.apply(A.reduce_path({1, 2})).is_zero());   // c_1 = 0

        // Leibniz on all basis pairs
        for (std::size_t a = 0; a < A.dim(); ++a)
            for (std::size_t b = 0; b < A.dim(); ++b) {
                Element x = A.element(a), y = A.element(b);
                Element lhs = ctx.d.apply(x * y);
                Element rhs = ctx.d.apply(x) * y + x * ctx.d.apply(y);
                CHECK(lhs.c == rhs.c);
            }

        // d^2 = 0 on the basis
        for (std::size_t a = 0; a < A.dim(); ++a)
            CHECK(ctx.d.apply(ctx.d.apply(A.element(a))).is_zero());

        // d vanishes on idempotents
        for (int v = 1; v <= n; ++v) CHECK(ctx.d.apply(A.idempotent(v)).is_zero());
    }
}

TEST_CASE("zero derivation is valid on any algebra") {
    QuotientAlgebra C = build_named_algebra(AlgebraName::an, 4);
    Derivation d = zero_derivation(C);
    for (std::size_t a = 0; a < C.dim(); ++a) CHECK(d.apply(C.element(a)).is_zero());
}

TEST_CASE("d(c_i) = c_i c_i, zero at the first vertex") {
    DGAlgebra ctx = an_shriek_dg(4);
    const QuotientAlgebra& A = ctx.A();
    for (int i = 2; i <= 4; ++i) {
        Element c = A.reduce_path({i, i - 1, i});
        Element want = c * c;
        CHECK(ctx.d.apply(c).c == want.c);
    }
    // c_1 = 0 entirely
    CHECK(A.reduce_path({1, 2, 1}).is_zero());
}

TEST_CASE("an invalid derivation is reported with witnesses") {
    QuotientAlgebra A = build_named_algebra(AlgebraName::an_shriek, 3);
    // try d(1|2) = (1|2): wrong degree
    std::vector<Element> vals(A.quiver.arrows.size(), A.zero());
    vals[A.quiver.arrow_id(1, 2)] = A.reduce_path({1, 2});
    DerivationReport rep;
    make_derivation(A, vals, &rep);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("resolutions: shape, d^2 = 0, homology") {
    for (int n = 2; n <= 5; ++n) {
        DGAlgebra ctx = an_shriek_dg(n);
        for (int i = 1; i <= n; ++i) {
            for (Side s : {Side::left, Side::right}) {
                CellModule m = build_resolution(ctx, i, s);
                CellCheckReport cr = cell_d_squared_check(m);
                INFO(m.name, " side=", (s == Side::left ? "L" : "R"));
                for (auto& f : cr.failures) INFO(f);
                CHECK(cr.ok);
                ResolutionReport rr = verify_resolution(ctx, i, s);
                for (auto& f : rr.failures) INFO(f);
                CHECK(rr.ok);
            }
        }
        // shapes
        if (n >= 3) {
            CellModule mid = build_resolution(ctx, 2, Side::left);
            CHECK(mid.size() == 4);
            int arrow_count = 0;
            for (std::size_t k = 0; k < mid.size(); ++k)
                for (std::size_t l = 0; l < mid.size(); ++l)
                    if (!mid.arrow(k, l).is_zero()) ++arrow_count;
            CHECK(arrow_count == 5);
        }
        CHECK(build_resolution(ctx, n, Side::left).size() == static_cast<std::size_t>(2 * n - 2));
        CHECK(build_resolution(ctx, n, Side::right).size() == 2);
        CHECK_THROWS_AS(build_resolution(ctx, 0, Side::left), std::invalid_argument);
        CHECK_THROWS_AS(build_resolution(ctx, n + 1, Side::right), std::invalid_argument);
    }
}

TEST_CASE("negative control: dropping the long diamond arrow breaks the module") {
    DGAlgebra ctx = an_shriek_dg(4);
    CellModule m = build_resolution(ctx, 2, Side::left);
    // kill the (i-1|i|i+1) arrow
    bool removed = false;
    for (std::size_t k = 0; k < m.size() && !removed; ++k)
        for (std::size_t l = 0; l < m.size() && !removed; ++l) {
            const Element& x = m.arrow(k, l);
            if (x.is_zero()) continue;
            for (std::size_t b : x.c.set_bits())
                if (ctx.A().basis[b].length == 2) {
                    m.arrow(k, l) = ctx.A().zero();
                    removed = true;
                    break;
                }
        }
    REQUIRE(removed);
    CellCheckReport cr = cell_d_squared_check(m);
    CHECK_FALSE(cr.ok);
}

TEST_CASE("cell module of a cycle coefficient passes, non-cycle fails") {
    DGAlgebra ctx = an_shriek_dg(3);
    const QuotientAlgebra& A = ctx.A();

    // A -> A with multiplication by a_0, one pair of generators per vertex.
    // d(a_0) = 0 makes it a DG module.
    Element a0 = A.reduce_path({2, 1, 2});   // cycle: d(c_2) = c_2^2 = 0 for n = 3? c_2^2 in A_3^!:
    REQUIRE(ctx.d.apply(a0).is_zero());
    std::vector<CellGenerator> gens;
    for (int v = 1; v <= 3; ++v) gens.push_back({v, 0, "v1_" + std::to_string(v)});
    for (int v = 1; v <= 3; ++v) gens.push_back({v, 0, "v0_" + std::to_string(v)});
    // shift of the v1 block must absorb deg(a_0) - 1
    CellModule m = make_cell_module(Side::left, ctx, gens);
    for (auto& g : m.gens)
        if (g.name[1] == '1') g.shift = -static_cast<int>(0);
    // a_0 is a loop at vertex 2 of degree 1, so v1_2 -> v0_2 labeled c_2 with
    // shift difference 0 needs deg = 1: consistent
    m.arrow(1, 4) = a0;
    CHECK(cell_d_squared_check(m).ok);

    // replacing the label by a non-cycle (2|3) of degree 1 must fail
    CellModule bad = make_cell_module(Side::left, ctx, m.gens);
    bad.arrow(1, 4) = A.reduce_path({2, 3});   // wrong block
    CHECK_FALSE(cell_d_squared_check(bad).ok);

    CellModule bad2 = make_cell_module(Side::left, ctx, m.gens);
    // (2|3) placed in the right block slot: v1_2 -> v0_3 has block (2,3)
    bad2.arrow(1, 5) = A.reduce_path({2, 3});
    CHECK_FALSE(cell_d_squared_check(bad2).ok);   // d(2|3) != 0
}

TEST_CASE("homology of small complexes") {
    // 0 -> k -> k -> 0 with the identity: all homology vanishes
    GradedComplex x;
    x.min_degree = 0;
    x.dims = {1, 1};
    BitMatrix d01(1, 1);
    d01.set(0, 0);
    x.d = {d01, BitMatrix(0, 1)};
    Homology h = homology(x);
    CHECK(h.total() == 0);

    // zero differential: homology = underlying space
    GradedComplex y;
    y.min_degree = -1;
    y.dims = {2, 3};
    y.d = {BitMatrix(3, 2), BitMatrix(0, 3)};
    Homology hy = homology(y);
    CHECK(hy.dim_at(-1) == 2);
    CHECK(hy.dim_at(0) == 3);

    // d^2 != 0 must be rejected
    GradedComplex z;
    z.min_degree = 0;
    z.dims = {1, 1, 1};
    BitMatrix a(1, 1), b(1, 1);
    a.set(0, 0);
    b.set(0, 0);
    z.d = {a, b, BitMatrix(0, 1)};
    CHECK_THROWS_AS(homology(z), std::invalid_argument);
}

TEST_CASE("expanded resolution of L_2 over A_3^! has total homology 1") {
    DGAlgebra ctx = an_shriek_dg(3);
    CellModule m = build_resolution(ctx, 2, Side::left);
    ExpandedCell x = expand_cell(m);
    REQUIRE(d_squared_zero(x.complex));

    // independent route: total dimension of kernel minus rank over the whole
    // differential assembled into one matrix
    std::size_t total_dim = 0, total_rank = 0, total_kernel = 0;
    for (std::size_t k = 0; k < x.complex.dims.size(); ++k) {
        total_dim += x.complex.dims[k];
        if (x.complex.d[k].rows() > 0) {
            total_rank += rank(x.complex.d[k]);
            total_kernel += kernel(x.complex.d[k]).size();
        } else {
            total_kernel += x.complex.dims[k];
        }
    }
    CHECK(total_kernel - total_rank == 1);
    CHECK(homology(x.complex).total() == 1);
}

TEST_CASE("shift coherence: shifting all generators shifts homology") {
    DGAlgebra ctx = an_shriek_dg(3);
    CellModule m = build_resolution(ctx, 2, Side::left);
    CellModule ms = shift_cell(m, 1);
    CHECK(cell_d_squared_check(ms).ok);
    Homology h = homology(expand_cell(m).complex);
    Homology hs = homology(expand_cell(ms).complex);
    CHECK(h.total() == hs.total());
    // M[1]^j = M^{1+j}: class moves from degree 0 to degree -1
    CHECK(hs.dim_at(-1) == h.dim_at(0));
}
