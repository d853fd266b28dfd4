#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zz/endo.hpp"

using namespace zz;

TEST_CASE("named maps are well-formed cycles") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::string> failures;
        DGAlgebra dg = an_shriek_dg(n);
        ResolutionSet res = build_resolutions(dg);
        NamedMapSet nm = build_named_maps(res, &failures);
        for (auto& f : failures) INFO(f);
        CHECK(failures.empty());

        // d(alpha) = 0 spot checks and the defining h relations
        for (int i = 1; i <= n - 1; ++i) {
            CHECK(map_differential(nm.alpha(i, i + 1)).is_zero());
            CHECK(map_differential(nm.alpha(i + 1, i)).is_zero());
            CHECK(maps_equal(compose(nm.h(i), nm.h(i)), nm.h(i)));
        }
        // d(h_{n,i}) = h_{n,i+1} alpha_{i+1,i}
        for (int i = 1; i <= n - 2; ++i)
            CHECK(maps_equal(map_differential(nm.hn(i)),
                             compose(nm.hn(i + 1), nm.alpha(i + 1, i))));
    }
}

TEST_CASE("generator relations hold strictly for n up to 6") {
    for (int n = 2; n <= 6; ++n) {
        DGAlgebra dg = an_shriek_dg(n);
        ResolutionSet res = build_resolutions(dg);
        NamedMapSet nm = build_named_maps(res);
        for (const CheckResult& c : verify_generator_relations(nm)) {
            INFO(n, ": ", c.name, ": ", c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("negative control: perturbing one component of h_2 breaks a relation") {
    DGAlgebra dg = an_shriek_dg(4);
    ResolutionSet res = build_resolutions(dg);
    NamedMapSet nm = build_named_maps(res);
    // flip the g2 -> g2 component of h_2 off
    DGMap& h2 = nm.hs[1];
    bool flipped = false;
    for (std::size_t k = 0; k < h2.src->size() && !flipped; ++k)
        for (std::size_t l = 0; l < h2.tgt->size() && !flipped; ++l)
            if (!h2.at(k, l).is_zero() && k != 0) {
                h2.at(k, l) = dg.A().zero();
                flipped = true;
            }
    REQUIRE(flipped);
    bool some_failure = false;
    for (const CheckResult& c : verify_generator_relations(nm))
        if (!c.pass) some_failure = true;
    CHECK(some_failure);
}

TEST_CASE("E' block bases have the stated dimensions and close under d") {
    for (int n = 2; n <= 6; ++n) {
        auto t = build_tower(n);
        for (auto& f : t->construction_failures) INFO(f);
        CHECK(t->construction_failures.empty());
        const EndoAlgebra& e = t->eprime;
        CHECK(e.dim() == static_cast<std::size_t>(10 * n - 9));

        auto block_size = [&](int i, int j) -> std::size_t {
            auto it = e.blocks.find({i, j});
            return it == e.blocks.end() ? 0 : it->second.size();
        };
        for (int i = 1; i <= n - 1; ++i) CHECK(block_size(i, i) == 4);
        CHECK(block_size(n, n) == 3);
        for (int i = 1; i <= n - 2; ++i) {
            CHECK(block_size(i, i + 1) == 1);
            CHECK(block_size(i + 1, i) == 3);
            CHECK(block_size(n, i) == 2);
            CHECK(block_size(i, n) == 0);
        }
        CHECK(block_size(n - 1, n) == 1);
        CHECK(block_size(n, n - 1) == 3);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (std::abs(i - j) > 1 && !(i == n || j == n)) CHECK(block_size(i, j) == 0);

        // the differential lands inside the basis span with the stated values
        int hi = e.index_of("h_" + std::to_string(1));
        BitVec v(e.dim());
        v.set(hi);
        BitVec dh = e.d_vec(v);
        BitVec want(e.dim());
        want.set(e.index_of("ra_1"));
        want.set(e.index_of("la_1"));
        CHECK(dh == want);
    }
}

TEST_CASE("corner subalgebra S_{n-1} is unital and closed") {
    for (int n = 3; n <= 6; ++n) {
        auto t = build_tower(n);
        const EndoAlgebra& s = t->s;
        CHECK(s.dim() == static_cast<std::size_t>(8 * n - 12));
        // unit = sum of corner idempotents
        BitVec unit(s.dim());
        for (int i = 1; i <= n - 1; ++i) unit.set(s.index_of("1_" + std::to_string(i)));
        for (std::size_t b = 0; b < s.dim(); ++b) {
            BitVec e(s.dim());
            e.set(b);
            CHECK(s.mul_vec(unit, e) == e);
            CHECK(s.mul_vec(e, unit) == e);
        }
        // d^2 = 0 over the corner
        for (std::size_t b = 0; b < s.dim(); ++b) {
            BitVec e(s.dim());
            e.set(b);
            CHECK(s.d_vec(s.d_vec(e)).is_zero());
        }
        // associativity on all basis triples
        for (std::size_t a = 0; a < s.dim(); ++a)
            for (std::size_t b = 0; b < s.dim(); ++b) {
                BitVec ab = s.mul_basis(a, b);
                for (std::size_t c = 0; c < s.dim(); ++c) {
                    BitVec bc = s.mul_basis(b, c);
                    BitVec ec(s.dim());
                    ec.set(c);
                    BitVec ea(s.dim());
                    ea.set(a);
                    CHECK(s.mul_vec(ab, ec) == s.mul_vec(ea, bc));
                }
            }
    }
}

TEST_CASE("homology of E' is A_n with matching structure constants") {
    for (int n = 2; n <= 6; ++n) {
        auto t = build_tower(n);
        HomologyClasses h = homology_algebra(t->eprime);
        QuotientAlgebra an = build_named_algebra(AlgebraName::an, n);
        CHECK(h.dim() == an.dim());

        // the homology tables blockwise
        auto hdim = [&](int i, int j) -> std::size_t {
            auto it = h.blocks.find({i, j});
            return it == h.blocks.end() ? 0 : it->second.size();
        };
        for (int i = 1; i <= n - 1; ++i) CHECK(hdim(i, i) == 2);
        CHECK(hdim(n, n) == 1);
        for (int i = 1; i <= n - 2; ++i) {
            CHECK(hdim(n, i) == 0);
            CHECK(hdim(i, n) == 0);
        }
        CHECK(hdim(n, n - 1) == 1);
        CHECK(hdim(n - 1, n) == 1);

        for (const CheckResult& c : verify_iso_an(h, an)) {
            INFO(n, ": ", c.name, ": ", c.witness);
            CHECK(c.pass);
        }

        // representatives chosen on the named generators
        (void)h.e->index_of("ra_1");
        bool found = false;
        for (auto& c : h.classes)
            if (c.name == "[ra_1]") found = true;
        CHECK(found);
    }
}

TEST_CASE("product identity [a_{i,i+1}][a_{i+1,i}] = [ra_i] matches the path product") {
    auto t = build_tower(4);
    HomologyClasses h = homology_algebra(t->eprime);
    auto idx = [&](const std::string& s) {
        for (std::size_t c = 0; c < h.classes.size(); ++c)
            if (h.classes[c].name == "[" + s + "]") return c;
        REQUIRE(false);
        return std::size_t{0};
    };
    std::size_t a = idx("a_{2,3}"), b = idx("a_{3,2}"), ra = idx("ra_2");
    BitVec want(h.dim());
    want.set(ra);
    CHECK(h.mult[a * h.dim() + b] == want);
}

TEST_CASE("E' embeds quasi-isomorphically in the full endomorphism algebra") {
    for (int n = 2; n <= 4; ++n) {
        auto t = build_tower(n);
        HomologyClasses h = homology_algebra(t->eprime);
        for (const CheckResult& c : verify_quasi_iso_inclusion(t->res, h)) {
            INFO(n, ": ", c.name, ": ", c.witness);
            CHECK(c.pass);
        }
    }
}
