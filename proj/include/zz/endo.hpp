#pragma once

#include "zz/homalg.hpp"

#include <optional>

// The endomorphism DG algebra of the resolutions P(L_1), ..., P(L_n): the
// named chain maps (alpha, h, h_{n,i}), the finite subalgebra they span, its
// corner at the first n-1 idempotents, homology identifications, and the
// checks backing all of it.
//
// Composition convention: an element of the block (i, j) is a map
// P(L_j) -> P(L_i), and juxtaposition x y applies y first.  This makes path
// concatenation in A_n correspond to composition without an order flip.
//
// Note: maps hold pointers to the cell modules, which hold a pointer to the
// DG algebra context; keep the owning Tower alive and in place.

namespace zz {

struct ResolutionSet {
    const DGAlgebra* ctx = nullptr;
    std::vector<CellModule> mods;   // left resolutions, index i-1

    const CellModule& at(int i) const { return mods.at(i - 1); }
    int n() const { return static_cast<int>(mods.size()); }
};

ResolutionSet build_resolutions(const DGAlgebra& ctx);

// The generating chain maps.  alpha(i, j), |i - j| = 1, is the map
// P(L_j) -> P(L_i) of degree j - i mapped to {0, 1} (index-lowering maps have
// degree 0, index-raising degree 1).  h(i) are the degree-0 homotopies, and
// hn(i) = h_{n,i} the degree-1 maps P(L_i) -> P(L_n) with hn(n-1) = alpha(n, n-1).
struct NamedMapSet {
    const ResolutionSet* res = nullptr;
    std::map<std::pair<int, int>, DGMap> alphas;
    std::vector<DGMap> hs;      // h_1..h_n at index i-1
    std::vector<DGMap> hns;     // h_{n,1}..h_{n,n-1} at index i-1

    const DGMap& alpha(int i, int j) const { return alphas.at({i, j}); }
    const DGMap& h(int i) const { return hs.at(i - 1); }
    const DGMap& hn(int i) const { return hns.at(i - 1); }
    // the two composite loops at i: ra = alpha_{i,i+1} alpha_{i+1,i},
    // la = alpha_{i,i-1} alpha_{i-1,i} (at i = 1, the boundary loop class)
    DGMap ra(int i) const;
    DGMap la(int i) const;
};

// Builds every named map from its component table and checks that the
// alphas are cycles of the declared degree.
NamedMapSet build_named_maps(const ResolutionSet& res, std::vector<std::string>* failures = nullptr);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;
};

// Every relation among the generators, plus the differential formulas, as
// strict equalities of maps.  The d(h_n) formula is only implicit in the
// block tables and is checked under its own label.
std::vector<CheckResult> verify_generator_relations(const NamedMapSet& nm);

// A finite DG algebra presented by explicit basis maps with structure
// constants and differential over that basis.
struct EndoAlgebra {
    const ResolutionSet* res = nullptr;
    struct BasisMap {
        DGMap map;
        std::string name;
        int bi = 0, bj = 0;     // block (bi, bj): a map P(L_bj) -> P(L_bi)
        int degree = 0;
    };
    std::vector<BasisMap> basis;
    std::map<std::pair<int, int>, std::vector<int>> blocks;   // (i, j) -> basis ids
    std::vector<BitVec> mult;   // dim x dim
    std::vector<BitVec> diff;   // d over the basis
    std::map<std::string, int> by_name;

    std::size_t dim() const { return basis.size(); }
    const BitVec& mul_basis(std::size_t a, std::size_t b) const { return mult[a * dim() + b]; }
    int index_of(const std::string& name) const;
    BitVec mul_vec(const BitVec& x, const BitVec& y) const;
    BitVec d_vec(const BitVec& x) const;
    std::string vec_name(const BitVec& x) const;
};

// The subalgebra generated by the named maps, with the explicit block bases;
// closure under composition and d is certified, and any escape is reported.
EndoAlgebra build_eprime(const NamedMapSet& nm, std::vector<std::string>* failures = nullptr);

// Corner e E e spanned by the blocks with both indices <= keep_max.
EndoAlgebra corner_subalgebra(const EndoAlgebra& e, int keep_max);

// Homology of an EndoAlgebra, with representatives preferring the named
// basis maps, and the induced structure constants.
struct HomologyClasses {
    const EndoAlgebra* e = nullptr;
    struct Cls {
        BitVec rep;             // over e.basis
        std::string name;
        int bi = 0, bj = 0, degree = 0;
    };
    std::vector<Cls> classes;
    std::map<std::pair<int, int>, std::vector<int>> blocks;
    std::vector<BitVec> mult;

    std::size_t dim() const { return classes.size(); }
    // express a cycle (over e.basis) in class coordinates
    std::optional<BitVec> express(const BitVec& cycle, int i, int j, int degree) const;
};

HomologyClasses homology_algebra(const EndoAlgebra& e);

// (i) -> [1_i], (i|i+1) -> [alpha_{i,i+1}], (i+1|i) -> [alpha_{i+1,i}] extends
// to an isomorphism A_n -> H(E') with matching structure constants.
std::vector<CheckResult> verify_iso_an(const HomologyClasses& h, const QuotientAlgebra& an);

// Blockwise graded homology dimensions of the full endomorphism algebra
// (via the hom complexes) against those of E'.
std::vector<CheckResult> verify_quasi_iso_inclusion(const ResolutionSet& res,
                                                    const HomologyClasses& h);

// Everything from the quotient algebra to the corner S_{n-1}, built in
// dependency order with stable addresses.
struct Tower {
    DGAlgebra dg;
    ResolutionSet res;
    NamedMapSet named;
    EndoAlgebra eprime;
    EndoAlgebra s;              // corner at 1..n-1
    std::vector<std::string> construction_failures;
};

std::unique_ptr<Tower> build_tower(int n);

} // namespace zz
