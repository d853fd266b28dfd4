#pragma once

#include "zz/quiver.hpp"

#include <memory>

#include <string>
#include <vector>

// Differentials on quotient algebras, one-sided twisted complexes of shifted
// projectives (finite cell modules), and homology of finite complexes.
//
// Grading conventions: M[s]^j = M^{s+j}, so the canonical generator of P[s]
// sits in total degree -s.  An arrow g_k -> g_l labeled x contributes a
// degree-one component of the differential, which forces
// deg(x) = shift(l) - shift(k) + 1.

namespace zz {

struct DerivationReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// A degree-one derivation tabulated on the normal-form basis.
class Derivation {
public:
    const QuotientAlgebra* alg = nullptr;
    std::vector<Element> on_basis;

    Element apply(const Element& x) const;
};

// Leibniz extension of the given arrow values; the report records degree
// mismatches, d(relation) escaping the ideal, and d^2 != 0, each with a
// witness.
Derivation make_derivation(const QuotientAlgebra& a, const std::vector<Element>& arrow_values,
                           DerivationReport* report = nullptr);

Derivation zero_derivation(const QuotientAlgebra& a);

// A quotient algebra carrying a differential.  The algebra lives behind a
// shared_ptr so that the elements tabulated in the derivation (and in any
// cell module labels) keep a stable address.
struct DGAlgebra {
    std::shared_ptr<const QuotientAlgebra> alg;
    Derivation d;

    const QuotientAlgebra& A() const { return *alg; }
};

// A_n^! with d(i|i+1) = (i|i+1|i|i+1), d(i|i-1) = 0.
DGAlgebra an_shriek_dg(int n);

enum class Side { left, right };

struct CellGenerator {
    int vertex = 0;
    int shift = 0;
    std::string name;
};

// Finite cell module: shifted projectives P_{v}[s] (or {}_v P [s] on the
// right) with strictly triangular connecting arrows labeled by algebra
// elements.  For left modules the label of g_k -> g_l lives in the block
// (v_k) A (v_l); on the right in (v_l) A (v_k).
struct CellModule {
    Side side = Side::left;
    const DGAlgebra* ctx = nullptr;
    std::vector<CellGenerator> gens;
    std::vector<Element> arrows;   // gens x gens row-major; zero means no arrow
    int final_gen = -1;            // distinguished unshifted generator, when meaningful
    std::string name;

    std::size_t size() const { return gens.size(); }
    const Element& arrow(std::size_t k, std::size_t l) const { return arrows[k * size() + l]; }
    Element& arrow(std::size_t k, std::size_t l) { return arrows[k * size() + l]; }
};

CellModule make_cell_module(Side side, const DGAlgebra& ctx, std::vector<CellGenerator> gens);

// The cofibrant resolutions of the simple modules over A_n^!: a four-term
// diamond for i < n and a 2n-2 term ladder for i = n on the left; mirrored
// diamonds and a two-term complex for i = n on the right.
CellModule build_resolution(const DGAlgebra& ctx, int i, Side side);

struct CellCheckReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Verifies label blocks and degrees, triangularity of the arrow digraph, and
// d(x_kl) + sum_m x_km x_ml = 0 (the square-zero condition) componentwise.
CellCheckReport cell_d_squared_check(const CellModule& m);

// A finite complex with degree-one differential, materialized degreewise.
struct GradedComplex {
    int min_degree = 0;
    std::vector<std::size_t> dims;
    std::vector<BitMatrix> d;   // d[k]: degree (min+k) -> (min+k+1); rows = dim(k+1)
    std::vector<std::vector<std::string>> labels;

    int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
    std::size_t dim_at(int degree) const;
    const BitMatrix& d_at(int degree) const;
};

bool d_squared_zero(const GradedComplex& x);

struct Homology {
    int min_degree = 0;
    std::vector<std::size_t> dims;
    std::vector<std::vector<BitVec>> representatives;

    std::size_t total() const;
    std::size_t dim_at(int degree) const;
};

// Kernel-over-image dimensions with deterministic representative cycles;
// rejects complexes with d^2 != 0.
Homology homology(const GradedComplex& x);

// Underlying complex of a cell module; basis (generator, algebra basis
// element) in total degree deg(b) - shift.
struct ExpandedCell {
    GradedComplex complex;
    // per degree, the (generator, algebra basis id) pairs in column order
    std::vector<std::vector<std::pair<int, int>>> basis;
};

ExpandedCell expand_cell(const CellModule& m);

struct ResolutionReport {
    bool ok = true;
    std::vector<std::string> failures;
    Homology h;
};

// Checks d^2 = 0, one-dimensional homology in total degree zero, and that
// the class pairs to 1 against the idempotent coefficient of the final
// unshifted generator.
ResolutionReport verify_resolution(const DGAlgebra& ctx, int i, Side side);

// All generators shifted by s (for the shift-coherence property).
CellModule shift_cell(const CellModule& m, int s);

} // namespace zz
