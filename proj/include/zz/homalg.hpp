#pragma once

#include "zz/dgalg.hpp"

#include <map>

// Morphism complexes between cell modules.  A map is stored componentwise:
// a label for each (source generator, target generator) pair, living in the
// block (v_k) A (v_l) for left modules (maps out of A e determined by the
// image of e).  The differential is d(f) = d_N f + f d_M, sign-free in
// characteristic two, and composition is function composition with the
// right factor applied first.

namespace zz {

struct DGMap {
    const CellModule* src = nullptr;
    const CellModule* tgt = nullptr;
    int degree = 0;
    std::vector<Element> comp;   // src.size() x tgt.size(), row-major

    const Element& at(std::size_t k, std::size_t l) const { return comp[k * tgt->size() + l]; }
    Element& at(std::size_t k, std::size_t l) { return comp[k * tgt->size() + l]; }
    bool is_zero() const;
    std::string describe() const;
};

DGMap zero_map(const CellModule& src, const CellModule& tgt, int degree);
DGMap identity_map(const CellModule& m);

DGMap add(DGMap f, const DGMap& g);
// f after g; requires src(f) == tgt(g)
DGMap compose(const DGMap& f, const DGMap& g);
DGMap map_differential(const DGMap& f);
bool maps_equal(const DGMap& f, const DGMap& g);

// block and degree consistency of every component; failures are described
std::vector<std::string> validate_map(const DGMap& f);

// HOM(M, N) materialized degreewise: elementary maps b * E_{kl} indexed by
// (source gen, target gen, algebra basis element).
struct HomComplex {
    const CellModule* src = nullptr;
    const CellModule* tgt = nullptr;
    struct Elem {
        int k = 0, l = 0, b = 0;
    };
    GradedComplex complex;
    std::vector<std::vector<Elem>> basis;   // per degree, in column order

    BitVec coords_of(const DGMap& f) const;           // f homogeneous of some degree
    DGMap map_of(int degree, const BitVec& coords) const;
};

HomComplex hom_complex(const CellModule& m, const CellModule& n);

// Homology of HOM(P(L_j), P(L_i)) with representative maps.
struct ExtTable {
    Homology h;
    HomComplex hom;
};
ExtTable ext_table(const DGAlgebra& ctx, const CellModule& pli, const CellModule& plj);

// Multiplicities of the shifted simple L_i in the cup-cap composite applied
// to L_j: shift s (a copy L_i[s], homological degree -s) -> multiplicity.
// Computed from the cell generators of P(L_i) at vertex j with the arrow
// labels reduced modulo the augmentation ideal.
std::map<int, std::size_t> cupcap_on_simple(const DGAlgebra& ctx, int i, int j);

} // namespace zz
