#pragma once

#include "zz/gf2.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

// Quiver path algebras and their graded quotients by admissible relation
// ideals.  Bases are normal-form paths: the ideal is saturated length by
// length (relations are length-homogeneous) and the complement of the pivot
// columns, in lexicographic path order, gives the representatives.

namespace zz {

struct Arrow {
    int src = 0, tgt = 0, degree = 0;
};

struct Quiver {
    int vertices = 0;
    std::vector<Arrow> arrows;

    // id of the unique arrow src->tgt, or -1
    int arrow_id(int src, int tgt) const;
};

// The doubled line quiver on vertices 1..n: arrows i->i+1 and i+1->i.
// up_degree / down_degree grade the rightward / leftward arrows.
Quiver line_quiver(int n, int up_degree, int down_degree);

using RawPath = std::vector<int>;   // vertex sequence, length >= 1

std::string path_to_string(const RawPath& p);

// A GF(2) combination of parallel paths of equal length and degree.
struct Relation {
    std::vector<RawPath> terms;
};

struct BasisElt {
    RawPath path;
    int src = 0, tgt = 0, degree = 0, length = 0;
};

class QuotientAlgebra;

struct Element {
    const QuotientAlgebra* alg = nullptr;
    BitVec c;

    bool is_zero() const { return c.is_zero(); }
    Element& operator+=(const Element& o);
};

class QuotientAlgebra {
public:
    Quiver quiver;
    std::vector<Relation> relations;
    std::vector<int> unit_vertices;   // idempotents summing to the unit
    std::vector<BasisElt> basis;
    int stop_length = 0;              // first length with V = I

    std::size_t dim() const { return basis.size(); }

    int idempotent_id(int v) const;
    int find_path(const RawPath& p) const;            // basis id or -1
    // the unique basis element of block (v, v) with path length 2, or -1
    int loop_id(int v) const;

    Element zero() const;
    Element element(int basis_id) const;
    Element idempotent(int v) const;
    Element unit() const;

    // normal form of an arbitrary quiver path (consecutive vertices must be
    // adjacent); returns 0 when the path lies in the ideal
    Element reduce_path(const RawPath& p) const;

    Element mul(const Element& x, const Element& y) const;
    const BitVec& mul_basis(int a, int b) const { return mult_[a * dim() + b]; }

    std::vector<int> block_ids(int i, int j) const;
    std::string to_string(const Element& e) const;
    std::string basis_name(int id) const { return path_to_string(basis[id].path); }

    friend QuotientAlgebra enumerate_basis(const Quiver&, const std::vector<Relation>&, int);
    friend QuotientAlgebra idempotent_truncation(const QuotientAlgebra&, const std::vector<int>&);

private:
    std::map<RawPath, int> path_index_;
    std::vector<BitVec> mult_;                        // dim x dim structure constants
    std::vector<std::vector<std::vector<int>>> rmul_; // [id][arrow] -> basis ids of id*arrow

    void finalize();
};

// Saturates the relation ideal length by length and stops at the first
// length where the whole path space lies in the ideal.  ceiling < 0 means
// the default 4 * vertices; exceeding it throws (non-finite-dimensional
// input).
QuotientAlgebra enumerate_basis(const Quiver& q, const std::vector<Relation>& rels,
                                int ceiling = -1);

// Corner subalgebra e A e for e the sum of the given idempotents.
QuotientAlgebra idempotent_truncation(const QuotientAlgebra& a, const std::vector<int>& keep);

enum class AlgebraName { an_shriek, an, zigzag };

// an_shriek: relations (i|i-1|i)=(i|i+1|i), (1|2|1)=0; up arrows in degree 1.
// an:        zigzag-type relations including (i|i+-1|i+-2)=0 and (n|n-1|n)=0;
//            down arrows in degree 1.
// zigzag:    the corner algebra of `an` at vertices 1..n-1 (dimension 4n-6).
QuotientAlgebra build_named_algebra(AlgebraName name, int n);

// basis elements of (i) A (j), grouped by internal degree
std::map<int, std::vector<int>> idempotent_block(const QuotientAlgebra& a, int i, int j);

Element operator+(Element x, const Element& y);
Element operator*(const Element& x, const Element& y);

} // namespace zz
