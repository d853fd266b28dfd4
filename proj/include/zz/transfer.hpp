#pragma once

#include "zz/endo.hpp"

// Homotopy transfer from the corner DG algebra S_{n-1} onto its homology,
// the zigzag algebra C_{n-1}.  The contraction (p, j, H) is given on the
// named basis and extended by zero; the transferred operation m_k is the sum
// over planar rooted binary trees with k leaves of the composite built by
// labeling leaves with j, branch points with multiplication in S_{n-1},
// internal edges with H, and the root with p.

namespace zz {

struct Contraction {
    const EndoAlgebra* s = nullptr;
    const QuotientAlgebra* c = nullptr;
    std::vector<BitVec> p;   // per S basis element, a C vector
    std::vector<BitVec> j;   // per C basis element, an S vector
    std::vector<BitVec> h;   // per S basis element, an S vector

    BitVec apply_p(const BitVec& sv) const;
    BitVec apply_j(const BitVec& cv) const;
    BitVec apply_h(const BitVec& sv) const;
};

// p kills the homotopies and sends both loop classes to the loop path; j
// picks the named cycle representatives; H is the stated partial inverse of
// d, extended by zero everywhere else.
Contraction build_contraction(const EndoAlgebra& s, const QuotientAlgebra& c);

// p j = id, chain-map property, the homotopy identity dH + Hd = id + jp on
// every basis element, and the side conditions H^2 = 0, H j = 0, p H = 0
// (reported under separate labels; they are extras, not inputs).
std::vector<CheckResult> verify_contraction(const Contraction& k);

// Planar rooted binary tree; leaves are numbered left to right.
struct PlanarTree {
    struct Node {
        int left = -1, right = -1;   // children, or -1 for a leaf
        int leaf = -1;               // leaf index when a leaf
    };
    std::vector<Node> nodes;
    int root = 0;
    int leaves = 0;
};

// all planar rooted binary trees with k leaves (Catalan(k-1) of them)
std::vector<PlanarTree> enumerate_trees(int k);

struct AInfinityTable {
    const QuotientAlgebra* c = nullptr;
    int max_arity = 0;
    // arity -> composable basis tuple -> nonzero value
    std::map<int, std::map<std::vector<int>, BitVec>> ops;

    BitVec value(int arity, const std::vector<int>& tuple) const;
    std::size_t entries(int arity) const;
};

// evaluates one tree on a tuple of C basis elements (p applied at the root)
BitVec evaluate_tree(const Contraction& k, const PlanarTree& t, const std::vector<int>& tuple);

// all transferred operations through the given arity; verifies the
// contraction first and refuses to run on a broken one
AInfinityTable transferred_operations(const Contraction& k, int max_arity);

// m_1 = 0, m_2 = multiplication, m_3 exactly the three families, m_k = 0 for
// 4 <= k <= max_arity, the 3(n-2) count, and the degree bookkeeping
// deg(out) = sum deg(in) + 2 - k on every entry.
std::vector<CheckResult> verify_minimal_model(const AInfinityTable& t);

// the Stasheff relations through total arity N on all composable tuples
std::vector<CheckResult> a_infinity_relation_check(const AInfinityTable& t, int total_arity);

// composable basis tuples of the given length (chains through the blocks)
std::vector<std::vector<int>> composable_tuples(const QuotientAlgebra& c, int len);

} // namespace zz
