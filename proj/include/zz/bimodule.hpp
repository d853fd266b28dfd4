#pragma once

#include "zz/transfer.hpp"

// A-infinity bimodules over the zigzag algebra with its transferred
// operations: the outer-product bimodules B_k = C(k) (x) (k)C, the diagonal
// bimodule, and the connecting morphism built from m_3.  Operations
// m_{a,b}: C^{a-1} (x) M (x) C^{b-1} -> M have degree 3-a-b; morphism
// components f_{a,b} have degree 2-a-b.  All relations are sign-free over
// GF(2) and checked on composable basis tuples through a total arity bound.

namespace zz {

struct AInfBimodule {
    enum class Kind { outer_product, diagonal };

    const AInfinityTable* alg = nullptr;
    const QuotientAlgebra* c = nullptr;
    Kind kind = Kind::diagonal;
    int k = 0;                                 // corner vertex for outer products

    // basis: (u, v) pairs with tgt(u) = k = src(v) for outer products, the
    // algebra basis for the diagonal
    std::vector<std::pair<int, int>> pairs;

    std::size_t dim() const;
    int src_of(int mid) const;
    int tgt_of(int mid) const;
    int degree_of(int mid) const;
    std::string name_of(int mid) const;
    int pair_index(int u, int v) const;

    // m_{a,b} evaluated on basis inputs; zero when undefined or non-composable
    BitVec op(int a, int b, const std::vector<int>& xs, int mid,
              const std::vector<int>& ys) const;
};

AInfBimodule build_bk(const AInfinityTable& t, int k);
AInfBimodule build_diagonal(const AInfinityTable& t);

// f: B_k -> C with only f_{2,1} and f_{1,2} nonzero, both given by m_3
struct BimoduleMap {
    const AInfBimodule* src = nullptr;
    const AInfBimodule* tgt = nullptr;

    BitVec component(int a, int b, const std::vector<int>& xs, int mid,
                     const std::vector<int>& ys) const;
};

BimoduleMap build_f(const AInfBimodule& bk, const AInfBimodule& diag);

// the bimodule Stasheff relations through the given total arity
std::vector<CheckResult> bimodule_relation_check(const AInfBimodule& m, int max_total);

// the A-infinity morphism relations for f through the given total arity
std::vector<CheckResult> morphism_relation_check(const BimoduleMap& f, int max_total);

// every nonzero operation output sits in degree sum(inputs) + 3 - a - b
std::vector<CheckResult> bimodule_degree_audit(const AInfBimodule& m, int max_total);

} // namespace zz
