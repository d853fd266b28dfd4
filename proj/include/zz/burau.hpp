#pragma once

#include "zz/endo.hpp"
#include "zz/homalg.hpp"
#include "zz/laurent.hpp"

// Symbolic Temperley-Lieb and braid matrices on the lattice spanned by
// v_1..v_{n-1}, relation verification over Z[q, q^-1], and the
// decategorification cross-check of the cup-cap tables at q = -1.

namespace zz {

// matrix of u_i: column j is (1+q)e_i, e_i, q e_i for j = i, i-1, i+1
LaurentMatrix tl_matrix(int n, int i);

// t_i = 1 - u_i
LaurentMatrix braid_matrix(int n, int i);

// all Temperley-Lieb relations (commuting, u^2 = (1+q)u, u u' u = q u) and
// the braid relations, symbolically
std::vector<CheckResult> verify_tl_braid(int n);

// [U_i] built from the cup-cap multiplicities with weight (-1)^shift versus
// u_i at q = -1, entry by entry
std::vector<CheckResult> decategorification_check(const DGAlgebra& ctx);

} // namespace zz
