#pragma once

#include "zz/transfer.hpp"

#include <array>

// Hochschild cochains of the zigzag algebra in a fixed internal degree, the
// bar-type coboundary (sign-free in characteristic two), and the linear
// solve deciding whether the transferred m_3 is a coboundary.
//
// The Cochain type stores block-respecting values on composable tuples; the
// coboundary solve, by design, runs over the strictly larger space of all
// bilinear maps of internal degree -1 with no composability or block
// constraint, so a negative answer is as strong as possible.

namespace zz {

struct Cochain {
    const QuotientAlgebra* c = nullptr;
    int arity = 0;
    int internal_degree = 0;
    std::map<std::vector<int>, BitVec> values;

    BitVec value(const std::vector<int>& tuple) const;
};

// the arity-k layer of a transferred table as a cochain of degree 2 - k
Cochain cochain_from_table(const AInfinityTable& t, int arity);

// (delta m)(x_0..x_k) = x_0 m(...) + sum m(.. x_i x_{i+1} ..) + m(...) x_k
Cochain hochschild_differential(const Cochain& m);

Cochain random_cochain(const QuotientAlgebra& c, int arity, int degree, std::uint64_t seed);

struct CoboundaryResult {
    bool coboundary = false;
    std::size_t unknowns = 0;
    std::size_t rows_seen = 0;
    // when solvable: the unknowns (y, z, w) set to one in some solution
    std::vector<std::array<int, 3>> witness;
    // when inconsistent: equations (x, y, z, v) summing to 0 = 1, re-verified
    std::vector<std::array<int, 4>> certificate;
    bool certificate_verified = false;
};

// Solves delta m = m3 over every bilinear cochain of internal degree -1.
CoboundaryResult coboundary_membership(const Cochain& m3);

// The five-parameter slice (alpha_i, b_i, c_i, d_i, eta_i): checks that the
// four displayed equation families fall out of delta m = m3 verbatim, and
// whether the restricted system is consistent.
struct SliceResult {
    bool equations_match = true;
    std::vector<std::string> mismatches;
    bool inconsistent = false;
};

SliceResult slice_obstruction(const Cochain& m3);

} // namespace zz
