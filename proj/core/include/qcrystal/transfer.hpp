#pragma once

#include <array>
#include <utility>

#include "qcrystal/paths.hpp"
#include "qcrystal/report.hpp"

namespace qcrystal {

// The two-position concatenation step produced different exponent shifts for
// different representative paths; the shift law requires them to agree.
struct RepresentativeDependence : std::runtime_error {
    explicit RepresentativeDependence(const std::string& msg) : std::runtime_error(msg) {}
};

// Neither indexing convention reproduces the embedded reference table.
struct MatrixMismatch : std::runtime_error {
    explicit MatrixMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

// The series quotient used by the coefficient bridge is structurally broken
// (x-support escaping below zero), as opposed to merely disagreeing.
struct BridgeMismatch : std::runtime_error {
    explicit BridgeMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct Monomial {
    int xexp;
    int qexp;
    bool operator==(const Monomial& rhs) const { return xexp == rhs.xexp && qexp == rhs.qexp; }
};

struct MonomialMatrix {
    std::array<std::array<Monomial, 16>, 16> cells;  // [row = outer prefix][col = inner prefix]
    std::string convention;                          // which pair-to-index reading matched
};

// Exponent shifts (f, g) when the two-letter block p is placed at the first
// two positions in front of a path starting with the block q: the modified
// length grows by f and the degree grows by g plus twice the shifted modified
// length.  Computed from two representative paths, which must agree.
std::pair<int, int> f_g_prime(const std::array<int, 2>& q, const std::array<int, 2>& p);

// Builds all 256 cells from f_g_prime and checks them against the embedded
// reference table, trying the direct and the transposed pair-to-index
// readings; throws MatrixMismatch when neither fits.
MonomialMatrix build_matrix_M();

Report verify_matrix(int trunc, int threads = 1);

// The sixteen refinement equations: each two-letter-start restriction of the
// path series equals the matrix-weighted combination of all sixteen
// restrictions with x replaced by x*q^2.
Report verify_transfer(int trunc, int threads = 1);

// Three-term functional equation for the full path series at weight (3,0).
Report verify_qdif(int trunc, int threads = 1);

// Functional equation for the quotient by prod (1+x*q^j), plus its
// coefficientwise recurrence for x-degrees 0..8.
Report verify_qdif2(int trunc, int threads = 1);

// Row polynomial times the finite product equals the x-degree coefficient of
// the series quotient: checked for every index visible below the truncation.
Report coefficient_bridge(int i, int trunc, int threads = 1);

}  // namespace qcrystal
