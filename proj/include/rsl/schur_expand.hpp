#pragma once

#include <map>
#include <vector>

#include "rsl/parking.hpp"
#include "rsl/partition.hpp"
#include "rsl/qt_poly.hpp"

namespace rsl {

struct SignedPartition {
    int sign = 0;  // +1, -1, or 0
    Partition partition;
    friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

// Bubble rewrite s_(..., a_i, a_{i+1}, ...) = -s_(..., a_{i+1}-1, a_i+1, ...)
// until the composition is a partition, or zero when a rewrite hits a fixed
// point (adjacent a_{i+1} = a_i + 1).
SignedPartition straighten(const Composition& alpha);

// Finite Schur expansion with exact q,t-polynomial coefficients.
struct SchurExpansion {
    int m = 0, n = 0;
    std::map<Partition, QTPoly, PartLexDesc> coeffs;

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;
};

// The extended Hikita polynomial of the shape, straightened into Schur terms:
// sum over parking functions of [ret]_{1/t} t^area q^dinv s_{pides}.
// After assembly every coefficient is checked to be a genuine polynomial
// (no negative t exponents) and q<->t symmetric.
SchurExpansion hikita(const GridShape& shape, int jobs = 1);

// Coefficient of s_lambda; zero if absent, error if |lambda| != n.
QTPoly coefficient(const SchurExpansion& e, const Partition& lambda);

// <Q_{m,n}(1), h_mu> computed combinatorially: total weight of parking
// functions whose word is a shuffle of the increasing blocks of mu.
QTPoly hall_h_coefficient(const GridShape& shape, const Composition& mu);

// Monomial expansion of the Schur output (via Kostka numbers).
std::map<Partition, QTPoly, PartLexDesc> monomial_expansion(const SchurExpansion& e);

// Direct monomial expansion from the fundamental quasisymmetric side:
// coefficient of m_lambda = weight of pf with ides contained in S(lambda).
std::map<Partition, QTPoly, PartLexDesc> monomial_expansion_direct(const GridShape& shape);

// decompose_qt_schur applied to every coefficient; throws NotSchurPositive.
std::map<Partition, std::vector<std::pair<TwoRow, long>>, PartLexDesc> qt_schur_table(
    const GridShape& shape);

}  // namespace rsl
