#pragma once

#include <optional>
#include <set>
#include <vector>

#include "rsl/parking.hpp"

namespace rsl {

// Horizontal stretch: a decreasing-word (m,n) parking function maps to the
// increasing-word (m+n,n) parking function with coarea shifted by the
// staircase. Preserves area, dinv and ret.
ParkingFunction hstr(const ParkingFunction& pf);
ParkingFunction hstr_inverse(const ParkingFunction& pf);

// Vertical stretch: requires weakly decreasing pides; shifts every car by m,
// prepends one bottom car per column (rank decreasing), lands in (m, n+m)
// with pides gaining one part m.
ParkingFunction vstr(const ParkingFunction& pf);
ParkingFunction vstr_inverse(const ParkingFunction& pf);

// Hook transpose: pides (k,1^{n-k}) -> pides (k,1^{m-k}) on the transposed
// path, matching the marked column-bottom cells through the valley points.
ParkingFunction hook_transpose(const ParkingFunction& pf);

// The sign-reversing involution on (3,n) parking functions: acts at the
// first pides position carrying a (1,3) or a non-fixed (2,2) pattern;
// returns pf itself on fixed points.
ParkingFunction phi(const ParkingFunction& pf);
bool phi_is_fixed(const ParkingFunction& pf);

// Reverse complement of a placement (a set of 1-based columns) in m columns.
std::set<int> reverse_complement(const std::set<int>& p, int m);
// mu_vee_i = m - mu_{k+1-i}, zero parts dropped.
Composition mu_vee(const Composition& mu, int m);

// Switch map for words that shuffle the increasing blocks of mu: builds the
// (m, mk-n) parking function on the reversed, complemented placements.
ParkingFunction switch_m(const ParkingFunction& pf, const Composition& mu);

// Three-column switch: derives mu = (2^a, 1^b) from pides; requires pides of
// exactly that shape.
ParkingFunction switch3(const ParkingFunction& pf);

// Placement sets of the blocks of mu (1-based columns), block order.
std::vector<std::set<int>> block_placements(const ParkingFunction& pf, const Composition& mu);

}  // namespace rsl
