#pragma once

#include <functional>
#include <vector>

#include "rsl/grid.hpp"
#include "rsl/qt_poly.hpp"

namespace rsl {

// A Dyck path with cars 1..n on its north steps, strictly increasing up each
// column. labels[y] is the car in row y (bottom row first).
struct ParkingFunction {
    DyckPath path;
    std::vector<int> labels;

    ParkingFunction(DyckPath p, std::vector<int> l);
    int cars() const { return path.shape.n; }
    friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
};

void for_each_pf(const GridShape& shape, const std::function<void(const ParkingFunction&)>& fn);
void for_each_pf_on_path(const DyckPath& path, const std::function<void(const ParkingFunction&)>& fn);
std::vector<ParkingFunction> enumerate_pf(const GridShape& shape);

// rank of each car's cell; index 0 holds car 1. All ranks are distinct.
std::vector<long> car_ranks(const ParkingFunction& pf);

// cars read from highest to lowest rank.
std::vector<int> word(const ParkingFunction& pf);

// ides = { i : rank(i) < rank(i+1) }, ascending.
std::vector<int> ides(const ParkingFunction& pf);

// composition of n from the gaps of ides.
Composition pides(const ParkingFunction& pf);

long tdinv(const ParkingFunction& pf);

// dinv = tdinv + dinvcorr(path) (= tdinv + pdinv - maxdinv).
long dinv(const ParkingFunction& pf);

struct PFWeight {
    int ret = 1;
    long area = 0;
    long dinv = 0;
    Composition pides;
    // [ret]_{1/t} t^area q^dinv
    QTPoly weight() const;
};

PFWeight pf_weight(const ParkingFunction& pf);

// True iff word(pf) is a shuffle of the increasing blocks of mu,
// equivalently ides(pf) is contained in the partial-sum set of mu.
bool word_is_shuffle_of(const ParkingFunction& pf, const Composition& mu);

}  // namespace rsl
