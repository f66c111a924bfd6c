#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rsl/errors.hpp"
#include "rsl/partition.hpp"

namespace rsl {

struct GridShape {
    int m = 1;  // width, east steps
    int n = 1;  // height, north steps
    int g = 1;  // gcd(m, n)
    GridShape(int m_, int n_);
    bool coprime() const { return g == 1; }
    friend bool operator==(const GridShape&, const GridShape&) = default;
};

// An (m,n)-Dyck path stored as the column of the north step in each row,
// bottom row first. col is weakly increasing with n*col[y] <= m*y, which is
// exactly "weakly above the diagonal y = (n/m) x".
struct DyckPath {
    GridShape shape;
    std::vector<int> col;

    DyckPath(GridShape s, std::vector<int> c);

    // coarea partition lambda(P): cells above the path, top row first.
    Partition coarea() const;
    friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

// Deterministic lexicographic enumeration over col arrays.
void for_each_path(const GridShape& shape, const std::function<void(const DyckPath&)>& fn);
std::vector<DyckPath> enumerate_paths(const GridShape& shape);

// rank(x, y) = m y - n x + floor(x g / m). Throws on out-of-grid cells.
long cell_rank(const GridShape& shape, int x, int y);

// Full lattice cells strictly between path and diagonal.
long area(const DyckPath& p);

// arm/leg of a cell of a coarea partition given as (row, col), 0-based with
// row 0 the top (longest) row. Throws CellNotInCoarea.
std::pair<int, int> arm_leg(const Partition& lambda, int row, int colindex);

long pdinv(const DyckPath& p);
long dinvcorr(const DyckPath& p);

// tdinv of the canonical rank-decreasing labeling (car 1 at the lowest rank),
// which realizes the maximum over labelings of the path.
long maxdinv(const DyckPath& p);
// Exhaustive maximum over all labelings; test oracle for small shapes.
long maxdinv_bruteforce(const DyckPath& p);

// Least i >= 1 such that (i m/g, i n/g) lies on the path; 1 for coprime shapes.
int ret(const DyckPath& p);

// Ranks of the car cells (east of each north step), bottom row first.
std::vector<long> step_ranks(const DyckPath& p);

}  // namespace rsl
