#include "rsl/grid.hpp"

#include <algorithm>
#include <numeric>

namespace rsl {

GridShape::GridShape(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) throw InvalidArgument("GridShape: m, n must be positive");
    g = std::gcd(m, n);
}

DyckPath::DyckPath(GridShape s, std::vector<int> c) : shape(s), col(std::move(c)) {
    if ((int)col.size() != shape.n) throw InvalidArgument("DyckPath: col size != n");
    int prev = 0;
    for (int y = 0; y < shape.n; ++y) {
        if (col[y] < prev || col[y] > shape.m)
            throw InvalidArgument("DyckPath: col not weakly increasing in range");
        if ((long)shape.n * col[y] > (long)shape.m * y)
            throw InvalidArgument("DyckPath: path dips below the diagonal");
        prev = col[y];
    }
}

Partition DyckPath::coarea() const {
    Partition lam;
    for (int y = shape.n - 1; y >= 1; --y)
        if (col[y] > 0) lam.push_back(col[y]);
    return lam;
}

void for_each_path(const GridShape& shape, const std::function<void(const DyckPath&)>& fn) {
    std::vector<int> col(shape.n, 0);
    // lexicographic DFS over rows
    std::function<void(int)> rec = [&](int y) {
        if (y == shape.n) {
            fn(DyckPath(shape, col));
            return;
        }
        int lo = (y == 0) ? 0 : col[y - 1];
        int hi = (int)(((long)shape.m * y) / shape.n);
        for (int x = lo; x <= hi; ++x) {
            col[y] = x;
            rec(y + 1);
        }
    };
    rec(0);
}

std::vector<DyckPath> enumerate_paths(const GridShape& shape) {
    std::vector<DyckPath> out;
    for_each_path(shape, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

long cell_rank(const GridShape& shape, int x, int y) {
    if (x < 0 || x >= shape.m || y < 0 || y >= shape.n)
        throw InvalidArgument("cell_rank: coordinates outside the grid");
    return (long)shape.m * y - (long)shape.n * x + ((long)x * shape.g) / shape.m;
}

long area(const DyckPath& p) {
    const int m = p.shape.m, n = p.shape.n;
    long a = 0;
    for (int y = 0; y < n; ++y) {
        // cell (x,y) lies fully between path and diagonal iff x >= col[y]
        // and m y - n (x+1) >= 0
        long hi = ((long)m * y - n);
        if (hi < 0) continue;
        long xmax = hi / n;
        if (xmax >= p.col[y]) a += xmax - p.col[y] + 1;
    }
    return a;
}

std::pair<int, int> arm_leg(const Partition& lambda, int row, int colindex) {
    if (row < 0 || row >= (int)lambda.size() || colindex < 0 || colindex >= lambda[row])
        throw CellNotInCoarea("arm_leg: cell not in the coarea partition");
    int arm = lambda[row] - 1 - colindex;
    int leg = 0;
    for (size_t r = row + 1; r < lambda.size(); ++r)
        if (lambda[r] > colindex) ++leg;
    return {arm, leg};
}

namespace {
// chi( a/b <= m/n ), exact, with 0/0 = 0 and x/0 = +inf for x > 0.
bool le_slope(long a, long b, long m, long n) {
    if (b == 0) return a == 0;  // 0 <= m/n always; inf <= m/n never
    return a * n <= m * b;
}
// chi( m/n < a/b )
bool lt_slope(long m, long n, long a, long b) {
    if (b == 0) return a != 0;  // m/n < inf; m/n < 0/0 = 0 is false
    return m * b < a * n;
}
}  // namespace

long pdinv(const DyckPath& p) {
    Partition lam = p.coarea();
    const long m = p.shape.m, n = p.shape.n;
    long total = 0;
    for (int r = 0; r < (int)lam.size(); ++r)
        for (int c = 0; c < lam[r]; ++c) {
            auto [arm, leg] = arm_leg(lam, r, c);
            if (le_slope(arm, leg + 1, m, n) && lt_slope(m, n, arm + 1, leg)) ++total;
        }
    return total;
}

long dinvcorr(const DyckPath& p) {
    Partition lam = p.coarea();
    const long m = p.shape.m, n = p.shape.n;
    long pos = 0, neg = 0;
    for (int r = 0; r < (int)lam.size(); ++r)
        for (int c = 0; c < lam[r]; ++c) {
            auto [arm, leg] = arm_leg(lam, r, c);
            if (le_slope(arm + 1, leg + 1, m, n) && lt_slope(m, n, arm, leg)) ++pos;
            if (le_slope(arm, leg, m, n) && lt_slope(m, n, arm + 1, leg + 1)) ++neg;
        }
    return pos - neg;
}

std::vector<long> step_ranks(const DyckPath& p) {
    std::vector<long> r(p.shape.n);
    for (int y = 0; y < p.shape.n; ++y) r[y] = cell_rank(p.shape, p.col[y], y);
    return r;
}

namespace {
long tdinv_of_ranks(const std::vector<long>& car_rank, long m) {
    long total = 0;
    const int n = (int)car_rank.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (car_rank[i] < car_rank[j] && car_rank[j] < car_rank[i] + m) ++total;
    return total;
}
}  // namespace

long maxdinv(const DyckPath& p) {
    // car k sits at the k-th lowest rank, i.e. word = n...21
    std::vector<long> ranks = step_ranks(p);
    std::sort(ranks.begin(), ranks.end());
    return tdinv_of_ranks(ranks, p.shape.m);
}

long maxdinv_bruteforce(const DyckPath& p) {
    const int n = p.shape.n;
    std::vector<long> ranks = step_ranks(p);
    // labelings = assignments of cars to rows, increasing within each column;
    // enumerate permutations and filter.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    long best = 0;
    do {
        bool ok = true;
        for (int y = 0; y + 1 < n && ok; ++y)
            if (p.col[y] == p.col[y + 1] && perm[y] > perm[y + 1]) ok = false;
        if (!ok) continue;
        std::vector<long> car_rank(n);
        for (int y = 0; y < n; ++y) car_rank[perm[y]] = ranks[y];
        best = std::max(best, tdinv_of_ranks(car_rank, p.shape.m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

int ret(const DyckPath& p) {
    const int g = p.shape.g;
    const int mstep = p.shape.m / g, nstep = p.shape.n / g;
    for (int i = 1; i < g; ++i) {
        int X = i * mstep, Y = i * nstep;
        // (X, Y) is on the path iff it lies on the horizontal run at height Y
        if (p.col[Y - 1] <= X && X <= p.col[Y]) return i;
    }
    return g;
}

}  // namespace rsl
