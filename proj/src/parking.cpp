#include "rsl/parking.hpp"

#include <algorithm>
#include <numeric>

namespace rsl {

ParkingFunction::ParkingFunction(DyckPath p, std::vector<int> l)
    : path(std::move(p)), labels(std::move(l)) {
    const int n = path.shape.n;
    if ((int)labels.size() != n) throw InvalidArgument("ParkingFunction: labels size != n");
    std::vector<char> seen(n + 1, 0);
    for (int c : labels) {
        if (c < 1 || c > n || seen[c]) throw InvalidArgument("ParkingFunction: labels not a permutation");
        seen[c] = 1;
    }
    for (int y = 0; y + 1 < n; ++y)
        if (path.col[y] == path.col[y + 1] && labels[y] >= labels[y + 1])
            throw InvalidArgument("ParkingFunction: labels must increase up each column");
}

void for_each_pf_on_path(const DyckPath& path, const std::function<void(const ParkingFunction&)>& fn) {
    const int n = path.shape.n;
    // column runs: [start, end) row ranges sharing a column
    std::vector<std::pair<int, int>> runs;
    for (int y = 0; y < n;) {
        int z = y;
        while (z < n && path.col[z] == path.col[y]) ++z;
        runs.push_back({y, z});
        y = z;
    }
    std::vector<int> labels(n), avail;
    std::function<void(size_t, std::vector<int>&)> rec = [&](size_t ri, std::vector<int>& pool) {
        if (ri == runs.size()) {
            fn(ParkingFunction(path, labels));
            return;
        }
        auto [lo, hi] = runs[ri];
        int k = hi - lo;
        // choose k cars from pool (lex order), fill ascending bottom-to-top
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<int> rest;
            rest.reserve(pool.size() - k);
            {
                size_t t = 0;
                for (size_t s = 0; s < pool.size(); ++s) {
                    if (t < idx.size() && (int)s == idx[t]) {
                        labels[lo + t] = pool[s];
                        ++t;
                    } else {
                        rest.push_back(pool[s]);
                    }
                }
            }
            rec(ri + 1, rest);
            // next combination
            int i = k - 1;
            while (i >= 0 && idx[i] == (int)pool.size() - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    rec(0, pool);
}

void for_each_pf(const GridShape& shape, const std::function<void(const ParkingFunction&)>& fn) {
    for_each_path(shape, [&](const DyckPath& p) { for_each_pf_on_path(p, fn); });
}

std::vector<ParkingFunction> enumerate_pf(const GridShape& shape) {
    std::vector<ParkingFunction> out;
    for_each_pf(shape, [&](const ParkingFunction& pf) { out.push_back(pf); });
    return out;
}

std::vector<long> car_ranks(const ParkingFunction& pf) {
    const int n = pf.cars();
    std::vector<long> ranks = step_ranks(pf.path);
    std::vector<long> by_car(n);
    for (int y = 0; y < n; ++y) by_car[pf.labels[y] - 1] = ranks[y];
    return by_car;
}

std::vector<int> word(const ParkingFunction& pf) {
    const int n = pf.cars();
    std::vector<long> ranks = car_ranks(pf);
    std::vector<int> cars(n);
    std::iota(cars.begin(), cars.end(), 1);
    std::sort(cars.begin(), cars.end(), [&](int a, int b) { return ranks[a - 1] > ranks[b - 1]; });
    return cars;
}

std::vector<int> ides(const ParkingFunction& pf) {
    std::vector<long> ranks = car_ranks(pf);
    std::vector<int> out;
    for (int i = 1; i < pf.cars(); ++i)
        if (ranks[i - 1] < ranks[i]) out.push_back(i);
    return out;
}

Composition pides(const ParkingFunction& pf) {
    std::vector<int> d = ides(pf);
    Composition comp;
    int prev = 0;
    for (int i : d) {
        comp.push_back(i - prev);
        prev = i;
    }
    comp.push_back(pf.cars() - prev);
    return comp;
}

long tdinv(const ParkingFunction& pf) {
    const int n = pf.cars();
    const long m = pf.path.shape.m;
    std::vector<long> ranks = car_ranks(pf);
    long total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ranks[i] < ranks[j] && ranks[j] < ranks[i] + m) ++total;
    return total;
}

long dinv(const ParkingFunction& pf) { return tdinv(pf) + dinvcorr(pf.path); }

QTPoly PFWeight::weight() const {
    return ret_factor(ret) * QTPoly::monomial(1, (int)dinv, (int)area);
}

PFWeight pf_weight(const ParkingFunction& pf) {
    PFWeight w;
    w.ret = ret(pf.path);
    w.area = area(pf.path);
    w.dinv = dinv(pf);
    w.pides = pides(pf);
    return w;
}

bool word_is_shuffle_of(const ParkingFunction& pf, const Composition& mu) {
    long total = 0;
    for (int p : mu) {
        if (p <= 0) throw CompositionSizeMismatch("word_is_shuffle_of: parts must be positive");
        total += p;
    }
    if (total != pf.cars()) throw CompositionSizeMismatch("word_is_shuffle_of: |mu| != n");
    std::vector<char> allowed(pf.cars() + 1, 0);
    long s = 0;
    for (size_t i = 0; i + 1 < mu.size(); ++i) {
        s += mu[i];
        allowed[s] = 1;
    }
    for (int i : ides(pf))
        if (!allowed[i]) return false;
    return true;
}

}  // namespace rsl
