#include "rsl/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace rsl {

bool is_partition(const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 0) return false;
        if (i && v[i] > v[i - 1]) return false;
    }
    return true;
}

long part_size(const Partition& p) {
    long s = 0;
    for (int x : p) s += x;
    return s;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.resize(p[0]);
    for (int j = 0; j < p[0]; ++j) {
        int cnt = 0;
        for (int x : p)
            if (x > j) ++cnt;
        c[j] = cnt;
    }
    return c;
}

long n_stat(const Partition& p) {
    long s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += long(i) * p[i];
    return s;
}

namespace {
std::mutex g_part_mutex;
std::map<int, std::vector<Partition>> g_partitions;

void gen_partitions(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}
}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    std::lock_guard<std::mutex> lock(g_part_mutex);
    auto it = g_partitions.find(n);
    if (it != g_partitions.end()) return it->second;
    std::vector<Partition> out;
    Partition cur;
    if (n >= 0) gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return g_partitions.emplace(n, std::move(out)).first->second;
}

mpz_class z_of(const Partition& p) {
    mpz_class z = 1;
    size_t i = 0;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        size_t mult = j - i;
        for (size_t k = 1; k <= mult; ++k) z *= (unsigned long)k;
        mpz_class powr;
        mpz_ui_pow_ui(powr.get_mpz_t(), p[i], mult);
        z *= powr;
        i = j;
    }
    return z;
}

Partition sorted_partition(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

namespace {
std::mutex g_kostka_mutex;
std::map<std::pair<Partition, Partition>, long> g_kostka;

// K(lambda, mu) by peeling the last content entry as a horizontal strip.
long kostka_rec(const Partition& lambda, const Partition& mu) {
    if (part_size(lambda) != part_size(mu)) return 0;
    if (lambda.empty()) return 1;
    auto key = std::make_pair(lambda, mu);
    auto it = g_kostka.find(key);
    if (it != g_kostka.end()) return it->second;
    int last = mu.back();
    Partition mu2(mu.begin(), mu.end() - 1);
    long total = 0;
    // enumerate inner shapes nu with lambda/nu a horizontal strip of size last
    size_t rows = lambda.size();
    std::vector<int> nu(rows);
    // nu_i in [max(lambda_{i+1}, lambda_i - needed), lambda_i], horizontal strip:
    // lambda_{i+1} <= nu_i <= lambda_i and nu weakly decreasing.
    std::vector<int> lo(rows), hi(rows);
    for (size_t i = 0; i < rows; ++i) {
        hi[i] = lambda[i];
        lo[i] = (i + 1 < rows) ? lambda[i + 1] : 0;
    }
    // DFS over choices with running size
    std::function<void(size_t, long)> rec = [&](size_t i, long removed) {
        if (removed > last) return;
        if (i == rows) {
            if (removed != last) return;
            Partition nup;
            for (int x : nu)
                if (x > 0) nup.push_back(x);
            if (!is_partition(nup)) return;
            total += kostka_rec(nup, mu2);
            return;
        }
        for (int v = hi[i]; v >= lo[i]; --v) {
            nu[i] = v;
            rec(i + 1, removed + (lambda[i] - v));
        }
    };
    rec(0, 0);
    g_kostka.emplace(key, total);
    return total;
}
}  // namespace

long kostka(const Partition& lambda, const Partition& mu) {
    std::lock_guard<std::mutex> lock(g_kostka_mutex);
    return kostka_rec(lambda, mu);
}

std::string partition_str(const Partition& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    return os.str();
}

}  // namespace rsl
