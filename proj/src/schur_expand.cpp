#include "rsl/schur_expand.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <thread>

namespace rsl {

SignedPartition straighten(const Composition& alpha) {
    std::vector<int> a = alpha;
    for (int x : a)
        if (x < 0) throw InvalidArgument("straighten: negative part");
    int sign = 1;
    const size_t k = a.size();
    long maxpart = 1;
    for (int x : a) maxpart = std::max<long>(maxpart, x);
    long budget = (long)k * (long)k * (maxpart + 1) + 64;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < k; ++i) {
            if (a[i + 1] > a[i]) {
                if (a[i + 1] == a[i] + 1) return {0, {}};
                int lo = a[i], hi = a[i + 1];
                a[i] = hi - 1;
                a[i + 1] = lo + 1;
                sign = -sign;
                changed = true;
            }
        }
        if (--budget < 0) throw Error("straighten: rewrite budget exhausted");
    }
    Partition p;
    for (int x : a)
        if (x > 0) p.push_back(x);
    return {sign, p};
}

namespace {

// Per-worker accumulator: signed integer counts per (partition, qexp, texp).
// Counts stay in int64 (they are bounded by parking-function counts); the
// conversion to big-integer polynomials happens once at the end.
using CountMap = std::map<Partition, std::map<Mono, std::int64_t, MonoDegLexDesc>, PartLexDesc>;

void accumulate_path(const DyckPath& path, CountMap& acc,
                     std::map<Composition, SignedPartition>& straight_cache) {
    const long a = area(path);
    const long dc = dinvcorr(path);
    const int r = ret(path);
    for_each_pf_on_path(path, [&](const ParkingFunction& pf) {
        Composition pid = pides(pf);
        auto it = straight_cache.find(pid);
        if (it == straight_cache.end()) it = straight_cache.emplace(pid, straighten(pid)).first;
        const SignedPartition& sp = it->second;
        if (sp.sign == 0) return;
        long d = tdinv(pf) + dc;
        auto& slot = acc[sp.partition];
        for (int j = 0; j < r; ++j) slot[Mono{(int)d, (int)(a - j)}] += sp.sign;
    });
}

}  // namespace

SchurExpansion hikita(const GridShape& shape, int jobs) {
    std::vector<DyckPath> paths = enumerate_paths(shape);
    int workers = std::max(1, jobs);
    workers = std::min<int>(workers, (int)paths.size() ? (int)paths.size() : 1);

    std::vector<CountMap> parts(workers);
    if (workers <= 1) {
        std::map<Composition, SignedPartition> cache;
        for (const DyckPath& p : paths) accumulate_path(p, parts[0], cache);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w]() {
                std::map<Composition, SignedPartition> cache;
                for (size_t i = w; i < paths.size(); i += workers)
                    accumulate_path(paths[i], parts[w], cache);
            });
        }
        for (auto& t : threads) t.join();
    }
    // deterministic merge in worker order (exact integer addition commutes)
    CountMap total;
    for (auto& part : parts)
        for (auto& [lam, monos] : part)
            for (auto& [mono, c] : monos) total[lam][mono] += c;

    SchurExpansion e;
    e.m = shape.m;
    e.n = shape.n;
    for (auto& [lam, monos] : total) {
        QTPoly poly;
        for (auto& [mono, c] : monos) poly.add_term(mono, Int((long)c));
        if (poly.is_zero()) continue;
        if (poly.min_texp() < 0)
            throw Error("hikita: coefficient with negative t exponent at s_" + partition_str(lam));
        if (!poly.symmetric_qt())
            throw Error("hikita: coefficient not q<->t symmetric at s_" + partition_str(lam));
        e.coeffs.emplace(lam, std::move(poly));
    }
    return e;
}

QTPoly coefficient(const SchurExpansion& e, const Partition& lambda) {
    if (!is_partition(lambda)) throw InvalidArgument("coefficient: not a partition");
    if (part_size(lambda) != e.n)
        throw PartitionSizeMismatch("coefficient: |lambda| != n");
    auto it = e.coeffs.find(lambda);
    return it == e.coeffs.end() ? QTPoly() : it->second;
}

QTPoly hall_h_coefficient(const GridShape& shape, const Composition& mu) {
    long total = 0;
    for (int p : mu) {
        if (p <= 0) throw CompositionSizeMismatch("hall_h_coefficient: parts must be positive");
        total += p;
    }
    if (total != shape.n) throw CompositionSizeMismatch("hall_h_coefficient: |mu| != n");
    QTPoly out;
    for_each_path(shape, [&](const DyckPath& path) {
        const long a = area(path);
        const long dc = dinvcorr(path);
        const int r = ret(path);
        for_each_pf_on_path(path, [&](const ParkingFunction& pf) {
            if (!word_is_shuffle_of(pf, mu)) return;
            long d = tdinv(pf) + dc;
            for (int j = 0; j < r; ++j) out.add_term(Mono{(int)d, (int)(a - j)}, 1);
        });
    });
    if (!out.is_zero() && out.min_texp() < 0)
        throw Error("hall_h_coefficient: negative t exponent survived");
    return out;
}

std::map<Partition, QTPoly, PartLexDesc> monomial_expansion(const SchurExpansion& e) {
    std::map<Partition, QTPoly, PartLexDesc> out;
    for (const Partition& mu : partitions_of(e.n)) {
        QTPoly c;
        for (auto& [lam, poly] : e.coeffs) {
            long k = kostka(lam, mu);
            if (k != 0) c += poly * Int(k);
        }
        if (!c.is_zero()) out.emplace(mu, std::move(c));
    }
    return out;
}

std::map<Partition, QTPoly, PartLexDesc> monomial_expansion_direct(const GridShape& shape) {
    // coefficient of m_lambda in sum_pf w(pf) F_{pides(pf)} is the weight of
    // parking functions with ides(pf) inside the partial-sum set of lambda.
    std::map<Partition, QTPoly, PartLexDesc> out;
    for (const Partition& lam : partitions_of(shape.n)) {
        QTPoly c = hall_h_coefficient(shape, lam);
        if (!c.is_zero()) out.emplace(lam, std::move(c));
    }
    return out;
}

std::map<Partition, std::vector<std::pair<TwoRow, long>>, PartLexDesc> qt_schur_table(
    const GridShape& shape) {
    SchurExpansion e = hikita(shape);
    std::map<Partition, std::vector<std::pair<TwoRow, long>>, PartLexDesc> out;
    for (auto& [lam, poly] : e.coeffs) {
        try {
            out.emplace(lam, decompose_qt_schur(poly));
        } catch (const NotSchurPositive& err) {
            throw NotSchurPositive("qt_schur_table: coefficient of s_" + partition_str(lam) +
                                   " in shape (" + std::to_string(shape.m) + "," +
                                   std::to_string(shape.n) + "): " + err.what());
        }
    }
    return out;
}

}  // namespace rsl
