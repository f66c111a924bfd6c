#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "rsl/errors.hpp"

namespace rsl {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;
// Ordered positive parts.
using Composition = std::vector<int>;

// Descending lexicographic: (n) first, (1^n) last. A linear extension of
// dominance order, which makes the Kostka matrix triangular in this order.
struct PartLexDesc {
    bool operator()(const Partition& a, const Partition& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

bool is_partition(const std::vector<int>& v);
long part_size(const Partition& p);

Partition conjugate(const Partition& p);

// n(mu) = sum (i-1) mu_i.
long n_stat(const Partition& p);

struct PartitionStats {
    Partition mu;
    long nstat;
    Partition conj;
    explicit PartitionStats(Partition p) : mu(std::move(p)), nstat(n_stat(mu)), conj(conjugate(mu)) {}
};

// All partitions of n in descending lexicographic order; cached.
const std::vector<Partition>& partitions_of(int n);

// z_lambda = prod i^{m_i} m_i!.
mpz_class z_of(const Partition& p);

// Partition from arbitrary nonnegative entries: sort desc, drop zeros.
Partition sorted_partition(std::vector<int> v);

// Kostka number K_{lambda,mu} = #SSYT(lambda, mu); cached.
long kostka(const Partition& lambda, const Partition& mu);

std::string partition_str(const Partition& p);

}  // namespace rsl
