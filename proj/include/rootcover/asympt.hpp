#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rootcover/exact.hpp"

namespace rootcover {

// Residues q in (0, n) with |d(1,q,n)| <= 3 sqrt(n) + 5 and l(q,n) <= 3 sqrt(n) + 2.
struct ONSet {
    std::int64_t n = 0;
    std::vector<std::int64_t> members;  // sorted
    std::int64_t complement_size = 0;   // counted inside [1, n-1]
    bool complement_bound_holds = false;

    bool contains(std::int64_t q) const;
};

bool girstmair_member(std::int64_t n, std::int64_t q);

ONSet girstmair_set(std::int64_t n);

// Exact test of c <= sqrt(n) log(4n).
bool complement_within_bound(std::int64_t complement_size, std::int64_t n);

// Lazily evaluated membership table for one prime.
class MembershipCache {
public:
    explicit MembershipCache(std::int64_t n);

    bool contains(std::int64_t q);
    std::int64_t modulus() const { return n_; }

private:
    std::int64_t n_;
    std::vector<std::int8_t> state_;  // -1 unknown, 0 out, 1 in
};

std::int64_t q_of_pair(std::int64_t n, std::int64_t nu_j, std::int64_t nu_k);

struct Partition {
    std::int64_t n = 0;
    std::vector<std::int64_t> nu;
    std::vector<std::vector<std::int64_t>> q_matrix;  // q[j][k], diagonal 0

    std::size_t size() const { return nu.size(); }
    std::int64_t q(std::size_t j, std::size_t k) const { return q_matrix.at(j).at(k); }
};

Partition make_partition(std::int64_t n, std::vector<std::int64_t> nu);

bool is_asymptotic(const Partition& part, MembershipCache& cache);
bool is_asymptotic(const Partition& part);

// Seeded sampler of compositions of n into r positive parts.
// Cut points are r-1 distinct values of [1, n-1] drawn with Floyd's algorithm
// on a mt19937_64 stream; bounded draws use rejection on the top of the range.
class CompositionSampler {
public:
    CompositionSampler(std::int64_t n, std::int64_t r, std::uint64_t seed);

    std::vector<std::int64_t> next();

private:
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

    std::int64_t n_;
    std::int64_t r_;
    std::mt19937_64 rng_;
};

Partition find_asymptotic_partition(std::int64_t n, std::int64_t r, std::uint64_t seed,
                                    std::int64_t max_trials);

Rat partition_density(std::int64_t n, std::int64_t r, std::int64_t samples, std::uint64_t seed);

// Exact fraction of all compositions of n into r parts that are asymptotic.
Rat partition_density_exact(std::int64_t n, std::int64_t r);

} // namespace rootcover
