#include "rootcover/asympt.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <string>

#include "rootcover/dedekind.hpp"
#include "rootcover/error.hpp"
#include "rootcover/hj.hpp"

namespace rootcover {

namespace {

void require_girstmair_prime(std::int64_t n)
{
    if (n < 17 || !is_prime(n))
        throw Error(ErrorCode::BadInput, "expected a prime n >= 17, got " + std::to_string(n));
}

} // namespace

bool ONSet::contains(std::int64_t q) const
{
    return std::binary_search(members.begin(), members.end(), q);
}

bool girstmair_member(std::int64_t n, std::int64_t q)
{
    if (q <= 0 || q >= n)
        return false;
    Rat len(static_cast<long>(hj_length(n, q)));
    if (!leq_sqrt_bound(len, 3, n, 2))
        return false;
    return leq_sqrt_bound(abs(dedekind_fast(1, q, n)), 3, n, 5);
}

bool complement_within_bound(std::int64_t complement_size, std::int64_t n)
{
    // c^2 <= n L^2 with L <= log(4n) is sufficient.
    Rat c(static_cast<long>(complement_size));
    Rat lg = log_lower_bound(4 * n);
    return c * c <= Rat(static_cast<long>(n)) * lg * lg;
}

ONSet girstmair_set(std::int64_t n)
{
    require_girstmair_prime(n);
    ONSet set;
    set.n = n;
    for (std::int64_t q = 1; q < n; ++q) {
        if (girstmair_member(n, q))
            set.members.push_back(q);
        else
            ++set.complement_size;
    }
    set.complement_bound_holds = complement_within_bound(set.complement_size, n);
    return set;
}

MembershipCache::MembershipCache(std::int64_t n)
    : n_(n), state_(static_cast<std::size_t>(n), std::int8_t{-1})
{
    require_girstmair_prime(n);
}

bool MembershipCache::contains(std::int64_t q)
{
    if (q <= 0 || q >= n_)
        return false;
    auto& slot = state_[static_cast<std::size_t>(q)];
    if (slot < 0) {
        bool in = girstmair_member(n_, q);
        slot = in ? 1 : 0;
        // inverse closure
        state_[static_cast<std::size_t>(mod_inverse(q, n_))] = slot;
    }
    return slot == 1;
}

std::int64_t q_of_pair(std::int64_t n, std::int64_t nu_j, std::int64_t nu_k)
{
    if (nu_j <= 0 || nu_j >= n || nu_k <= 0 || nu_k >= n)
        throw Error(ErrorCode::BadInput, "multiplicities must lie in (0, n)");
    auto prod = static_cast<__int128>(nu_j) * mod_inverse(nu_k, n) % n;
    return residue(-static_cast<std::int64_t>(prod), n);
}

Partition make_partition(std::int64_t n, std::vector<std::int64_t> nu)
{
    if (n < 2)
        throw Error(ErrorCode::BadInput, "partition modulus must be at least 2");
    Partition part;
    part.n = n;
    part.nu = std::move(nu);
    std::size_t r = part.nu.size();
    part.q_matrix.assign(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
            if (j != k)
                part.q_matrix[j][k] = q_of_pair(n, part.nu[j], part.nu[k]);
    return part;
}

bool is_asymptotic(const Partition& part, MembershipCache& cache)
{
    for (std::size_t j = 0; j < part.size(); ++j)
        for (std::size_t k = j + 1; k < part.size(); ++k)
            if (!cache.contains(part.q(j, k)))
                return false;
    return true;
}

bool is_asymptotic(const Partition& part)
{
    MembershipCache cache(part.n);
    return is_asymptotic(part, cache);
}

CompositionSampler::CompositionSampler(std::int64_t n, std::int64_t r, std::uint64_t seed)
    : n_(n), r_(r), rng_(seed)
{
    if (r < 1 || (r > 1 && r > n - 1))
        throw Error(ErrorCode::BadInput, "no composition of n into r positive parts");
}

std::uint64_t CompositionSampler::uniform(std::uint64_t lo, std::uint64_t hi)
{
    std::uint64_t span = hi - lo + 1;
    if (span == 0)
        return rng_();
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
    std::uint64_t x;
    do {
        x = rng_();
    } while (x > limit);
    return lo + x % span;
}

std::vector<std::int64_t> CompositionSampler::next()
{
    // Floyd: uniform (r-1)-subset of [1, n-1].
    std::int64_t pool = n_ - 1;
    std::int64_t picks = r_ - 1;
    std::set<std::int64_t> cuts;
    for (std::int64_t j = pool - picks + 1; j <= pool; ++j) {
        auto t = static_cast<std::int64_t>(uniform(1, static_cast<std::uint64_t>(j)));
        if (!cuts.insert(t).second)
            cuts.insert(j);
    }
    std::vector<std::int64_t> parts;
    parts.reserve(static_cast<std::size_t>(r_));
    std::int64_t prev = 0;
    for (std::int64_t c : cuts) {
        parts.push_back(c - prev);
        prev = c;
    }
    parts.push_back(n_ - prev);
    return parts;
}

Partition find_asymptotic_partition(std::int64_t n, std::int64_t r, std::uint64_t seed,
                                    std::int64_t max_trials)
{
    require_girstmair_prime(n);
    if (r < 2)
        throw Error(ErrorCode::BadInput, "asymptotic partitions need r >= 2");
    if (r > n - 1)
        throw Error(ErrorCode::Exhausted, "no composition of " + std::to_string(n) + " into " +
                                              std::to_string(r) + " parts with all nu < n");
    MembershipCache cache(n);
    CompositionSampler sampler(n, r, seed);
    for (std::int64_t trial = 0; trial < max_trials; ++trial) {
        Partition part = make_partition(n, sampler.next());
        if (is_asymptotic(part, cache))
            return part;
    }
    throw Error(ErrorCode::Exhausted,
                "no asymptotic partition within " + std::to_string(max_trials) + " trials");
}

Rat partition_density(std::int64_t n, std::int64_t r, std::int64_t samples, std::uint64_t seed)
{
    if (r == 1)
        return 1;
    if (samples < 1)
        throw Error(ErrorCode::BadInput, "need at least one sample");
    if (r < 1 || r > n - 1)
        throw Error(ErrorCode::BadInput, "no composition of n into r parts below n");
    MembershipCache cache(n);
    CompositionSampler sampler(n, r, seed);
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i)
        if (is_asymptotic(make_partition(n, sampler.next()), cache))
            ++hits;
    return make_rat(hits, samples);
}

Rat partition_density_exact(std::int64_t n, std::int64_t r)
{
    if (r == 1)
        return 1;
    if (r < 1 || r > n - 1)
        throw Error(ErrorCode::BadInput, "no composition of n into r parts below n");
    MembershipCache cache(n);
    std::vector<std::int64_t> parts(static_cast<std::size_t>(r));
    Int total = 0, hits = 0;
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t idx, std::int64_t left) {
        if (idx + 1 == parts.size()) {
            parts[idx] = left;
            total += 1;
            if (is_asymptotic(make_partition(n, parts), cache))
                hits += 1;
            return;
        }
        auto rest = static_cast<std::int64_t>(parts.size() - idx - 1);
        for (std::int64_t v = 1; v <= left - rest; ++v) {
            parts[idx] = v;
            walk(idx + 1, left - v);
        }
    };
    walk(0, n);
    return make_rat(hits, total);
}

} // namespace rootcover
