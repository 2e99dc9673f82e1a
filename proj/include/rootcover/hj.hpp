#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rootcover/exact.hpp"

namespace rootcover {

// Negative-regular continued fraction n/q = [k_1, ..., k_s].
// m_seq runs n = m_0 > q = m_1 > ... > m_s = 1 > m_{s+1} = 0 and
// n_seq runs 0 = n_0 < 1 = n_1 < ... < n_s = q' < n_{s+1} = n.
struct HJExpansion {
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::vector<std::int64_t> ks;     // k_1..k_s, stored 0-based
    std::vector<std::int64_t> m_seq;  // m_0..m_{s+1}
    std::vector<std::int64_t> n_seq;  // n_0..n_{s+1}
    std::int64_t q_inv = 0;
    std::int64_t excess = 0;          // sum of (k - 2)

    std::size_t length() const { return ks.size(); }
    std::int64_t k(std::size_t alpha) const { return ks.at(alpha - 1); }
    std::int64_t m(std::size_t alpha) const { return m_seq.at(alpha); }
    std::int64_t nn(std::size_t alpha) const { return n_seq.at(alpha); }

    bool operator==(const HJExpansion&) const = default;
};

HJExpansion hj_expand(std::int64_t n, std::int64_t q);

Rat hj_evaluate(std::span<const std::int64_t> ks);

HJExpansion hj_dual(const HJExpansion& e);

// Length of the expansion of n/q without building the record.
std::int64_t hj_length(std::int64_t n, std::int64_t q);

// Throws BadInput if any structural invariant fails.
void hj_check(const HJExpansion& e);

} // namespace rootcover
