#pragma once

#include <cstdint>
#include <span>

#include "rootcover/exact.hpp"

namespace rootcover {

// d(a_1, ..., a_d, n) by the defining O(n) sum.
Rat dedekind_sum(std::span<const std::int64_t> a, std::int64_t n);

// d(a, b, n) in O(log n) via d(a, b, n) = s({a'b}_n, n) and reciprocity.
Rat dedekind_fast(std::int64_t a, std::int64_t b, std::int64_t n);

// Classical s(h, k) for gcd(h, k) = 1.
Rat classical_dedekind(std::int64_t h, std::int64_t k);

struct PowerSums {
    Rat ab;    // sum {ia}{ib}
    Rat aab;   // sum {ia}^2 {ib}
    Rat abc;   // sum {ia}{ib}{ic}
};

PowerSums power_sums(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n);

// 12 d(1,q,n) + s - sum(k-2) - (q + q')/n; zero for every prime n and 0 < q < n.
Rat barkan_residual(std::int64_t n, std::int64_t q);

} // namespace rootcover
