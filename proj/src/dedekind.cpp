#include "rootcover/dedekind.hpp"

#include <numeric>
#include <string>

#include "rootcover/error.hpp"
#include "rootcover/hj.hpp"

namespace rootcover {

namespace {

void require_coprime(std::int64_t a, std::int64_t n)
{
    if (std::gcd(residue(a, n), n) != 1)
        throw Error(ErrorCode::NotCoprime,
                    "gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
}

} // namespace

Rat dedekind_sum(std::span<const std::int64_t> a, std::int64_t n)
{
    if (n < 3)
        throw Error(ErrorCode::BadInput, "dedekind_sum needs n >= 3");
    if (a.empty())
        throw Error(ErrorCode::BadInput, "dedekind_sum needs at least one argument");
    // ((r/n)) = (2r - n) / (2n) for 0 < r < n, and 0 for r = 0.
    Int total = 0;
    if (a.size() == 2 && n < (std::int64_t{1} << 31)) {
        std::int64_t a0 = residue(a[0], n), a1 = residue(a[1], n);
        std::int64_t r0 = 0, r1 = 0;
        __int128 acc = 0;
        for (std::int64_t i = 1; i < n; ++i) {
            r0 += a0;
            if (r0 >= n)
                r0 -= n;
            r1 += a1;
            if (r1 >= n)
                r1 -= n;
            if (r0 != 0 && r1 != 0)
                acc += static_cast<__int128>(2 * r0 - n) * (2 * r1 - n);
        }
        bool neg = acc < 0;
        unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(acc) : acc;
        Int hi(static_cast<unsigned long>(mag >> 64));
        Int lo(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFull));
        mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 64);
        total = hi + lo;
        if (neg)
            total = -total;
        return make_rat(total, Int(static_cast<long>(4 * n * n)));
    }
    for (std::int64_t i = 1; i < n; ++i) {
        Int term = 1;
        for (std::int64_t at : a) {
            std::int64_t r = residue(residue(at, n) * i, n);
            if (r == 0) {
                term = 0;
                break;
            }
            term *= static_cast<long>(2 * r - n);
        }
        total += term;
    }
    Int denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(2 * n),
                  static_cast<unsigned long>(a.size()));
    return make_rat(total, denom);
}

Rat classical_dedekind(std::int64_t h, std::int64_t k)
{
    if (k < 1)
        throw Error(ErrorCode::BadInput, "classical_dedekind needs k >= 1");
    require_coprime(h, k);
    h = residue(h, k);
    Rat acc = 0;
    int sign = 1;
    // s(h,k) + s(k,h) = (h/k + k/h + 1/(hk))/12 - 1/4, with s(0,1) = 0.
    while (h != 0) {
        Rat hk(static_cast<long>(h), static_cast<long>(k));
        hk.canonicalize();
        Rat kh(static_cast<long>(k), static_cast<long>(h));
        kh.canonicalize();
        Rat inv(1L, static_cast<long>(h) * static_cast<long>(k));
        Rat step = (hk + kh + inv) / 12 - Rat(1, 4);
        if (sign > 0)
            acc += step;
        else
            acc -= step;
        sign = -sign;
        std::int64_t next = k % h;
        k = h;
        h = next;
    }
    return acc;
}

Rat dedekind_fast(std::int64_t a, std::int64_t b, std::int64_t n)
{
    if (n < 3)
        throw Error(ErrorCode::BadInput, "dedekind_fast needs n >= 3");
    require_coprime(a, n);
    require_coprime(b, n);
    // Substituting i -> a'i turns the sum into s(a'b, n).
    std::int64_t h = residue(static_cast<std::int64_t>(
                                 static_cast<__int128>(mod_inverse(a, n)) * residue(b, n) % n),
                             n);
    return classical_dedekind(h, n);
}

PowerSums power_sums(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n)
{
    Rat N(static_cast<long>(n));
    Rat dab = dedekind_fast(a, b, n);
    Rat dac = dedekind_fast(a, c, n);
    Rat dbc = dedekind_fast(b, c, n);
    PowerSums out;
    out.ab = N * N * dab + N * N * (N - 1) / 4;
    out.aab = N * N * N * dab + N * N * (N - 1) * (2 * N - 1) / 12;
    out.abc = N * N * N / 2 * (dab + dac + dbc) + N * N * N * (N - 1) / 8;
    return out;
}

Rat barkan_residual(std::int64_t n, std::int64_t q)
{
    if (!is_prime(n) || n < 3 || q <= 0 || q >= n)
        throw Error(ErrorCode::BadInput,
                    "barkan_residual needs prime n >= 3 and 0 < q < n, got n=" +
                        std::to_string(n) + " q=" + std::to_string(q));
    HJExpansion e = hj_expand(n, q);
    Rat lhs = 12 * dedekind_fast(1, q, n) + Rat(static_cast<long>(e.length()));
    Rat rhs = Rat(static_cast<long>(e.excess)) + make_rat(q + e.q_inv, n);
    return lhs - rhs;
}

} // namespace rootcover
