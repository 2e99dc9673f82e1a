#include "rootcover/hj.hpp"

#include <numeric>
#include <string>

#include "rootcover/error.hpp"

namespace rootcover {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw Error(ErrorCode::BadInput, what);
}

} // namespace

HJExpansion hj_expand(std::int64_t n, std::int64_t q)
{
    if (n < 2 || q < 1 || q >= n || std::gcd(n, q) != 1)
        throw Error(ErrorCode::BadInput,
                    "hj_expand needs 1 <= q < n coprime, got n=" + std::to_string(n) +
                        " q=" + std::to_string(q));
    HJExpansion e;
    e.n = n;
    e.q = q;
    e.m_seq = {n, q};
    e.n_seq = {0, 1};
    while (e.m_seq.back() != 0) {
        std::size_t a = e.m_seq.size() - 1;
        std::int64_t prev = e.m_seq[a - 1];
        std::int64_t cur = e.m_seq[a];
        std::int64_t k = (prev + cur - 1) / cur;
        e.ks.push_back(k);
        e.m_seq.push_back(k * cur - prev);
        e.n_seq.push_back(k * e.n_seq[a] - e.n_seq[a - 1]);
        e.excess += k - 2;
    }
    e.q_inv = e.n_seq[e.length()];
    return e;
}

std::int64_t hj_length(std::int64_t n, std::int64_t q)
{
    if (n < 2 || q < 1 || q >= n || std::gcd(n, q) != 1)
        throw Error(ErrorCode::BadInput, "hj_length needs 1 <= q < n coprime");
    std::int64_t prev = n, cur = q, s = 0;
    while (cur != 0) {
        std::int64_t k = (prev + cur - 1) / cur;
        std::int64_t next = k * cur - prev;
        prev = cur;
        cur = next;
        ++s;
    }
    return s;
}

Rat hj_evaluate(std::span<const std::int64_t> ks)
{
    if (ks.empty())
        throw Error(ErrorCode::BadInput, "empty continued fraction");
    if (ks.back() < 2)
        throw Error(ErrorCode::BadInput, "coefficients must be >= 2");
    Rat value(static_cast<long>(ks.back()));
    for (auto it = ks.rbegin() + 1; it != ks.rend(); ++it) {
        if (*it < 2)
            throw Error(ErrorCode::BadInput, "coefficients must be >= 2");
        value = Rat(static_cast<long>(*it)) - 1 / value;
    }
    value.canonicalize();
    return value;
}

HJExpansion hj_dual(const HJExpansion& e)
{
    HJExpansion d = hj_expand(e.n, e.q_inv);
    std::size_t s = e.length();
    if (d.length() != s)
        throw Error(ErrorCode::BadInput, "dual expansion has different length");
    for (std::size_t a = 0; a <= s + 1; ++a) {
        if (d.m_seq[a] != e.n_seq[s + 1 - a] || d.n_seq[a] != e.m_seq[s + 1 - a])
            throw Error(ErrorCode::BadInput, "dual expansion is not the reversal");
    }
    return d;
}

void hj_check(const HJExpansion& e)
{
    std::size_t s = e.length();
    require(s >= 1, "empty expansion");
    require(e.m_seq.size() == s + 2 && e.n_seq.size() == s + 2, "sequence sizes");
    require(e.m_seq[0] == e.n && e.m_seq[1] == e.q && e.m_seq[s] == 1 && e.m_seq[s + 1] == 0,
            "m endpoints");
    require(e.n_seq[0] == 0 && e.n_seq[1] == 1 && e.n_seq[s] == e.q_inv && e.n_seq[s + 1] == e.n,
            "n endpoints");
    std::int64_t excess = 0;
    for (std::size_t a = 0; a <= s; ++a) {
        require(e.m_seq[a] > e.m_seq[a + 1], "m strictly decreasing");
        require(e.n_seq[a] < e.n_seq[a + 1], "n strictly increasing");
        require(e.m_seq[a] * e.n_seq[a + 1] - e.m_seq[a + 1] * e.n_seq[a] == e.n, "determinant");
        require(std::gcd(e.m_seq[a], e.m_seq[a + 1]) == 1, "gcd(m_a, m_a+1)");
    }
    for (std::size_t a = 1; a <= s; ++a) {
        std::int64_t k = e.ks[a - 1];
        require(k >= 2, "k >= 2");
        // gcd(m_a, n_a) divides n; it is 1 when n is prime
        require(e.n % std::gcd(e.m_seq[a], e.n_seq[a]) == 0, "gcd(m_a, n_a) divides n");
        require(e.m_seq[a + 1] == k * e.m_seq[a] - e.m_seq[a - 1], "m recurrence");
        require(e.n_seq[a + 1] == k * e.n_seq[a] - e.n_seq[a - 1], "n recurrence");
        excess += k - 2;
    }
    require(excess == e.excess, "excess");
    require((e.q * e.q_inv) % e.n == 1 % e.n, "q_inv is the inverse");
}

} // namespace rootcover
