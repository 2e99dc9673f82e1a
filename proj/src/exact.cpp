#include "rootcover/exact.hpp"

#include <cmath>
#include <numeric>

#include "rootcover/error.hpp"

namespace rootcover {

namespace {

constexpr unsigned kDyadicBits = 200;
constexpr int kSeriesTerms = 64;

// 2*atanh(z) truncated; every dropped term is positive for z >= 0.
Rat two_atanh_lower(const Rat& z)
{
    Rat z2 = z * z;
    Rat power = z;
    Rat sum = 0;
    for (int i = 0; i < kSeriesTerms; ++i) {
        sum += power / (2 * i + 1);
        power *= z2;
    }
    return 2 * sum;
}

Rat round_down_dyadic(const Rat& x)
{
    Int scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), kDyadicBits);
    Rat scaled = x * scale;
    return make_rat(floor(scaled), scale);
}

} // namespace

Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0)
        throw Error(ErrorCode::BadInput, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(std::int64_t num, std::int64_t den)
{
    return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

std::int64_t residue(std::int64_t a, std::int64_t n)
{
    if (n < 1)
        throw Error(ErrorCode::BadInput, "modulus must be positive");
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

Int residue(const Int& a, const Int& n)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t n)
{
    if (n < 2)
        throw Error(ErrorCode::BadInput, "modulus must be at least 2");
    std::int64_t old_r = residue(a, n), r = n;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t quot = old_r / r;
        std::int64_t t = old_r - quot * r;
        old_r = r;
        r = t;
        t = old_s - quot * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw Error(ErrorCode::NotCoprime,
                    "gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
    return residue(old_s, n);
}

Int floor(const Rat& x)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int ceil(const Rat& x)
{
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Rat sawtooth(const Rat& x)
{
    if (is_integer(x))
        return 0;
    Rat frac = x - Rat(floor(x));
    return frac - Rat(1, 2);
}

bool leq_sqrt_bound(const Rat& x, const Rat& c, std::int64_t m, const Rat& d)
{
    if (c < 0 || m < 0)
        throw Error(ErrorCode::BadInput, "leq_sqrt_bound needs c >= 0 and m >= 0");
    if (x <= d)
        return true;
    Rat gap = x - d;
    Rat rhs = c * c * Rat(Int(static_cast<long>(m)));
    return gap * gap <= rhs;
}

Rat log_lower_bound(std::int64_t x)
{
    if (x < 1)
        throw Error(ErrorCode::BadInput, "log_lower_bound needs x >= 1");
    int k = 0;
    std::int64_t y = x;
    while (y >= 2) {
        y >>= 1;
        ++k;
    }
    // x = 2^k * t with t in [1, 2)
    Int two_k = 1;
    mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    Rat t = make_rat(Int(static_cast<long>(x)), two_k);
    Rat log2 = two_atanh_lower(Rat(1, 3));
    Rat logt = two_atanh_lower((t - 1) / (t + 1));
    return round_down_dyadic(k * log2 + logt);
}

Rat sqrt_upper_bound(std::int64_t m, unsigned bits)
{
    if (m < 0)
        throw Error(ErrorCode::BadInput, "sqrt of negative");
    Int scaled(static_cast<long>(m));
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    if (root * root != scaled)
        root += 1;
    Int den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    return make_rat(root, den);
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0)
            return false;
    return true;
}

std::string to_string(const Rat& x)
{
    if (is_integer(x))
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return make_rat(Int(s), Int(1));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::BadInput, "not a rational: '" + s + "'");
    }
}

std::string to_decimal(const Rat& x, int digits)
{
    if (digits < 0)
        digits = 0;
    Int scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rat scaled = abs(x) * scale + Rat(1, 2);
    Int rounded = floor(scaled);
    std::string body = rounded.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    bool negative = x < 0 && rounded != 0;
    return negative ? "-" + body : body;
}

double to_double(const Rat& x) { return x.get_d(); }

} // namespace rootcover
