#include "rootcover/invariants.hpp"

#include <algorithm>
#include <cstdlib>

#include "rootcover/dedekind.hpp"
#include "rootcover/error.hpp"
#include "rootcover/hj.hpp"

namespace rootcover {

namespace {

Rat R(std::int64_t x) { return Rat(static_cast<long>(x)); }

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

std::size_t Z(int x) { return static_cast<std::size_t>(x); }

// D_jk (D_j + D_k + K_Z)
std::int64_t pair_weight(const BasePair& pair, int j, int k)
{
    return pair.DD2[Z(k)][Z(j)] + pair.DD2[Z(j)][Z(k)] + pair.KZ_DD(j, k);
}

template <typename Fn>
void for_each_triple(int r, Fn&& fn)
{
    for (int l = 2; l < r; ++l)
        for (int k = 1; k < l; ++k)
            for (int j = 0; j < k; ++j)
                fn(j, k, l);
}

std::vector<std::vector<Rat>> pair_dedekind(const Partition& part)
{
    std::size_t r = part.size();
    std::vector<std::vector<Rat>> d(r, std::vector<Rat>(r, Rat(0)));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = j + 1; k < r; ++k) {
            d[j][k] = dedekind_fast(part.nu[j], part.nu[k], part.n);
            d[k][j] = d[j][k];
        }
    return d;
}

// Global wall of the pair j < k: expansion of n / q_kj, read from D_j towards D_k.
struct PairWall {
    HJExpansion hj;
    std::int64_t n = 0;

    Rat N(std::size_t alpha) const { return make_rat(hj.m(alpha) + hj.nn(alpha), n) - 1; }
};

} // namespace

void check_compatible(const BasePair& pair, const Partition& part)
{
    auto fail = [](const std::string& what) { throw Error(ErrorCode::IncompatiblePartition, what); };
    if (static_cast<int>(part.size()) != pair.r)
        fail("partition size does not match the number of divisors");
    if (part.n < 3 || !is_prime(part.n))
        fail("n must be an odd prime");
    std::int64_t sum = 0;
    for (std::int64_t x : part.nu) {
        if (residue(x, part.n) == 0)
            fail("every nu_j must be a unit mod n");
        sum = residue(sum + x, part.n);
    }
    if (pair.requires_sum_congruence && sum != 0)
        fail("sum of nu must vanish mod n");
}

ChiResult chi_root_cover(const BasePair& pair, const Partition& part)
{
    check_compatible(pair, part);
    using W = AmbientWeight;
    auto b = [&](std::initializer_list<int> sig, W w) {
        std::vector<int> s(sig);
        return bracket(pair, s, w);
    };
    Rat n = R(part.n);
    Rat d3 = b({3}, W::One);
    Rat d12 = b({1, 2}, W::One) + b({2, 1}, W::One);
    Rat d111 = b({1, 1, 1}, W::One);
    Rat c1d2 = b({2}, W::C1);
    Rat c1d11 = b({1, 1}, W::C1);
    Rat c1sqD = b({1}, W::C1Sq);
    Rat c2D = b({1}, W::C2);

    ChiResult out;
    out.R1 = (n - 1) * (n - 1) / (2 * n) * d3 + (n - 1) * (2 * n - 1) / (2 * n) * d12 +
             3 * (n - 1) / 2 * d111;
    out.R2 = (1 - n) / 2 * ((2 * n - 1) / n * c1d2 + 3 * c1d11) + (n - 1) / 2 * (c1sqD + c2D);

    auto d = pair_dedekind(part);
    Rat r3 = 0;
    for (int j = 0; j < pair.r; ++j)
        for (int k = j + 1; k < pair.r; ++k) {
            std::int64_t w = pair_weight(pair, j, k);
            if (w != 0)
                r3 += d[Z(j)][Z(k)] * R(w);
        }
    for_each_triple(pair.r, [&](int j, int k, int l) {
        std::int64_t t = pair.triple_distinct(j, k, l);
        if (t != 0)
            r3 += (d[Z(j)][Z(k)] + d[Z(j)][Z(l)] + d[Z(k)][Z(l)]) * R(t);
    });
    out.R3 = 6 * r3;
    out.chi = n * make_rat(pair.c1c2, 24) - (out.R1 + out.R2 + out.R3) / 12;
    return out;
}

std::vector<Rat> eigenspace_divisor(const Partition& part, std::int64_t i)
{
    std::vector<Rat> out;
    out.reserve(part.size());
    for (std::int64_t x : part.nu)
        out.push_back(make_rat(residue(static_cast<std::int64_t>(static_cast<__int128>(i) * x % part.n), part.n),
                               part.n));
    return out;
}

Rat chi_eigenspace_oracle(const BasePair& pair, const Partition& part)
{
    check_compatible(pair, part);
    ChowRing ring(pair);
    std::vector<Rat> K(ring.rank(), Rat(0));
    K[0] = -1;
    Rat n = R(part.n);
    Rat total = n * make_rat(pair.c1c2, 24);
    for (std::int64_t i = 1; i < part.n; ++i) {
        std::vector<Rat> L(ring.rank(), Rat(0));
        auto coeffs = eigenspace_divisor(part, i);
        std::copy(coeffs.begin(), coeffs.end(), L.begin() + 1);
        Rat c2L = 0;
        for (std::size_t a = 1; a < ring.rank(); ++a)
            c2L += L[a] * R(ring.c2_times(a));
        Rat rr = 2 * ring.cube(L, L, L) + 3 * ring.cube(L, L, K) + ring.cube(L, K, K) + c2L;
        total -= rr / 12;
    }
    return total;
}

K3Result k3_root_cover(const BasePair& pair, const Partition& part, Strategy strategy)
{
    check_compatible(pair, part);
    const std::int64_t n = part.n;
    const int r = pair.r;
    const Rat t = make_rat(n - 1, n);

    K3Result out;
    out.strategy = strategy;

    ChowRing ring(pair);
    std::vector<Rat> K(ring.rank(), t);
    K[0] = -1;
    out.nK_cubed = R(n) * ring.cube(K, K, K);

    // walls[j][k] for j < k
    std::vector<std::vector<PairWall>> walls(Z(r), std::vector<PairWall>(Z(r)));
    for (int j = 0; j < r; ++j)
        for (int k = j + 1; k < r; ++k)
            walls[Z(j)][Z(k)] = PairWall{hj_expand(n, q_of_pair(n, part.nu[Z(k)], part.nu[Z(j)])), n};
    auto N = [&](int a, int b, std::size_t alpha) -> Rat {
        if (a < b)
            return walls[Z(a)][Z(b)].N(alpha);
        const PairWall& w = walls[Z(b)][Z(a)];
        return w.N(w.hj.length() + 1 - alpha);
    };

    // local points of the triple-point cones
    out.points.assign(pair.T.size(), LatticePoint{});
    std::vector<Rat> V(pair.T.size(), Rat(0));
    Rat K3 = out.nK_cubed;
    for_each_triple(r, [&](int j, int k, int l) {
        std::int64_t T = pair.triple_distinct(j, k, l);
        if (T == 0)
            return;
        LocalConeSpec spec = local_cone(n, part.nu[Z(j)], part.nu[Z(k)], part.nu[Z(l)]);
        if (spec.degenerate())
            throw Error(ErrorCode::DegenerateCone, "triple-point cone is degenerate");
        LatticePoint v = select_v(spec, strategy);
        std::size_t idx = packed_triple_index(r, j, k, l);
        out.points[idx] = v;
        V[idx] = make_rat(v.sum() - n, n);
        K3 += R(n) * V[idx] * V[idx] * V[idx] / R(v.v1 * v.v2 * v.v3) * R(T);
    });

    // v-coordinate of divisor a in the triple {a, b, c}
    auto coord = [&](int a, int b, int c) {
        int lo = std::min({a, b, c});
        int hi = std::max({a, b, c});
        const LatticePoint& v = out.points[packed_triple_index(r, a, b, c)];
        if (a == lo)
            return v.v1;
        if (a == hi)
            return v.v3;
        return v.v2;
    };
    // |D_a|_b = sum_c v_pos(a) / v_pos(c) D_abc
    auto slope_sum = [&](int a, int b) {
        Rat s = 0;
        for (int c = 0; c < r; ++c) {
            if (c == a || c == b)
                continue;
            std::int64_t T = pair.triple_distinct(a, b, c);
            if (T != 0)
                s += make_rat(coord(a, b, c), coord(c, a, b)) * R(T);
        }
        return s;
    };

    for (int j = 0; j < r; ++j)
        for (int k = j + 1; k < r; ++k) {
            const HJExpansion& hj = walls[Z(j)][Z(k)].hj;
            const std::size_t s = hj.length();
            Rat DjkK = R(pair.KZ_DD(j, k));
            Rat Vsum = 0;
            for (int l = 0; l < r; ++l) {
                DjkK += t * R(pair.triple(j, k, l));
                if (l != j && l != k) {
                    std::int64_t T = pair.triple_distinct(j, k, l);
                    if (T != 0)
                        Vsum += V[packed_triple_index(r, j, k, l)] * R(T);
                }
            }
            K3 -= 2 * (DjkK + Vsum) * (N(j, k, 1) + N(k, j, 1) + R(hj.excess));

            Rat absDk = slope_sum(k, j);
            Rat absDj = slope_sum(j, k);
            Rat A = R(pair.DD2[Z(j)][Z(k)]) - absDk;
            Rat B = R(pair.DD2[Z(k)][Z(j)]) - absDj;
            Rat wsum = 0;
            for (std::size_t a = 1; a <= s; ++a)
                wsum += N(j, k, a) * R(hj.k(a) - 2);
            K3 += (R(pair.DD2[Z(j)][Z(k)] + pair.DD2[Z(k)][Z(j)]) - (absDj + absDk)) / R(n) * wsum;

            Rat x1 = DjkK;
            Rat x_direct = DjkK;
            for (int l = 0; l < r; ++l) {
                if (l != j)
                    x1 += N(j, l, 1) * R(pair.triple(j, k, l));
                if (l != k)
                    x_direct += N(k, l, 1) * R(pair.triple(j, k, l));
            }
            auto x = [&](std::size_t a) -> Rat {
                std::int64_t ms = hj.m(a) - hj.m(a - 1) - hj.m(1) + hj.m(0);
                std::int64_t ns = hj.nn(a) - hj.nn(a - 1) - hj.nn(1) + hj.nn(0);
                return x1 + (R(ms) * A - R(ns) * B) / R(n);
            };
            for (std::size_t a = 1; a <= s; ++a) {
                std::int64_t ka = hj.k(a);
                Rat xa = x(a);
                Rat ya = -R(ka) * xa + make_rat(ka - 2, n) * (R(hj.nn(a + 1)) * B - R(hj.m(a + 1)) * A);
                K3 -= N(j, k, a) * (xa + ya + x(a + 1));
            }
            out.residuals.push_back(WallResidual{j, k, x(s + 1) - x_direct});
        }
    out.K3 = K3;
    return out;
}

Rat euler_root_cover(const BasePair& pair, const Partition& part)
{
    check_compatible(pair, part);
    Rat e = R(part.n) * R(pair.c3 - pair.e_D) + R(pair.e_D - pair.e_singD);
    for (int j = 0; j < pair.r; ++j)
        for (int k = j + 1; k < pair.r; ++k) {
            std::int64_t s = hj_length(part.n, part.q(Z(j), Z(k)));
            for (const CurveComponent& c : pair.pair_curves[Z(j)][Z(k)])
                e += R(c.count * (s + 1) * (2 - 2 * c.genus));
        }
    return e;
}

Rat euler_printed_formula(const BasePair& pair, const Partition& part)
{
    check_compatible(pair, part);
    auto len = [&](int a, int b) { return hj_length(part.n, part.q(Z(a), Z(b))); };
    Rat e = R(part.n) * R(pair.c3 - pair.e_D) + R(pair.e_D - pair.e_singD);
    for (int j = 0; j < pair.r; ++j)
        for (int k = j + 1; k < pair.r; ++k) {
            std::int64_t s = len(j, k);
            for (const CurveComponent& c : pair.pair_curves[Z(j)][Z(k)])
                e += R(c.count * (s * (3 - 4 * c.genus) - 1));
        }
    for_each_triple(pair.r, [&](int j, int k, int l) {
        std::int64_t T = pair.triple_distinct(j, k, l);
        if (T != 0)
            e -= R((len(j, k) + len(j, l) + len(k, l) - 3) * T);
    });
    return e;
}

ClosedFormsP4 closed_forms_p4(int d, std::int64_t n, const Partition& part)
{
    if (d < 1)
        throw Error(ErrorCode::BadParams, "degree must be positive");
    if (n < 3 || !is_prime(n) || part.n != n)
        throw Error(ErrorCode::BadParams, "n must be an odd prime matching the partition");
    if (part.size() != 3)
        throw Error(ErrorCode::BadParams, "closed forms need r = 3");
    std::int64_t sum = 0;
    for (std::int64_t x : part.nu) {
        if (x <= 0)
            throw Error(ErrorCode::BadParams, "nu must be positive");
        sum += x;
    }
    if (sum != n)
        throw Error(ErrorCode::BadParams, "closed forms need sum of nu equal to n");

    ClosedFormsP4 out;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = j + 1; k < 3; ++k)
            out.excess += hj_expand(n, q_of_pair(n, part.nu[k], part.nu[j])).excess;

    Rat D = R(d), N = R(n);
    out.K3 = D * (D - 3) * (N * D * D - 3 * N * D + 3 * N - 9 * D + 18 - 3 * R(out.excess));

    Rat dsum = 0;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = j + 1; k < 3; ++k)
            dsum += dedekind_fast(part.nu[j], part.nu[k], n);
    out.R1 = 9 * D * (N - 1) * (2 * N - 1) / (2 * N);
    out.R2 = 3 * D * (D - 5) * (N - 1) * (5 * N - 1) / (2 * N) +
             3 * D * ((D - 5) * (D - 5) + D * (D - 5) + 10) * (N - 1) / 2;
    out.R3 = 6 * D * (D - 2) * dsum;
    Rat chi_Z = -D * (D - 5) * (D * D - 5 * D + 10) / 24;
    out.chi = N * chi_Z - (out.R1 + out.R2 + out.R3) / 12;
    out.euler_limit = -D * (D - 5) * (D * D + 2 * D + 6);
    if (d > 2) {
        Rat den = (D - 2) * (D - 1) * (D - 1);
        out.slope_pair = std::make_pair(((D - 2) * (D - 2) * (D - 2) - 1) / den,
                                        (D - 5) * (D * D + 2 * D + 6) / den);
    }
    return out;
}

Rat chi_error_bound(const BasePair& pair, const Partition& part, const ChiResult& chi)
{
    Rat n = R(part.n);
    LogChernNumbers bar = log_chern_numbers(pair);
    Rat limit = (R(pair.c1c2) - bar.c1c2_bar) / 2;
    Rat bound = abs_rat((chi.R1 + chi.R2) / n - limit) / 12;

    // |d(nu_j, nu_k, n)| = |d(1, q_jk, n)|: with q_jk = -nu_j nu_k', d(a, b, n) = d(1, a'b, n),
    // a'b = -q_jk' here, and d(1, -x, n) = -d(1, x, n), d(1, x', n) = d(1, x, n).
    Rat U = 3 * sqrt_upper_bound(part.n) + 5;
    auto d = pair_dedekind(part);
    for (std::size_t j = 0; j < part.size(); ++j)
        for (std::size_t k = j + 1; k < part.size(); ++k)
            U = std::max(U, abs_rat(d[j][k]));

    Rat weights = 0;
    for (int j = 0; j < pair.r; ++j)
        for (int k = j + 1; k < pair.r; ++k)
            weights += R(std::llabs(pair_weight(pair, j, k)));
    for (std::int64_t T : pair.T)
        weights += 3 * R(std::llabs(T));
    return bound + U * weights / (2 * n);
}

InvariantReport invariant_report(const BasePair& pair, const Partition& part, Strategy strategy)
{
    InvariantReport out;
    out.label = pair.label;
    out.n = part.n;
    out.nu = part.nu;
    out.strategy = strategy;
    out.chi = chi_root_cover(pair, part);
    out.k3 = k3_root_cover(pair, part, strategy);
    out.euler = euler_root_cover(pair, part);
    out.euler_printed = euler_printed_formula(pair, part);
    out.log_chern = log_chern_numbers(pair);
    out.asymptotic = part.n >= 17 && is_asymptotic(part);
    if (out.chi.chi != 0) {
        Rat c1c2 = 24 * out.chi.chi;
        out.slopes = std::make_pair(-out.k3.K3 / c1c2, out.euler / c1c2);
    }
    if (out.log_chern.c1c2_bar != 0)
        out.log_slopes = std::make_pair(out.log_chern.c1_cubed_bar / out.log_chern.c1c2_bar,
                                        out.log_chern.c3_bar / out.log_chern.c1c2_bar);
    out.chi_error_bound = chi_error_bound(pair, part, out.chi);
    return out;
}

} // namespace rootcover
