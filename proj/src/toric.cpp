#include "rootcover/toric.hpp"

#include <algorithm>
#include <tuple>
#include <numeric>
#include <string>

#include "rootcover/asympt.hpp"
#include "rootcover/error.hpp"

namespace rootcover {

namespace {

std::int64_t max3(const LatticePoint& v) { return std::max({v.v1, v.v2, v.v3}); }
std::int64_t min3(const LatticePoint& v) { return std::min({v.v1, v.v2, v.v3}); }

// max/min of a strictly smaller than of b
bool flatter(const LatticePoint& a, const LatticePoint& b)
{
    __int128 lhs = static_cast<__int128>(max3(a)) * min3(b);
    __int128 rhs = static_cast<__int128>(max3(b)) * min3(a);
    if (lhs != rhs)
        return lhs < rhs;
    return std::tie(a.v1, a.v2, a.v3) < std::tie(b.v1, b.v2, b.v3);
}

Vec3 point_coords(const LocalConeSpec& spec, std::int64_t a, std::int64_t b, std::int64_t c)
{
    std::int64_t num = -spec.p * a - spec.q * b + c;
    if (num % spec.n != 0)
        throw Error(ErrorCode::BadInput, "point is not in the lattice");
    return {a, b, num / spec.n};
}

void require_nondegenerate(const LocalConeSpec& spec)
{
    if (spec.degenerate())
        throw Error(ErrorCode::Degenerate,
                    "degenerate cone n=" + std::to_string(spec.n) + " p=" + std::to_string(spec.p) +
                        " q=" + std::to_string(spec.q));
}

} // namespace

Rat LatticePoint::max_slope() const
{
    if (min3(*this) <= 0)
        throw Error(ErrorCode::NotInterior, "slope of a boundary point");
    return make_rat(max3(*this), min3(*this));
}

LocalConeSpec make_cone_spec(std::int64_t n, std::int64_t p, std::int64_t q)
{
    if (!is_prime(n) || p <= 0 || p >= n || q <= 0 || q >= n)
        throw Error(ErrorCode::BadInput, "cone needs prime n and 0 < p, q < n");
    LocalConeSpec spec;
    spec.n = n;
    spec.p = p;
    spec.q = q;
    spec.has_unit_weight = p == n - 1 || q == n - 1;
    spec.equal_weights = p == q;
    spec.zero_sum = residue(p + q, n) == 0;
    return spec;
}

LocalConeSpec local_cone(std::int64_t n, std::int64_t nu_j, std::int64_t nu_k, std::int64_t nu_l)
{
    return make_cone_spec(n, q_of_pair(n, nu_j, nu_l), q_of_pair(n, nu_k, nu_l));
}

std::vector<LatticePoint> parallelepiped_points(const LocalConeSpec& spec)
{
    std::vector<LatticePoint> out;
    out.reserve(static_cast<std::size_t>(spec.n * spec.n));
    for_each_parallelepiped_point(spec, [&](const LatticePoint& v) { out.push_back(v); });
    return out;
}

bool in_parallelepiped(const LocalConeSpec& spec, const LatticePoint& v)
{
    auto in_range = [&](std::int64_t x) { return x >= 0 && x < spec.n; };
    return in_range(v.v1) && in_range(v.v2) && in_range(v.v3) &&
           v.v3 == residue(spec.p * v.v1 + spec.q * v.v2, spec.n);
}

std::string_view to_string(Strategy s)
{
    return s == Strategy::Minimal ? "minimal" : "balanced";
}

Strategy strategy_from_string(std::string_view s)
{
    if (s == "minimal")
        return Strategy::Minimal;
    if (s == "balanced")
        return Strategy::Balanced;
    throw Error(ErrorCode::BadInput, "unknown strategy '" + std::string(s) + "'");
}

std::int64_t balanced_line_slope(const LocalConeSpec& spec)
{
    if (spec.q == spec.n - 1)
        throw Error(ErrorCode::Degenerate, "q + 1 is not invertible mod n");
    auto prod = static_cast<__int128>(spec.p + 1) * mod_inverse(spec.q + 1, spec.n) % spec.n;
    return residue(-static_cast<std::int64_t>(prod), spec.n);
}

LatticePoint select_v(const LocalConeSpec& spec, Strategy strategy)
{
    if (strategy == Strategy::Minimal) {
        std::int64_t v3 = residue(spec.p + spec.q, spec.n);
        if (v3 == 0)
            throw Error(ErrorCode::Degenerate, "{p+q}_n = 0 has no interior point with v1 = v2 = 1");
        return {1, 1, v3};
    }
    std::int64_t c = balanced_line_slope(spec);
    std::optional<LatticePoint> best;
    for (std::int64_t x = 1; x < spec.n; ++x) {
        std::int64_t y = static_cast<std::int64_t>(static_cast<__int128>(c) * x % spec.n);
        if (y == 0 || x + y >= spec.n)
            continue;
        LatticePoint cand{x, y, spec.n - x - y};
        if (!best || flatter(cand, *best))
            best = cand;
    }
    if (!best)
        throw Error(ErrorCode::Degenerate, "no interior point with v1 + v2 + v3 = n");
    return *best;
}

std::optional<LatticePoint> reflection_line_point(const LocalConeSpec& spec)
{
    std::int64_t n = spec.n;
    std::int64_t c = balanced_line_slope(spec);
    LatticePoint v;
    if (c == 1) {
        v = {n / 3, n / 3, n - 2 * (n / 3)};
    } else {
        bool reflect = 2 * c >= n;
        std::int64_t cc = reflect ? n - c : c;
        std::int64_t beta = (cc - 1) / 3;
        std::int64_t k = n / (3 * cc);
        std::int64_t x = beta * n / cc + k;
        std::int64_t y = cc * x - beta * n;
        if (reflect)
            x = n - x;
        v = {x, y, n - x - y};
    }
    if (!v.interior() || !in_parallelepiped(spec, v))
        return std::nullopt;
    return v;
}

const WallData& CyclicResolution::wall(int j, int k) const
{
    for (const auto& w : walls)
        if (w.j == j && w.k == k)
            return w;
    throw Error(ErrorCode::BadInput, "no wall for the requested axes");
}

std::int64_t CyclicResolution::first_m(int a, int b) const
{
    if (a < b)
        return wall(a, b).hj.m(1);
    return wall(b, a).hj.q_inv;
}

Rat CyclicResolution::N(int a, int b, std::size_t alpha) const
{
    if (a < b)
        return wall(a, b).N.at(alpha);
    const WallData& w = wall(b, a);
    return w.N.at(w.hj.length() + 1 - alpha);
}

Vec3 ray_d(const LocalConeSpec& spec, int axis)
{
    switch (axis) {
    case 0: return {spec.n, 0, -spec.p};
    case 1: return {0, spec.n, -spec.q};
    default: return {0, 0, 1};
    }
}

Vec3 lattice_coords(const LocalConeSpec& spec, const LatticePoint& v)
{
    return point_coords(spec, v.v1, v.v2, v.v3);
}

Vec3 wall_ray(const CyclicResolution& res, const WallData& wall, std::size_t alpha)
{
    std::array<std::int64_t, 3> coef{0, 0, 0};
    coef[static_cast<std::size_t>(wall.j)] = wall.hj.m(alpha);
    coef[static_cast<std::size_t>(wall.k)] = wall.hj.nn(alpha);
    return point_coords(res.spec, coef[0], coef[1], coef[2]);
}

std::int64_t det3(const Vec3& a, const Vec3& b, const Vec3& c)
{
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::int64_t minor_gcd(const Vec3& a, const Vec3& b)
{
    std::int64_t m01 = a[0] * b[1] - a[1] * b[0];
    std::int64_t m02 = a[0] * b[2] - a[2] * b[0];
    std::int64_t m12 = a[1] * b[2] - a[2] * b[1];
    return std::gcd(std::gcd(m01, m02), m12);
}

CyclicResolution cyclic_resolution(const LocalConeSpec& spec, const LatticePoint& v)
{
    require_nondegenerate(spec);
    if (!v.interior())
        throw Error(ErrorCode::NotInterior, "star subdivision point must be interior");
    if (!in_parallelepiped(spec, v))
        throw Error(ErrorCode::BadInput, "point is not in the fundamental parallelepiped");

    std::int64_t n = spec.n;
    std::int64_t p_inv = mod_inverse(spec.p, n);
    std::int64_t q_inv = mod_inverse(spec.q, n);
    std::array<std::int64_t, 3> seeds{
        residue(-static_cast<std::int64_t>(static_cast<__int128>(p_inv) * spec.q % n), n), p_inv,
        q_inv};

    CyclicResolution res;
    res.spec = spec;
    res.v = v;
    res.V = make_rat(v.sum() - n, n);
    res.effective_F = v.sum() - 1;
    for (std::size_t w = 0; w < 3; ++w) {
        WallData& wall = res.walls[w];
        wall.j = kWallPairs[w][0];
        wall.k = kWallPairs[w][1];
        wall.l = kWallPairs[w][2];
        wall.hj = hj_expand(n, seeds[w]);
        std::size_t s = wall.hj.length();
        std::int64_t vj = v[static_cast<std::size_t>(wall.j)];
        std::int64_t vk = v[static_cast<std::size_t>(wall.k)];
        std::int64_t vl = v[static_cast<std::size_t>(wall.l)];
        for (std::size_t a = 0; a <= s + 1; ++a) {
            std::int64_t m = wall.hj.m(a), nn = wall.hj.nn(a);
            wall.inner_mults.push_back(std::gcd(vj * nn - vk * m, vl));
            wall.N.push_back(make_rat(m + nn, n) - 1);
            if (a >= 1 && a <= s)
                wall.effective.push_back(m + nn - 1);
        }
        std::int64_t n_inv = vl == 1 ? 0 : mod_inverse(residue(n, vl), vl);
        for (std::size_t a = 0; a <= s; ++a) {
            ConeRecord cone;
            cone.j = wall.j;
            cone.k = wall.k;
            cone.l = wall.l;
            cone.alpha = a;
            cone.mult = vl;
            cone.type_a = residue(wall.hj.m(a + 1) * vk - wall.hj.nn(a + 1) * vj, vl);
            cone.type_b = residue(wall.hj.m(a) * vk - wall.hj.nn(a) * vj, vl);
            cone.weight_a = residue(n_inv * cone.type_a, vl);
            cone.weight_b = residue(-n_inv * cone.type_b, vl);
            res.cones.push_back(cone);
        }
    }
    return res;
}

ResolutionCheck check_resolution(const CyclicResolution& res)
{
    ResolutionCheck out;
    Vec3 v = lattice_coords(res.spec, res.v);
    for (const auto& cone : res.cones) {
        const WallData& wall = res.wall(cone.j, cone.k);
        Vec3 ea = wall_ray(res, wall, cone.alpha);
        Vec3 eb = wall_ray(res, wall, cone.alpha + 1);
        if (std::abs(det3(v, ea, eb)) != cone.mult)
            out.determinants = false;
        if (minor_gcd(ea, eb) != 1)
            out.exterior_unimodular = false;
        for (std::size_t i = 0; i < 3; ++i) {
            std::int64_t coord = cone.weight_a * ea[i] + cone.weight_b * eb[i] + v[i];
            if (residue(coord, cone.mult) != 0)
                out.type_divisibility = false;
        }
    }
    for (const auto& wall : res.walls) {
        for (std::size_t a = 0; a < wall.inner_mults.size(); ++a)
            if (minor_gcd(v, wall_ray(res, wall, a)) != wall.inner_mults[a])
                out.inner_mults = false;
        for (std::int64_t e : wall.effective)
            if (e < 0)
                out.effective = false;
    }
    if (res.effective_F < 0)
        out.effective = false;
    return out;
}

LocalIntersections local_intersection_table(const CyclicResolution& res)
{
    const LatticePoint& v = res.v;
    std::int64_t n = res.spec.n;
    LocalIntersections out;
    Rat prod(static_cast<long>(v.v1 * v.v2 * v.v3));
    out.F3 = Rat(static_cast<long>(n)) / prod;
    out.KF2 = Rat(static_cast<long>(v.sum() - n)) / prod;

    Rat k2f = -out.KF2;
    for (int l = 0; l < 3; ++l) {
        int j = l == 0 ? 1 : 0;
        int k = l == 2 ? 1 : 2;
        std::int64_t vj = v[static_cast<std::size_t>(j)];
        std::int64_t vk = v[static_cast<std::size_t>(k)];
        std::int64_t vl = v[static_cast<std::size_t>(l)];
        std::int64_t g = std::gcd(vj, vk);
        Rat shift = make_rat(vl - res.first_m(l, j) * vj - res.first_m(l, k) * vk, n);
        Rat kcl = -make_rat(g, vj * vk) * (Rat(static_cast<long>(vj + vk - 1)) + shift);
        out.K_Cl[static_cast<std::size_t>(l)] = kcl;
        k2f -= kcl / g;
    }
    for (std::size_t w = 0; w < 3; ++w) {
        const WallData& wall = res.walls[w];
        std::int64_t vl = v[static_cast<std::size_t>(wall.l)];
        for (std::size_t a = 1; a <= wall.hj.length(); ++a) {
            std::int64_t mult = wall.inner_mults[a];
            Rat ratio = make_rat(mult, vl);
            Rat kc = ratio * (wall.hj.k(a) - 2);
            out.K_Cjk[w].push_back(kc);
            out.E_C_self[w].push_back(-ratio * wall.hj.k(a));
            out.E_C_next[w].push_back(ratio);
            k2f -= kc / mult;
        }
    }
    out.K2F = k2f;
    return out;
}

} // namespace rootcover
