#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rootcover/exact.hpp"
#include "rootcover/hj.hpp"

namespace rootcover {

// Cone C(n e1 - p e3, n e2 - q e3, e3) of t^n = x^a y^b z^c.
struct LocalConeSpec {
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    bool has_unit_weight = false;   // p = n-1 or q = n-1
    bool equal_weights = false;     // p = q
    bool zero_sum = false;          // {p+q}_n = 0

    bool degenerate() const { return has_unit_weight || equal_weights || zero_sum; }
};

LocalConeSpec make_cone_spec(std::int64_t n, std::int64_t p, std::int64_t q);

LocalConeSpec local_cone(std::int64_t n, std::int64_t nu_j, std::int64_t nu_k, std::int64_t nu_l);

using Vec3 = std::array<std::int64_t, 3>;

// Coordinates of v = (v1 d1 + v2 d2 + v3 d3)/n.
struct LatticePoint {
    std::int64_t v1 = 0, v2 = 0, v3 = 0;

    std::int64_t operator[](std::size_t i) const { return i == 0 ? v1 : (i == 1 ? v2 : v3); }
    std::int64_t sum() const { return v1 + v2 + v3; }
    bool interior() const { return v1 > 0 && v2 > 0 && v3 > 0; }
    Rat max_slope() const;

    bool operator==(const LatticePoint&) const = default;
};

template <typename Fn>
void for_each_parallelepiped_point(const LocalConeSpec& spec, Fn&& fn)
{
    for (std::int64_t a = 0; a < spec.n; ++a)
        for (std::int64_t b = 0; b < spec.n; ++b)
            fn(LatticePoint{a, b, residue(spec.p * a + spec.q * b, spec.n)});
}

std::vector<LatticePoint> parallelepiped_points(const LocalConeSpec& spec);

bool in_parallelepiped(const LocalConeSpec& spec, const LatticePoint& v);

enum class Strategy { Minimal, Balanced };

std::string_view to_string(Strategy s);
Strategy strategy_from_string(std::string_view s);

LatticePoint select_v(const LocalConeSpec& spec, Strategy strategy);

// Point produced by the explicit line construction (c, beta, k) for a sum-n point.
// Diagnostic only: may fail to land on a valid point for small n.
std::optional<LatticePoint> reflection_line_point(const LocalConeSpec& spec);

// Residue c with v2 = c v1 (mod n) on the plane v1 + v2 + v3 = n.
std::int64_t balanced_line_slope(const LocalConeSpec& spec);

// Axis pairs in the fixed order (1,2), (1,3), (2,3), zero-based.
inline constexpr std::array<std::array<int, 3>, 3> kWallPairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};

struct ConeRecord {
    int j = 0, k = 0, l = 0;        // zero-based axes, j < k
    std::size_t alpha = 0;          // 0..s
    std::int64_t mult = 0;          // v_l
    std::int64_t type_a = 0;        // printed residues
    std::int64_t type_b = 0;
    std::int64_t weight_a = 0;      // solution of a e_alpha + b e_alpha+1 + v = 0 mod v_l
    std::int64_t weight_b = 0;
};

struct WallData {
    int j = 0, k = 0, l = 0;
    HJExpansion hj;                      // expansion from d_j towards d_k
    std::vector<std::int64_t> inner_mults;  // mult(rho_alpha), alpha = 0..s+1
    std::vector<Rat> N;                  // N_alpha, alpha = 0..s+1
    std::vector<std::int64_t> effective; // m_alpha + n_alpha - 1, alpha = 1..s
};

struct CyclicResolution {
    LocalConeSpec spec;
    LatticePoint v;
    std::array<WallData, 3> walls;  // in kWallPairs order
    std::vector<ConeRecord> cones;
    Rat V;
    std::int64_t effective_F = 0;   // v1 + v2 + v3 - 1

    const WallData& wall(int j, int k) const;
    // m_{ab,1} in direction d_a -> d_b for any ordered pair of distinct axes.
    std::int64_t first_m(int a, int b) const;
    // N_{ab,alpha} in direction d_a -> d_b.
    Rat N(int a, int b, std::size_t alpha) const;
};

CyclicResolution cyclic_resolution(const LocalConeSpec& spec, const LatticePoint& v);

// Lattice coordinates in the standard basis e1, e2, e3.
Vec3 ray_d(const LocalConeSpec& spec, int axis);
Vec3 lattice_coords(const LocalConeSpec& spec, const LatticePoint& v);
Vec3 wall_ray(const CyclicResolution& res, const WallData& wall, std::size_t alpha);

std::int64_t det3(const Vec3& a, const Vec3& b, const Vec3& c);
std::int64_t minor_gcd(const Vec3& a, const Vec3& b);

struct ResolutionCheck {
    bool determinants = true;
    bool exterior_unimodular = true;
    bool inner_mults = true;
    bool type_divisibility = true;
    bool effective = true;

    bool ok() const
    {
        return determinants && exterior_unimodular && inner_mults && type_divisibility && effective;
    }
};

// Recomputes every lattice claim of a resolution from explicit coordinates.
ResolutionCheck check_resolution(const CyclicResolution& res);

struct LocalIntersections {
    Rat F3;
    Rat KF2;
    std::array<Rat, 3> K_Cl;                    // per axis l
    std::array<std::vector<Rat>, 3> K_Cjk;      // per wall, alpha = 1..s (index alpha-1)
    std::array<std::vector<Rat>, 3> E_C_self;   // E_alpha . C_alpha
    std::array<std::vector<Rat>, 3> E_C_next;   // E_alpha . C_alpha+-1
    Rat K2F;
};

LocalIntersections local_intersection_table(const CyclicResolution& res);

} // namespace rootcover
