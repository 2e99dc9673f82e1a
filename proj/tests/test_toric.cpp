#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rootcover/error.hpp"
#include "rootcover/toric.hpp"

using namespace rootcover;

namespace {

std::int64_t det_oracle(const Vec3& a, const Vec3& b, const Vec3& c)
{
    Int d = Int(a[0]) * (Int(b[1]) * c[2] - Int(b[2]) * c[1]) - Int(a[1]) * (Int(b[0]) * c[2] - Int(b[2]) * c[0]) +
            Int(a[2]) * (Int(b[0]) * c[1] - Int(b[1]) * c[0]);
    return d.get_si();
}

LocalConeSpec random_spec(std::mt19937_64& rng, std::int64_t n_max)
{
    for (;;) {
        std::int64_t n = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n_max - 4)) + 5;
        if (!is_prime(n))
            continue;
        std::int64_t p = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n - 1)) + 1;
        std::int64_t q = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n - 1)) + 1;
        LocalConeSpec spec = make_cone_spec(n, p, q);
        if (!spec.degenerate())
            return spec;
    }
}

} // namespace

TEST_CASE("local_cone")
{
    LocalConeSpec a = local_cone(7, 1, 2, 4);
    CHECK(a.p == 5);
    CHECK(a.q == 3);
    CHECK_FALSE(a.degenerate());
    CHECK(residue(a.p + a.q, 7) == 1);
    LocalConeSpec b = local_cone(5, 1, 1, 3);
    CHECK(b.p == 3);
    CHECK(b.q == 3);
    CHECK(b.equal_weights);
    LocalConeSpec c = local_cone(5, 1, 2, 2);
    CHECK(c.q == 4);
    CHECK(c.has_unit_weight);
    CHECK_THROWS_AS(make_cone_spec(9, 2, 3), Error);
}

TEST_CASE("parallelepiped")
{
    LocalConeSpec s = make_cone_spec(11, 3, 5);
    auto pts = parallelepiped_points(s);
    CHECK(pts.size() == 121);
    for (const auto& v : pts) {
        CHECK(in_parallelepiped(s, v));
        Vec3 x = lattice_coords(s, v);
        // n x = v1 d1 + v2 d2 + v3 d3
        for (std::size_t i = 0; i < 3; ++i) {
            std::int64_t sum = 0;
            for (int axis = 0; axis < 3; ++axis)
                sum += v[static_cast<std::size_t>(axis)] * ray_d(s, axis)[i];
            CHECK(11 * x[i] == sum);
        }
    }
}

TEST_CASE("select_v")
{
    CHECK(select_v(make_cone_spec(7, 5, 3), Strategy::Minimal) == LatticePoint{1, 1, 1});
    LatticePoint b = select_v(make_cone_spec(7, 2, 3), Strategy::Balanced);
    CHECK(b == LatticePoint{2, 2, 3});
    CHECK(b.max_slope() == make_rat(3, 2));
    CHECK_THROWS_AS(select_v(make_cone_spec(7, 2, 5), Strategy::Minimal), Error);
    CHECK(strategy_from_string("balanced") == Strategy::Balanced);
    CHECK_THROWS_AS(strategy_from_string("fast"), Error);
}

TEST_CASE("smooth resolution of the (7,5,3) cone")
{
    LocalConeSpec s = make_cone_spec(7, 5, 3);
    CyclicResolution res = cyclic_resolution(s, {1, 1, 1});
    for (const auto& cone : res.cones)
        CHECK(cone.mult == 1);
    CHECK(res.wall(0, 2).hj.ks == std::vector<std::int64_t>{3, 2, 2});
    CHECK(res.wall(1, 2).hj.ks == std::vector<std::int64_t>{2, 2, 3});
    CHECK(res.wall(0, 1).hj.m(1) == 5);
    CHECK(res.wall(0, 1).hj.length() == 3);
    CHECK(res.cones.size() == 12);
    CHECK(check_resolution(res).ok());
}

TEST_CASE("cyclic type of the (7,2,3) cone at (1,1,5)")
{
    CyclicResolution res = cyclic_resolution(make_cone_spec(7, 2, 3), {1, 1, 5});
    const ConeRecord& c = res.cones.front();
    CHECK(c.j == 0);
    CHECK(c.k == 1);
    CHECK(c.alpha == 0);
    CHECK(c.mult == 5);
    CHECK(c.type_a == 1);
    CHECK(c.type_b == 2);
    CHECK(check_resolution(res).ok());
}

TEST_CASE("resolution errors")
{
    LocalConeSpec s = make_cone_spec(7, 2, 3);
    CHECK_THROWS_AS(cyclic_resolution(s, {0, 2, 6}), Error);
    CHECK_THROWS_AS(cyclic_resolution(s, {1, 1, 4}), Error);
    CHECK_THROWS_AS(cyclic_resolution(make_cone_spec(7, 3, 3), {1, 1, 6}), Error);
}

TEST_CASE("random cones: lattice claims against direct computation")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        LocalConeSpec s = random_spec(rng, 200);
        for (Strategy st : {Strategy::Minimal, Strategy::Balanced}) {
            LatticePoint v = select_v(s, st);
            if (st == Strategy::Balanced)
                CHECK(v.sum() == s.n);
            CyclicResolution res = cyclic_resolution(s, v);
            CHECK(check_resolution(res).ok());
            Vec3 x = lattice_coords(s, v);
            std::size_t cones = 0;
            for (const WallData& w : res.walls) {
                cones += w.hj.length() + 1;
                for (std::size_t a = 0; a <= w.hj.length(); ++a) {
                    Vec3 ea = wall_ray(res, w, a), eb = wall_ray(res, w, a + 1);
                    std::int64_t vl = v[static_cast<std::size_t>(w.l)];
                    CHECK(std::abs(det_oracle(x, ea, eb)) == vl);
                    if (vl <= 12) {
                        // some weight pair (x, y) solves x ea + y eb + v = 0 mod vl
                        bool found = false;
                        for (std::int64_t p = 0; p < vl && !found; ++p)
                            for (std::int64_t q = 0; q < vl && !found; ++q) {
                                bool ok = true;
                                for (std::size_t i = 0; i < 3; ++i)
                                    ok = ok && residue(p * ea[i] + q * eb[i] + x[i], vl) == 0;
                                found = ok;
                            }
                        CHECK(found);
                    }
                }
            }
            CHECK(res.cones.size() == cones);
        }
    }
}

TEST_CASE("{p+q} = 1 with the minimal point is smooth and K-nonnegative")
{
    for (std::int64_t n : {7, 11, 13, 101, 499})
        for (std::int64_t p = 1; p < n; ++p) {
            std::int64_t q = residue(1 - p, n);
            if (q == 0)
                continue;
            LocalConeSpec s = make_cone_spec(n, p, q);
            if (s.degenerate())
                continue;
            CyclicResolution res = cyclic_resolution(s, select_v(s, Strategy::Minimal));
            for (const auto& cone : res.cones)
                CHECK(cone.mult == 1);
            LocalIntersections li = local_intersection_table(res);
            for (const Rat& x : li.K_Cl)
                CHECK(x >= 0);
            for (const auto& w : li.K_Cjk)
                for (const Rat& x : w)
                    CHECK(x >= 0);
        }
}

TEST_CASE("{p+q} = 2 leaves singularities of order at most 2")
{
    for (std::int64_t n : {11, 13, 101})
        for (std::int64_t p = 1; p < n; ++p) {
            if (residue(2 - p, n) == 0)
                continue;
            LocalConeSpec s = make_cone_spec(n, p, residue(2 - p, n));
            if (s.degenerate())
                continue;
            CyclicResolution res = cyclic_resolution(s, {1, 1, 2});
            for (const auto& cone : res.cones)
                CHECK(cone.mult <= 2);
        }
}

TEST_CASE("balanced points for n >= 1000 have max slope <= 3.1")
{
    std::mt19937_64 rng(3);
    int done = 0;
    while (done < 30) {
        std::int64_t n = 1000 + static_cast<std::int64_t>(rng() % 2000);
        if (!is_prime(n))
            continue;
        LocalConeSpec s = make_cone_spec(n, static_cast<std::int64_t>(rng() % (n - 1)) + 1,
                                         static_cast<std::int64_t>(rng() % (n - 1)) + 1);
        if (s.degenerate())
            continue;
        LatticePoint v = select_v(s, Strategy::Balanced);
        CHECK(v.sum() == n);
        CHECK(v.max_slope() <= make_rat(31, 10));
        ++done;
    }
}
