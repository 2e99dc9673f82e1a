#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <set>

#include "rootcover/error.hpp"
#include "rootcover/logchern.hpp"

using namespace rootcover;

namespace {

using Series = std::array<Rat, 4>;  // coefficients of 1, H, H^2, H^3

Series mul(const Series& a, const Series& b)
{
    Series out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; i + j < 4; ++j)
            out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return out;
}

Series power(Series a, int e)
{
    Series out{Rat(1), Rat(0), Rat(0), Rat(0)};
    if (e < 0) {
        // inverse of 1 + a1 H + ...
        Series inv{Rat(1), -a[1], a[1] * a[1] - a[2], -a[1] * a[1] * a[1] + 2 * a[1] * a[2] - a[3]};
        a = inv;
        e = -e;
    }
    for (int i = 0; i < e; ++i)
        out = mul(out, a);
    return out;
}

// c(Omega^1(log D))-dual numbers of r hyperplane sections on a degree-d hypersurface in P^4:
// (1+H)^(5-r) / (1+dH), all degree-3 monomials times d.
std::array<Rat, 3> hyperplane_oracle(int d, int r)
{
    Series c = mul(power({Rat(1), Rat(1), Rat(0), Rat(0)}, 5 - r), power({Rat(1), Rat(d), Rat(0), Rat(0)}, -1));
    Rat D(d);
    return {c[1] * c[1] * c[1] * D, c[1] * c[2] * D, c[3] * D};
}

} // namespace

TEST_CASE("presets")
{
    BasePair p = planes_p3(3);
    CHECK(p.e_D == 4);
    CHECK(p.e_singD == 4);
    CHECK_NOTHROW(validate(p));
    BasePair h = hypersurface_p4(1, 3);
    CHECK(h.c1_cubed == 64);
    CHECK(h.c1c2 == 24);
    CHECK(h.c3 == 4);
    CHECK(h.D3 == p.D3);
    CHECK(h.DD2 == p.DD2);
    CHECK(h.c1_DD == p.c1_DD);
    CHECK(h.T == p.T);
    CHECK(h.e_D == p.e_D);
    CHECK(h.e_singD == p.e_singD);
    BasePair h6 = hypersurface_p4(6, 3);
    CHECK(make_rat(h6.c1c2, 24) == -4);
    CHECK(h6.pair_curves[0][1].front().genus == 10);
    CHECK_THROWS_AS(make_preset(PresetKind::PlanesP3, 1, 0), Error);
    CHECK_THROWS_AS(make_preset(PresetKind::HypersurfaceP4, 0, 3), Error);
}

TEST_CASE("hypersurface Euler data against topology")
{
    for (int d = 1; d <= 8; ++d) {
        BasePair h = hypersurface_p4(d, 1);
        // surface of degree d in P^3: c2 = d(d^2 - 4d + 6)
        CHECK(h.e_D == d * (d * d - 4 * d + 6));
        BasePair h2 = hypersurface_p4(d, 2);
        std::int64_t g = (d - 1) * (d - 2) / 2;
        CHECK(h2.e_singD == 2 - 2 * g);
    }
}

TEST_CASE("packed triple index")
{
    BasePair p = planes_p3(6);
    std::set<std::size_t> seen;
    for (int l = 0; l < 6; ++l)
        for (int k = 0; k < l; ++k)
            for (int j = 0; j < k; ++j) {
                std::size_t i = packed_triple_index(6, j, k, l);
                CHECK(i < p.T.size());
                CHECK(packed_triple_index(6, l, j, k) == i);
                seen.insert(i);
            }
    CHECK(seen.size() == 20);
}

TEST_CASE("bracket")
{
    BasePair p = planes_p3(3);
    std::vector<int> s111{1, 1, 1}, s3{3}, s0{0}, s2{2}, bad{1, 1};
    CHECK(bracket(p, s111, AmbientWeight::One) == 1);
    CHECK(bracket(p, s3, AmbientWeight::One) == 3);
    CHECK(bracket(p, s0, AmbientWeight::C1C2) == 24);
    CHECK(bracket(p, s0, AmbientWeight::C3) == 4);
    CHECK(bracket(p, s2, AmbientWeight::C1) == 12);
    CHECK_THROWS_AS(bracket(p, bad, AmbientWeight::One), Error);
    CHECK_THROWS_AS(bracket(p, s3, AmbientWeight::C1), Error);
}

TEST_CASE("log Chern numbers of planes in P^3")
{
    LogChernNumbers a = log_chern_numbers(planes_p3(3));
    CHECK(a.c1_cubed_bar == 1);
    CHECK(a.c1c2_bar == 0);
    CHECK(a.c3_bar == 0);
    CHECK(log_chern_numbers(planes_p3(6)).c1_cubed_bar == -8);
    for (int r = 1; r <= 12; ++r) {
        // (1 + H)^(4 - r) on P^3
        Rat m(4 - r);
        LogChernNumbers x = log_chern_numbers(planes_p3(r));
        CHECK(x.c1_cubed_bar == m * m * m);
        CHECK(x.c1c2_bar == m * m * (m - 1) / 2);
        CHECK(x.c3_bar == m * (m - 1) * (m - 2) / 6);
    }
}

TEST_CASE("log Chern numbers of hyperplane sections against the series oracle")
{
    for (int d = 1; d <= 10; ++d)
        for (int r = 1; r <= 7; ++r) {
            auto o = hyperplane_oracle(d, r);
            LogChernNumbers x = log_chern_numbers(hypersurface_p4(d, r));
            CHECK(x.c1_cubed_bar == o[0]);
            CHECK(x.c1c2_bar == o[1]);
            CHECK(x.c3_bar == o[2]);
        }
    LogChernNumbers six = log_chern_numbers(hypersurface_p4(6, 3));
    CHECK(six.c1c2_bar == -600);
    CHECK(six.c3_bar == -900);
}

TEST_CASE("log slope ratios of large arrangements")
{
    LogChernNumbers x = log_chern_numbers(planes_p3(200));
    double s1 = to_double(x.c1_cubed_bar / x.c1c2_bar), s2 = to_double(x.c3_bar / x.c1c2_bar);
    CHECK(s1 == doctest::Approx(2.0).epsilon(0.05));
    CHECK(s2 == doctest::Approx(1.0 / 3).epsilon(0.05));
}

TEST_CASE("ChowRing products")
{
    BasePair p = planes_p3(2);
    ChowRing ring(p);
    CHECK(ring.rank() == 3);
    CHECK(ring.monomial(0, 0, 0) == 64);
    CHECK(ring.monomial(1, 0, 2) == 4);
    CHECK(ring.c2_times(2) == 6);
    // (c1 - D_1)^3 = (3H)^3
    std::vector<Rat> x{Rat(1), Rat(-1), Rat(0)};
    CHECK(ring.cube(x, x, x) == 27);
    ChowRing::Class lin = ring.linear(x);
    CHECK(ring.mul(ring.mul(lin, lin), lin).deg3 == 27);
    // c(P^3) = (1+H)^4 has c3 = 4
    ChowRing::Class c = ring.chern_total();
    CHECK(c.deg3 == 4);
}

namespace {

// (P^1)^3 with two disjoint fibres of the first projection.
BasePair disjoint_fibres()
{
    BasePair p;
    p.label = "P1^3 fibres";
    p.resize(2);
    p.c1_cubed = 48;
    p.c1c2 = 24;
    p.c3 = 8;
    for (std::size_t j = 0; j < 2; ++j) {
        p.c1sq_D[j] = 8;
        p.c2_D[j] = 4;
        p.c1_DD[j][j] = 0;
    }
    p.e_D = 8;
    return p;
}

} // namespace

TEST_CASE("nonsingular cover Chern numbers")
{
    BasePair empty;
    empty.resize(0);
    empty.c1_cubed = 64;
    empty.c1c2 = 24;
    empty.c3 = 4;
    ChernTriple e = nonsingular_cover_chern(empty, 7);
    CHECK(e.c1_cubed == 7 * 64);
    CHECK(e.c1c2 == 7 * 24);
    CHECK(e.c3 == 7 * 4);

    CHECK_THROWS_AS(nonsingular_cover_chern(planes_p3(2), 7), Error);

    // a cyclic cover of P^1 totally branched at two points is P^1 again, so Y = (P^1)^3
    BasePair f = disjoint_fibres();
    for (std::int64_t n : {3, 5, 7, 11, 97}) {
        ChernTriple c = nonsingular_cover_chern(f, n);
        CHECK(c.c1_cubed == 48);
        CHECK(c.c1c2 == 24);
        CHECK(c.c3 == 8);
    }
}
