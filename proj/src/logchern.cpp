#include "rootcover/logchern.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "rootcover/error.hpp"

namespace rootcover {

namespace {

std::int64_t choose(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n)
        return 0;
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

void sort3(int& a, int& b, int& c)
{
    if (a > b)
        std::swap(a, b);
    if (b > c)
        std::swap(b, c);
    if (a > b)
        std::swap(a, b);
}

Rat R(std::int64_t x) { return Rat(static_cast<long>(x)); }

} // namespace

std::size_t packed_triple_index(int /*r*/, int j, int k, int l)
{
    sort3(j, k, l);
    auto J = static_cast<std::size_t>(j), K = static_cast<std::size_t>(k),
         L = static_cast<std::size_t>(l);
    return L * (L - 1) * (L - 2) / 6 + K * (K - 1) / 2 + J;
}

void BasePair::resize(int divisors)
{
    r = divisors;
    auto n = static_cast<std::size_t>(divisors);
    D3.assign(n, 0);
    c1sq_D.assign(n, 0);
    c2_D.assign(n, 0);
    c1_DD.assign(n, std::vector<std::int64_t>(n, 0));
    DD2.assign(n, std::vector<std::int64_t>(n, 0));
    pair_curves.assign(n, std::vector<std::vector<CurveComponent>>(n));
    T.assign(static_cast<std::size_t>(choose(divisors, 3)), 0);
}

std::int64_t BasePair::triple_distinct(int j, int k, int l) const
{
    return T.at(packed_triple_index(r, j, k, l));
}

void BasePair::set_triple(int j, int k, int l, std::int64_t value)
{
    if (j == k || k == l || j == l)
        throw Error(ErrorCode::BadParams, "triple table needs distinct indices");
    T.at(packed_triple_index(r, j, k, l)) = value;
}

std::int64_t BasePair::triple(int a, int b, int c) const
{
    sort3(a, b, c);
    if (a == c)
        return D3.at(static_cast<std::size_t>(a));
    if (a == b)  // D_a^2 D_c
        return DD2.at(static_cast<std::size_t>(c)).at(static_cast<std::size_t>(a));
    if (b == c)  // D_a D_b^2
        return DD2.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
    return triple_distinct(a, b, c);
}

void validate(const BasePair& pair)
{
    auto n = static_cast<std::size_t>(pair.r);
    auto fail = [](const std::string& what) { throw Error(ErrorCode::BadParams, what); };
    if (pair.r < 0)
        fail("negative divisor count");
    if (pair.D3.size() != n || pair.c1sq_D.size() != n || pair.c2_D.size() != n)
        fail("per-divisor tables must have r entries");
    if (pair.c1_DD.size() != n || pair.DD2.size() != n || pair.pair_curves.size() != n)
        fail("pairwise tables must be r x r");
    for (std::size_t j = 0; j < n; ++j) {
        if (pair.c1_DD[j].size() != n || pair.DD2[j].size() != n || pair.pair_curves[j].size() != n)
            fail("pairwise tables must be r x r");
        if (pair.DD2[j][j] != pair.D3[j])
            fail("DD2 diagonal must equal D^3");
        for (std::size_t k = 0; k < n; ++k) {
            if (pair.c1_DD[j][k] != pair.c1_DD[k][j])
                fail("c1_DD must be symmetric");
            if (j >= k && !pair.pair_curves[j][k].empty())
                fail("pair_curves only above the diagonal");
        }
    }
    if (pair.T.size() != static_cast<std::size_t>(choose(pair.r, 3)))
        fail("triple table has wrong size");
}

int degree(AmbientWeight w)
{
    switch (w) {
    case AmbientWeight::One: return 0;
    case AmbientWeight::C1: return 1;
    case AmbientWeight::C1Sq:
    case AmbientWeight::C2: return 2;
    default: return 3;
    }
}

Rat bracket(const BasePair& pair, std::span<const int> signature, AmbientWeight weight)
{
    bool empty = signature.empty() || (signature.size() == 1 && signature[0] == 0);
    int total = 0;
    if (!empty)
        for (int i : signature) {
            if (i <= 0)
                throw Error(ErrorCode::BadSignature, "signature entries must be positive");
            total += i;
        }
    if (total + degree(weight) != 3)
        throw Error(ErrorCode::BadSignature, "signature and weight must have total degree 3");
    if (empty) {
        switch (weight) {
        case AmbientWeight::C1Cubed: return R(pair.c1_cubed);
        case AmbientWeight::C1C2: return R(pair.c1c2);
        default: return R(pair.c3);
        }
    }
    ChowRing ring(pair);
    std::size_t m = signature.size();
    std::vector<int> idx(m);
    Int sum = 0;
    std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int start) {
        if (pos == m) {
            std::vector<std::size_t> gens;
            for (std::size_t t = 0; t < m; ++t)
                for (int e = 0; e < signature[t]; ++e)
                    gens.push_back(static_cast<std::size_t>(idx[t]) + 1);
            switch (weight) {
            case AmbientWeight::One:
                sum += static_cast<long>(ring.monomial(gens[0], gens[1], gens[2]));
                break;
            case AmbientWeight::C1:
                sum += static_cast<long>(ring.monomial(0, gens[0], gens[1]));
                break;
            case AmbientWeight::C1Sq:
                sum += static_cast<long>(ring.monomial(0, 0, gens[0]));
                break;
            case AmbientWeight::C2:
                sum += static_cast<long>(ring.c2_times(gens[0]));
                break;
            default:
                break;
            }
            return;
        }
        for (int j = start; j < pair.r; ++j) {
            idx[pos] = j;
            walk(pos + 1, j + 1);
        }
    };
    walk(0, 0);
    return Rat(sum);
}

LogChernNumbers log_chern_numbers(const BasePair& pair)
{
    using W = AmbientWeight;
    auto b = [&](std::initializer_list<int> sig, W w) {
        std::vector<int> s(sig);
        return bracket(pair, s, w);
    };
    Rat c1D = b({1}, W::C1Sq);      // c1^2 D_red
    Rat c2D = b({1}, W::C2);        // c2 D_red
    Rat c1D2 = b({2}, W::C1);
    Rat c1D11 = b({1, 1}, W::C1);
    Rat d3 = b({3}, W::One);
    Rat d12 = b({1, 2}, W::One) + b({2, 1}, W::One);
    Rat d111 = b({1, 1, 1}, W::One);

    LogChernNumbers out;
    out.c1_cubed_bar = R(pair.c1_cubed) - 3 * c1D + 3 * (c1D2 + 2 * c1D11) - (d3 + 3 * d12 + 6 * d111);
    // D_red (D^[2] + D^[1,1]) = D^[3] + 2(D^[1,2] + D^[2,1]) + 3 D^[1,1,1]
    Rat d_times = d3 + 2 * d12 + 3 * d111;
    out.c1c2_bar = R(pair.c1c2) - (c1D + c2D) + (2 * c1D2 + 3 * c1D11) - d_times;
    out.c3_bar = R(pair.c3) - c2D + (c1D2 + c1D11) - (d3 + d12 + d111);
    return out;
}

std::int64_t ChowRing::monomial(std::size_t a, std::size_t b, std::size_t c) const
{
    std::array<std::size_t, 3> g{a, b, c};
    std::sort(g.begin(), g.end());
    int c1s = static_cast<int>(std::count(g.begin(), g.end(), std::size_t{0}));
    switch (c1s) {
    case 3: return pair_->c1_cubed;
    case 2: return pair_->c1sq_D.at(g[2] - 1);
    case 1: return pair_->c1_DD.at(g[1] - 1).at(g[2] - 1);
    default:
        return pair_->triple(static_cast<int>(g[0]) - 1, static_cast<int>(g[1]) - 1,
                             static_cast<int>(g[2]) - 1);
    }
}

std::int64_t ChowRing::c2_times(std::size_t a) const
{
    return a == 0 ? pair_->c1c2 : pair_->c2_D.at(a - 1);
}

ChowRing::Class ChowRing::zero() const
{
    Class x;
    x.deg0 = 0;
    x.deg1.assign(rank(), Rat(0));
    x.c2 = 0;
    x.quad.assign(rank(), std::vector<Rat>(rank(), Rat(0)));
    x.deg3 = 0;
    return x;
}

ChowRing::Class ChowRing::one() const
{
    Class x = zero();
    x.deg0 = 1;
    return x;
}

ChowRing::Class ChowRing::linear(const std::vector<Rat>& coeffs) const
{
    Class x = zero();
    x.deg1 = coeffs;
    x.deg1.resize(rank(), Rat(0));
    return x;
}

ChowRing::Class ChowRing::chern_total() const
{
    Class x = one();
    x.deg1[0] = 1;
    x.c2 = 1;
    x.deg3 = R(pair_->c3);
    return x;
}

Rat ChowRing::cube(const std::vector<Rat>& x, const std::vector<Rat>& y,
                   const std::vector<Rat>& z) const
{
    Rat out = 0;
    for (std::size_t a = 0; a < rank(); ++a) {
        if (x[a] == 0)
            continue;
        for (std::size_t b = 0; b < rank(); ++b) {
            if (y[b] == 0)
                continue;
            Rat xy = x[a] * y[b];
            for (std::size_t c = 0; c < rank(); ++c)
                if (z[c] != 0)
                    out += xy * z[c] * R(monomial(a, b, c));
        }
    }
    return out;
}

Rat ChowRing::pair(const std::vector<Rat>& x, const Class& y) const
{
    Rat out = 0;
    for (std::size_t c = 0; c < rank(); ++c) {
        if (x[c] == 0)
            continue;
        Rat acc = y.c2 * R(c2_times(c));
        for (std::size_t a = 0; a < rank(); ++a)
            for (std::size_t b = 0; b < rank(); ++b)
                if (y.quad[a][b] != 0)
                    acc += y.quad[a][b] * R(monomial(a, b, c));
        out += x[c] * acc;
    }
    return out;
}

ChowRing::Class ChowRing::mul(const Class& x, const Class& y) const
{
    Class out = zero();
    out.deg0 = x.deg0 * y.deg0;
    for (std::size_t a = 0; a < rank(); ++a)
        out.deg1[a] = x.deg0 * y.deg1[a] + y.deg0 * x.deg1[a];
    out.c2 = x.deg0 * y.c2 + y.deg0 * x.c2;
    for (std::size_t a = 0; a < rank(); ++a)
        for (std::size_t b = 0; b < rank(); ++b) {
            // symmetrised outer product of the degree-1 parts
            Rat cross = (x.deg1[a] * y.deg1[b] + x.deg1[b] * y.deg1[a]) / 2;
            out.quad[a][b] = x.deg0 * y.quad[a][b] + y.deg0 * x.quad[a][b] + cross;
        }
    out.deg3 = x.deg0 * y.deg3 + y.deg0 * x.deg3 + pair(x.deg1, y) + pair(y.deg1, x);
    return out;
}

ChowRing::Class ChowRing::add(const Class& x, const Class& y) const
{
    Class out = zero();
    out.deg0 = x.deg0 + y.deg0;
    for (std::size_t a = 0; a < rank(); ++a) {
        out.deg1[a] = x.deg1[a] + y.deg1[a];
        for (std::size_t b = 0; b < rank(); ++b)
            out.quad[a][b] = x.quad[a][b] + y.quad[a][b];
    }
    out.c2 = x.c2 + y.c2;
    out.deg3 = x.deg3 + y.deg3;
    return out;
}

ChowRing::Class ChowRing::scale(const Class& x, const Rat& s) const
{
    Class out = x;
    out.deg0 *= s;
    for (auto& v : out.deg1)
        v *= s;
    out.c2 *= s;
    for (auto& row : out.quad)
        for (auto& v : row)
            v *= s;
    out.deg3 *= s;
    return out;
}

ChernTriple nonsingular_cover_chern(const BasePair& pair, std::int64_t n)
{
    if (n < 2 || !is_prime(n))
        throw Error(ErrorCode::BadInput, "cover degree must be prime");
    for (int j = 0; j < pair.r; ++j)
        for (int k = 0; k < pair.r; ++k) {
            if (j == k)
                continue;
            auto J = static_cast<std::size_t>(j), K = static_cast<std::size_t>(k);
            if (pair.DD2[J][K] != 0 || pair.c1_DD[J][K] != 0)
                throw Error(ErrorCode::NotDisjoint, "branch divisors must be disjoint");
        }
    for (std::int64_t t : pair.T)
        if (t != 0)
            throw Error(ErrorCode::NotDisjoint, "branch divisors must be disjoint");

    ChowRing ring(pair);
    Rat inv_n = make_rat(1, n);
    ChowRing::Class total = ring.chern_total();
    for (int j = 0; j < pair.r; ++j) {
        // (1 + D/n)/(1 + D) = 1 + (1/n - 1)(D - D^2 + D^3)
        std::vector<Rat> d(ring.rank(), Rat(0));
        d[static_cast<std::size_t>(j) + 1] = 1;
        ChowRing::Class D = ring.linear(d);
        ChowRing::Class D2 = ring.mul(D, D);
        ChowRing::Class D3 = ring.mul(D2, D);
        ChowRing::Class tail = ring.add(ring.add(D, ring.scale(D2, -1)), D3);
        ChowRing::Class factor = ring.add(ring.one(), ring.scale(tail, inv_n - 1));
        total = ring.mul(total, factor);
    }
    ChowRing::Class c1 = ring.linear(total.deg1);
    ChowRing::Class c2 = ring.zero();
    c2.c2 = total.c2;
    c2.quad = total.quad;
    Rat N = R(n);
    ChernTriple out;
    out.c1_cubed = N * ring.mul(ring.mul(c1, c1), c1).deg3;
    out.c1c2 = N * ring.mul(c1, c2).deg3;
    out.c3 = N * total.deg3;
    return out;
}

BasePair hypersurface_p4(int d, int r)
{
    if (d < 1 || r < 1)
        throw Error(ErrorCode::BadParams, "hypersurface_p4 needs d >= 1 and r >= 1");
    std::int64_t D = d;
    std::int64_t c1 = 5 - D;
    std::int64_t c2 = D * D - 5 * D + 10;
    BasePair pair;
    pair.label = "hypersurface_p4(" + std::to_string(d) + "," + std::to_string(r) + ")";
    pair.resize(r);
    pair.c1_cubed = c1 * c1 * c1 * D;
    pair.c1c2 = c1 * c2 * D;
    pair.c3 = -D * (D * D * (D - 5) + 10 * D - 10);
    std::int64_t genus = (D - 1) * (D - 2) / 2;
    for (int j = 0; j < r; ++j) {
        auto J = static_cast<std::size_t>(j);
        pair.D3[J] = D;
        pair.c1sq_D[J] = c1 * c1 * D;
        pair.c2_D[J] = c2 * D;
        for (int k = 0; k < r; ++k) {
            auto K = static_cast<std::size_t>(k);
            pair.c1_DD[J][K] = c1 * D;
            pair.DD2[J][K] = D;
            if (j < k)
                pair.pair_curves[J][K] = {CurveComponent{genus, 1}};
        }
    }
    std::fill(pair.T.begin(), pair.T.end(), D);
    std::int64_t e_surface = D * D * D - 4 * D * D + 6 * D;
    std::int64_t e_curve = -D * (D - 3);
    std::int64_t pairs = choose(r, 2), triples = choose(r, 3);
    pair.e_D = r * e_surface - pairs * e_curve + triples * D;
    pair.e_singD = pairs * e_curve - 2 * triples * D;
    pair.requires_sum_congruence = true;
    return pair;
}

BasePair planes_p3(int r)
{
    if (r < 1)
        throw Error(ErrorCode::BadParams, "planes_p3 needs r >= 1");
    BasePair pair;
    pair.label = "planes_p3(" + std::to_string(r) + ")";
    pair.resize(r);
    pair.c1_cubed = 64;
    pair.c1c2 = 24;
    pair.c3 = 4;
    for (int j = 0; j < r; ++j) {
        auto J = static_cast<std::size_t>(j);
        pair.D3[J] = 1;
        pair.c1sq_D[J] = 16;
        pair.c2_D[J] = 6;
        for (int k = 0; k < r; ++k) {
            auto K = static_cast<std::size_t>(k);
            pair.c1_DD[J][K] = 4;
            pair.DD2[J][K] = 1;
            if (j < k)
                pair.pair_curves[J][K] = {CurveComponent{0, 1}};
        }
    }
    std::fill(pair.T.begin(), pair.T.end(), 1);
    // planes (e = 3) minus lines (e = 2) plus points; each triple point lies on three lines
    std::int64_t pairs = choose(r, 2), triples = choose(r, 3);
    pair.e_D = 3 * r - 2 * pairs + triples;
    pair.e_singD = 2 * pairs - 2 * triples;
    pair.requires_sum_congruence = true;
    return pair;
}

BasePair make_preset(PresetKind kind, int d, int r)
{
    if (kind == PresetKind::PlanesP3)
        return planes_p3(r);
    return hypersurface_p4(d, r);
}

} // namespace rootcover
