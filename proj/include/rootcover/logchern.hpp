#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rootcover/exact.hpp"

namespace rootcover {

struct CurveComponent {
    std::int64_t genus = 0;
    std::int64_t count = 0;

    bool operator==(const CurveComponent&) const = default;
};

// Numeric intersection data of a smooth projective 3-fold Z with an SNC
// arrangement D_1, ..., D_r.
struct BasePair {
    std::string label;
    int r = 0;
    std::int64_t c1_cubed = 0;
    std::int64_t c1c2 = 0;
    std::int64_t c3 = 0;
    std::vector<std::int64_t> D3;                     // D_j^3
    std::vector<std::int64_t> c1sq_D;                 // c1^2 D_j
    std::vector<std::int64_t> c2_D;                   // c2 D_j
    std::vector<std::vector<std::int64_t>> c1_DD;     // c1 D_j D_k, symmetric
    std::vector<std::vector<std::int64_t>> DD2;       // D_j D_k^2
    std::vector<std::vector<std::vector<CurveComponent>>> pair_curves;  // j < k
    std::vector<std::int64_t> T;                      // D_j D_k D_l, j < k < l packed
    std::int64_t e_D = 0;
    std::int64_t e_singD = 0;
    // Line-bundle condition for hyperplane-section presets: sum of nu = 0 mod n.
    bool requires_sum_congruence = false;

    std::int64_t triple_distinct(int j, int k, int l) const;
    void set_triple(int j, int k, int l, std::int64_t value);
    // D_a D_b D_c for any indices.
    std::int64_t triple(int a, int b, int c) const;
    // K_Z D_j D_k
    std::int64_t KZ_DD(int j, int k) const { return -c1_DD.at(j).at(k); }

    // Allocates all tables for r divisors, zero-filled.
    void resize(int divisors);
};

std::size_t packed_triple_index(int r, int j, int k, int l);

// Throws BadParams on shape or symmetry violations.
void validate(const BasePair& pair);

enum class AmbientWeight { One, C1, C1Sq, C2, C1Cubed, C1C2, C3 };

int degree(AmbientWeight w);

// sum over j_1 < ... < j_m of D_{j_1}^{i_1} ... D_{j_m}^{i_m}, paired with the weight.
Rat bracket(const BasePair& pair, std::span<const int> signature, AmbientWeight weight);

struct LogChernNumbers {
    Rat c1_cubed_bar;
    Rat c1c2_bar;
    Rat c3_bar;
};

LogChernNumbers log_chern_numbers(const BasePair& pair);

// Degree-3 pairings on the span of c1, D_1, ..., D_r (index 0 is c1), plus c2 and c3.
class ChowRing {
public:
    explicit ChowRing(const BasePair& pair) : pair_(&pair) {}

    std::size_t rank() const { return static_cast<std::size_t>(pair_->r) + 1; }
    std::int64_t monomial(std::size_t a, std::size_t b, std::size_t c) const;
    std::int64_t c2_times(std::size_t a) const;

    struct Class {
        Rat deg0;
        std::vector<Rat> deg1;
        Rat c2;                               // coefficient of c2 in degree 2
        std::vector<std::vector<Rat>> quad;   // symmetric degree-2 part in the generators
        Rat deg3;                             // already a number
    };

    Class zero() const;
    Class one() const;
    Class linear(const std::vector<Rat>& coeffs) const;
    Class chern_total() const;  // 1 + c1 + c2 + c3
    Class mul(const Class& x, const Class& y) const;
    Class add(const Class& x, const Class& y) const;
    Class scale(const Class& x, const Rat& s) const;

    Rat cube(const std::vector<Rat>& x, const std::vector<Rat>& y, const std::vector<Rat>& z) const;
    // Number of a degree-1 class times a degree-2 class.
    Rat pair(const std::vector<Rat>& x, const Class& y) const;

private:
    const BasePair* pair_;
};

// c(Z) prod (1+D_j/n)/(1+D_j), paired to numbers and scaled by the degree n.
struct ChernTriple {
    Rat c1_cubed;
    Rat c1c2;
    Rat c3;
};

ChernTriple nonsingular_cover_chern(const BasePair& pair, std::int64_t n);

enum class PresetKind { PlanesP3, HypersurfaceP4 };

BasePair planes_p3(int r);
BasePair hypersurface_p4(int d, int r);
BasePair make_preset(PresetKind kind, int d, int r);

} // namespace rootcover
