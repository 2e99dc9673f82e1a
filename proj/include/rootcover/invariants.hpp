#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootcover/asympt.hpp"
#include "rootcover/exact.hpp"
#include "rootcover/logchern.hpp"
#include "rootcover/toric.hpp"

namespace rootcover {

// Throws IncompatiblePartition unless part fits pair (size, prime n, residues, sum congruence).
void check_compatible(const BasePair& pair, const Partition& part);

struct ChiResult {
    Rat chi;
    Rat R1;
    Rat R2;
    Rat R3;
};

ChiResult chi_root_cover(const BasePair& pair, const Partition& part);

// n chi(O_Z) - (1/12) sum_i [2L^3 + 3L^2 K + L K^2 + c2 L], L = (1/n) sum {i nu_j}_n D_j.
Rat chi_eigenspace_oracle(const BasePair& pair, const Partition& part);

// Coefficients {i nu_j}_n / n of L^(i).
std::vector<Rat> eigenspace_divisor(const Partition& part, std::int64_t i);

struct WallResidual {
    int j = 0;
    int k = 0;
    Rat residual;  // x_{s+1} from the recursion minus the direct formula
};

struct K3Result {
    Rat K3;
    Strategy strategy = Strategy::Minimal;
    Rat nK_cubed;
    std::vector<LatticePoint> points;  // per triple, packed order
    std::vector<WallResidual> residuals;
};

K3Result k3_root_cover(const BasePair& pair, const Partition& part, Strategy strategy);

// Stratified count over Z \ D, the open strata of D, and the double curves.
Rat euler_root_cover(const BasePair& pair, const Partition& part);
// The alternative expression with exceptional term sum_C [s(3-4g)-1] - sum (s+s+s-3) D_jkl.
Rat euler_printed_formula(const BasePair& pair, const Partition& part);

struct ClosedFormsP4 {
    Rat K3;
    Rat chi;
    Rat R1;
    Rat R2;
    Rat R3;
    Rat euler_limit;
    std::optional<std::pair<Rat, Rat>> slope_pair;  // undefined for d <= 2
    std::int64_t excess = 0;                       // sum of (k-2) over the three pairs
};

ClosedFormsP4 closed_forms_p4(int d, std::int64_t n, const Partition& part);

struct InvariantReport {
    std::string label;
    std::int64_t n = 0;
    std::vector<std::int64_t> nu;
    Strategy strategy = Strategy::Minimal;
    ChiResult chi;
    K3Result k3;
    Rat euler;
    Rat euler_printed;
    LogChernNumbers log_chern;
    std::optional<std::pair<Rat, Rat>> slopes;
    std::optional<std::pair<Rat, Rat>> log_slopes;
    Rat chi_error_bound;
    bool asymptotic = false;
};

// Bound on |chi/n - c1c2_bar/24|. Uses 3 sqrt(n) + 5 for the pairwise Dedekind sums,
// or the actual maximum when the partition is not asymptotic.
Rat chi_error_bound(const BasePair& pair, const Partition& part, const ChiResult& chi);

InvariantReport invariant_report(const BasePair& pair, const Partition& part, Strategy strategy);

} // namespace rootcover
