#ifndef LOOPCALC_SIEVE_HPP
#define LOOPCALC_SIEVE_HPP

#include <string>
#include <vector>

#include "loopcalc/algebra.hpp"

namespace loopcalc {

/// Closed-form total-annihilation criterion for Q^I zeta_i (I nonempty),
/// with i_{s+1} = i:
///   (1) i_1 - (i_2 + ... + i_s + i) < 2^rho(i_1)
///   (2) 2 i_{j+1} - i_j < 2^rho(i_{j+1}) for j = 1..s.
bool wellington_check(const OpSequence& I, int i);

/// Basis of {primitive} intersected with the kernels of every Sq^t_*,
/// 1 <= t <= d, in degree d.
std::vector<Element> spherical_candidates(const SpaceContext& space, int d);

/// Retains candidates of the form xi^2 with xi primitive of odd dimension.
std::vector<Element> square_root_filter(const std::vector<Element>& cands);

struct SieveOptions {
    int max_dim_limit = 64;
};

struct SieveReport {
    struct PerDim {
        int dim = 0;
        std::vector<Element> candidates;
        std::vector<Element> square_filtered;
    };
    SpaceContext space;
    int d_max = 0;
    std::vector<PerDim> dims; // one entry per dimension 1..d_max
    // wellington_check vs direct-sweep tallies over the zeta generators
    // (Q0S0 contexts only).
    long long checked = 0;
    long long agreements = 0;
    std::vector<std::string> mismatches;
};

/// Complete deterministic sweep over dimensions 1..d_max.  Every reported
/// candidate is re-tested against the primitivity and annihilation
/// predicates before the report is returned.
SieveReport sieve_report(const SpaceContext& space, int d_max, const SieveOptions& opts = {});

} // namespace loopcalc

#endif
