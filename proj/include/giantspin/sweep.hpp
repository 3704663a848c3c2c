#pragma once

#include <optional>
#include <vector>

#include "giantspin/core.hpp"

namespace giantspin {

// A near-degenerate adjacent level pair: levels[lower] and levels[lower+1]
// separated by gap (Kelvin).
struct Matching {
    int lower = 0;
    double gap = 0.0;
};

// One field sample of a sweep. Levels ascending; matchings hold every
// adjacent exact-level pair closer than the matching tolerance; blocked is
// the min_phi I(phi) <= 0 regime (H at or beyond the cutoff field).
struct SweepRecord {
    double H_par = 0.0; // Tesla
    std::vector<double> levels_exact;
    std::optional<std::vector<double>> levels_angle;
    std::vector<Matching> matchings;
    bool blocked = false;
};

// 0 to 1.2 * field_cutoff in 241 uniform samples (240 steps); the cutoff
// itself lands on sample 200.
std::vector<double> default_field_grid(const SpinParams& params);

// Trace exact (and optionally angle-model) spectra along H_values. Solver
// errors are rethrown annotated with the offending field value. Records come
// back in the order of H_values.
std::vector<SweepRecord> sweep_field(const SpinParams& params,
                                     const std::vector<double>& H_values,
                                     bool include_angle = false, int n_levels = 4,
                                     double matching_tol = 0.5,
                                     int kmax = 64);

// Result of refining one resonance H ~ k H_0. The relevant gap is the
// adjacent exact-level pair with the smallest gap at the seed field among
// the lowest min(2k+6, 2S+1) levels; those indices are held fixed while a
// golden-section search minimizes the gap over +-30% of the seed (clamped
// below the cutoff field). found is false when no interior minimum exists
// in the bracket. The k = 0 entry reports the zero-field doublet directly.
struct ResonanceLocation {
    int k = 0;
    bool found = false;
    double H_seed = 0.0;       // k H_0, Tesla
    double H_at_min_gap = 0.0; // Tesla
    double gap = 0.0;          // Kelvin
    double offset_from_seed = 0.0;
    int pair_lower = 0;
};

std::vector<ResonanceLocation> locate_matchings(const SpinParams& params,
                                                int k_max_resonance);

// True iff the potential has exactly one local minimum on (-pi, pi]
// (located at phi = 0). dV/dphi = sin(phi) [2(D-E)S(S+1) cos(phi)
// + sqrt(S(S+1)) A]; the two minima merge when the interior root
// cos(phi*) = -A / (2 (D-E) sqrt(S(S+1))) leaves [-1, 1]. The degenerate
// boundary case (root exactly at cos(phi) = -1) reports true.
bool single_minimum_check(const SpinParams& params);

} // namespace giantspin
