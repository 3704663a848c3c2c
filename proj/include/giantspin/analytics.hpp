#pragma once

#include <utility>

#include "giantspin/core.hpp"

namespace giantspin {

// Experimental Fe8 anchors the reports compare against (reference metadata,
// not model inputs).
inline constexpr double experimental_barrier_K = 22.2;
inline constexpr double experimental_H0_T = 0.22;

// Barrier heights and ground-state estimates, all in Kelvin. h_b_numeric is
// V_max - E_gs_numeric by construction; E_min <= E_gs_numeric <= V_max.
struct BarrierReport {
    double V_max = 0.0;          // top of the barrier, -E S(S+1)
    double E_min = 0.0;          // potential minimum, -D S(S+1)
    double E_gs_numeric = 0.0;   // angle-model ground state (input)
    double h_b_numeric = 0.0;
    double E_gs_harmonic = 0.0;  // closed-form harmonic estimate (negative)
    double h_b_harmonic = 0.0;
    double E_gs_crude = 0.0;     // -(D S^2 + E S)
    double h_b_crude = 0.0;      // (D-E) S^2
    double omega = 0.0;          // harmonic well frequency at the estimate
};

// -E S(S+1): zero-field barrier top. At finite field the maximum moves off
// +-pi/2; evaluate potential() at the located maximum instead.
double barrier_top(const SpinParams& params);

// h_b = -E S(S+1) - E_gs for a numerically computed ground state.
double barrier_height_numeric(const SpinParams& params, double E_gs);

// omega = 2 sqrt((D-E) [E S(S+1) + |E_gs|]) from the harmonic expansion of
// the well at phi = 0 with the local effective mass.
double harmonic_frequency(const SpinParams& params, double E_gs_abs);

// Closed-form self-consistent solution of |E_gs| = D S(S+1) - omega(|E_gs|)/2:
//   |E_gs| = D S(S+1) + (D-E)/2 [1 - sqrt(1 + 4 (D+E)/(D-E) S(S+1))]
//   h_b    = (D-E) S(S+1) + the same bracket term.
// Returns (|E_gs|, h_b).
std::pair<double, double> harmonic_ground_state(const SpinParams& params);

// Crude limit (D+E)/(D-E) ~ 1: (|E_gs|, h_b) = (D S^2 + E S, (D-E) S^2).
std::pair<double, double> crude_ground_state(const SpinParams& params);

// V(pi) - V(0) = 2 sqrt(S(S+1)) g mu_B H_par: the field-induced offset
// between the two minima (their positions do not move).
double minima_offset(const SpinParams& params);

// H_lim = (4 S / g mu_B) sqrt(2 E (D-E)): the field at which the inverse
// mass develops a zero and tunneling shuts off. Requires E > 0 and D > E.
double field_cutoff(const SpinParams& params);

// H_0 = H_lim / (2S) = (2 / g mu_B) sqrt(2 E (D-E)): spacing of the level
// matchings H = k H_0.
double resonance_increment(const SpinParams& params);

// Full report for a given numeric ground state (zero-field analysis).
BarrierReport make_barrier_report(const SpinParams& params, double E_gs_numeric);

} // namespace giantspin
