#pragma once

#include <utility>
#include <vector>

#include "giantspin/core.hpp"
#include "giantspin/linalg.hpp"

namespace giantspin {

inline constexpr int default_kmax = 64;
inline constexpr int default_grid_points = 512;

// Real even trigonometric polynomial c0 + c1 cos(phi) + c2 cos(2 phi), in
// Kelvin. Both the potential and the inverse mass of the angle model are
// exactly of this form, so Fourier assembly needs no quadrature.
struct TrigPoly {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;

    double operator()(double phi) const;
};

// V(phi) = -(D-E) S(S+1) cos^2(phi) - sqrt(S(S+1)) g mu_B H cos(phi) - E S(S+1)
TrigPoly potential_coeffs(const SpinParams& params);
double potential(double phi, const SpinParams& params);

// I(phi) = 1/M(phi) = 2(D-E) cos^2(phi) + (g mu_B H / S) cos(phi) + 4E
TrigPoly inverse_mass_coeffs(const SpinParams& params);
double inverse_mass(double phi, const SpinParams& params);

// Minimum of I(phi) over the angle domain (closed form via the cos(phi)
// quadratic). Zero or negative at and beyond the tunneling cutoff field.
double min_inverse_mass(const SpinParams& params);

// Parity under phi -> -phi: even states are cosine series, odd states sine
// series.
enum class Parity { even, odd };

// Symmetry under the well exchange phi -> phi + pi (Fourier-index parity).
// Exact only at zero field; the tunnel doublet is an even/odd pair under
// this map.
enum class WellExchangeParity { even, odd, mixed };

// H(phi) = -(1/2) d/dphi I(phi) d/dphi + V(phi) on (-pi, pi], assembled in
// the truncated Fourier basis n = -kmax..kmax and rotated into the parity
// bases: even_block over {1/sqrt(2pi), cos(n phi)/sqrt(pi)} (dim kmax+1),
// odd_block over {sin(n phi)/sqrt(pi)} (dim kmax). Both V and I are even in
// phi at every field, so the rotation is exact and both blocks are banded
// with half-bandwidth 2.
struct AngleHamiltonian {
    SpinParams params;
    TrigPoly V;
    TrigPoly I;
    int kmax = default_kmax;
    SymMatrix even_block;
    SymMatrix odd_block;
    // min(I) <= 0: the kinetic form loses positive semidefiniteness and the
    // tunneling interpretation breaks down; assembly still succeeds.
    bool mass_singular = false;
};

// Matrix element between plane waves e^{ia phi}, e^{ib phi}:
// (1/2) a b Ihat_{a-b} + Vhat_{a-b} with Ihat_0 = c0, Ihat_{+-1} = c1/2,
// Ihat_{+-2} = c2/2 (same pattern for Vhat). Exposed for reconstruction
// checks.
double plane_wave_element(const TrigPoly& V, const TrigPoly& I, int a, int b);

// Parity-basis assembly from explicit coefficient polynomials (no parameter
// validation; used by assemble() and by symmetry diagnostics).
std::pair<SymMatrix, SymMatrix> assemble_blocks(const TrigPoly& V, const TrigPoly& I,
                                                int kmax);

// Full assembly for a parameter set. Requires D > E (positive inverse mass
// at phi = 0) and kmax >= 2.
AngleHamiltonian assemble(const SpinParams& params, int kmax = default_kmax);

// One eigenstate of the angle Hamiltonian. Coefficients are over the cosine
// basis (n = 0..kmax, leading entry on 1/sqrt(2pi)) for even parity and the
// sine basis (n = 1..kmax) for odd parity; values are samples on a uniform
// grid over (-pi, pi], sign-fixed so psi(0) > 0 (or psi'(0) > 0 for sine
// states). The coefficient vector has unit norm, i.e. integral |psi|^2 = 1.
struct Wavefunction {
    int index = 0;
    Parity parity = Parity::even;
    WellExchangeParity exchange_parity = WellExchangeParity::mixed;
    std::vector<double> coefficients;
    std::vector<double> phi;
    std::vector<double> values;
};

// Evaluate a wavefunction at an arbitrary angle from its coefficients.
double evaluate(const Wavefunction& psi, double phi);

struct AngleLevel {
    double energy = 0.0;   // Kelvin
    double residual = 0.0; // ||H psi - E psi||_2 from the block solve
    Wavefunction psi;
};

// Lowest n_levels eigenpairs merged over the parity blocks. At zero field
// the blocks are further decoupled by Fourier-index parity (four blocks in
// total), which keeps the tunnel doublet numerically clean and gives every
// state a definite well-exchange parity.
std::vector<AngleLevel> solve(const SpinParams& params, int kmax = default_kmax,
                              int n_levels = 4, int grid_points = default_grid_points);

// Tunnel splitting E1 - E0 at zero field from the two well-exchange
// sub-blocks of the cosine block (the doublet partners are both even under
// phi -> -phi; they differ in Fourier-index parity).
double angle_splitting(const SpinParams& params, int kmax = default_kmax);

} // namespace giantspin
