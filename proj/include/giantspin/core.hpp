#pragma once

#include <stdexcept>
#include <string>

namespace giantspin {

inline constexpr const char* artifact_version = "0.1.0";

// Bohr magneton over Boltzmann constant, K/T (CODATA, rounded).
// Single source of truth for every Tesla <-> Kelvin conversion: energies are
// uniformly expressed in Kelvin, applied fields in Tesla.
inline constexpr double mu_B_over_k_B = 0.6717;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected input: a parameter set violating the SpinParams invariants or a
// malformed matrix. Maps to CLI exit code 2.
class validation_error : public error {
public:
    using error::error;
};

// Structurally valid input outside a model's domain (angle model with
// D <= E, zero-field-only analytics at finite field, ...). Exit code 3.
class model_domain_error : public error {
public:
    using error::error;
};

// Numerical failure; carries the iteration count when an iterative stage
// gave up. Exit code 4.
class numeric_error : public error {
public:
    explicit numeric_error(const std::string& what, int iterations = 0)
        : error(what), iterations(iterations) {}
    int iterations;
};

// System definition for the giant-spin Hamiltonian
//   H = A J_z - D J_z^2 + (E/2)(J+^2 + J-^2),    A = g mu_B H_par.
// S is the collective spin (integer or half-integer), D and E the axial and
// transverse anisotropy constants in Kelvin, H_par the applied field along z
// in Tesla.
struct SpinParams {
    double S;
    double D;
    double E;
    double g = 2.0;
    double H_par = 0.0;
};

// Fe8: S=10 ground-state multiplet, D = 0.275 K, E = 0.046 K, g = 2.
inline SpinParams fe8_params() { return SpinParams{10.0, 0.275, 0.046, 2.0, 0.0}; }

// Throws validation_error unless S > 0 with 2S integral, D >= 0, E >= 0,
// g > 0, H_par >= 0 and all values finite. Never clamps.
void validate(const SpinParams& p);

// Zeeman energy per unit angular momentum, A = g mu_B H_par, in Kelvin.
double zeeman_energy(const SpinParams& p);

} // namespace giantspin
