#pragma once

#include <vector>

#include "giantspin/core.hpp"
#include "giantspin/linalg.hpp"

namespace giantspin {

// Matrix realization of H = A J_z - D J_z^2 + (E/2)(J+^2 + J-^2) in the
// |S,m> basis, m ascending from -S to +S. Diagonal entries are A m - D m^2;
// the only off-diagonal couplings are m <-> m+-2 with
// (E/2) sqrt((S-m)(S+m+1)(S-m-1)(S+m+2)). Real symmetric, half-bandwidth 2.
struct GiantSpinMatrix {
    SpinParams params;
    SymMatrix matrix;
    std::vector<double> m_values; // basis ordering, -S ... +S
};

GiantSpinMatrix build_giant_spin(const SpinParams& params);

// Same matrix for an explicit Zeeman energy A in Kelvin (any sign); used by
// the field sweep internals and symmetry diagnostics.
SymMatrix build_with_zeeman(double S, double A, double D, double E);

// Exact diagonalization of the giant-spin Hamiltonian: the reference values
// the angle model is judged against. At H_par = 0 the solve is blocked by
// the m -> -m reflection (even block spans |0> and (|m>+|-m>)/sqrt2, odd
// block the antisymmetric combinations) and levels carry "even"/"odd"
// labels; eigenvectors are mapped back to the m-ascending basis.
Spectrum reference_spectrum(const SpinParams& params, int n_lowest = 4);

// Ground-doublet tunnel splitting E1 - E0 at zero field, computed as the
// difference of the two reflection-block minima so the ~1e-10 K result never
// passes through a near-degenerate subtraction inside one matrix. Requires
// H_par = 0 (finite-field level matching belongs to the sweep module).
double reference_splitting(const SpinParams& params);

} // namespace giantspin
