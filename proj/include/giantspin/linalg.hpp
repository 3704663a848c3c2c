#pragma once

#include <optional>
#include <string>
#include <vector>

#include "giantspin/core.hpp"

namespace giantspin {

// Dense real symmetric matrix with entries in Kelvin. Assembly code writes
// both triangles from one formula, so entries(i,j) == entries(j,i) holds
// exactly; eigh() rejects anything else. The optional bandwidth is a
// half-bandwidth hint bounding all nonzeros: |i-j| > bandwidth implies a
// zero entry.
class SymMatrix {
public:
    explicit SymMatrix(int dim, std::optional<int> bandwidth = std::nullopt);

    int dim() const { return dim_; }
    std::optional<int> bandwidth() const { return bandwidth_; }

    double operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }

    // Writes (i,j) and (j,i) in one step.
    void set(int i, int j, double value);

    double frobenius_norm() const;
    double trace() const;

private:
    int dim_;
    std::optional<int> bandwidth_;
    std::vector<double> entries_;
};

// Eigendecomposition result. Eigenvalues ascending; eigenvectors[k] is the
// unit-norm column belonging to eigenvalues[k]; residuals[k] = ||H v - lambda v||_2
// in Kelvin. labels carries optional per-level metadata (parity, source block).
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
    std::vector<double> residuals;
    std::vector<std::string> labels;

    size_t size() const { return eigenvalues.size(); }
};

// Dense symmetric eigensolver: Householder tridiagonalization followed by
// implicit-shift QL with eigenvector accumulation. Deterministic (fixed
// sweep order, no randomized initialization). If n_lowest is given, only
// the lowest n_lowest pairs are returned (the decomposition itself is
// always full; matrices here stay small).
//
// Throws validation_error for non-symmetric or band-violating input and
// numeric_error (with the iteration count) if QL fails to converge or the
// residual bound 1e-10 * (1 + ||H||_F) is not met.
Spectrum eigh(const SymMatrix& matrix, std::optional<int> n_lowest = std::nullopt);

} // namespace giantspin
