#include "giantspin/giant_spin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace giantspin {

namespace {

// <m+2| (E/2) J+^2 |m>
double ladder_coupling(double S, double E, double m)
{
    return 0.5 * E * std::sqrt((S - m) * (S + m + 1.0) * (S - m - 1.0) * (S + m + 2.0));
}

// Hamiltonian element between |S,a> and |S,b> (a, b are m values).
double element(double S, double A, double D, double E, double a, double b)
{
    if (a == b)
        return A * a - D * a * a;
    if (std::abs(a - b) == 2.0)
        return ladder_coupling(S, E, std::min(a, b));
    return 0.0;
}

// Positive m values present in the multiplet, ascending (1..S for integer
// spin, 1/2..S for half-integer).
std::vector<double> positive_ms(double S)
{
    std::vector<double> ms;
    const bool integer_spin = std::abs(S - std::round(S)) < 1e-9;
    for (double m = integer_spin ? 1.0 : 0.5; m <= S + 1e-9; m += 1.0)
        ms.push_back(m);
    return ms;
}

struct ParityBlocks {
    SymMatrix even; // |0> (integer spin) plus (|m>+|-m>)/sqrt2
    SymMatrix odd;  // (|m>-|-m>)/sqrt2
    std::vector<double> even_ms; // 0 entry marks |0>
    std::vector<double> odd_ms;
};

ParityBlocks build_parity_blocks(const SpinParams& p)
{
    const double S = p.S, D = p.D, E = p.E;
    const bool integer_spin = std::abs(S - std::round(S)) < 1e-9;
    std::vector<double> pos = positive_ms(S);

    std::vector<double> even_ms;
    if (integer_spin)
        even_ms.push_back(0.0);
    even_ms.insert(even_ms.end(), pos.begin(), pos.end());
    const std::vector<double>& odd_ms = pos;

    auto h = [&](double a, double b) { return element(S, 0.0, D, E, a, b); };

    const auto band = [](size_t n) { return std::min<int>(2, static_cast<int>(n) - 1); };
    SymMatrix even(static_cast<int>(even_ms.size()), band(even_ms.size()));
    for (size_t r = 0; r < even_ms.size(); ++r)
        for (size_t c = r; c < even_ms.size(); ++c) {
            const double ma = even_ms[r], mb = even_ms[c];
            double v;
            if (ma == 0.0 && mb == 0.0)
                v = h(0.0, 0.0);
            else if (ma == 0.0 || mb == 0.0)
                v = std::sqrt(2.0) * h(std::max(ma, mb), 0.0);
            else
                v = h(ma, mb) + h(ma, -mb);
            even.set(static_cast<int>(r), static_cast<int>(c), v);
        }

    SymMatrix odd(static_cast<int>(odd_ms.size()), band(odd_ms.size()));
    for (size_t r = 0; r < odd_ms.size(); ++r)
        for (size_t c = r; c < odd_ms.size(); ++c) {
            const double ma = odd_ms[r], mb = odd_ms[c];
            odd.set(static_cast<int>(r), static_cast<int>(c), h(ma, mb) - h(ma, -mb));
        }

    return ParityBlocks{std::move(even), std::move(odd), even_ms, odd_ms};
}

} // namespace

SymMatrix build_with_zeeman(double S, double A, double D, double E)
{
    const int dim = static_cast<int>(std::lround(2.0 * S)) + 1;
    SymMatrix mat(dim, std::min(2, dim - 1));
    for (int i = 0; i < dim; ++i) {
        const double m = -S + i;
        mat.set(i, i, A * m - D * m * m);
        if (i + 2 < dim)
            mat.set(i + 2, i, ladder_coupling(S, E, m));
    }
    return mat;
}

GiantSpinMatrix build_giant_spin(const SpinParams& params)
{
    validate(params);
    const double A = zeeman_energy(params);
    SymMatrix mat = build_with_zeeman(params.S, A, params.D, params.E);
    std::vector<double> ms(mat.dim());
    for (int i = 0; i < mat.dim(); ++i)
        ms[i] = -params.S + i;
    return GiantSpinMatrix{params, std::move(mat), std::move(ms)};
}

Spectrum reference_spectrum(const SpinParams& params, int n_lowest)
{
    validate(params);
    const int dim = static_cast<int>(std::lround(2.0 * params.S)) + 1;
    if (n_lowest < 1 || n_lowest > dim)
        throw validation_error("reference_spectrum: n_lowest out of range");

    if (params.H_par != 0.0) {
        GiantSpinMatrix gs = build_giant_spin(params);
        Spectrum spec = eigh(gs.matrix, n_lowest);
        spec.labels.assign(spec.size(), std::string());
        return spec;
    }

    // Zero field: reflection-blocked solve, eigenvectors mapped back to the
    // m-ascending basis.
    ParityBlocks blocks = build_parity_blocks(params);
    Spectrum even = eigh(blocks.even);
    Spectrum odd = eigh(blocks.odd);

    auto scatter = [&](const std::vector<double>& block_vec,
                       const std::vector<double>& block_ms, double sign) {
        std::vector<double> full(dim, 0.0);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (size_t a = 0; a < block_ms.size(); ++a) {
            const double m = block_ms[a];
            if (m == 0.0) {
                full[static_cast<size_t>(params.S)] = block_vec[a];
            } else {
                const int ip = static_cast<int>(std::lround(params.S + m));
                const int im = static_cast<int>(std::lround(params.S - m));
                full[ip] = block_vec[a] * inv_sqrt2;
                full[im] = sign * block_vec[a] * inv_sqrt2;
            }
        }
        return full;
    };

    struct Entry {
        double value;
        double residual;
        std::string label;
        std::vector<double> vec;
    };
    std::vector<Entry> entries;
    for (size_t k = 0; k < even.size(); ++k)
        entries.push_back({even.eigenvalues[k], even.residuals[k], "even",
                           scatter(even.eigenvectors[k], blocks.even_ms, +1.0)});
    for (size_t k = 0; k < odd.size(); ++k)
        entries.push_back({odd.eigenvalues[k], odd.residuals[k], "odd",
                           scatter(odd.eigenvectors[k], blocks.odd_ms, -1.0)});
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.value < b.value; });

    Spectrum spec;
    for (int k = 0; k < n_lowest; ++k) {
        spec.eigenvalues.push_back(entries[k].value);
        spec.residuals.push_back(entries[k].residual);
        spec.labels.push_back(entries[k].label);
        spec.eigenvectors.push_back(std::move(entries[k].vec));
    }
    return spec;
}

double reference_splitting(const SpinParams& params)
{
    validate(params);
    if (params.H_par != 0.0)
        throw model_domain_error(
            "reference_splitting requires H_par = 0; finite-field level "
            "matching is handled by the sweep module");

    ParityBlocks blocks = build_parity_blocks(params);
    const double lambda_even = eigh(blocks.even, 1).eigenvalues[0];
    const double lambda_odd = eigh(blocks.odd, 1).eigenvalues[0];
    // E1 - E0: the doublet members live one per reflection block, but which
    // block is lower depends on S, so take the magnitude.
    return std::abs(lambda_odd - lambda_even);
}

} // namespace giantspin
