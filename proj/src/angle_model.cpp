#include "giantspin/angle_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace giantspin {

namespace {

constexpr double pi = std::numbers::pi;

void validate_angle_domain(const SpinParams& p)
{
    validate(p);
    if (p.D <= p.E)
        throw model_domain_error(
            "angle model requires D > E (inverse mass must be positive at phi = 0)");
}

} // namespace

double TrigPoly::operator()(double phi) const
{
    return c0 + c1 * std::cos(phi) + c2 * std::cos(2.0 * phi);
}

TrigPoly potential_coeffs(const SpinParams& p)
{
    const double ss1 = p.S * (p.S + 1.0);
    const double A = p.g * mu_B_over_k_B * p.H_par;
    // -(D-E) S(S+1) cos^2 = -(D-E) S(S+1)/2 * (1 + cos 2phi)
    return TrigPoly{-(p.D - p.E) * ss1 / 2.0 - p.E * ss1,
                    -std::sqrt(ss1) * A,
                    -(p.D - p.E) * ss1 / 2.0};
}

double potential(double phi, const SpinParams& p)
{
    validate(p);
    return potential_coeffs(p)(phi);
}

TrigPoly inverse_mass_coeffs(const SpinParams& p)
{
    const double A = p.g * mu_B_over_k_B * p.H_par;
    // 2(D-E) cos^2 + (A/S) cos + 4E = (D+3E) + (A/S) cos + (D-E) cos 2phi
    return TrigPoly{p.D + 3.0 * p.E, A / p.S, p.D - p.E};
}

double inverse_mass(double phi, const SpinParams& p)
{
    validate(p);
    return inverse_mass_coeffs(p)(phi);
}

double min_inverse_mass(const SpinParams& p)
{
    validate(p);
    const TrigPoly I = inverse_mass_coeffs(p);
    // In c = cos(phi): q(c) = 2 c2 c^2 + c1 c + (c0 - c2) over c in [-1, 1].
    auto q = [&](double c) { return 2.0 * I.c2 * c * c + I.c1 * c + (I.c0 - I.c2); };
    double best = std::min(q(-1.0), q(1.0));
    if (I.c2 != 0.0) {
        const double cv = -I.c1 / (4.0 * I.c2);
        if (cv >= -1.0 && cv <= 1.0)
            best = std::min(best, q(cv));
    }
    return best;
}

double plane_wave_element(const TrigPoly& V, const TrigPoly& I, int a, int b)
{
    const int d = std::abs(a - b);
    if (d > 2)
        return 0.0;
    const double ihat = (d == 0) ? I.c0 : (d == 1 ? I.c1 / 2.0 : I.c2 / 2.0);
    const double vhat = (d == 0) ? V.c0 : (d == 1 ? V.c1 / 2.0 : V.c2 / 2.0);
    return 0.5 * a * b * ihat + vhat;
}

std::pair<SymMatrix, SymMatrix> assemble_blocks(const TrigPoly& V, const TrigPoly& I,
                                                int kmax)
{
    if (kmax < 2)
        throw validation_error("assemble_blocks: kmax must be >= 2");

    auto pw = [&](int a, int b) { return plane_wave_element(V, I, a, b); };

    // cosine block over {1/sqrt(2pi), cos(n phi)/sqrt(pi)}:
    //   <0|H|0> = Vhat_0, <0|H|n> = sqrt(2) Vhat_n, <m|H|n> = H_{m,n} + H_{m,-n}
    SymMatrix even(kmax + 1, 2);
    even.set(0, 0, pw(0, 0));
    for (int n = 1; n <= std::min(kmax, 2); ++n)
        even.set(0, n, std::sqrt(2.0) * pw(0, n));
    for (int m = 1; m <= kmax; ++m)
        for (int n = m; n <= std::min(kmax, m + 2); ++n)
            even.set(m, n, pw(m, n) + pw(m, -n));

    // sine block over {sin(n phi)/sqrt(pi)}: <m|H|n> = H_{m,n} - H_{m,-n}
    SymMatrix odd(kmax, std::min(2, kmax - 1));
    for (int m = 1; m <= kmax; ++m)
        for (int n = m; n <= std::min(kmax, m + 2); ++n)
            odd.set(m - 1, n - 1, pw(m, n) - pw(m, -n));

    return {std::move(even), std::move(odd)};
}

AngleHamiltonian assemble(const SpinParams& params, int kmax)
{
    validate_angle_domain(params);
    if (kmax < 2)
        throw validation_error("assemble: kmax must be >= 2");
    const TrigPoly V = potential_coeffs(params);
    const TrigPoly I = inverse_mass_coeffs(params);
    auto [even, odd] = assemble_blocks(V, I, kmax);
    const bool singular = min_inverse_mass(params) <= 0.0;
    return AngleHamiltonian{params, V, I, kmax,
                            std::move(even), std::move(odd), singular};
}

namespace {

// One decoupled block: parity bases plus (at zero field) Fourier-index
// parity. `ns` lists the harmonic of each row/column.
struct Block {
    Parity parity;
    WellExchangeParity xparity;
    std::vector<int> ns;
    SymMatrix mat;
};

SymMatrix extract(const SymMatrix& full, const std::vector<int>& rows)
{
    SymMatrix sub(static_cast<int>(rows.size()), std::nullopt);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i; j < rows.size(); ++j)
            sub.set(static_cast<int>(i), static_cast<int>(j), full(rows[i], rows[j]));
    return sub;
}

std::vector<Block> decoupled_blocks(const AngleHamiltonian& h)
{
    const int kmax = h.kmax;
    std::vector<Block> blocks;
    const bool zero_field = (h.V.c1 == 0.0 && h.I.c1 == 0.0);

    auto ns_range = [&](int first, int step, int last) {
        std::vector<int> ns;
        for (int n = first; n <= last; n += step)
            ns.push_back(n);
        return ns;
    };

    if (!zero_field) {
        blocks.push_back({Parity::even, WellExchangeParity::mixed,
                          ns_range(0, 1, kmax), h.even_block});
        blocks.push_back({Parity::odd, WellExchangeParity::mixed,
                          ns_range(1, 1, kmax), h.odd_block});
        return blocks;
    }

    // Zero field: only n <-> n+-2 couplings survive, so each parity block
    // splits by n mod 2. Row index of harmonic n is n in the cosine block
    // and n-1 in the sine block.
    auto rows_for = [](const std::vector<int>& ns, int offset) {
        std::vector<int> rows;
        rows.reserve(ns.size());
        for (int n : ns)
            rows.push_back(n - offset);
        return rows;
    };

    for (auto [parity, offset, first_even, first_odd] :
         {std::tuple{Parity::even, 0, 0, 1}, std::tuple{Parity::odd, 1, 2, 1}}) {
        const SymMatrix& src = (parity == Parity::even) ? h.even_block : h.odd_block;
        const auto ns_even = ns_range(first_even, 2, kmax);
        const auto ns_odd = ns_range(first_odd, 2, kmax);
        blocks.push_back({parity, WellExchangeParity::even, ns_even,
                          extract(src, rows_for(ns_even, offset))});
        blocks.push_back({parity, WellExchangeParity::odd, ns_odd,
                          extract(src, rows_for(ns_odd, offset))});
    }
    return blocks;
}

std::vector<double> sample_grid(int grid_points)
{
    std::vector<double> phi(grid_points);
    for (int j = 0; j < grid_points; ++j)
        phi[j] = -pi + (j + 1) * (2.0 * pi / grid_points); // (-pi, pi]
    return phi;
}

void fix_sign(Wavefunction& w)
{
    double anchor = evaluate(w, 0.0);
    if (std::abs(anchor) < 1e-8 && w.parity == Parity::odd) {
        // sine series vanishes at 0; use the slope there
        anchor = 0.0;
        for (size_t i = 0; i < w.coefficients.size(); ++i)
            anchor += static_cast<double>(i + 1) * w.coefficients[i];
    }
    if (anchor < 0.0) {
        for (double& c : w.coefficients)
            c = -c;
        for (double& v : w.values)
            v = -v;
    }
}

} // namespace

double evaluate(const Wavefunction& psi, double phi)
{
    double v = 0.0;
    if (psi.parity == Parity::even) {
        v = psi.coefficients[0] / std::sqrt(2.0 * pi);
        for (size_t n = 1; n < psi.coefficients.size(); ++n)
            v += psi.coefficients[n] * std::cos(n * phi) / std::sqrt(pi);
    } else {
        for (size_t i = 0; i < psi.coefficients.size(); ++i)
            v += psi.coefficients[i] * std::sin((i + 1.0) * phi) / std::sqrt(pi);
    }
    return v;
}

std::vector<AngleLevel> solve(const SpinParams& params, int kmax, int n_levels,
                              int grid_points)
{
    AngleHamiltonian h = assemble(params, kmax);
    if (n_levels < 1 || n_levels > 2 * kmax + 1)
        throw validation_error("solve: n_levels out of range");
    if (grid_points < 2)
        throw validation_error("solve: grid_points must be >= 2");

    struct Candidate {
        double energy;
        size_t block;
        size_t index;
    };
    std::vector<Block> blocks = decoupled_blocks(h);
    std::vector<Spectrum> spectra;
    std::vector<Candidate> candidates;
    for (size_t b = 0; b < blocks.size(); ++b) {
        spectra.push_back(eigh(blocks[b].mat));
        for (size_t k = 0; k < spectra[b].size(); ++k)
            candidates.push_back({spectra[b].eigenvalues[k], b, k});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) {
                         return a.energy < b.energy;
                     });

    const std::vector<double> phi = sample_grid(grid_points);
    std::vector<AngleLevel> levels;
    levels.reserve(n_levels);
    for (int k = 0; k < n_levels; ++k) {
        const Candidate& c = candidates[k];
        const Block& blk = blocks[c.block];

        Wavefunction w;
        w.index = k;
        w.parity = blk.parity;
        w.exchange_parity = blk.xparity;
        w.coefficients.assign(blk.parity == Parity::even ? kmax + 1 : kmax, 0.0);
        const auto& v = spectra[c.block].eigenvectors[c.index];
        const int offset = (blk.parity == Parity::even) ? 0 : 1;
        for (size_t a = 0; a < blk.ns.size(); ++a)
            w.coefficients[blk.ns[a] - offset] = v[a];
        w.phi = phi;
        w.values.resize(phi.size());
        for (size_t j = 0; j < phi.size(); ++j)
            w.values[j] = evaluate(w, phi[j]);
        fix_sign(w);

        levels.push_back({c.energy, spectra[c.block].residuals[c.index], std::move(w)});
    }
    return levels;
}

double angle_splitting(const SpinParams& params, int kmax)
{
    if (params.H_par != 0.0)
        throw model_domain_error(
            "angle_splitting requires H_par = 0; finite-field level matching "
            "is handled by the sweep module");
    AngleHamiltonian h = assemble(params, kmax);

    // The doublet partners are the minima of the two Fourier-index-parity
    // sub-blocks of the cosine block (both even under phi -> -phi, opposite
    // under the well exchange phi -> phi + pi).
    std::vector<int> rows_even, rows_odd;
    for (int n = 0; n <= kmax; n += 2)
        rows_even.push_back(n);
    for (int n = 1; n <= kmax; n += 2)
        rows_odd.push_back(n);
    const double lambda_even = eigh(extract(h.even_block, rows_even), 1).eigenvalues[0];
    const double lambda_odd = eigh(extract(h.even_block, rows_odd), 1).eigenvalues[0];
    return std::abs(lambda_odd - lambda_even);
}

} // namespace giantspin
