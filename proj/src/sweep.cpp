#include "giantspin/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "giantspin/analytics.hpp"
#include "giantspin/angle_model.hpp"
#include "giantspin/giant_spin.hpp"

namespace giantspin {

std::vector<double> default_field_grid(const SpinParams& params)
{
    const double step = 1.2 * field_cutoff(params) / 240.0;
    std::vector<double> grid(241);
    for (int j = 0; j <= 240; ++j)
        grid[j] = j * step;
    return grid;
}

std::vector<SweepRecord> sweep_field(const SpinParams& params,
                                     const std::vector<double>& H_values,
                                     bool include_angle, int n_levels,
                                     double matching_tol, int kmax)
{
    validate(params);
    if (matching_tol <= 0.0)
        throw validation_error("sweep_field: matching tolerance must be positive");
    for (double H : H_values)
        if (!std::isfinite(H) || H < 0.0)
            throw validation_error("sweep_field: field values must be finite and non-negative");

    std::vector<SweepRecord> records;
    records.reserve(H_values.size());
    for (double H : H_values) {
        SpinParams ph = params;
        ph.H_par = H;
        SweepRecord rec;
        rec.H_par = H;
        try {
            rec.levels_exact = reference_spectrum(ph, n_levels).eigenvalues;
            if (include_angle) {
                std::vector<double> angle;
                for (const AngleLevel& lv : solve(ph, kmax, n_levels))
                    angle.push_back(lv.energy);
                rec.levels_angle = std::move(angle);
            }
        } catch (const numeric_error& e) {
            std::ostringstream msg;
            msg << "sweep at H = " << H << " T: " << e.what();
            throw numeric_error(msg.str(), e.iterations);
        } catch (const model_domain_error& e) {
            std::ostringstream msg;
            msg << "sweep at H = " << H << " T: " << e.what();
            throw model_domain_error(msg.str());
        }
        for (size_t i = 0; i + 1 < rec.levels_exact.size(); ++i) {
            const double gap = rec.levels_exact[i + 1] - rec.levels_exact[i];
            if (gap < matching_tol)
                rec.matchings.push_back({static_cast<int>(i), gap});
        }
        rec.blocked = min_inverse_mass(ph) <= 0.0;
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

double pair_gap(const SpinParams& base, double H, int lower, int n_levels)
{
    SpinParams p = base;
    p.H_par = H;
    const auto levels = reference_spectrum(p, n_levels).eigenvalues;
    return levels[lower + 1] - levels[lower];
}

// Golden-section minimum of f over [a, b] to absolute abscissa tolerance.
template <typename F>
double golden_section_min(F f, double a, double b, double tol)
{
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

std::vector<ResonanceLocation> locate_matchings(const SpinParams& params,
                                                int k_max_resonance)
{
    validate(params);
    if (k_max_resonance < 1)
        throw validation_error("locate_matchings: k_max_resonance must be >= 1");

    const double H0 = resonance_increment(params);
    const double H_lim = field_cutoff(params);
    const int dim = static_cast<int>(std::lround(2.0 * params.S)) + 1;
    constexpr double bracket_tol = 1e-9; // Tesla

    std::vector<ResonanceLocation> out;

    // k = 0: the zero-field doublet, no search needed.
    {
        SpinParams p0 = params;
        p0.H_par = 0.0;
        const auto lev = reference_spectrum(p0, 2).eigenvalues;
        out.push_back({0, true, 0.0, 0.0, lev[1] - lev[0], 0.0, 0});
    }

    for (int k = 1; k <= k_max_resonance; ++k) {
        ResonanceLocation loc;
        loc.k = k;
        loc.H_seed = k * H0;

        const double lo = 0.7 * loc.H_seed;
        const double hi = std::min(1.3 * loc.H_seed, H_lim); // blocked regime excluded
        if (loc.H_seed >= H_lim || hi - lo < 10.0 * bracket_tol) {
            loc.found = false;
            out.push_back(loc);
            continue;
        }

        // Identify the relevant adjacent pair at the seed field.
        const int n_levels = std::min(2 * k + 6, dim);
        SpinParams ps = params;
        ps.H_par = loc.H_seed;
        const auto seed_levels = reference_spectrum(ps, n_levels).eigenvalues;
        int lower = 0;
        double best = seed_levels[1] - seed_levels[0];
        for (int i = 1; i + 1 < n_levels; ++i) {
            const double gap = seed_levels[i + 1] - seed_levels[i];
            if (gap < best) {
                best = gap;
                lower = i;
            }
        }
        loc.pair_lower = lower;

        auto gap_at = [&](double H) { return pair_gap(params, H, lower, n_levels); };
        const double H_min = golden_section_min(gap_at, lo, hi, bracket_tol);

        // A minimum glued to a bracket edge is no minimum at all.
        if (H_min - lo < 5.0 * bracket_tol || hi - H_min < 5.0 * bracket_tol) {
            loc.found = false;
        } else {
            loc.found = true;
            loc.H_at_min_gap = H_min;
            loc.gap = gap_at(H_min);
            loc.offset_from_seed = std::abs(H_min - loc.H_seed);
        }
        out.push_back(loc);
    }
    return out;
}

bool single_minimum_check(const SpinParams& params)
{
    const double A = zeeman_energy(params);
    if (A == 0.0)
        return false; // two minima at 0 and pi (or a flat/easy-plane layout)
    if (params.D == params.E)
        return true; // pure -cos(phi) tilt: single minimum at 0
    const double root =
        -A / (2.0 * (params.D - params.E) * std::sqrt(params.S * (params.S + 1.0)));
    // Interior extrema exist only while the root stays inside [-1, 1]; the
    // tolerance keeps the degenerate-inflection boundary case on the "true"
    // side under floating point.
    return std::abs(root) >= 1.0 - 1e-12;
}

} // namespace giantspin
