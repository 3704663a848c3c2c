#include "giantspin/analytics.hpp"

#include <cmath>

namespace giantspin {

double barrier_top(const SpinParams& p)
{
    validate(p);
    if (p.H_par != 0.0)
        throw model_domain_error(
            "barrier_top is the zero-field form; at finite field evaluate "
            "potential() at the numerically located maximum");
    return -p.E * p.S * (p.S + 1.0);
}

double barrier_height_numeric(const SpinParams& p, double E_gs)
{
    validate(p);
    return -p.E * p.S * (p.S + 1.0) - E_gs;
}

double harmonic_frequency(const SpinParams& p, double E_gs_abs)
{
    validate(p);
    if (p.D < p.E)
        throw model_domain_error("harmonic_frequency requires D >= E");
    if (E_gs_abs <= 0.0)
        throw model_domain_error("harmonic_frequency requires |E_gs| > 0");
    const double radicand = (p.D - p.E) * (p.E * p.S * (p.S + 1.0) + E_gs_abs);
    if (radicand < 0.0)
        throw model_domain_error("harmonic_frequency: negative radicand");
    return 2.0 * std::sqrt(radicand);
}

std::pair<double, double> harmonic_ground_state(const SpinParams& p)
{
    validate(p);
    if (p.D <= p.E)
        throw model_domain_error("harmonic_ground_state requires D > E");
    const double ss1 = p.S * (p.S + 1.0);
    const double bracket =
        1.0 - std::sqrt(1.0 + 4.0 * (p.D + p.E) / (p.D - p.E) * ss1);
    const double e_gs_abs = p.D * ss1 + 0.5 * (p.D - p.E) * bracket;
    const double h_b = (p.D - p.E) * ss1 + 0.5 * (p.D - p.E) * bracket;
    return {e_gs_abs, h_b};
}

std::pair<double, double> crude_ground_state(const SpinParams& p)
{
    validate(p);
    return {p.D * p.S * p.S + p.E * p.S, (p.D - p.E) * p.S * p.S};
}

double minima_offset(const SpinParams& p)
{
    return 2.0 * std::sqrt(p.S * (p.S + 1.0)) * zeeman_energy(p);
}

double field_cutoff(const SpinParams& p)
{
    validate(p);
    if (p.E <= 0.0 || p.D <= p.E)
        throw model_domain_error(
            "field_cutoff requires E > 0 and D > E (no finite cutoff otherwise)");
    return 4.0 * p.S / (p.g * mu_B_over_k_B) * std::sqrt(2.0 * p.E * (p.D - p.E));
}

double resonance_increment(const SpinParams& p)
{
    return field_cutoff(p) / (2.0 * p.S);
}

BarrierReport make_barrier_report(const SpinParams& p, double E_gs_numeric)
{
    BarrierReport r;
    r.V_max = barrier_top(p);
    r.E_min = -p.D * p.S * (p.S + 1.0);
    if (E_gs_numeric < r.E_min || E_gs_numeric > r.V_max)
        throw validation_error(
            "barrier report: numeric ground state outside [E_min, V_max]");
    r.E_gs_numeric = E_gs_numeric;
    r.h_b_numeric = r.V_max - E_gs_numeric;
    const auto [e_gs_h, h_b_h] = harmonic_ground_state(p);
    r.E_gs_harmonic = -e_gs_h;
    r.h_b_harmonic = h_b_h;
    const auto [e_gs_c, h_b_c] = crude_ground_state(p);
    r.E_gs_crude = -e_gs_c;
    r.h_b_crude = h_b_c;
    r.omega = harmonic_frequency(p, e_gs_h);
    return r;
}

} // namespace giantspin
