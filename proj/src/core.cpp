#include "giantspin/core.hpp"

#include <cmath>
#include <sstream>

namespace giantspin {

void validate(const SpinParams& p)
{
    std::ostringstream why;
    if (!std::isfinite(p.S) || !std::isfinite(p.D) || !std::isfinite(p.E) ||
        !std::isfinite(p.g) || !std::isfinite(p.H_par))
        why << "non-finite parameter; ";
    else {
        if (p.S <= 0.0)
            why << "S must be positive (got " << p.S << "); ";
        if (std::abs(2.0 * p.S - std::round(2.0 * p.S)) > 1e-9)
            why << "2S must be an integer (got S=" << p.S << "); ";
        if (p.D < 0.0)
            why << "D must be non-negative (got " << p.D << " K); ";
        if (p.E < 0.0)
            why << "E must be non-negative (got " << p.E << " K); ";
        if (p.g <= 0.0)
            why << "g must be positive (got " << p.g << "); ";
        if (p.H_par < 0.0)
            why << "H_par must be non-negative (got " << p.H_par << " T); ";
    }
    const std::string msg = why.str();
    if (!msg.empty())
        throw validation_error("invalid SpinParams: " + msg.substr(0, msg.size() - 2));
}

double zeeman_energy(const SpinParams& p)
{
    validate(p);
    return p.g * mu_B_over_k_B * p.H_par;
}

} // namespace giantspin
