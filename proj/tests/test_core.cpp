#include <doctest.h>

#include <cmath>
#include <limits>

#include "giantspin/core.hpp"

using namespace giantspin;

TEST_CASE("zeeman energy values")
{
    CHECK(zeeman_energy({10, 0.275, 0.046, 2.0, 0.0}) == 0.0);
    CHECK(zeeman_energy({10, 0.275, 0.046, 2.0, 1.0}) == doctest::Approx(1.3434).epsilon(1e-12));
    // 0.29018 K at the resonance increment field (hand arithmetic)
    CHECK(std::abs(zeeman_energy({10, 0.275, 0.046, 2.0, 0.216}) - 0.29018) < 1e-5);
}

TEST_CASE("zeeman energy is linear in the field")
{
    SpinParams p{10, 0.275, 0.046, 2.0, 0.37};
    SpinParams p2 = p;
    p2.H_par = 2.0 * p.H_par;
    // doubling is exact in binary floating point
    CHECK(zeeman_energy(p2) == 2.0 * zeeman_energy(p));

    for (double k : {3.0, 7.5, 0.125}) {
        SpinParams pk = p;
        pk.H_par = k * p.H_par;
        CHECK(zeeman_energy(pk) == doctest::Approx(k * zeeman_energy(p)).epsilon(1e-14));
    }
}

TEST_CASE("parameter validation rejects, never clamps")
{
    CHECK_NOTHROW(validate({10, 0.275, 0.046, 2.0, 0.0}));
    CHECK_NOTHROW(validate({0.5, 0.1, 0.0, 2.0, 0.0}));  // half-integer spin
    CHECK_NOTHROW(validate({3.5, 0.0, 0.2, 1.9, 4.0}));  // E > D is fine for the exact model

    CHECK_THROWS_AS(validate({0.0, 0.1, 0.0, 2.0, 0.0}), validation_error);
    CHECK_THROWS_AS(validate({-1.0, 0.1, 0.0, 2.0, 0.0}), validation_error);
    CHECK_THROWS_AS(validate({0.3, 0.1, 0.0, 2.0, 0.0}), validation_error); // 2S not integral
    CHECK_THROWS_AS(validate({10, -0.1, 0.046, 2.0, 0.0}), validation_error);
    CHECK_THROWS_AS(validate({10, 0.275, -0.046, 2.0, 0.0}), validation_error);
    CHECK_THROWS_AS(validate({10, 0.275, 0.046, 0.0, 0.0}), validation_error);
    CHECK_THROWS_AS(validate({10, 0.275, 0.046, -2.0, 0.0}), validation_error);
    CHECK_THROWS_AS(validate({10, 0.275, 0.046, 2.0, -0.1}), validation_error);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate({nan, 0.275, 0.046, 2.0, 0.0}), validation_error);
    CHECK_THROWS_AS(validate({10, inf, 0.046, 2.0, 0.0}), validation_error);
    CHECK_THROWS_AS(zeeman_energy({10, 0.275, 0.046, 2.0, nan}), validation_error);
}
