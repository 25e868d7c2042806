#include "tsa/special.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

namespace sp = tsa::special;

TEST_CASE("normal quantile inverts the CDF") {
    for (double p : {1e-12, 1e-6, 0.001, 0.025, 0.2, 0.5, 0.7, 0.975, 0.999999}) {
        CHECK(sp::normal_cdf(sp::normal_quantile(p)) == doctest::Approx(p).epsilon(1e-13));
    }
    CHECK(sp::normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-15));
    CHECK(sp::normal_quantile(0.5) == 0.0);
    CHECK_THROWS_AS((void)sp::normal_quantile(0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)sp::normal_quantile(1.0), std::invalid_argument);
}

TEST_CASE("incomplete beta closed forms") {
    // I_x(1, b) = 1 - (1 - x)^b and I_x(a, 1) = x^a.
    for (double x : {0.01, 0.3, 0.5, 0.77, 0.999}) {
        CHECK(sp::incomplete_beta(1.0, 3.5, x) ==
              doctest::Approx(1.0 - std::pow(1.0 - x, 3.5)).epsilon(1e-13));
        CHECK(sp::incomplete_beta(2.5, 1.0, x) == doctest::Approx(std::pow(x, 2.5)).epsilon(1e-13));
        // Symmetry I_x(a, b) = 1 - I_{1-x}(b, a).
        CHECK(sp::incomplete_beta(4.0, 7.5, x) ==
              doctest::Approx(1.0 - sp::incomplete_beta(7.5, 4.0, 1.0 - x)).epsilon(1e-13));
    }
    CHECK(sp::incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(sp::incomplete_beta(2.0, 3.0, 1.0) == 1.0);
    CHECK_THROWS_AS((void)sp::incomplete_beta(0.0, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("incomplete gamma closed forms") {
    for (double x : {0.0, 0.1, 1.0, 3.0, 20.0, 80.0}) {
        CHECK(sp::incomplete_gamma_upper(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-13));
        // Q(1/2, x) = erfc(sqrt(x)).
        CHECK(sp::incomplete_gamma_upper(0.5, x) ==
              doctest::Approx(std::erfc(std::sqrt(x))).epsilon(1e-12));
    }
}
