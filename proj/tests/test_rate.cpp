#include <doctest.h>

#include <cmath>

#include "sensim/random.hpp"
#include "sensim/rate.hpp"

using namespace sensim;

namespace {

// closed-form antiderivative of the unimodal rate: (1000/21)(x^2/2 - x^3/3)
double unimodal_primitive(double x) {
    return (1000.0 / 21.0) * (x * x / 2.0 - x * x * x / 3.0);
}

}  // namespace

TEST_CASE("unimodal rate evaluates the paper formula") {
    const auto rate = RateFunction::unimodal();
    CHECK(rate(0.5) == doctest::Approx(250.0 / 21.0).epsilon(1e-14));  // ~11.9048
    CHECK(rate(0.0) == 0.0);
    CHECK(rate(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rate.max_value() == doctest::Approx(250.0 / 21.0).epsilon(1e-14));
}

TEST_CASE("bimodal rate floors at 0.001") {
    const auto rate = RateFunction::bimodal();
    // sin(5) < 0, so the raw expression is negative at x = 0.5
    CHECK(rate(0.5) == 0.001);
    const double raw_02 = 15.0 * std::sin(2.0) / (std::sqrt(3.0) + 0.2);
    CHECK(rate(0.2) == doctest::Approx(raw_02).epsilon(1e-14));
    // grid + golden-section maximum, frozen from a high-precision scan
    CHECK(rate.max_value() == doctest::Approx(8.779104966418348).epsilon(1e-9));
    CHECK(rate.sup_bound() >= rate.max_value());
}

TEST_CASE("rate evaluation rejects points outside the unit interval") {
    const auto rate = RateFunction::unimodal();
    CHECK_THROWS_AS(rate(-0.1), std::domain_error);
    CHECK_THROWS_AS(rate(1.1), std::domain_error);
}

TEST_CASE("rates are nonnegative and below sup_bound on a dense grid") {
    for (const auto& rate : {RateFunction::unimodal(), RateFunction::bimodal(),
                             RateFunction::constant(3.5)}) {
        for (int i = 0; i <= 4096; ++i) {
            const double x = i / 4096.0;
            CHECK(rate(x) >= 0.0);
            CHECK(rate(x) <= rate.sup_bound());
        }
    }
}

TEST_CASE("unimodal integral matches the antiderivative") {
    const auto rate = RateFunction::unimodal();
    // whole interval: 1000/21 (1/2 - 1/3) = 500/63
    CHECK(rate.integrate(0.0, 1.0) == doctest::Approx(500.0 / 63.0).epsilon(1e-12));
    CHECK(rate.integrate(0.3, 0.7) ==
          doctest::Approx(unimodal_primitive(0.7) - unimodal_primitive(0.3)).epsilon(1e-12));
    CHECK(rate.integrate(0.3, 0.7) == doctest::Approx(4.507936507936508).epsilon(1e-12));
}

TEST_CASE("degenerate and piecewise integrals") {
    const auto rate = RateFunction::unimodal();
    CHECK(rate.integrate(0.4, 0.4) == 0.0);

    const auto pw = RateFunction::piecewise_constant({0.0, 1.0}, {5.0});
    CHECK(pw.integrate(0.2, 0.6) == doctest::Approx(2.0).epsilon(1e-15));

    const auto steps = RateFunction::piecewise_constant({0.0, 0.25, 0.5, 1.0}, {1.0, 4.0, 2.0});
    CHECK(steps(0.1) == 1.0);
    CHECK(steps(0.25) == 4.0);
    CHECK(steps(1.0) == 2.0);
    CHECK(steps.integrate(0.0, 1.0) ==
          doctest::Approx(0.25 * 1.0 + 0.25 * 4.0 + 0.5 * 2.0).epsilon(1e-15));
    CHECK(steps.integrate(0.2, 0.6) ==
          doctest::Approx(0.05 * 1.0 + 0.25 * 4.0 + 0.1 * 2.0).epsilon(1e-12));
    CHECK(steps.max_value() == 4.0);
}

TEST_CASE("piecewise construction is validated") {
    CHECK_THROWS(RateFunction::piecewise_constant({0.0, 0.5}, {1.0, 2.0}));
    CHECK_THROWS(RateFunction::piecewise_constant({0.0, 0.6, 0.4, 1.0}, {1.0, 2.0, 1.0}));
    CHECK_THROWS(RateFunction::piecewise_constant({0.0, 1.0}, {-1.0}));
    CHECK_THROWS(RateFunction::constant(-2.0));
}

TEST_CASE("integration is additive over adjacent intervals") {
    RandomStream rng(101);
    const double tol = 1e-9;
    for (const auto& rate : {RateFunction::unimodal(), RateFunction::bimodal()}) {
        for (int trial = 0; trial < 50; ++trial) {
            double a = rng.uniform(), b = rng.uniform(), c = rng.uniform();
            if (a > b) std::swap(a, b);
            if (b > c) std::swap(b, c);
            if (a > b) std::swap(a, b);
            const double split = rate.integrate(a, b, tol) + rate.integrate(b, c, tol);
            const double whole = rate.integrate(a, c, tol);
            CHECK(std::abs(split - whole) <= 2.0 * tol);
        }
    }
}

TEST_CASE("integrate validates its arguments") {
    const auto rate = RateFunction::unimodal();
    CHECK_THROWS_AS(rate.integrate(0.5, 0.2), std::domain_error);
    CHECK_THROWS_AS(rate.integrate(-0.1, 0.5), std::domain_error);
    CHECK_THROWS(rate.integrate(0.0, 1.0, -1.0));
}
