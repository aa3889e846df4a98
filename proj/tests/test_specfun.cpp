#include <catch2/catch_amalgamated.hpp>

#include <tb/specfun.hpp>

#include <cmath>

namespace sf = tb::specfun;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("gamma at the documented points") {
    CHECK_THAT(sf::gamma(0.5), WithinRel(1.7724538509055160, 1e-13));
    CHECK_THAT(sf::gamma(5.0), WithinRel(24.0, 1e-13));
    CHECK_THAT(sf::gamma(2.5), WithinRel(1.3293403881791370, 1e-13));
    CHECK_THAT(sf::gamma(1.0), WithinRel(1.0, 1e-13));
}

TEST_CASE("gamma poles at non-positive integers") {
    CHECK_THROWS_AS(sf::gamma(0.0), tb::domain_error);
    CHECK_THROWS_AS(sf::gamma(-1.0), tb::domain_error);
    CHECK_THROWS_AS(sf::gamma(-7.0), tb::domain_error);
    CHECK(std::isfinite(sf::gamma(-0.5)));
}

TEST_CASE("recurrence gamma(x+1) = x gamma(x) across [0.5, 50]") {
    for (double x = 0.5; x <= 49.0; x += 0.7)
        CHECK_THAT(sf::gamma(x + 1.0), WithinRel(x * sf::gamma(x), 1e-13));
}

TEST_CASE("lgamma positive-axis contract") {
    CHECK(sf::lgamma(1.0) == 0.0);
    CHECK(sf::lgamma(2.0) == 0.0);
    CHECK_THAT(sf::lgamma(21.0), WithinRel(std::log(2432902008176640000.0), 1e-14));
    CHECK_THROWS_AS(sf::lgamma(0.0), tb::domain_error);
    CHECK_THROWS_AS(sf::lgamma(-2.5), tb::domain_error);
}

TEST_CASE("digamma at the documented points") {
    CHECK_THAT(sf::digamma(1.0), WithinAbs(-0.57721566490153286, 1e-12));
    CHECK_THAT(sf::digamma(3.0), WithinAbs(0.92278433509846714, 1e-12));
    CHECK_THAT(sf::digamma(2.0) - sf::digamma(1.0), WithinAbs(1.0, 1e-12));
    CHECK_THROWS_AS(sf::digamma(0.0), tb::domain_error);
    CHECK_THROWS_AS(sf::digamma(-1.5), tb::domain_error);
}

TEST_CASE("digamma matches the lgamma derivative") {
    const double h = 1e-5;
    for (double x = 1.0; x <= 20.0; x += 0.5) {
        double central = (sf::lgamma(x + h) - sf::lgamma(x - h)) / (2.0 * h);
        CHECK_THAT(sf::digamma(x), WithinAbs(central, 1e-8));
    }
}

TEST_CASE("harmonic numbers") {
    CHECK(sf::harmonic(0) == 0.0);
    CHECK(sf::harmonic(1) == 1.0);
    CHECK(sf::harmonic(2) == 1.5);
    for (long n : {1L, 10L, 100L})
        CHECK_THAT(sf::harmonic(n), WithinAbs(sf::digamma(static_cast<double>(n) + 1.0) + sf::euler_gamma, 1e-12));
    CHECK_THAT(sf::harmonic(1000000), WithinAbs(sf::digamma(1000001.0) + sf::euler_gamma, 1e-12));
    CHECK_THAT(sf::harmonic(2000000), WithinAbs(sf::digamma(2000001.0) + sf::euler_gamma, 1e-12));
    CHECK_THROWS_AS(sf::harmonic(-1), tb::domain_error);
}

TEST_CASE("Euler's constant ties gamma, digamma and harmonic together") {
    CHECK(sf::euler_constant() == 0.57721566490153286);
    CHECK_THAT(sf::euler_constant() + sf::digamma(1.0), WithinAbs(0.0, 1e-12));
    CHECK_THAT(sf::harmonic(1) - sf::euler_constant() - sf::digamma(2.0), WithinAbs(0.0, 1e-12));
}

TEST_CASE("factorial with the overflow convention") {
    CHECK(sf::factorial(0) == 1.0);
    CHECK(sf::factorial(1) == 1.0);
    CHECK(sf::factorial(5) == 120.0);
    CHECK(sf::factorial(20) == 2432902008176640000.0);
    CHECK(std::isfinite(sf::factorial(170)));
    CHECK(std::isinf(sf::factorial(171)));
    CHECK_THROWS_AS(sf::factorial(-1), tb::domain_error);
}
