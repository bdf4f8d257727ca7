#include <cmath>

#include "doctest.h"
#include "galrec/ancients.hpp"

using namespace galrec;
using namespace galrec::ancients;

TEST_CASE("dichotomy distance ratios") {
    CHECK(sun_moon_distance_ratio(87.0 * M_PI / 180.0) == doctest::Approx(19.107).epsilon(1e-4));
    CHECK(sun_moon_distance_ratio(60.0 * M_PI / 180.0) == doctest::Approx(2.0).epsilon(1e-12));
    double modern = sun_moon_distance_ratio(89.853 * M_PI / 180.0);
    CHECK(modern == doctest::Approx(389.8).epsilon(1e-3));
    CHECK(modern / sun_moon_distance_ratio(87.0 * M_PI / 180.0) ==
          doctest::Approx(20.4).epsilon(1e-2));
    CHECK_THROWS_AS(sun_moon_distance_ratio(0.0), DomainError);
    CHECK_THROWS_AS(sun_moon_distance_ratio(M_PI / 2.0), DomainError);

    // strictly increasing toward the right angle
    double prev = 0.0;
    for (int i = 1; i < 90; ++i) {
        double r = sun_moon_distance_ratio(i * M_PI / 180.0);
        CHECK(r > prev);
        prev = r;
    }
}

TEST_CASE("dichotomy confidence interval") {
    auto ci = dichotomy_ci(12.0, 25, 20, 0.95);
    CHECK(ci.sigma_degrees == doctest::Approx(6.0));
    CHECK(ci.half_width == doctest::Approx(0.526).epsilon(0.0095));
    CHECK(ci.detectable);

    auto few = dichotomy_ci(12.0, 25, 1, 0.95);
    CHECK(few.half_width == doctest::Approx(2.35).epsilon(1e-2));
    CHECK(few.detectable);

    // quadrupling the observations halves the width
    auto n1 = dichotomy_ci(12.0, 100, 1, 0.95);
    auto n4 = dichotomy_ci(12.0, 400, 1, 0.95);
    CHECK(n4.half_width == doctest::Approx(0.5 * n1.half_width).epsilon(1e-14));
}

TEST_CASE("volume and diameter ratios invert exactly") {
    CHECK(diameter_ratio_from_volume(300.0) == doctest::Approx(6.694).epsilon(1e-4));
    CHECK(diameter_ratio_from_volume(20.0) == doctest::Approx(2.714).epsilon(1e-3));
    CHECK(volume_ratio_from_diameter(1.0) == doctest::Approx(1.0));
    for (double v : {0.3, 1.0, 20.0, 300.0, 5.5e6}) {
        CHECK(volume_ratio_from_diameter(diameter_ratio_from_volume(v)) ==
              doctest::Approx(v).epsilon(1e-12));
    }
}

TEST_CASE("schroeder numbers by recurrence") {
    CHECK(schroeder_count(1) == 1);
    CHECK(schroeder_count(2) == 1);
    CHECK(schroeder_count(3) == 3);
    CHECK(schroeder_count(4) == 11);
    CHECK(schroeder_count(5) == 45);
    CHECK(schroeder_count(6) == 197);
    CHECK(schroeder_count(10) == 103049);
    CHECK_THROWS_AS(schroeder_count(0), DomainError);
    CHECK_THROWS_AS(schroeder_count(13), DomainError);
}

TEST_CASE("recurrence agrees with the explicit enumeration") {
    for (int n = 1; n <= 6; ++n) CHECK(schroeder_count(n) == schroeder_brute_force(n));
    // the enumeration extends a little further as a stronger check
    CHECK(schroeder_brute_force(7) == schroeder_count(7));
    CHECK(schroeder_brute_force(8) == schroeder_count(8));
}

TEST_CASE("schroeder table for the emitter") {
    auto table = schroeder_table(12);
    CHECK(table.size() == 12);
    CHECK(table[9].second == 103049);
    CHECK(table[10].second == 518859);
    CHECK(table[11].second == 2646723);
}
