#include <cmath>
#include <random>

#include "doctest.h"
#include "galrec/curves.hpp"

using namespace galrec;
using namespace galrec::curves;

namespace {
const kinematics::PhysicalConstants kC{};
}

TEST_CASE("cycloid arch area is exactly three circles") {
    auto a1 = cycloid_area(CycloidSpec(1.0));
    CHECK(a1.numeric == doctest::Approx(3.0 * M_PI).epsilon(1e-9));
    auto a2 = cycloid_area(CycloidSpec(2.0));
    CHECK(a2.numeric == doctest::Approx(12.0 * M_PI).epsilon(1e-9));
    auto a3 = cycloid_area(CycloidSpec(0.5));
    CHECK(a3.numeric == doctest::Approx(0.75 * M_PI).epsilon(1e-9));
    CHECK(a3.exact == doctest::Approx(0.75 * M_PI));
}

TEST_CASE("descent times of the three families") {
    // straight chord (0,0) -> (pi, -2)
    double t_straight = descent_time(DescentCurve::straight(M_PI, -2.0), kC);
    double L = std::hypot(M_PI, 2.0);
    CHECK(t_straight == doctest::Approx(L * std::sqrt(2.0 / (kC.g * 2.0))).epsilon(1e-8));
    CHECK(t_straight == doctest::Approx(1.1896).epsilon(1e-4));

    // cycloid through the same endpoints, cusp release
    auto cyc = DescentCurve::cycloid(M_PI, -2.0);
    CHECK(cyc.cycloid_radius() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(cyc.cycloid_angle() == doctest::Approx(M_PI).epsilon(1e-9));
    double t_cyc = descent_time(cyc, kC);
    CHECK(t_cyc == doctest::Approx(M_PI * std::sqrt(1.0 / kC.g)).epsilon(1e-6));

    // a vertical drop degenerates to free fall
    double t_vert = descent_time(DescentCurve::straight(0.0, -4.9), kC);
    CHECK(t_vert == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("cycloid closed form matches quadrature for random endpoints") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> runs(0.5, 4.0);
    std::uniform_real_distribution<double> ratios(0.2, 5.0);
    for (int i = 0; i < 8; ++i) {
        double x = runs(rng);
        double y = -x * ratios(rng);
        auto curve = DescentCurve::cycloid(x, y);
        double closed = curve.cycloid_angle() * std::sqrt(curve.cycloid_radius() / kC.g);
        CHECK(descent_time(curve, kC) == doctest::Approx(closed).epsilon(1e-6));
    }
}

TEST_CASE("tautochrone: release point does not change the arrival time") {
    // full arch to the bottom: theta_f = pi through (pi r, -2 r)
    auto curve = DescentCurve::cycloid(M_PI, -2.0);
    double t_top = descent_time(curve, kC);
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> us(0.05, 0.8);
    for (int i = 0; i < 5; ++i) {
        double u = us(rng);
        CHECK(descent_time_from(curve, u, kC) == doctest::Approx(t_top).epsilon(1e-5));
    }
}

TEST_CASE("descent time is invariant under horizontal translation and reflection") {
    using kinematics::RampPath;
    using kinematics::ramp_descent_time;
    std::vector<std::pair<double, double>> pts{{0.0, 0.0}, {1.0, -0.5}, {2.5, -1.2}, {3.0, -2.0}};
    std::vector<std::pair<double, double>> shifted, mirrored;
    for (auto [x, y] : pts) shifted.push_back({x + 17.0, y});
    for (auto [x, y] : pts) mirrored.push_back({-x, y});
    double t = ramp_descent_time(RampPath::polyline(pts), kC);
    CHECK(ramp_descent_time(RampPath::polyline(shifted), kC) == doctest::Approx(t).epsilon(1e-12));
    CHECK(ramp_descent_time(RampPath::polyline(mirrored), kC) == doctest::Approx(t).epsilon(1e-12));
}

TEST_CASE("brachistochrone comparison at the half-arch endpoints") {
    auto rep = brachistochrone_compare(M_PI, -2.0, kC);
    CHECK(rep.t_cycloid < rep.t_best_circular_arc);
    CHECK(rep.t_best_circular_arc < rep.t_straight);
    CHECK(rep.t_cycloid == doctest::Approx(1.0035450).epsilon(1e-6));
    CHECK(rep.t_best_circular_arc == doctest::Approx(1.0084648).epsilon(1e-4));
    CHECK(rep.t_straight == doctest::Approx(1.1896494).epsilon(1e-6));
}

TEST_CASE("near-vertical endpoints: all families approach free fall") {
    const double h = 2.0;
    auto rep = brachistochrone_compare(1e-3, -h, kC);
    double free_fall = std::sqrt(2.0 * h / kC.g);
    CHECK(rep.t_cycloid == doctest::Approx(free_fall).epsilon(5e-3));
    CHECK(rep.t_straight == doctest::Approx(free_fall).epsilon(5e-3));
    CHECK(rep.t_best_circular_arc == doctest::Approx(free_fall).epsilon(2e-2));
}

TEST_CASE("cycloid beats the quarter circle on equal-radius endpoints") {
    auto rep = brachistochrone_compare(2.0, -2.0, kC);
    // quarter circle of radius 2 with vertical release tangent
    double quarter = kernels::quad(
        [&](double phi) { return 2.0 / std::sqrt(2.0 * kC.g * 2.0 * std::sin(phi)); },
        kernels::Interval(0.0, M_PI / 2.0), kernels::Tolerance(1e-10, 1e-9));
    CHECK(rep.t_cycloid < quarter);
    CHECK(rep.t_best_circular_arc <= quarter + 1e-9);
}

TEST_CASE("brachistochrone ordering holds across random endpoint pairs") {
    std::mt19937 rng(20240102);
    std::uniform_real_distribution<double> runs(0.5, 4.0);
    std::uniform_real_distribution<double> ratios(0.2, 5.0);
    for (int i = 0; i < 20; ++i) {
        double x = runs(rng);
        double y = -x * ratios(rng);
        auto rep = brachistochrone_compare(x, y, kC);
        CHECK(rep.t_cycloid <= rep.t_best_circular_arc);
        CHECK(rep.t_best_circular_arc < rep.t_straight);
    }
}

TEST_CASE("catenary never equals the equal-arc-length parabola") {
    auto cmp = catenary_vs_parabola(HangingChain(2.0, 2.5));
    CHECK(cmp.max_deviation > 0.0);
    CHECK(cmp.max_deviation == doctest::Approx(0.0136728).epsilon(1e-4));

    // the flatter and more extended, the closer the agreement
    auto flat = catenary_vs_parabola(HangingChain(2.0, 2.05));
    auto deep = catenary_vs_parabola(HangingChain(2.0, 4.0));
    CHECK(flat.deviation_over_sag < cmp.deviation_over_sag);
    CHECK(cmp.deviation_over_sag < deep.deviation_over_sag);

    CHECK_THROWS_AS(HangingChain(2.0, 2.0), DomainError);
    CHECK_THROWS_AS(HangingChain(2.0, 1.5), DomainError);
}

TEST_CASE("catenary fit reproduces the input arc length") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> spans(0.5, 10.0);
    std::uniform_real_distribution<double> slack(1.01, 3.0);
    for (int i = 0; i < 10; ++i) {
        double S = spans(rng);
        double L = S * slack(rng);
        auto cmp = catenary_vs_parabola(HangingChain(S, L));
        double a = cmp.catenary_a;
        double arc = 2.0 * a * std::sinh(0.5 * S / a);
        CHECK(arc == doctest::Approx(L).epsilon(1e-9));
    }
}

TEST_CASE("circular arc geometry errors") {
    CHECK_THROWS_AS(DescentCurve::circular_arc(2.0, -1.0, 0.0), GeometryError);
    CHECK_THROWS_AS(DescentCurve::circular_arc(2.0, -1.0, -0.3), GeometryError);
    CHECK_THROWS_AS(DescentCurve::straight(1.0, 0.5), GeometryError);
}
