#pragma once

#include <vector>

#include "galrec/kernels.hpp"

namespace galrec::rotation {

struct RotatingBody {
    double radius;         // m
    double surface_speed;  // m/s
    double gravity;        // m/s^2
    RotatingBody(double radius_, double surface_speed_, double gravity_);
    static RotatingBody earth();
    static RotatingBody earth_spun(double factor);
};

/// Height of the tangent line above the surface after time t: the distance
/// the body must fall to stay on the ground. Cancellation-free form.
double tangential_rise(double t, const RotatingBody& body);

/// lim t->0 of fall(t)/rise(t) = g R / V^2. Returns +infinity when the body
/// does not spin (a signal, not an error).
double extrusion_limit_ratio(const RotatingBody& body);

struct ExtrusionVerdict {
    bool extruded;          // gR/V^2 < 1
    double critical_speed;  // sqrt(gR)
    double limit_ratio;
};

ExtrusionVerdict extrusion_verdict(const RotatingBody& body);

struct FallPathSpec {
    double r0;     // release radius, m
    double omega;  // uniform angular rate, rad/s
    double g;      // m/s^2
};

struct FallPath {
    std::vector<double> theta;
    std::vector<double> r;
    double spiral_coefficient;  // g / (2 omega^2)
    double spiral_dev;          // max |r - (r0 - a theta^2)|
    double semicircle_dev;      // max deviation from the circle of diameter r0
    bool truncated;             // reached r = 0 before theta_max
    double theta_end;
};

/// Absolute-space path of a dropped body: uniform angular motion composed
/// with integrated uniformly accelerated radial fall, compared against the
/// closed-form spiral and against the semicircle through release point and
/// center.
FallPath path_of_fall(const FallPathSpec& spec, double theta_max, int samples = 1024);

}  // namespace galrec::rotation
