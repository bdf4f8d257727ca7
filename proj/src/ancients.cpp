#include "galrec/ancients.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace galrec::ancients {

double sun_moon_distance_ratio(double angle) {
    if (!(angle > 0.0 && angle < M_PI / 2.0))
        throw DomainError("dichotomy angle must lie in (0, pi/2)");
    double c = std::cos(angle);
    if (c <= 0.0 || !std::isfinite(1.0 / c))
        return std::numeric_limits<double>::infinity();  // unbounded-ratio signal
    return 1.0 / c;
}

DichotomyCi dichotomy_ci(double sigma_hours, long observations_per_year, long years,
                         double confidence, double true_angle_deg, double claimed_angle_deg) {
    if (!(sigma_hours > 0.0) || observations_per_year < 1 || years < 1)
        throw DomainError("dichotomy_ci requires positive inputs");
    DichotomyCi out;
    // elongation drifts roughly half a degree per hour, so 12 h of timing
    // scatter is 6 degrees of angle
    out.sigma_degrees = 0.5 * sigma_hours;
    long n = observations_per_year * years;
    out.half_width = kernels::mean_ci(out.sigma_degrees, n, confidence);
    out.detectable = (true_angle_deg - claimed_angle_deg) > out.half_width;
    return out;
}

double volume_ratio_from_diameter(double d_ratio) {
    if (!(d_ratio > 0.0)) throw DomainError("diameter ratio must be positive");
    return d_ratio * d_ratio * d_ratio;
}

double diameter_ratio_from_volume(double v_ratio) {
    if (!(v_ratio > 0.0)) throw DomainError("volume ratio must be positive");
    return std::cbrt(v_ratio);
}

std::int64_t schroeder_count(int n) {
    if (n < 1 || n > 12) throw DomainError("schroeder_count supports 1 <= n <= 12");
    // (n+1) s(n+1) = 3 (2n-1) s(n) - (n-2) s(n-1), s(1) = s(2) = 1
    std::int64_t prev = 1, cur = 1;
    if (n == 1 || n == 2) return 1;
    for (int k = 2; k < n; ++k) {
        std::int64_t num = 3 * (2 * static_cast<std::int64_t>(k) - 1) * cur -
                           (static_cast<std::int64_t>(k) - 2) * prev;
        if (num % (k + 1) != 0) throw Error("schroeder recurrence lost integrality");
        prev = cur;
        cur = num / (k + 1);
    }
    return cur;
}

namespace {

// explicit generation of every plane tree with no unary internal nodes over
// n ordered leaves, as canonical strings
std::vector<std::string> gen_trees(int n);

std::vector<std::string> gen_forests(int n, int min_parts) {
    // ordered forests of at least min_parts trees covering n ordered leaves
    std::vector<std::string> out;
    if (n == 0) {
        if (min_parts <= 0) out.push_back("");
        return out;
    }
    for (int first = 1; first <= n; ++first) {
        if (first == n && min_parts > 1) continue;
        std::vector<std::string> heads = gen_trees(first);
        std::vector<std::string> tails = gen_forests(n - first, min_parts - 1);
        for (const auto& h : heads)
            for (const auto& t : tails) out.push_back(h + t);
    }
    return out;
}

std::vector<std::string> gen_trees(int n) {
    if (n == 1) return {"*"};
    std::vector<std::string> out;
    for (auto& kids : gen_forests(n, 2)) out.push_back("(" + kids + ")");
    return out;
}

}  // namespace

std::int64_t schroeder_brute_force(int n) {
    if (n < 1 || n > 9) throw DomainError("brute force enumeration supports 1 <= n <= 9");
    std::vector<std::string> all = gen_trees(n);
    std::set<std::string> distinct(all.begin(), all.end());
    if (distinct.size() != all.size()) throw Error("bracketing enumeration produced duplicates");
    return static_cast<std::int64_t>(distinct.size());
}

std::vector<std::pair<int, std::int64_t>> schroeder_table(int n_max) {
    if (n_max < 1 || n_max > 12) throw DomainError("table supports 1 <= n <= 12");
    std::vector<std::pair<int, std::int64_t>> rows;
    for (int n = 1; n <= n_max; ++n) rows.push_back({n, schroeder_count(n)});
    return rows;
}

}  // namespace galrec::ancients
