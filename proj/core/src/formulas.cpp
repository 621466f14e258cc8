#include "heraldsim/formulas.hpp"

#include <cmath>

#include "heraldsim/errors.hpp"

namespace heraldsim {

namespace {

const double kPi = std::acos(-1.0);

void require_angle(double theta) {
    if (theta < 0.0 || theta > kPi / 2.0 + 1e-15)
        throw BadAngle("angle must lie in [0, pi/2]");
}

void require_efficiency(double eta) {
    if (eta < 0.0 || eta > 1.0)
        throw BadEfficiency("efficiency must lie in [0, 1]");
}

}  // namespace

double p_ideal_formula(double theta_a, double theta_b) {
    require_angle(theta_a);
    require_angle(theta_b);
    const double sa = std::sin(theta_a), ca = std::cos(theta_a);
    const double sb = std::sin(theta_b), cb = std::cos(theta_b);
    const double g = sa * sa * ca * sb * sb * cb;
    return 0.5 * g * g;
}

double p_n4_formula(double theta_a, double theta_b) {
    require_angle(theta_a);
    require_angle(theta_b);
    const double g = std::sin(theta_a) * std::cos(theta_a) * std::sin(theta_b) * std::cos(theta_b);
    return (13.0 / 5.0) * g * g * g * g;
}

double p_lossy_formula(double theta, double eta) {
    require_angle(theta);
    require_efficiency(eta);
    const double s2 = std::sin(theta) * std::sin(theta);
    const double es2 = eta * s2;
    return 0.5 * es2 * es2 * es2 * es2 * (1.0 - es2) * (1.0 - es2);
}

double f_formula(double theta, double eta) {
    require_angle(theta);
    require_efficiency(eta);
    const double s2 = std::sin(theta) * std::sin(theta);
    const double denom = 1.0 - eta * s2;
    if (denom < 1e-12)
        return 1.0;  // continuous extension of cos^2/(cos^2) at eta=1, theta=pi/2
    return (1.0 - s2) / denom;
}

double optimal_theta() {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = kPi / 2.0;
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = p_ideal_formula(x1, x1);
    double f2 = p_ideal_formula(x2, x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = p_ideal_formula(x2, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = p_ideal_formula(x1, x1);
        }
    }
    return 0.5 * (lo + hi);
}

RateEstimate rate_estimate(double pair_probability, double rep_rate_hz, double theta,
                           double eta, PairProbMeaning meaning) {
    if (rep_rate_hz <= 0.0)
        throw SimError("repetition rate must be positive");
    RateEstimate est;
    est.r = solve_interaction_time(pair_probability, meaning);
    const double l3 = pair_amplitude(est.r, 3);
    est.coincidence_probability = l3 * l3 * p_lossy_formula(theta, eta);
    est.pairs_per_second = est.coincidence_probability * rep_rate_hz;
    return est;
}

}  // namespace heraldsim
